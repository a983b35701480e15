#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "ffcm/forms.hpp"

namespace ffcm {

// Instance file:
// {"field":"3^1","n":4,"d":2,"R":1,
//  "forms":[[{"exps":[1,1,0,0],"c":"1"},{"exps":[0,0,1,1],"c":"2"}]]}
inline FormSystem load_instance_json(const nlohmann::json& j) {
  try {
    Field F = Field::parse(j.at("field").get<std::string>());
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    int R = j.at("R").get<int>();
    std::vector<std::vector<Monomial>> forms;
    for (const auto& form : j.at("forms")) {
      std::vector<Monomial> monos;
      for (const auto& mono : form) {
        Monomial m;
        for (const auto& e : mono.at("exps")) m.exps.push_back(e.get<std::uint8_t>());
        m.coeff = F.elem_parse(mono.at("c").get<std::string>());
        monos.push_back(std::move(m));
      }
      forms.push_back(std::move(monos));
    }
    return FormSystem(F, n, d, R, std::move(forms));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("instance JSON: ") + e.what());
  }
}

inline FormSystem load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open instance file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("instance JSON: ") + e.what());
  }
  return load_instance_json(j);
}

struct RunConfig {
  std::string instance_path;
  std::string command;
  Budget budget{};
  int depth = 4;
  int trunc_series = 2;
  int trunc_integral = 3;
  std::string format = "csv";  // csv | json
  std::string out;             // empty = stdout
  std::uint64_t seed = 0x5eedULL;
  int workers = 1;
};

}  // namespace ffcm
