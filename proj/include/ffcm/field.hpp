#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ffcm/errors.hpp"

namespace ffcm {

// Element of F_{p^k}, encoded as sum coeff_i * p^i over the modulus
// basis 1, u, ..., u^{k-1}.  Codes live in [0, q).
using felem = std::uint16_t;

// F_{p^k} with full operation tables.  Elements are codes; the Field
// owns every operation.  Immutable after construction.
class Field {
 public:
  int p = 0;
  int k = 1;
  int q = 0;                    // p^k
  std::vector<int> modulus;     // monic, length k+1, over F_p; empty iff k == 1

  Field() = default;

  // k == 1, or explicit modulus (little-endian coefficients over F_p).
  explicit Field(int p_, int k_ = 1, std::vector<int> mod = {}) : p(p_), k(k_) {
    require(p >= 2 && is_prime(p), "field characteristic must be prime");
    require(k >= 1, "extension degree must be >= 1");
    long qq = 1;
    for (int i = 0; i < k; ++i) {
      qq *= p;
      require(qq <= kMaxQ, "field too large for table construction");
    }
    q = static_cast<int>(qq);
    if (k == 1) {
      require(mod.empty(), "prime field takes no modulus");
    } else {
      if (mod.empty())
        modulus = first_irreducible(p, k);
      else {
        modulus = mod;
        require(static_cast<int>(modulus.size()) == k + 1 && modulus[k] == 1,
                "modulus must be monic of degree k");
        require(irreducible_over_prime(p, modulus), "modulus must be irreducible");
      }
    }
    build_tables();
  }

  felem zero() const { return 0; }
  felem one() const { return 1; }

  felem add(felem a, felem b) const { return add_[a * q + b]; }
  felem sub(felem a, felem b) const { return add_[a * q + neg_[b]]; }
  felem mul(felem a, felem b) const { return mul_[a * q + b]; }
  felem neg(felem a) const { return neg_[a]; }
  felem inv(felem a) const {
    require(a != 0, "inverse of zero");
    return inv_[a];
  }
  felem pow(felem a, long e) const {
    if (a == 0) return e == 0 ? one() : zero();
    long m = q - 1;
    e %= m;
    if (e < 0) e += m;
    felem r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Frobenius x -> x^p and the trace to F_p.
  felem frobenius(felem a) const { return frob_[a]; }
  int trace(felem a) const { return trace_[a]; }

  // Scalar embedding F_p -> F_{p^k} (constants are codes < p already).
  felem from_int(long v) const {
    long r = v % p;
    if (r < 0) r += p;
    return static_cast<felem>(r);
  }

  std::vector<int> coeffs(felem a) const {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = a % p;
      a = static_cast<felem>(a / p);
    }
    return c;
  }
  felem from_coeffs(const std::vector<int>& c) const {
    require(static_cast<int>(c.size()) <= k, "too many coefficients for field");
    long code = 0, pw = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      int r = c[i] % p;
      if (r < 0) r += p;
      code += r * pw;
      pw *= p;
    }
    return static_cast<felem>(code);
  }

  // Element text form: base-p digits joined by '.', low digit first.
  // Over F_9 the element u prints as "0.1"; over prime fields just "2".
  std::string elem_str(felem a) const {
    if (k == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string s;
    for (int i = 0; i < k; ++i) {
      if (i) s += '.';
      s += std::to_string(c[i]);
    }
    return s;
  }
  felem elem_parse(const std::string& s) const {
    std::vector<int> c;
    std::string cur;
    for (char ch : s + ".") {
      if (ch == '.') {
        if (cur.empty()) throw parse_error("bad field element: " + s);
        c.push_back(std::stoi(cur));
        cur.clear();
      } else if (ch >= '0' && ch <= '9') {
        cur += ch;
      } else {
        throw parse_error("bad field element: " + s);
      }
    }
    for (int d : c)
      if (d >= p) throw parse_error("digit out of range in element: " + s);
    if (static_cast<int>(c.size()) > k) throw parse_error("element too long: " + s);
    return from_coeffs(c);
  }

  // Descriptor text form "p^k" or "p^k/modulus" with the modulus as
  // comma-separated little-endian F_p coefficients.
  std::string descriptor() const {
    std::string s = std::to_string(p) + "^" + std::to_string(k);
    if (k > 1) {
      s += "/";
      for (int i = 0; i <= k; ++i) {
        if (i) s += ",";
        s += std::to_string(modulus[i]);
      }
    }
    return s;
  }
  static Field parse(const std::string& text) {
    auto slash = text.find('/');
    std::string head = text.substr(0, slash == std::string::npos ? text.size() : slash);
    int p_, k_ = 1;
    auto caret = head.find('^');
    try {
      if (caret == std::string::npos) {
        p_ = std::stoi(head);
      } else {
        p_ = std::stoi(head.substr(0, caret));
        k_ = std::stoi(head.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw parse_error("bad field descriptor: " + text);
    }
    std::vector<int> mod;
    if (slash != std::string::npos) {
      std::stringstream ss(text.substr(slash + 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) mod.push_back(std::stoi(tok));
    }
    if (p_ < 2 || !is_prime(p_)) throw parse_error("field characteristic not prime: " + text);
    return Field(p_, k_, mod);
  }

  bool operator==(const Field& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  // Lexicographically first monic irreducible of degree k over F_p,
  // ordering monic polynomials by their coefficient vector read as a
  // base-p number (low coefficients least significant).
  static std::vector<int> first_irreducible(int p, int k) {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> c(k + 1);
      long v = code;
      for (int i = 0; i < k; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
      }
      c[k] = 1;
      if (irreducible_over_prime(p, c)) return c;
    }
    throw invariant_error("no irreducible modulus found");  // unreachable
  }

  // Trial division over F_p; adequate for the degrees used here.
  static bool irreducible_over_prime(int p, const std::vector<int>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || poly[deg] == 0) return false;
    for (int ddeg = 1; 2 * ddeg <= deg; ++ddeg) {
      long count = 1;
      for (int i = 0; i < ddeg; ++i) count *= p;
      for (long code = 0; code < count; ++code) {
        std::vector<int> divisor(ddeg + 1);
        long v = code;
        for (int i = 0; i < ddeg; ++i) {
          divisor[i] = static_cast<int>(v % p);
          v /= p;
        }
        divisor[ddeg] = 1;
        if (divides_over_prime(p, divisor, poly)) return false;
      }
    }
    return true;
  }

 private:
  static constexpr long kMaxQ = 4096;

  std::vector<felem> add_, mul_, neg_, inv_, frob_;
  std::vector<int> trace_;

  static bool divides_over_prime(int p, const std::vector<int>& d,
                                 const std::vector<int>& a) {
    std::vector<int> r = a;
    int dd = static_cast<int>(d.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= dd) {
      int rd = static_cast<int>(r.size()) - 1;
      if (r[rd] == 0) {
        r.pop_back();
        continue;
      }
      // d is monic: subtract r[rd] * t^{rd-dd} * d
      int c = r[rd];
      for (int i = 0; i <= dd; ++i) {
        int& slot = r[rd - dd + i];
        slot = (slot - c * d[i]) % p;
        if (slot < 0) slot += p;
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (r.empty()) return true;
    }
    return false;
  }

  felem raw_add(felem a, felem b) const {
    // digitwise addition mod p
    long code = 0, pw = 1, aa = a, bb = b;
    for (int i = 0; i < k; ++i) {
      int s = static_cast<int>((aa % p + bb % p) % p);
      code += s * pw;
      pw *= p;
      aa /= p;
      bb /= p;
    }
    return static_cast<felem>(code);
  }

  felem raw_mul(felem a, felem b) const {
    if (k == 1) return static_cast<felem>((static_cast<long>(a) * b) % p);
    std::vector<int> ca(k), cb(k);
    long aa = a, bb = b;
    for (int i = 0; i < k; ++i) {
      ca[i] = static_cast<int>(aa % p);
      aa /= p;
      cb[i] = static_cast<int>(bb % p);
      bb /= p;
    }
    std::vector<int> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    // reduce modulo the monic modulus
    for (int dgr = 2 * k - 2; dgr >= k; --dgr) {
      int c = prod[dgr];
      if (c == 0) continue;
      prod[dgr] = 0;
      for (int i = 0; i < k; ++i) {
        int& slot = prod[dgr - k + i];
        slot = (slot - c * modulus[i]) % p;
        if (slot < 0) slot += p;
      }
    }
    long code = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
      code += prod[i] * pw;
      pw *= p;
    }
    return static_cast<felem>(code);
  }

  void build_tables() {
    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    frob_.resize(q);
    trace_.resize(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        add_[static_cast<std::size_t>(a) * q + b] =
            raw_add(static_cast<felem>(a), static_cast<felem>(b));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        mul_[static_cast<std::size_t>(a) * q + b] =
            raw_mul(static_cast<felem>(a), static_cast<felem>(b));
    for (int a = 0; a < q; ++a) {
      // -a: digitwise negation
      long code = 0, pw = 1, aa = a;
      for (int i = 0; i < k; ++i) {
        int d = static_cast<int>(aa % p);
        code += ((p - d) % p) * pw;
        pw *= p;
        aa /= p;
      }
      neg_[a] = static_cast<felem>(code);
    }
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul(static_cast<felem>(a), static_cast<felem>(b)) == 1) {
          inv_[a] = static_cast<felem>(b);
          break;
        }
    for (int a = 0; a < q; ++a) {
      felem x = static_cast<felem>(a);
      felem r = x;
      for (int i = 1; i < p; ++i) r = mul(r, x);  // x^p by repeated multiply
      frob_[a] = r;
    }
    for (int a = 0; a < q; ++a) {
      felem s = 0, x = static_cast<felem>(a);
      for (int i = 0; i < k; ++i) {
        s = add(s, x);
        x = frobenius(x);
      }
      // the trace lands in F_p, i.e. its code is < p
      require(s < p, "trace escaped the prime field");
      trace_[a] = s;
    }
  }
};

}  // namespace ffcm
