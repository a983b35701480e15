#include <cstdio>
int main(){ std::puts("ffcm placeholder"); return 0;}
