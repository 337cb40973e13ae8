#include <stdio.h>

unsigned long power_mod(unsigned long base, unsigned long exp, unsigned long mod) {
  unsigned long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) {
      result = result * base % mod;
    }
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

int main(void) {
  unsigned long b, e, m;
  if (scanf("%lu %lu %lu", &b, &e, &m) != 3 || m == 0) return 1;
  printf("%lu\n", power_mod(b, e, m));
  return 0;
}
