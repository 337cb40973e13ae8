#include <stdio.h>

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= (unsigned long long)i;
  }
  return f;
}

int trailing_zeros(int n) {
  int z = 0;
  for (int p = 5; p <= n; p *= 5) {
    z += n / p;
  }
  return z;
}

int main(void) {
  int n;
  if (scanf("%d", &n) != 1 || n < 0 || n > 20) return 1;
  printf("%llu %d\n", factorial(n), trailing_zeros(n));
  return 0;
}
