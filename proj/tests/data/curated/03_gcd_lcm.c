#include <stdio.h>

long gcd(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

long lcm(long a, long b) {
  if (a == 0 || b == 0) {
    return 0;
  }
  long g = gcd(a, b);
  return a / g * b;
}

int main(void) {
  long a, b;
  if (scanf("%ld %ld", &a, &b) != 2) return 1;
  printf("%ld %ld\n", gcd(a, b), lcm(a, b));
  return 0;
}
