#include <stdio.h>

int popcount(unsigned int x) {
  int count = 0;
  while (x != 0u) {
    x &= x - 1u;
    count++;
  }
  return count;
}

int parity(unsigned int x) {
  return popcount(x) % 2;
}

int main(void) {
  unsigned int x;
  if (scanf("%u", &x) != 1) return 1;
  printf("%d %d\n", popcount(x), parity(x));
  return 0;
}
