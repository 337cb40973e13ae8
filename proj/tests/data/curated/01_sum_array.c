#include <stdio.h>

int sum_array(const int *a, int n) {
  int total = 0;
  for (int i = 0; i < n; i++) {
    total += a[i];
  }
  return total;
}

int main(void) {
  int n;
  int a[64];
  if (scanf("%d", &n) != 1 || n < 0 || n > 64) return 1;
  for (int i = 0; i < n; i++) scanf("%d", &a[i]);
  printf("%d\n", sum_array(a, n));
  return 0;
}
