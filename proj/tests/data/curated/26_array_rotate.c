#include <stdio.h>

void rotate_left(int *a, int n, int k) {
  if (n == 0) {
    return;
  }
  k %= n;
  for (int r = 0; r < k; r++) {
    int first = a[0];
    for (int i = 1; i < n; i++) {
      a[i - 1] = a[i];
    }
    a[n - 1] = first;
  }
}

int main(void) {
  int n, k;
  int a[64];
  if (scanf("%d %d", &n, &k) != 2 || n < 0 || n > 64 || k < 0) return 1;
  for (int i = 0; i < n; i++) scanf("%d", &a[i]);
  rotate_left(a, n, k);
  for (int i = 0; i < n; i++) printf("%d ", a[i]);
  printf("\n");
  return 0;
}
