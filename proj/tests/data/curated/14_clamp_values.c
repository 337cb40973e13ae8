#include <stdio.h>

int clamp(int v, int lo, int hi) {
  int r = v;
  if (r < lo) {
    r = lo;
  }
  if (r > hi) {
    r = hi;
  }
  return r;
}

int clamp_all(int *a, int n, int lo, int hi) {
  int changed = 0;
  for (int i = 0; i < n; ++i) {
    int c = clamp(a[i], lo, hi);
    changed += c != a[i];
    a[i] = c;
  }
  return changed;
}

int main(void) {
  int a[] = {-5, 0, 3, 8, 12, 20};
  int lo, hi;
  if (scanf("%d %d", &lo, &hi) != 2) return 1;
  int changed = clamp_all(a, 6, lo, hi);
  printf("%d %d %d\n", changed, a[0], a[5]);
  return 0;
}
