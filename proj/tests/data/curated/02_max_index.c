#include <stdio.h>

int max_index(const int *values, int count) {
  int best = 0;
  for (int i = 1; i < count; i++) {
    if (values[i] > values[best]) {
      best = i;
    }
  }
  return best;
}

int main(void) {
  int n;
  int v[64];
  if (scanf("%d", &n) != 1 || n < 1 || n > 64) return 1;
  for (int i = 0; i < n; i++) scanf("%d", &v[i]);
  printf("%d\n", max_index(v, n));
  return 0;
}
