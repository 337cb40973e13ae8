#include <stdio.h>

double running_average(const double *xs, int n) {
  double mean = 0.0;
  for (int i = 0; i < n; i++) {
    mean += (xs[i] - mean) / (i + 1);
  }
  return mean;
}

int main(void) {
  int n;
  double xs[64];
  if (scanf("%d", &n) != 1 || n < 0 || n > 64) return 1;
  for (int i = 0; i < n; i++) scanf("%lf", &xs[i]);
  printf("%.6f\n", running_average(xs, n));
  return 0;
}
