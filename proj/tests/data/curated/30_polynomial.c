#include <stdio.h>

double horner(const double *coef, int degree, double x) {
  double acc = 0.0;
  for (int i = degree; i >= 0; i--) {
    acc = acc * x + coef[i];
  }
  return acc;
}

double derivative_at(const double *coef, int degree, double x) {
  double acc = 0.0;
  double p = 1.0;
  for (int i = 1; i <= degree; i++) {
    acc += i * coef[i] * p;
    p *= x;
  }
  return acc;
}

int main(void) {
  double coef[] = {1.0, -3.0, 0.5, 2.0};
  double x;
  if (scanf("%lf", &x) != 1) return 1;
  printf("%.5f %.5f\n", horner(coef, 3, x), derivative_at(coef, 3, x));
  return 0;
}
