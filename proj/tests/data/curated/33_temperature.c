#include <stdio.h>

double to_fahrenheit(double c) {
  return c * 9.0 / 5.0 + 32.0;
}

int classify(double c) {
  int kind;
  if (c < 0.0) {
    kind = 0;
  } else if (c < 20.0) {
    kind = 1;
  } else {
    kind = 2;
  }
  return kind;
}

int main(void) {
  double c;
  if (scanf("%lf", &c) != 1) return 1;
  printf("%.2f %d\n", to_fahrenheit(c), classify(c));
  return 0;
}
