#include <stdio.h>

struct point {
  double x;
  double y;
};

double manhattan(struct point a, struct point b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  if (dx < 0.0) {
    dx = -dx;
  }
  if (dy < 0.0) {
    dy = -dy;
  }
  return dx + dy;
}

int main(void) {
  struct point p, q;
  if (scanf("%lf %lf %lf %lf", &p.x, &p.y, &q.x, &q.y) != 4) return 1;
  printf("%.4f\n", manhattan(p, q));
  return 0;
}
