#include <stdio.h>

long compound_cents(long principal, int rate_bp, int years) {
  long amount = principal;
  int y = 0;
  while (y < years) {
    amount = amount + amount * rate_bp / 10000;
    y = y + 1;
  }
  return amount;
}

int years_to_double(long principal, int rate_bp) {
  if (rate_bp <= 0) {
    return -1;
  }
  int years = 0;
  long amount = principal;
  while (amount < 2 * principal) {
    amount += amount * rate_bp / 10000;
    years++;
  }
  return years;
}

int main(void) {
  long p;
  int r, y;
  if (scanf("%ld %d %d", &p, &r, &y) != 3 || p <= 0) return 1;
  printf("%ld %d\n", compound_cents(p, r, y), years_to_double(p, r));
  return 0;
}
