#include <stdio.h>

int trace(int m[4][4], int n) {
  int t = 0;
  for (int i = 0; i < n; i++) {
    t += m[i][i];
  }
  return t;
}

void transpose(int m[4][4], int n) {
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      int tmp = m[i][j];
      m[i][j] = m[j][i];
      m[j][i] = tmp;
    }
  }
}

int main(void) {
  int n;
  int m[4][4];
  if (scanf("%d", &n) != 1 || n < 1 || n > 4) return 1;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) scanf("%d", &m[i][j]);
  transpose(m, n);
  printf("%d %d\n", trace(m, n), m[0][n - 1]);
  return 0;
}
