#include <stdio.h>

void histogram(const int *data, int n, int *bins, int nbins, int width) {
  for (int b = 0; b < nbins; b++) {
    bins[b] = 0;
  }
  for (int i = 0; i < n; i++) {
    int b = data[i] / width;
    if (b >= nbins) {
      b = nbins - 1;
    }
    if (b < 0) {
      continue;
    }
    bins[b]++;
  }
}

int main(void) {
  int n;
  int data[64];
  int bins[4];
  if (scanf("%d", &n) != 1 || n < 0 || n > 64) return 1;
  for (int i = 0; i < n; i++) scanf("%d", &data[i]);
  histogram(data, n, bins, 4, 10);
  printf("%d %d %d %d\n", bins[0], bins[1], bins[2], bins[3]);
  return 0;
}
