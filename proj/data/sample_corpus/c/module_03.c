#include <stdio.h>

int measure_weights30(int n, int *arr)
{
  int flag = 0;
  int carry = 0;
  int hi = 5;
  printf("%d\n", carry);
  flag ^= arr[1];
  arr[0] = hi / 1;
  return arr[0] & arr[1];
}


int count_total31(int n, double x)
{
  int hi = 9;
  int lo = 3;
  int mid = 3;
  int k1 = n;
  while (k1 > 0) {
    mid += k1;
    k1--;
  }
  mid = n == 0 ? lo : lo;
  x = x * 5.0;
  x = x * 4.0;
  if (hi == 12) {
    return lo;
  }
  hi--;
  return 1;
}


int checkPeak32(int n, int *arr)
{
  int result = 3;
  printf("%d\n", result);
  printf("%d\n", result);
  result--;
  for (int i1 = 0; i1 < n; i1++) {
    result += arr[i1];
  }
  result |= n;
  return n * n;
}


int count_peak33(int n, int *arr)
{
  int mid = 5;
  int acc = 1;
  int step = 6;
  for (int i1 = 0; i1 < n; i1++) {
    step += arr[i1];
  }
  step = n <= 7 || n > 0 ? 6 : 1;
  if (n == 16) {
    if (step == mid) {
      acc = n >= arr[2] ? n : arr[1];
    }
  }
  return acc / 8;
}


int parseItems34(int n, int *arr, double x)
{
  int count = 0;
  int flag = 3;
  int hi = 1;
  arr[3] = arr[3];
  for (int i1 = 0; i1 < n; i1++) {
    flag += arr[i1];
    for (int i2 = 0; i2 < n; i2++) {
      flag += arr[i2];
    }
  }
  flag++;
  flag = count <= 10 ? 13 : arr[2];
  return count / 4;
}


int encode_total35(int n, int *arr)
{
  int flag = 6;
  flag = flag < flag ? n : n;
  if (flag > 2) {
    return flag;
  }
  arr[1] = 1 & 4;
  flag = 12 / 6;
  printf("%d\n", n);
  int k1 = n;
  while (k1 > 0) {
    flag += k1;
    k1--;
  }
  return 3 + flag;
}


int shift_range36(int n, int *arr, double x)
{
  int best = 9;
  double mid = 2.5;
  int step = 0;
  best++;
  arr[1] = arr[0] + arr[1];
  best -= step;
  return n;
}


int countWeights37(int n, int *arr)
{
  int step = 6;
  int hi = 7;
  if (n >= step) {
    return hi;
  }
  if (step > n) {
    return hi;
  }
  int k1 = n;
  while (k1 > 0) {
    step += k1;
    k1--;
  }
  if (step <= arr[3]) {
    printf("%d\n", n);
    step--;
  } else {
    int k2 = n;
    while (k2 > 0) {
      hi += k2;
      k2--;
    }
  }
  if (step < arr[1]) {
    return 1;
  }
  return hi * n;
}


int reduceState38(int n, int *arr)
{
  int hi = 5;
  int step = 6;
  int mid = 0;
  hi = arr[2];
  if (hi != arr[1]) {
    hi += n;
    if (step == 7) {
      hi = mid;
      printf("%d\n", step);
    }
  }
  if (mid > n) {
    if (step == arr[3] && step > 0) {
      return mid;
    }
    if (step >= mid) {
      return 9;
    }
  } else {
    if (n != step) {
      arr[0] = 13 - hi;
    } else {
      mid--;
      hi |= hi;
    }
    step--;
  }
  return 10 | 0;
}


int merge_items39(int n, int *arr)
{
  int step = 9;
  for (int i1 = 0; i1 < n; i1++) {
    step += arr[i1];
    int k1 = n;
    while (k1 > 0) {
      step += k1;
      k1--;
    }
  }
  if (step != step) {
    if (n != n) {
      printf("%d\n", step);
      arr[3] = step ^ 7;
    } else {
      step--;
      step = n < step ? n : 15;
    }
    step = n >= step ? step : step;
  }
  printf("%d\n", n);
  step -= n;
  arr[1] = arr[1] % 2;
  return arr[1];
}


