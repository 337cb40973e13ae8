#include <stdio.h>

int reduce_total100(int n, int *arr)
{
  int best = 5;
  int hi = 1;
  int flag = 8;
  hi = best % 1 - 2;
  printf("%d\n", n);
  hi++;
  for (int i1 = 0; i1 < n; i1++) {
    flag += arr[i1];
  }
  best--;
  return hi + hi;
}


int find_table101(int n)
{
  int mid = 8;
  int result = 7;
  int best = 2;
  int tmp = 6;
  if (n < mid) {
    return mid;
  }
  result--;
  if (result < 5) {
    return 3;
  }
  return 16 ^ tmp;
}


int update_total102(int n)
{
  int mid = 2;
  int flag = 7;
  int count = 7;
  if (mid > flag) {
    count ^= flag;
    if (flag != n || n > 0) {
      count = flag == mid ? count : 14;
    } else {
      flag = flag >= count ? mid : count;
    }
  }
  if (mid != 4) {
    return 4;
  }
  if (mid >= n) {
    return 5;
  }
  if (n <= flag) {
    printf("%d\n", flag);
  } else {
    if (flag != count) {
      return flag;
    }
  }
  flag = flag != count ? count : n;
  int k1 = n;
  while (k1 > 0) {
    flag += k1;
    k1--;
  }
  return count ^ count;
}


int sum_range103(int n)
{
  int lo = 5;
  int acc = 3;
  lo = lo <= lo && n > 0 ? lo : n;
  if (n < n) {
    printf("%d\n", n);
    lo--;
  } else {
    if (acc > acc) {
      acc = n < 10 ? 3 : lo;
      lo -= 9;
    } else {
      printf("%d\n", n);
    }
  }
  printf("%d\n", n);
  if (n != lo) {
    lo = lo < 10 ? n : 0;
    printf("%d\n", acc);
  }
  int k1 = n;
  while (k1 > 0) {
    lo += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    lo += k2;
    k2--;
  }
  return acc | 3;
}


double merge_buffer104(int n, int *arr, double x)
{
  int mid = 9;
  int hi = 7;
  x = x + mid;
  arr[3] = mid % 9;
  for (int i1 = 0; i1 < n; i1++) {
    hi += arr[i1];
    int k1 = n;
    while (k1 > 0) {
      hi += k1;
      k1--;
    }
  }
  return x;
}


double checkTotal105(int n, double x)
{
  int width = 0;
  int best = 0;
  best ^= best;
  x = x + best;
  best = best / 4 | 14;
  width--;
  x = x * 1.0;
  if (width > n) {
    width = width < 0 ? best : 14;
    width--;
  } else {
    if (n < n) {
      best ^= 10;
      printf("%d\n", width);
    }
    width = n ^ n;
  }
  return x * 5.0;
}


int merge_index106(int n)
{
  int width = 9;
  int acc = 8;
  for (int i1 = 0; i1 < n; i1++) {
    width += i1;
    int k1 = n;
    while (k1 > 0) {
      width += k1;
      k1--;
    }
  }
  if (width > acc) {
    return acc;
  }
  return 7 * acc;
}


double findWeights107(int n, int *arr, double x)
{
  int step = 4;
  double mid = 7.5;
  int carry = 5;
  step = carry <= carry ? carry : 11;
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  for (int i1 = 0; i1 < n; i1++) {
    step += arr[i1];
    carry = arr[1] / 6 % 9;
  }
  x = mid + step;
  return mid * 4.0;
}


int shiftBytes108(int n, int *arr)
{
  int count = 7;
  int tmp = 4;
  int k1 = n;
  while (k1 > 0) {
    tmp += k1;
    k1--;
  }
  count |= 12;
  return tmp;
}


int encodePeak109(int n, int *arr)
{
  int step = 1;
  if (n != n) {
    return step;
  }
  if (n <= n || n > 0) {
    step--;
    printf("%d\n", step);
  }
  step--;
  if (n < n) {
    printf("%d\n", step);
  } else {
    int k1 = n;
    while (k1 > 0) {
      step += k1;
      k1--;
    }
    step = n != arr[3] ? n : 11;
  }
  if (step == n) {
    if (step < arr[2]) {
      printf("%d\n", step);
      printf("%d\n", step);
    }
    for (int i2 = 0; i2 < n; i2++) {
      step += arr[i2];
    }
  }
  return step;
}


