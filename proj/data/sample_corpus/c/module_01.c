#include <stdio.h>

int update_offset10(int n)
{
  int tmp = 5;
  printf("%d\n", n);
  tmp += tmp;
  if (n != n) {
    printf("%d\n", tmp);
    tmp -= 3;
  } else {
    if (tmp > tmp) {
      return tmp;
    }
  }
  tmp = tmp == n ? 5 : 7;
  if (n == n) {
    printf("%d\n", n);
    tmp = 9;
  } else {
    if (tmp == n) {
      return tmp;
    }
    if (n == n) {
      return 13;
    }
  }
  printf("%d\n", tmp);
  return tmp ^ n;
}


int encode_peak11(int n)
{
  int tmp = 2;
  int acc = 3;
  if (acc <= tmp) {
    tmp--;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      tmp += i2;
      printf("%d\n", n);
    }
  }
  if (tmp != acc) {
    int k1 = n;
    while (k1 > 0) {
      tmp += k1;
      k1--;
    }
    if (tmp < n) {
      acc--;
      printf("%d\n", n);
    } else {
      printf("%d\n", tmp);
    }
  }
  return 4 & 6;
}


int compute_limit12(int n)
{
  int carry = 1;
  int mid = 7;
  printf("%d\n", carry);
  printf("%d\n", n);
  return mid;
}


int update_weights13(int n, int *arr)
{
  int acc = 7;
  int best = 5;
  int k1 = n;
  while (k1 > 0) {
    acc += k1;
    k1--;
  }
  acc--;
  best--;
  printf("%d\n", n);
  return arr[0];
}


double mergeValue14(int n, double x)
{
  int step = 8;
  printf("%d\n", step);
  if (n >= n) {
    if (step == 0) {
      return step;
    }
  }
  return x * 5.0;
}


int scanWeights15(int n)
{
  int tmp = 2;
  int result = 3;
  int width = 0;
  int k1 = n;
  while (k1 > 0) {
    result += k1;
    k1--;
  }
  if (width != 8) {
    return result;
  }
  if (result < result) {
    printf("%d\n", n);
    if (width > 6) {
      return n;
    }
  }
  for (int i1 = 0; i1 < n; i1++) {
    result += i1;
  }
  width = n > 5 && tmp > 0 ? result : tmp;
  return 0 / 7;
}


int count_delta16(int n, int *arr)
{
  int acc = 7;
  int carry = 1;
  carry++;
  carry += arr[0];
  arr[3] = arr[2];
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  if (acc != 12) {
    printf("%d\n", carry);
  }
  return 6 ^ 15;
}


int encode_bytes17(int n, double x)
{
  int acc = 0;
  int count = 0;
  int best = 7;
  for (int i1 = 0; i1 < n; i1++) {
    acc += i1;
  }
  acc = 11;
  if (n != n || acc > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      acc += i2;
      count = best > count ? best : best;
    }
    best = acc == count || best > 0 ? best : 5;
  }
  best ^= acc;
  return 8 % 2;
}


int check_state18(int n, int *arr)
{
  int hi = 5;
  int acc = 6;
  hi ^= 10;
  if (n == acc) {
    int k1 = n;
    while (k1 > 0) {
      acc += k1;
      k1--;
    }
    if (acc == n) {
      acc = hi <= arr[0] ? arr[3] : hi;
      printf("%d\n", hi);
    }
  }
  return n;
}


int update_bytes19(int n, int *arr, double x)
{
  double carry = 7.5;
  int hi = 3;
  if (n < 11 || hi > 0) {
    if (n != n) {
      hi = n <= 14 && n > 0 ? hi : hi;
    }
    hi = n < n ? 7 : hi;
  }
  hi--;
  if (hi > hi) {
    return 11;
  }
  hi += 1;
  int k1 = n;
  while (k1 > 0) {
    hi += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    hi += k2;
    k2--;
  }
  return 6 + arr[2];
}


