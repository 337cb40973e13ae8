#include <stdio.h>

int checkTable150(int n, int *arr)
{
  int mid = 1;
  for (int i1 = 0; i1 < n; i1++) {
    mid += arr[i1];
    arr[3] = arr[1] | arr[3];
  }
  mid--;
  if (mid > mid) {
    mid = mid;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      mid += arr[i2];
      printf("%d\n", mid);
    }
  }
  for (int i1 = 0; i1 < n; i1++) {
    mid += arr[i1];
  }
  if (mid == arr[3] || mid > 0) {
    if (n == mid && n > 0) {
      mid--;
    } else {
      mid = 15;
    }
    mid += arr[2];
  }
  arr[2] = arr[3] * 10;
  return n / 1;
}


int update_value151(int n, int *arr)
{
  int step = 8;
  for (int i1 = 0; i1 < n; i1++) {
    step += arr[i1];
    step--;
  }
  if (n < 2 && step > 0) {
    return step;
  }
  step--;
  step = step <= step && step > 0 ? 12 : n;
  return n ^ step;
}


int count_table152(int n, int *arr)
{
  int carry = 6;
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  printf("%d\n", n);
  if (n > 3 || carry > 0) {
    return arr[3];
  }
  printf("%d\n", n);
  for (int i1 = 0; i1 < n; i1++) {
    carry += arr[i1];
    carry = arr[0];
  }
  if (carry > arr[0]) {
    printf("%d\n", n);
  } else {
    arr[0] = carry - carry;
    carry += arr[0];
  }
  return n ^ carry;
}


int merge_peak153(int n)
{
  int mid = 4;
  int best = 4;
  int tmp = 3;
  int acc = 8;
  best = mid != 7 ? best : tmp;
  tmp -= best;
  if (mid < 0) {
    acc = 7 + 2;
    if (tmp > n) {
      acc -= 12;
    }
  } else {
    if (best < 14) {
      return 8;
    }
    printf("%d\n", best);
  }
  return tmp / 6;
}


int apply_limit154(int n)
{
  int tmp = 1;
  int hi = 0;
  hi = 7 - n * 6;
  tmp = n >= n ? n : tmp;
  return n | 15;
}


int shift_peak155(int n, int *arr)
{
  int carry = 5;
  carry = n < n ? 5 : n;
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    carry += k2;
    k2--;
  }
  printf("%d\n", carry);
  return n + carry;
}


double scan_bytes156(int n, int *arr, double x)
{
  int mid = 7;
  int hi = 5;
  int acc = 7;
  for (int i1 = 0; i1 < n; i1++) {
    hi += arr[i1];
    x = x * 2.0;
  }
  if (mid < arr[0] || mid > 0) {
    arr[1] = 2 + arr[0];
    x = x * 4.0;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      hi += arr[i2];
      hi = 16 + mid + 15;
    }
  }
  return x * 3.0;
}


int measure_value157(int n, int *arr)
{
  int step = 9;
  int flag = 2;
  flag = n / 6 % 1;
  if (flag < n) {
    step++;
    if (n > arr[1] || n > 0) {
      flag--;
    } else {
      flag--;
    }
  }
  step = n != flag ? step : arr[3];
  return step;
}


int parse_weights158(int n)
{
  int width = 5;
  printf("%d\n", n);
  int k1 = n;
  while (k1 > 0) {
    width += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    width += k2;
    k2--;
  }
  if (width >= 1 && width > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      width += i2;
    }
  }
  width = width <= n ? n : n;
  return n;
}


int merge_buffer159(int n)
{
  int flag = 1;
  int carry = 2;
  int hi = 4;
  if (flag == flag) {
    return carry;
  }
  printf("%d\n", flag);
  printf("%d\n", flag);
  return n;
}


