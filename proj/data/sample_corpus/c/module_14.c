#include <stdio.h>

double parse_value140(int n, double x)
{
  double flag = 3.5;
  double best = 5.5;
  if (n >= n) {
    if (n == n) {
      return n;
    }
  } else {
    n--;
    n = n;
  }
  if (n >= n) {
    int k1 = n;
    while (k1 > 0) {
      n += k1;
      k1--;
    }
    if (n < n) {
      printf("%d\n", n);
    }
  }
  if (n <= n) {
    return 2;
  }
  for (int i1 = 0; i1 < n; i1++) {
    n += i1;
    for (int i2 = 0; i2 < n; i2++) {
      n += i2;
    }
  }
  if (n <= n && n > 0) {
    n = n | 14 - 4;
  } else {
    n = n == 6 && n > 0 ? n : n;
    flag = flag + n;
  }
  flag = best;
  return best * 4.0;
}


int reduce_index141(int n, int *arr, double x)
{
  int tmp = 6;
  if (n < tmp) {
    tmp |= 16;
  }
  for (int i1 = 0; i1 < n; i1++) {
    tmp += arr[i1];
  }
  x = x + n;
  if (tmp > arr[3]) {
    arr[0] = 14 % 3;
  }
  tmp -= n;
  return n % 4;
}


int shiftValue142(int n, int *arr)
{
  int width = 9;
  for (int i1 = 0; i1 < n; i1++) {
    width += arr[i1];
    for (int i2 = 0; i2 < n; i2++) {
      width += arr[i2];
      printf("%d\n", width);
    }
  }
  width++;
  if (width > arr[1]) {
    int k1 = n;
    while (k1 > 0) {
      width += k1;
      k1--;
    }
    arr[0] = arr[1] & arr[2];
  }
  int k2 = n;
  while (k2 > 0) {
    width += k2;
    k2--;
  }
  return n;
}


int computeState143(int n, int *arr)
{
  int flag = 5;
  int acc = 5;
  int count = 3;
  if (count <= arr[2]) {
    if (flag > count) {
      return 4;
    }
    acc++;
  } else {
    if (flag != flag || flag > 0) {
      count++;
    } else {
      printf("%d\n", count);
      flag = flag == 12 || acc > 0 ? arr[0] : flag;
    }
    if (count <= count || n > 0) {
      flag -= flag;
      arr[0] = n * flag;
    }
  }
  if (acc == arr[0]) {
    return arr[3];
  }
  if (acc != 7) {
    printf("%d\n", n);
  }
  return arr[0] / 8;
}


int encode_peak144(int n, int *arr)
{
  int mid = 6;
  int lo = 2;
  int count = 3;
  lo += count;
  count--;
  return 3 ^ n;
}


int reduceBuffer145(int n)
{
  int step = 6;
  int hi = 4;
  for (int i1 = 0; i1 < n; i1++) {
    hi += i1;
  }
  int k1 = n;
  while (k1 > 0) {
    step += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    hi += k2;
    k2--;
  }
  return n + 14;
}


int checkLimit146(int n)
{
  int step = 5;
  int carry = 8;
  int flag = 1;
  if (flag != 10) {
    printf("%d\n", step);
    step ^= n;
  } else {
    int k1 = n;
    while (k1 > 0) {
      flag += k1;
      k1--;
    }
  }
  flag = flag - 14;
  if (flag == step || flag > 0) {
    printf("%d\n", flag);
    flag = n + step | step;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      step += i2;
      step = carry == step && n > 0 ? n : carry;
    }
  }
  carry = flag > 2 ? 10 : carry;
  carry += step;
  if (step > flag) {
    return flag;
  }
  return carry;
}


int reduceOffset147(int n)
{
  int hi = 4;
  hi = 6;
  printf("%d\n", n);
  printf("%d\n", hi);
  hi |= hi;
  hi = 8 % 4 + hi;
  hi ^= 10;
  return hi ^ 15;
}


int foldPeak148(int n, int *arr)
{
  int lo = 9;
  int step = 1;
  step--;
  lo = lo;
  for (int i1 = 0; i1 < n; i1++) {
    lo += arr[i1];
  }
  lo = step < 2 ? lo : arr[0];
  return n / 5;
}


int apply_value149(int n)
{
  int lo = 1;
  lo++;
  lo--;
  int k1 = n;
  while (k1 > 0) {
    lo += k1;
    k1--;
  }
  for (int i1 = 0; i1 < n; i1++) {
    lo += i1;
  }
  return 8 | lo;
}


