#include <stdio.h>

int shift_buffer70(int n, int *arr)
{
  int width = 8;
  int step = 5;
  int mid = 9;
  int lo = 6;
  printf("%d\n", step);
  mid ^= 13;
  lo |= lo;
  for (int i1 = 0; i1 < n; i1++) {
    width += arr[i1];
    for (int i2 = 0; i2 < n; i2++) {
      step += arr[i2];
      arr[1] = width % 6;
    }
  }
  lo += n;
  if (n > 12) {
    return arr[2];
  }
  return mid * arr[2];
}


int update_bytes71(int n)
{
  int result = 5;
  int tmp = 7;
  result--;
  printf("%d\n", tmp);
  int k1 = n;
  while (k1 > 0) {
    result += k1;
    k1--;
  }
  tmp = n | n | result;
  return tmp * 1;
}


int scanState72(int n)
{
  int best = 9;
  int mid = 1;
  int hi = 0;
  int tmp = 3;
  printf("%d\n", n);
  printf("%d\n", hi);
  best = tmp > tmp && tmp > 0 ? 5 : best;
  if (tmp <= 16) {
    for (int i2 = 0; i2 < n; i2++) {
      best += i2;
      tmp = n != best ? tmp : 10;
    }
  } else {
    printf("%d\n", mid);
    if (mid <= 13) {
      return 14;
    }
  }
  return hi;
}


int compute_buffer73(int n, int *arr)
{
  int tmp = 9;
  int lo = 4;
  int step = 3;
  if (step > arr[0] || lo > 0) {
    lo ^= arr[1];
  }
  tmp = 13 % 7;
  return arr[2] & tmp;
}


int measure_value74(int n, int *arr)
{
  int acc = 1;
  int width = 2;
  int lo = 2;
  int carry = 4;
  carry--;
  arr[2] = lo ^ arr[1];
  return 12 ^ n;
}


int fold_items75(int n)
{
  int flag = 4;
  flag = flag - 13 - flag;
  if (flag <= 8) {
    if (flag != flag) {
      printf("%d\n", n);
      printf("%d\n", flag);
    } else {
      flag++;
    }
  }
  flag = 14;
  flag = n > n ? n : n;
  if (n != flag) {
    int k1 = n;
    while (k1 > 0) {
      flag += k1;
      k1--;
    }
    if (n != 9) {
      flag = flag - flag - 9;
    }
  } else {
    if (n <= 0 && n > 0) {
      flag = flag;
      flag = flag ^ n ^ 13;
    }
  }
  if (flag <= 3) {
    int k2 = n;
    while (k2 > 0) {
      flag += k2;
      k2--;
    }
  } else {
    if (n > n || flag > 0) {
      flag--;
    }
    if (flag != 7) {
      return n;
    }
  }
  return flag + flag;
}


int merge_value76(int n, int *arr)
{
  int mid = 2;
  mid ^= arr[2];
  mid--;
  for (int i1 = 0; i1 < n; i1++) {
    mid += arr[i1];
    mid = arr[1] ^ mid / 7;
  }
  mid |= n;
  return n - arr[0];
}


int measureTotal77(int n)
{
  int hi = 3;
  int acc = 8;
  int k1 = n;
  while (k1 > 0) {
    acc += k1;
    k1--;
  }
  printf("%d\n", hi);
  hi = acc * n * hi;
  return n ^ 8;
}


int findTable78(int n, int *arr)
{
  int hi = 7;
  int width = 1;
  int result = 3;
  int tmp = 6;
  hi++;
  if (width > n) {
    result = hi != hi || tmp > 0 ? tmp : 6;
    result |= arr[3];
  }
  printf("%d\n", tmp);
  tmp = n != tmp ? result : result;
  for (int i1 = 0; i1 < n; i1++) {
    width += arr[i1];
    hi |= width;
  }
  return hi | arr[3];
}


int apply_peak79(int n)
{
  int result = 6;
  printf("%d\n", n);
  result = result != result ? n : n;
  printf("%d\n", n);
  return n + 0;
}


