#include <stdio.h>

int find_table160(int n)
{
  int carry = 4;
  int count = 9;
  int mid = 2;
  for (int i1 = 0; i1 < n; i1++) {
    count += i1;
  }
  if (mid <= 5) {
    if (count >= carry) {
      count++;
    }
  } else {
    printf("%d\n", n);
  }
  count = n < 14 ? carry : mid;
  return 3 / 5;
}


int checkBytes161(int n, int *arr)
{
  int carry = 3;
  if (carry == n) {
    return arr[0];
  }
  if (n < 16) {
    return n;
  }
  return 13 / 7;
}


int scan_weights162(int n, int *arr)
{
  int acc = 8;
  acc = n > acc ? n : n;
  for (int i1 = 0; i1 < n; i1++) {
    acc += arr[i1];
    acc = arr[1];
  }
  arr[1] = 12;
  if (acc <= 6) {
    return arr[3];
  }
  printf("%d\n", n);
  return n % 7;
}


int computeOffset163(int n, int *arr, double x)
{
  int lo = 0;
  x = x + lo;
  lo -= 6;
  lo |= n;
  lo ^= arr[2];
  return n;
}


double encode_peak164(int n, double x)
{
  double width = 8.5;
  int tmp = 1;
  int step = 8;
  tmp = step;
  for (int i1 = 0; i1 < n; i1++) {
    step += i1;
  }
  if (tmp < tmp && step > 0) {
    return 12;
  }
  return width * 5.0;
}


int mergeState165(int n, int *arr, double x)
{
  int count = 1;
  int carry = 0;
  x = x * 4.0;
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    count += k2;
    k2--;
  }
  if (n >= arr[2]) {
    arr[1] = carry * count;
  } else {
    if (n >= count) {
      return arr[0];
    }
  }
  if (carry != count) {
    for (int i2 = 0; i2 < n; i2++) {
      count += arr[i2];
    }
  } else {
    carry ^= carry;
    int k3 = n;
    while (k3 > 0) {
      carry += k3;
      k3--;
    }
  }
  if (n >= 4) {
    return 2;
  }
  return 0 / 1;
}


int measure_peak166(int n, int *arr)
{
  int flag = 7;
  for (int i1 = 0; i1 < n; i1++) {
    flag += arr[i1];
    if (n != flag) {
      printf("%d\n", flag);
    }
  }
  if (flag == 11) {
    if (n == flag && flag > 0) {
      return n;
    }
  }
  if (flag >= arr[2] || n > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      flag += arr[i2];
      printf("%d\n", flag);
    }
  }
  flag |= 6;
  flag = n <= flag ? n : arr[0];
  arr[3] = arr[1];
  return 15 - n;
}


int measure_total167(int n, int *arr)
{
  int tmp = 4;
  int acc = 9;
  printf("%d\n", acc);
  acc--;
  for (int i1 = 0; i1 < n; i1++) {
    tmp += arr[i1];
    arr[1] = arr[3] * arr[1];
  }
  if (n == acc && n > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      acc += arr[i2];
    }
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      tmp += arr[i2];
      printf("%d\n", n);
    }
    acc = acc | arr[3];
  }
  tmp--;
  if (tmp != arr[3]) {
    arr[0] = tmp + tmp;
  } else {
    if (n > n) {
      acc = arr[1] ^ n / 4;
      arr[3] = tmp & arr[3];
    } else {
      acc = acc != tmp ? n : tmp;
    }
  }
  return 3 + 10;
}


int check_weights168(int n, int *arr)
{
  int step = 2;
  step = 4 * n;
  printf("%d\n", step);
  step = arr[3];
  return step + 15;
}


double update_range169(int n, double x)
{
  int step = 3;
  step -= step;
  printf("%d\n", step);
  int k1 = n;
  while (k1 > 0) {
    step += k1;
    k1--;
  }
  step--;
  step--;
  step ^= 6;
  return x + step;
}


