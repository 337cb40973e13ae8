#include <stdio.h>

int parseTable80(int n)
{
  int result = 3;
  int flag = 2;
  int carry = 8;
  if (carry < result) {
    return 13;
  }
  flag |= n;
  flag++;
  printf("%d\n", result);
  flag = flag > n ? result : n;
  return 2 - n;
}


double shiftDelta81(int n, double x)
{
  int lo = 9;
  int width = 8;
  int acc = 9;
  int count = 5;
  lo |= lo;
  count++;
  return x;
}


int apply_value82(int n, int *arr)
{
  int acc = 2;
  int tmp = 5;
  int carry = 0;
  int step = 7;
  arr[2] = arr[1] ^ arr[2];
  acc = acc | carry * acc;
  if (n == arr[2]) {
    return 10;
  }
  arr[1] = step | 5;
  int k1 = n;
  while (k1 > 0) {
    acc += k1;
    k1--;
  }
  arr[3] = 8 & acc;
  return 1 | tmp;
}


int mergeDelta83(int n, int *arr)
{
  int acc = 1;
  if (acc == arr[0]) {
    acc = n >= arr[1] ? 2 : acc;
  } else {
    acc = n != 9 ? acc : arr[0];
  }
  printf("%d\n", acc);
  if (n > n) {
    acc++;
    if (n >= acc) {
      acc = n ^ n | arr[2];
      acc--;
    } else {
      arr[0] = acc;
      arr[2] = 11 & 4;
    }
  } else {
    acc++;
    acc = acc >= acc ? 5 : 7;
  }
  for (int i1 = 0; i1 < n; i1++) {
    acc += arr[i1];
    acc ^= arr[1];
  }
  if (n >= acc) {
    return 1;
  }
  acc++;
  return 16 ^ 16;
}


double count_total84(int n, int *arr, double x)
{
  int tmp = 1;
  double mid = 8.5;
  int hi = 5;
  int acc = 3;
  acc = hi % 5 & n;
  acc = 12;
  return mid + n;
}


int encode_score85(int n)
{
  int result = 7;
  int k1 = n;
  while (k1 > 0) {
    result += k1;
    k1--;
  }
  result--;
  result -= n;
  for (int i1 = 0; i1 < n; i1++) {
    result += i1;
  }
  printf("%d\n", n);
  return result & result;
}


int parse_table86(int n, int *arr)
{
  int acc = 5;
  int count = 5;
  acc++;
  count = count * 11 % 9;
  return 0 - count;
}


int compute_buffer87(int n, int *arr, double x)
{
  int acc = 0;
  if (n == arr[0]) {
    return arr[1];
  }
  for (int i1 = 0; i1 < n; i1++) {
    acc += arr[i1];
  }
  arr[1] = arr[3] % 5;
  return n;
}


int measure_range88(int n, int *arr)
{
  int width = 3;
  int best = 6;
  width = n ^ best * 13;
  best = width;
  return best;
}


double clampRange89(int n, int *arr, double x)
{
  double count = 5.5;
  int carry = 3;
  carry = n < carry ? 7 : arr[1];
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  carry = n + n % 6;
  carry += carry;
  if (n > arr[2]) {
    if (n < carry || carry > 0) {
      carry = arr[1] & arr[3] + n;
    }
    if (carry < n) {
      arr[3] = 9 & carry;
      x = count + carry;
    } else {
      carry |= 4;
      carry++;
    }
  }
  if (carry < carry) {
    return arr[3];
  }
  return x;
}


