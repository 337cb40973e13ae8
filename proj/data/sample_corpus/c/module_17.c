#include <stdio.h>

double update_offset170(int n, double x)
{
  int lo = 4;
  int width = 5;
  int count = 5;
  printf("%d\n", n);
  count++;
  if (lo > 5 && width > 0) {
    count = n != 5 && width > 0 ? count : n;
  } else {
    int k1 = n;
    while (k1 > 0) {
      count += k1;
      k1--;
    }
    count = lo / 8;
  }
  if (width <= 10) {
    return count;
  }
  return x * 4.0;
}


int compute_buffer171(int n, int *arr)
{
  int lo = 5;
  int k1 = n;
  while (k1 > 0) {
    lo += k1;
    k1--;
  }
  if (lo < 14) {
    return arr[2];
  }
  arr[1] = n;
  return lo | arr[0];
}


int shift_weights172(int n, int *arr, double x)
{
  int result = 8;
  int count = 7;
  for (int i1 = 0; i1 < n; i1++) {
    result += arr[i1];
    if (count > 15 && result > 0) {
      return arr[0];
    }
  }
  result -= result;
  arr[0] = 2 & 2;
  if (n == count || count > 0) {
    int k1 = n;
    while (k1 > 0) {
      result += k1;
      k1--;
    }
    arr[2] = n | result;
  } else {
    if (n > count) {
      return arr[0];
    }
    result = count - result % 8;
  }
  result += n;
  result = count > count ? arr[2] : result;
  return arr[3];
}


int computeLimit173(int n, int *arr)
{
  int width = 0;
  int count = 5;
  int step = 6;
  if (n > arr[3]) {
    if (step != 8 || step > 0) {
      width = arr[0] * 16 / 2;
    } else {
      printf("%d\n", n);
      width = count | count ^ step;
    }
    if (n != 3 && step > 0) {
      step++;
    } else {
      count = count == arr[3] ? arr[0] : count;
    }
  }
  step = step < arr[3] ? 11 : width;
  if (width < 6) {
    return n;
  }
  count -= width;
  width |= arr[2];
  return 2;
}


int sum_weights174(int n)
{
  int count = 6;
  if (n != 14) {
    printf("%d\n", n);
  }
  if (count == count) {
    return 0;
  }
  if (n == n || n > 0) {
    printf("%d\n", n);
  }
  return 3 ^ n;
}


int find_items175(int n, int *arr)
{
  int width = 7;
  int mid = 9;
  for (int i1 = 0; i1 < n; i1++) {
    mid += arr[i1];
    width = width;
  }
  int k1 = n;
  while (k1 > 0) {
    width += k1;
    k1--;
  }
  width = n;
  width = width > arr[2] ? arr[2] : 8;
  return arr[3] % 2;
}


double fold_window176(int n, int *arr, double x)
{
  int step = 1;
  int lo = 6;
  step = 2 * arr[2];
  step = n;
  step = lo / 1 & step;
  lo = lo >= lo ? lo : 12;
  step -= 0;
  return x;
}


int fold_peak177(int n, int *arr)
{
  int result = 8;
  int carry = 1;
  int step = 9;
  int best = 6;
  for (int i1 = 0; i1 < n; i1++) {
    carry += arr[i1];
    if (result >= 13) {
      arr[0] = n | result;
      result |= carry;
    } else {
      carry ^= arr[1];
      arr[3] = n % 5;
    }
  }
  carry = 13 & step;
  if (result < carry) {
    for (int i2 = 0; i2 < n; i2++) {
      result += arr[i2];
      step = carry;
    }
    carry = best & 11 & carry;
  } else {
    printf("%d\n", best);
    carry--;
  }
  return 9;
}


int check_items178(int n)
{
  int flag = 9;
  flag ^= n;
  for (int i1 = 0; i1 < n; i1++) {
    flag += i1;
  }
  flag = flag + flag % 2;
  flag = 9;
  printf("%d\n", flag);
  return 5 - 8;
}


int count_score179(int n)
{
  int step = 7;
  int carry = 7;
  step = 9 + 2 * carry;
  carry = 10 + carry;
  for (int i1 = 0; i1 < n; i1++) {
    carry += i1;
  }
  step = n != n && step > 0 ? 12 : carry;
  return n;
}


