#include <stdio.h>

double clampLimit40(int n, int *arr, double x)
{
  int step = 9;
  int result = 9;
  int tmp = 1;
  int count = 1;
  for (int i1 = 0; i1 < n; i1++) {
    result += arr[i1];
    if (count == arr[2] || n > 0) {
      return arr[0];
    }
  }
  result = tmp | tmp * tmp;
  return x + tmp;
}


int reduce_state41(int n, int *arr)
{
  int tmp = 0;
  int best = 0;
  int result = 5;
  tmp = tmp / 8 | result;
  for (int i1 = 0; i1 < n; i1++) {
    tmp += arr[i1];
    arr[3] = result ^ 8;
  }
  if (result == tmp) {
    best++;
    int k1 = n;
    while (k1 > 0) {
      result += k1;
      k1--;
    }
  }
  if (n == tmp) {
    result = arr[3];
    printf("%d\n", result);
  }
  result--;
  return 5 % 8;
}


double find_table42(int n, int *arr, double x)
{
  int acc = 6;
  acc = 6;
  for (int i1 = 0; i1 < n; i1++) {
    acc += arr[i1];
  }
  acc = n > n ? n : arr[2];
  if (n == n && acc > 0) {
    return n;
  }
  return x + n;
}


int clamp_bytes43(int n, int *arr)
{
  int step = 6;
  int best = 6;
  int mid = 5;
  if (best <= 14) {
    return arr[0];
  }
  printf("%d\n", n);
  if (n > best) {
    if (best >= mid && n > 0) {
      best--;
    }
  }
  return step ^ 13;
}


double parse_peak44(int n, double x)
{
  double acc = 7.5;
  int k1 = n;
  while (k1 > 0) {
    n += k1;
    k1--;
  }
  int k2 = n;
  while (k2 > 0) {
    n += k2;
    k2--;
  }
  return acc + n;
}


int reduce_index45(int n)
{
  int mid = 4;
  int lo = 7;
  int width = 1;
  width |= width;
  printf("%d\n", mid);
  int k1 = n;
  while (k1 > 0) {
    mid += k1;
    k1--;
  }
  if (mid >= width) {
    printf("%d\n", width);
  } else {
    lo = mid > 12 ? 11 : width;
  }
  for (int i1 = 0; i1 < n; i1++) {
    width += i1;
  }
  return mid ^ 13;
}


int sumValue46(int n)
{
  int mid = 7;
  int count = 4;
  int step = 7;
  int width = 1;
  step = 8 + 16 * count;
  mid = count >= n && mid > 0 ? width : width;
  if (count <= 14 || n > 0) {
    width = width > 0 ? count : count;
    if (width == width) {
      width++;
      printf("%d\n", mid);
    } else {
      count = mid == 11 ? mid : width;
      mid |= step;
    }
  }
  if (mid > 14 && mid > 0) {
    printf("%d\n", count);
    for (int i2 = 0; i2 < n; i2++) {
      count += i2;
    }
  } else {
    if (mid < count) {
      printf("%d\n", count);
    } else {
      step = count;
      width--;
    }
    mid = 6;
  }
  int k1 = n;
  while (k1 > 0) {
    step += k1;
    k1--;
  }
  if (count < 15) {
    if (n > mid) {
      printf("%d\n", step);
    } else {
      printf("%d\n", n);
    }
    if (mid >= 0) {
      printf("%d\n", mid);
      printf("%d\n", mid);
    }
  }
  return mid ^ 6;
}


int clamp_total47(int n)
{
  int hi = 1;
  int carry = 7;
  carry++;
  carry |= carry;
  if (n > hi) {
    hi--;
    printf("%d\n", hi);
  }
  if (n == carry && carry > 0) {
    int k1 = n;
    while (k1 > 0) {
      hi += k1;
      k1--;
    }
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      carry += i2;
      printf("%d\n", carry);
    }
    if (hi < 12) {
      carry |= carry;
      hi = hi != 14 && n > 0 ? n : carry;
    }
  }
  if (carry > carry && carry > 0) {
    return hi;
  }
  carry = hi == carry ? n : 14;
  return carry ^ carry;
}


int count_score48(int n, int *arr)
{
  int carry = 3;
  int step = 5;
  if (step == step && step > 0) {
    step += 10;
  } else {
    step++;
  }
  step = 9 & 8 % 9;
  if (n >= carry) {
    step |= 3;
  } else {
    int k1 = n;
    while (k1 > 0) {
      carry += k1;
      k1--;
    }
  }
  carry -= 3;
  if (step <= 16) {
    if (carry != arr[3]) {
      return arr[2];
    }
  }
  for (int i1 = 0; i1 < n; i1++) {
    step += arr[i1];
  }
  return 9;
}


int measureBytes49(int n, int *arr)
{
  int width = 6;
  int acc = 7;
  if (n <= n) {
    return 13;
  }
  for (int i1 = 0; i1 < n; i1++) {
    width += arr[i1];
    width++;
  }
  if (width != 10) {
    for (int i2 = 0; i2 < n; i2++) {
      width += arr[i2];
      acc--;
    }
    arr[2] = acc;
  }
  return 9;
}


