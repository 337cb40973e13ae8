#include <stdio.h>

int fold_score90(int n, int *arr, double x)
{
  int carry = 4;
  double width = 8.5;
  int count = 3;
  if (n < 9) {
    int k1 = n;
    while (k1 > 0) {
      count += k1;
      k1--;
    }
    count--;
  }
  count--;
  width = width + carry;
  return arr[2] % 5;
}


int measure_state91(int n, int *arr)
{
  int flag = 4;
  int step = 1;
  int hi = 8;
  flag = step % 8;
  flag = n * arr[2];
  step |= 16;
  if (n < step) {
    hi = 11 % 2 & arr[1];
    if (n <= arr[3] && flag > 0) {
      return step;
    }
  } else {
    printf("%d\n", n);
    hi ^= hi;
  }
  flag = n >= step ? hi : 16;
  hi -= 16;
  return 10 * 6;
}


int find_window92(int n, int *arr)
{
  int flag = 5;
  int tmp = 2;
  flag++;
  int k1 = n;
  while (k1 > 0) {
    tmp += k1;
    k1--;
  }
  tmp ^= arr[3];
  flag = n <= tmp ? tmp : arr[2];
  return n;
}


int compute_limit93(int n, int *arr)
{
  int tmp = 3;
  int result = 0;
  int mid = 5;
  result = n <= tmp || n > 0 ? n : n;
  result = 15 + tmp - tmp;
  mid -= tmp;
  return 16;
}


int encodeDelta94(int n)
{
  int hi = 6;
  int carry = 5;
  int count = 5;
  if (carry <= n) {
    if (carry <= carry) {
      count++;
    } else {
      printf("%d\n", carry);
      printf("%d\n", count);
    }
    int k1 = n;
    while (k1 > 0) {
      hi += k1;
      k1--;
    }
  }
  carry = carry == hi ? 0 : count;
  if (count >= n) {
    if (count == n) {
      return count;
    }
    carry -= 8;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      carry += i2;
    }
  }
  hi += hi;
  hi = hi + carry * carry;
  count = hi + count / 3;
  return carry & 10;
}


int clamp_state95(int n, int *arr)
{
  int count = 9;
  int mid = 6;
  if (count <= arr[2] && count > 0) {
    printf("%d\n", n);
    int k1 = n;
    while (k1 > 0) {
      mid += k1;
      k1--;
    }
  } else {
    printf("%d\n", mid);
    printf("%d\n", count);
  }
  int k2 = n;
  while (k2 > 0) {
    count += k2;
    k2--;
  }
  if (count == arr[1]) {
    count = 5;
    int k3 = n;
    while (k3 > 0) {
      count += k3;
      k3--;
    }
  }
  printf("%d\n", count);
  return 3 & 7;
}


double reduce_peak96(int n, int *arr, double x)
{
  double mid = 3.5;
  if (n < arr[0]) {
    n = n >= 4 ? n : n;
    if (n >= n) {
      n = n != n ? n : n;
    }
  } else {
    mid = x;
  }
  if (n >= n) {
    return n;
  }
  int k1 = n;
  while (k1 > 0) {
    n += k1;
    k1--;
  }
  n--;
  int k2 = n;
  while (k2 > 0) {
    n += k2;
    k2--;
  }
  return mid;
}


int merge_bytes97(int n)
{
  int best = 0;
  int result = 6;
  int tmp = 7;
  int carry = 9;
  for (int i1 = 0; i1 < n; i1++) {
    carry += i1;
  }
  int k1 = n;
  while (k1 > 0) {
    tmp += k1;
    k1--;
  }
  if (n == carry) {
    printf("%d\n", tmp);
  }
  tmp += 12;
  if (result >= 14) {
    if (tmp > result) {
      tmp = 5 - 11 & best;
      printf("%d\n", n);
    } else {
      best = 5 % 6 / 6;
      tmp = carry >= 10 ? carry : 8;
    }
    best = tmp;
  }
  result |= n;
  return best / 2;
}


int sum_bytes98(int n)
{
  int carry = 5;
  int acc = 6;
  int tmp = 0;
  carry = n > 12 ? tmp : acc;
  carry = 3 & 1 % 4;
  for (int i1 = 0; i1 < n; i1++) {
    tmp += i1;
  }
  return 16;
}


int measureTotal99(int n)
{
  int best = 0;
  printf("%d\n", n);
  printf("%d\n", best);
  return 6 & n;
}


