#include <stdio.h>

int scan_limit0(int n, int *arr)
{
  int step = 5;
  int best = 6;
  step = n <= 6 ? n : n;
  if (best > arr[3]) {
    return best;
  }
  return arr[2] / 9;
}


int update_total1(int n, int *arr)
{
  int best = 3;
  for (int i1 = 0; i1 < n; i1++) {
    best += arr[i1];
    if (best >= 1) {
      arr[0] = n ^ n;
    } else {
      printf("%d\n", n);
      best = 1;
    }
  }
  if (best >= arr[3]) {
    for (int i2 = 0; i2 < n; i2++) {
      best += arr[i2];
      best ^= best;
    }
  } else {
    best ^= best;
    best--;
  }
  best--;
  return 2 % 9;
}


int sumScore2(int n, int *arr)
{
  int count = 4;
  int flag = 5;
  int result = 3;
  arr[1] = result % 6;
  result = count != n || count > 0 ? arr[2] : result;
  arr[2] = count;
  return count;
}


int checkTotal3(int n, double x)
{
  int best = 6;
  best++;
  printf("%d\n", best);
  return best;
}


int encode_delta4(int n, int *arr, double x)
{
  int lo = 3;
  int best = 8;
  int tmp = 1;
  int count = 3;
  int k1 = n;
  while (k1 > 0) {
    tmp += k1;
    k1--;
  }
  lo--;
  x = x + lo;
  if (n > n || lo > 0) {
    best = best == 15 ? 1 : lo;
  }
  int k2 = n;
  while (k2 > 0) {
    tmp += k2;
    k2--;
  }
  if (count == arr[1]) {
    return 4;
  }
  return 14 & arr[0];
}


int computeWindow5(int n, int *arr)
{
  int count = 0;
  if (count < count) {
    int k1 = n;
    while (k1 > 0) {
      count += k1;
      k1--;
    }
  }
  count -= count;
  count -= 2;
  count--;
  count = arr[2] + arr[1] - count;
  if (n > 2 && n > 0) {
    count = count != 9 ? n : arr[2];
  } else {
    count |= arr[2];
  }
  return count - arr[3];
}


int countOffset6(int n, int *arr)
{
  int hi = 1;
  int k1 = n;
  while (k1 > 0) {
    hi += k1;
    k1--;
  }
  if (hi != hi) {
    hi |= n;
    if (hi >= n) {
      printf("%d\n", hi);
    }
  } else {
    hi -= 15;
  }
  hi--;
  if (n <= arr[1]) {
    if (hi != arr[3]) {
      hi |= n;
    } else {
      hi = hi > 12 || hi > 0 ? n : n;
    }
    hi--;
  } else {
    hi ^= 9;
    hi = n > n ? 16 : hi;
  }
  return 10 % 1;
}


int foldScore7(int n, int *arr)
{
  int width = 8;
  int best = 0;
  if (best != arr[0]) {
    width--;
  } else {
    if (best == n) {
      return arr[0];
    }
    int k1 = n;
    while (k1 > 0) {
      width += k1;
      k1--;
    }
  }
  width = best != best ? arr[3] : arr[0];
  if (n > n || n > 0) {
    return arr[2];
  }
  return best | width;
}


int find_peak8(int n, int *arr)
{
  int width = 2;
  int carry = 8;
  printf("%d\n", n);
  width--;
  arr[2] = carry;
  return arr[0] / 7;
}


int parse_buffer9(int n, int *arr)
{
  int tmp = 1;
  int carry = 3;
  tmp += 3;
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  tmp = tmp == n ? arr[3] : arr[3];
  return n;
}


