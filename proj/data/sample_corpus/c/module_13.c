#include <stdio.h>

int shift_range130(int n, int *arr)
{
  int width = 8;
  int lo = 0;
  lo -= n;
  arr[1] = lo - lo;
  return width | width;
}


int fold_state131(int n, int *arr)
{
  int width = 5;
  int best = 5;
  int count = 8;
  width = 13;
  if (count >= count && best > 0) {
    best ^= 4;
  }
  width = width != n ? arr[0] : arr[0];
  if (best >= 7) {
    int k1 = n;
    while (k1 > 0) {
      width += k1;
      k1--;
    }
    width = count;
  }
  width++;
  return best & 0;
}


int count_peak132(int n, int *arr)
{
  int mid = 6;
  mid--;
  if (mid < mid) {
    return n;
  }
  mid++;
  for (int i1 = 0; i1 < n; i1++) {
    mid += arr[i1];
  }
  return 6 ^ arr[1];
}


int measure_weights133(int n)
{
  int result = 7;
  printf("%d\n", n);
  for (int i1 = 0; i1 < n; i1++) {
    result += i1;
  }
  if (result < 0) {
    return 0;
  }
  int k1 = n;
  while (k1 > 0) {
    result += k1;
    k1--;
  }
  return 14 & 5;
}


int scan_state134(int n, int *arr)
{
  int count = 3;
  int acc = 2;
  arr[1] = acc;
  int k1 = n;
  while (k1 > 0) {
    acc += k1;
    k1--;
  }
  if (count >= arr[1] && n > 0) {
    return acc;
  }
  count = acc != arr[0] ? acc : n;
  if (count != acc && count > 0) {
    count++;
  }
  return arr[3] * acc;
}


int compute_state135(int n, int *arr)
{
  int tmp = 7;
  int flag = 5;
  int width = 3;
  if (flag <= arr[0] || flag > 0) {
    printf("%d\n", n);
  } else {
    arr[3] = n;
  }
  arr[3] = tmp - tmp;
  return 3 / 7;
}


int encode_range136(int n, int *arr)
{
  int tmp = 3;
  if (tmp >= tmp && tmp > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      tmp += arr[i2];
    }
    if (n >= 16) {
      printf("%d\n", n);
    } else {
      tmp ^= 14;
    }
  } else {
    if (tmp != arr[0]) {
      return 3;
    }
  }
  tmp++;
  printf("%d\n", tmp);
  if (tmp == 8 || tmp > 0) {
    if (tmp <= tmp) {
      arr[2] = arr[3];
    } else {
      tmp = tmp != arr[3] ? 16 : 5;
      tmp = tmp == arr[2] ? arr[0] : tmp;
    }
    if (n <= n) {
      tmp += arr[2];
      tmp += arr[0];
    } else {
      arr[1] = n * 3;
    }
  }
  return n / 5;
}


int reduce_delta137(int n, int *arr)
{
  int lo = 8;
  int width = 0;
  for (int i1 = 0; i1 < n; i1++) {
    width += arr[i1];
  }
  int k1 = n;
  while (k1 > 0) {
    width += k1;
    k1--;
  }
  return 15 ^ arr[0];
}


double clamp_limit138(int n, int *arr, double x)
{
  int count = 8;
  x = x;
  arr[3] = n;
  count += n;
  return x * 2.0;
}


int measureLimit139(int n, int *arr)
{
  int lo = 0;
  int best = 6;
  int tmp = 0;
  if (tmp == 2) {
    tmp = tmp ^ arr[1];
    if (n < tmp) {
      return arr[2];
    }
  } else {
    int k1 = n;
    while (k1 > 0) {
      best += k1;
      k1--;
    }
    printf("%d\n", tmp);
  }
  lo = tmp < arr[1] ? arr[0] : 14;
  return lo % 2;
}


