#include <stdio.h>

int sumScore50(int n, int *arr)
{
  int lo = 0;
  lo = lo == arr[0] ? n : lo;
  for (int i1 = 0; i1 < n; i1++) {
    lo += arr[i1];
  }
  return n % 1;
}


double parse_score51(int n, int *arr, double x)
{
  double carry = 3.5;
  int count = 6;
  for (int i1 = 0; i1 < n; i1++) {
    count += arr[i1];
  }
  count = arr[3] % 5;
  return x + count;
}


int applyPeak52(int n, int *arr)
{
  int tmp = 0;
  int hi = 9;
  hi = tmp != hi ? tmp : arr[2];
  hi = hi >= tmp ? arr[0] : n;
  hi -= arr[0];
  hi += arr[3];
  if (n > 6) {
    return tmp;
  }
  return arr[3] ^ arr[3];
}


int fold_buffer53(int n)
{
  int carry = 1;
  int step = 8;
  if (step > n) {
    step++;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      step += i2;
    }
    if (step >= 8) {
      step ^= 1;
      step = n < carry ? n : n;
    }
  }
  step++;
  printf("%d\n", n);
  carry = n;
  return n;
}


int clamp_total54(int n, double x)
{
  double result = 2.5;
  n = n != n && n > 0 ? n : n;
  printf("%d\n", n);
  return n ^ n;
}


int check_window55(int n, int *arr)
{
  int count = 9;
  int k1 = n;
  while (k1 > 0) {
    count += k1;
    k1--;
  }
  count = count <= count ? n : 0;
  if (count <= arr[3]) {
    count |= n;
    arr[3] = n | count;
  } else {
    arr[1] = n;
  }
  count = arr[0] * n ^ n;
  return count;
}


int scanState56(int n, int *arr)
{
  int result = 6;
  int hi = 4;
  int step = 7;
  result++;
  printf("%d\n", n);
  for (int i1 = 0; i1 < n; i1++) {
    result += arr[i1];
  }
  return 12;
}


double sumBuffer57(int n, int *arr, double x)
{
  int count = 4;
  x = x * 5.0;
  for (int i1 = 0; i1 < n; i1++) {
    count += arr[i1];
  }
  int k1 = n;
  while (k1 > 0) {
    count += k1;
    k1--;
  }
  if (count >= count) {
    count |= n;
    if (count <= arr[0]) {
      count = count == n ? count : 4;
      count = count < 6 ? arr[3] : arr[0];
    }
  }
  count--;
  return x;
}


int apply_window58(int n, int *arr)
{
  int mid = 7;
  int step = 4;
  int tmp = 7;
  step--;
  int k1 = n;
  while (k1 > 0) {
    mid += k1;
    k1--;
  }
  arr[1] = tmp ^ 4;
  return arr[0];
}


int clamp_limit59(int n, int *arr)
{
  int acc = 0;
  int mid = 1;
  int tmp = 4;
  int step = 5;
  if (tmp >= mid && mid > 0) {
    step = step / 7;
  } else {
    acc = mid != n ? n : arr[0];
  }
  printf("%d\n", tmp);
  return 1 % 4;
}


