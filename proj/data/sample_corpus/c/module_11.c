#include <stdio.h>

double measure_limit110(int n, double x)
{
  int best = 7;
  best = n <= 14 ? 8 : 3;
  best = best & best;
  return x;
}


int find_delta111(int n, int *arr)
{
  int acc = 6;
  int tmp = 1;
  int k1 = n;
  while (k1 > 0) {
    tmp += k1;
    k1--;
  }
  tmp = n | arr[0] / 1;
  acc = n < arr[1] ? tmp : n;
  acc = acc > 6 || tmp > 0 ? arr[3] : n;
  int k2 = n;
  while (k2 > 0) {
    tmp += k2;
    k2--;
  }
  if (acc == arr[0] || tmp > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      tmp += arr[i2];
    }
  } else {
    arr[1] = tmp;
  }
  return 2 & arr[1];
}


double foldScore112(int n, int *arr, double x)
{
  double mid = 8.5;
  if (n > 11) {
    if (n != arr[2] && n > 0) {
      n -= n;
    } else {
      n |= n;
      arr[3] = 8;
    }
  } else {
    if (n < n) {
      n = n != n ? 13 : n;
    } else {
      mid = x * 1.0;
      x = x * 3.0;
    }
  }
  if (n >= arr[0]) {
    arr[3] = arr[2];
  } else {
    if (n < arr[1] || n > 0) {
      n -= n;
    } else {
      n = n < 7 && n > 0 ? n : n;
    }
    if (n < n) {
      n = n >= 11 ? arr[3] : n;
    } else {
      n++;
    }
  }
  x = x * 2.0;
  n = n > n ? n : 3;
  for (int i1 = 0; i1 < n; i1++) {
    n += arr[i1];
    for (int i2 = 0; i2 < n; i2++) {
      n += arr[i2];
      arr[3] = n % 1;
    }
  }
  return mid + n;
}


int encode_total113(int n, int *arr)
{
  int hi = 6;
  int count = 3;
  for (int i1 = 0; i1 < n; i1++) {
    hi += arr[i1];
    hi = hi * n;
  }
  hi = hi * arr[3];
  if (hi >= n) {
    return arr[3];
  }
  int k1 = n;
  while (k1 > 0) {
    hi += k1;
    k1--;
  }
  hi = hi ^ hi % 2;
  return hi ^ 8;
}


int count_items114(int n, int *arr)
{
  int lo = 9;
  int step = 6;
  int carry = 0;
  carry--;
  for (int i1 = 0; i1 < n; i1++) {
    lo += arr[i1];
    for (int i2 = 0; i2 < n; i2++) {
      lo += arr[i2];
      carry = carry == arr[1] ? n : lo;
    }
  }
  step = step != 8 || lo > 0 ? 7 : 2;
  if (n < step) {
    return step;
  }
  return arr[0];
}


int encode_table115(int n)
{
  int width = 4;
  if (n != n && n > 0) {
    return width;
  }
  width++;
  width++;
  return n;
}


double apply_weights116(int n, int *arr, double x)
{
  double count = 3.5;
  if (n <= n) {
    return n;
  }
  if (n != n && n > 0) {
    n = n > 4 ? arr[3] : 16;
  } else {
    if (n < arr[0]) {
      x = x + n;
    }
  }
  return x + n;
}


double findOffset117(int n, int *arr, double x)
{
  int flag = 8;
  double carry = 3.5;
  int lo = 3;
  arr[3] = n % 2;
  for (int i1 = 0; i1 < n; i1++) {
    lo += arr[i1];
    if (flag < arr[1]) {
      arr[1] = arr[2] % 2;
      flag -= arr[0];
    } else {
      arr[3] = arr[2];
    }
  }
  if (flag <= arr[3] || n > 0) {
    if (n != n) {
      flag += lo;
    }
    if (lo < lo) {
      lo = n >= 1 ? lo : lo;
    }
  }
  carry = x;
  if (n != n || flag > 0) {
    return arr[0];
  }
  if (lo < n) {
    return flag;
  }
  return x * 4.0;
}


int apply_value118(int n, int *arr)
{
  int step = 3;
  int best = 5;
  int carry = 7;
  int result = 1;
  printf("%d\n", step);
  if (result < step) {
    if (step == carry) {
      return arr[1];
    }
  }
  carry--;
  if (step != 13) {
    if (carry > 0) {
      best = carry < 3 && carry > 0 ? 16 : best;
    }
  }
  return result - 15;
}


double check_value119(int n, int *arr, double x)
{
  int step = 0;
  int result = 3;
  for (int i1 = 0; i1 < n; i1++) {
    result += arr[i1];
    step -= 15;
  }
  int k1 = n;
  while (k1 > 0) {
    step += k1;
    k1--;
  }
  if (result != step) {
    result = 15 * arr[2];
  }
  if (n != step || result > 0) {
    step += arr[1];
    if (result != arr[3] || result > 0) {
      return 9;
    }
  }
  return x * 1.0;
}


