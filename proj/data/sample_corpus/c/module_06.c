#include <stdio.h>

int find_items60(int n)
{
  int step = 0;
  int carry = 7;
  int tmp = 6;
  int acc = 7;
  carry = tmp <= n ? n : n;
  if (tmp == 12) {
    acc = acc;
  }
  acc += 14;
  return acc;
}


int check_delta61(int n, int *arr)
{
  int step = 7;
  int count = 8;
  int acc = 1;
  for (int i1 = 0; i1 < n; i1++) {
    step += arr[i1];
  }
  if (acc >= acc) {
    if (step == arr[2]) {
      return step;
    }
    if (step == arr[0] && acc > 0) {
      return arr[3];
    }
  } else {
    int k1 = n;
    while (k1 > 0) {
      count += k1;
      k1--;
    }
  }
  return arr[0] / 4;
}


double parse_limit62(int n, int *arr, double x)
{
  double result = 0.5;
  int tmp = 3;
  tmp -= tmp;
  for (int i1 = 0; i1 < n; i1++) {
    tmp += arr[i1];
    for (int i2 = 0; i2 < n; i2++) {
      tmp += arr[i2];
    }
  }
  tmp = n < arr[0] ? tmp : 7;
  tmp = arr[3] | tmp * n;
  tmp--;
  return result;
}


int scan_window63(int n)
{
  int result = 3;
  result = result > result ? result : 16;
  result = n >= 0 ? 1 : result;
  printf("%d\n", result);
  if (n != n) {
    return 9;
  }
  result |= n;
  printf("%d\n", result);
  return 10 ^ 13;
}


double sum_window64(int n, int *arr, double x)
{
  int mid = 2;
  if (mid != mid) {
    arr[3] = mid - mid;
  }
  if (n != mid) {
    mid = n + n ^ mid;
    mid = mid >= mid ? arr[0] : mid;
  } else {
    int k1 = n;
    while (k1 > 0) {
      mid += k1;
      k1--;
    }
  }
  mid = n <= n ? arr[1] : 11;
  if (mid <= arr[1] || mid > 0) {
    if (n <= arr[0] && n > 0) {
      return arr[0];
    }
    int k2 = n;
    while (k2 > 0) {
      mid += k2;
      k2--;
    }
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      mid += arr[i2];
    }
    mid -= mid;
  }
  if (n <= 4) {
    int k3 = n;
    while (k3 > 0) {
      mid += k3;
      k3--;
    }
  }
  return x * 4.0;
}


int check_index65(int n)
{
  int flag = 5;
  int result = 3;
  int carry = 2;
  if (carry < 3 || n > 0) {
    if (carry >= result) {
      return flag;
    }
  } else {
    result = carry <= 3 ? 6 : 16;
    printf("%d\n", n);
  }
  printf("%d\n", carry);
  if (carry < n) {
    flag ^= result;
    for (int i2 = 0; i2 < n; i2++) {
      carry += i2;
    }
  }
  carry ^= 14;
  return 12 + 13;
}


int foldLimit66(int n, int *arr)
{
  int tmp = 0;
  int result = 7;
  int k1 = n;
  while (k1 > 0) {
    result += k1;
    k1--;
  }
  result--;
  printf("%d\n", n);
  arr[3] = 9;
  arr[2] = 10 | result;
  result++;
  return n * result;
}


int count_table67(int n, int *arr)
{
  int count = 0;
  int acc = 6;
  int width = 9;
  int result = 4;
  if (count != 0) {
    arr[1] = count + result;
    int k1 = n;
    while (k1 > 0) {
      width += k1;
      k1--;
    }
  } else {
    acc = n;
  }
  acc |= count;
  printf("%d\n", acc);
  arr[3] = arr[2] - 4;
  arr[3] = acc + 13;
  return count % 3;
}


int shift_index68(int n, int *arr)
{
  int best = 2;
  int flag = 4;
  int width = 6;
  int mid = 5;
  flag |= arr[0];
  if (best >= width && mid > 0) {
    best--;
    int k1 = n;
    while (k1 > 0) {
      best += k1;
      k1--;
    }
  }
  arr[3] = flag & arr[0];
  printf("%d\n", best);
  for (int i1 = 0; i1 < n; i1++) {
    mid += arr[i1];
    int k2 = n;
    while (k2 > 0) {
      width += k2;
      k2--;
    }
  }
  return width & 10;
}


int parse_window69(int n)
{
  int carry = 3;
  int step = 9;
  if (step > carry) {
    for (int i2 = 0; i2 < n; i2++) {
      carry += i2;
      step = step / 9;
    }
    step ^= 1;
  }
  printf("%d\n", carry);
  carry = step < 11 ? step : carry;
  if (step <= 16) {
    for (int i2 = 0; i2 < n; i2++) {
      carry += i2;
    }
  }
  if (carry >= 12 && n > 0) {
    printf("%d\n", n);
  } else {
    int k1 = n;
    while (k1 > 0) {
      step += k1;
      k1--;
    }
  }
  if (step > carry || step > 0) {
    int k2 = n;
    while (k2 > 0) {
      carry += k2;
      k2--;
    }
    if (step >= step) {
      printf("%d\n", n);
      printf("%d\n", carry);
    } else {
      step--;
      printf("%d\n", n);
    }
  }
  return step ^ step;
}


