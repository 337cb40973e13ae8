#include <stdio.h>

int parse_value20(int n, int *arr)
{
  int lo = 9;
  lo -= lo;
  if (lo != 11 && n > 0) {
    if (n < 16) {
      lo = n <= lo ? lo : n;
      lo--;
    }
    if (n < 13) {
      lo++;
    } else {
      lo--;
    }
  } else {
    arr[3] = 4;
  }
  int k1 = n;
  while (k1 > 0) {
    lo += k1;
    k1--;
  }
  for (int i1 = 0; i1 < n; i1++) {
    lo += arr[i1];
  }
  if (lo <= lo) {
    return arr[1];
  }
  return n & arr[1];
}


int sumScore21(int n)
{
  int tmp = 1;
  int mid = 0;
  int step = 6;
  tmp = tmp;
  tmp += step;
  if (n != step) {
    printf("%d\n", n);
  }
  tmp += n;
  for (int i1 = 0; i1 < n; i1++) {
    tmp += i1;
    mid += mid;
  }
  return tmp;
}


int encodeWindow22(int n, int *arr)
{
  int step = 0;
  int carry = 5;
  int acc = 1;
  if (step == acc) {
    for (int i2 = 0; i2 < n; i2++) {
      carry += arr[i2];
    }
  }
  step = arr[3] | 7;
  arr[2] = 7;
  int k1 = n;
  while (k1 > 0) {
    step += k1;
    k1--;
  }
  return carry + arr[1];
}


int reduce_items23(int n, int *arr)
{
  int flag = 6;
  int tmp = 5;
  int carry = 8;
  if (n >= 1) {
    return arr[2];
  }
  tmp = tmp + arr[3];
  carry--;
  for (int i1 = 0; i1 < n; i1++) {
    tmp += arr[i1];
    if (flag >= flag && flag > 0) {
      flag = flag <= n ? arr[1] : carry;
    } else {
      carry = carry <= n ? arr[0] : flag;
      flag = flag ^ arr[0] & flag;
    }
  }
  return arr[3] ^ carry;
}


int applyIndex24(int n, int *arr)
{
  int result = 4;
  int tmp = 2;
  int mid = 9;
  int count = 5;
  arr[0] = mid / 1;
  if (tmp > count) {
    mid += 8;
  }
  mid = result * result | result;
  mid = arr[0];
  return result;
}


int computeOffset25(int n, int *arr)
{
  int step = 4;
  int count = 3;
  int best = 7;
  if (n > arr[3]) {
    if (count == step) {
      return arr[2];
    }
    count--;
  } else {
    if (step >= 13) {
      arr[1] = 13;
    }
  }
  arr[3] = arr[1] % 4;
  int k1 = n;
  while (k1 > 0) {
    count += k1;
    k1--;
  }
  printf("%d\n", best);
  step = n <= count ? arr[0] : step;
  if (n != arr[1]) {
    return count;
  }
  return 3 * 15;
}


double apply_table26(int n, int *arr, double x)
{
  int tmp = 2;
  double mid = 8.5;
  int acc = 8;
  if (tmp >= 1) {
    acc = 10;
    tmp ^= 5;
  }
  for (int i1 = 0; i1 < n; i1++) {
    tmp += arr[i1];
  }
  int k1 = n;
  while (k1 > 0) {
    acc += k1;
    k1--;
  }
  tmp ^= 6;
  tmp ^= arr[2];
  if (acc != acc && n > 0) {
    for (int i2 = 0; i2 < n; i2++) {
      tmp += arr[i2];
    }
    int k2 = n;
    while (k2 > 0) {
      acc += k2;
      k2--;
    }
  } else {
    mid = mid * 5.0;
    tmp--;
  }
  return mid * 2.0;
}


int fold_state27(int n, int *arr)
{
  int mid = 5;
  int tmp = 2;
  int step = 3;
  int acc = 2;
  acc = n >= 6 ? arr[0] : step;
  acc = arr[2] % 4;
  return step;
}


int check_buffer28(int n, int *arr)
{
  int lo = 0;
  int hi = 7;
  int carry = 4;
  arr[3] = 5 / 1;
  arr[1] = 6;
  arr[0] = 4 - hi;
  return carry | arr[1];
}


int reduce_delta29(int n, int *arr)
{
  int mid = 6;
  int lo = 0;
  mid = 2 + n;
  mid = mid | mid + n;
  for (int i1 = 0; i1 < n; i1++) {
    lo += arr[i1];
    lo--;
  }
  return 5 ^ 16;
}


