#include <stdio.h>

int apply_state120(int n, int *arr)
{
  int hi = 0;
  int result = 6;
  int flag = 3;
  int lo = 7;
  if (lo >= arr[1] || n > 0) {
    int k1 = n;
    while (k1 > 0) {
      flag += k1;
      k1--;
    }
  }
  flag = n < 3 ? 8 : lo;
  return arr[3];
}


int find_items121(int n, int *arr)
{
  int lo = 8;
  if (lo <= lo) {
    if (n >= 4) {
      return arr[3];
    }
    lo = arr[1] | arr[0];
  }
  if (lo >= 16) {
    lo = lo != lo ? lo : lo;
  } else {
    if (n < 7) {
      return n;
    }
    arr[0] = n + lo;
  }
  if (lo != arr[2] || n > 0) {
    if (lo >= n) {
      lo = 15;
      arr[1] = lo - 4;
    }
  }
  lo = arr[3];
  return n * 3;
}


int shift_items122(int n, int *arr)
{
  int flag = 3;
  if (n <= arr[0]) {
    int k1 = n;
    while (k1 > 0) {
      flag += k1;
      k1--;
    }
    arr[3] = 7 & 5;
  } else {
    for (int i2 = 0; i2 < n; i2++) {
      flag += arr[i2];
      printf("%d\n", flag);
    }
  }
  if (n != flag && n > 0) {
    printf("%d\n", flag);
  }
  if (n == 8) {
    if (flag >= flag) {
      flag = n <= arr[1] && n > 0 ? n : 12;
    }
    for (int i2 = 0; i2 < n; i2++) {
      flag += arr[i2];
      flag = flag == flag && flag > 0 ? 9 : flag;
    }
  }
  flag++;
  flag--;
  flag++;
  return n * flag;
}


double merge_limit123(int n, double x)
{
  int tmp = 5;
  double step = 8.5;
  tmp ^= 6;
  if (n == tmp) {
    for (int i2 = 0; i2 < n; i2++) {
      tmp += i2;
    }
  }
  if (tmp < 1 || tmp > 0) {
    step = step + tmp;
  }
  int k1 = n;
  while (k1 > 0) {
    tmp += k1;
    k1--;
  }
  return step * 2.0;
}


int clamp_weights124(int n)
{
  int count = 9;
  int width = 1;
  count = count + 3 * width;
  if (n == n) {
    if (width > n) {
      return count;
    }
    count++;
  } else {
    if (count >= n) {
      width -= count;
    } else {
      count = n + 0 | 9;
    }
    if (n <= 4) {
      width += count;
      printf("%d\n", width);
    }
  }
  for (int i1 = 0; i1 < n; i1++) {
    count += i1;
    width ^= width;
  }
  if (count <= count) {
    printf("%d\n", n);
  } else {
    printf("%d\n", count);
    printf("%d\n", n);
  }
  width ^= 7;
  for (int i1 = 0; i1 < n; i1++) {
    count += i1;
    count -= count;
  }
  return count ^ n;
}


int fold_value125(int n, int *arr)
{
  int best = 4;
  if (n >= best) {
    return 12;
  }
  best++;
  printf("%d\n", best);
  best++;
  best -= arr[0];
  return arr[2] / 5;
}


int measureValue126(int n, double x)
{
  int best = 1;
  int result = 7;
  double step = 8.5;
  result ^= result;
  result -= result;
  result = result >= 6 ? 5 : result;
  return result | result;
}


int clampLimit127(int n)
{
  int best = 0;
  int carry = 7;
  int k1 = n;
  while (k1 > 0) {
    carry += k1;
    k1--;
  }
  carry--;
  if (n >= best) {
    int k2 = n;
    while (k2 > 0) {
      carry += k2;
      k2--;
    }
    best--;
  }
  if (n > best) {
    carry--;
  } else {
    best = best ^ 16 + best;
    printf("%d\n", carry);
  }
  if (best >= carry) {
    if (carry >= n || carry > 0) {
      printf("%d\n", carry);
    }
  }
  return 0 * carry;
}


int sum_delta128(int n, int *arr)
{
  int best = 7;
  int step = 8;
  int result = 1;
  result = best <= result ? arr[0] : step;
  result -= 5;
  step = result;
  printf("%d\n", n);
  arr[3] = arr[2] | arr[0];
  printf("%d\n", best);
  return 12 / 6;
}


int compute_items129(int n)
{
  int tmp = 6;
  int flag = 0;
  int hi = 3;
  tmp = flag;
  for (int i1 = 0; i1 < n; i1++) {
    hi += i1;
    if (hi > n || tmp > 0) {
      return 1;
    }
  }
  for (int i1 = 0; i1 < n; i1++) {
    hi += i1;
  }
  hi--;
  return 10 % 7;
}


