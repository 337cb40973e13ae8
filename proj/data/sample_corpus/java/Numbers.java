public class Numbers {
  static int gcd(int a, int b) {
    while (b != 0) {
      int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static boolean isPrime(int n) {
    if (n < 2) {
      return false;
    }
    for (int d = 2; d * d <= n; d++) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  static long factorial(int n) {
    long result = 1L;
    for (int i = 2; i <= n; i++) {
      result *= i;
    }
    return result;
  }

  static int sumDigits(int value) {
    int sum = 0;
    int rest = Math.abs(value);
    while (rest > 0) {
      sum += rest % 10;
      rest /= 10;
    }
    return sum;
  }

  static int countEven(int[] xs) {
    int count = 0;
    for (int i = 0; i < xs.length; i++) {
      if (xs[i] % 2 == 0) {
        count++;
      }
    }
    return count;
  }

  static double average(double[] xs) {
    if (xs.length == 0) {
      return 0.0;
    }
    double total = 0.0;
    for (int i = 0; i < xs.length; i++) {
      total += xs[i];
    }
    return total / xs.length;
  }

  static int binarySearch(int[] sorted, int key) {
    int lo = 0;
    int hi = sorted.length - 1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      if (sorted[mid] < key) {
        lo = mid + 1;
      } else if (sorted[mid] > key) {
        hi = mid - 1;
      } else {
        return mid;
      }
    }
    return -1;
  }

  static String reverse(String text) {
    StringBuilder sb = new StringBuilder();
    for (int i = text.length() - 1; i >= 0; i--) {
      sb.append(text.charAt(i));
    }
    return sb.toString();
  }

  static int maxOf(int[] values) {
    int best = Integer.MIN_VALUE;
    for (int v : values) {
      if (v > best) {
        best = v;
      }
    }
    return best;
  }

  static boolean allPositive(int[] values) {
    boolean ok = true;
    for (int i = 0; i < values.length; i++) {
      ok = ok && values[i] > 0;
    }
    return ok;
  }
}
