#include <stdio.h>

int my_strlen(const char *s) {
  const char *p = s;
  while (*p) {
    p++;
  }
  return (int)(p - s);
}

int count_char(const char *s, char c) {
  int n = 0;
  for (const char *p = s; *p != '\0'; ++p) {
    if (*p == c) {
      n += 1;
    }
  }
  return n;
}

int main(void) {
  char w[128];
  if (scanf("%127s", w) != 1) return 1;
  printf("%d %d\n", my_strlen(w), count_char(w, 'a'));
  return 0;
}
