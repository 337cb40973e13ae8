#include <stdio.h>

int is_vowel(char c) {
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return 1;
    default:
      return 0;
  }
}

int count_vowels(const char *s) {
  int n = 0;
  for (int i = 0; s[i] != '\0'; i++) {
    if (is_vowel(s[i])) {
      n++;
    }
  }
  return n;
}

int main(void) {
  char word[128];
  if (scanf("%127s", word) != 1) return 1;
  printf("%d\n", count_vowels(word));
  return 0;
}
