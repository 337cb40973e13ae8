#include <stdio.h>

struct node {
  int value;
  struct node *next;
};

int list_sum(const struct node *head) {
  int total = 0;
  const struct node *cur = head;
  while (cur != NULL) {
    total += cur->value;
    cur = cur->next;
  }
  return total;
}

int list_length(const struct node *head) {
  int n = 0;
  for (; head != NULL; head = head->next) {
    n++;
  }
  return n;
}

int main(void) {
  struct node nodes[32];
  int n;
  if (scanf("%d", &n) != 1 || n < 1 || n > 32) return 1;
  for (int i = 0; i < n; i++) {
    scanf("%d", &nodes[i].value);
    nodes[i].next = i + 1 < n ? &nodes[i + 1] : NULL;
  }
  printf("%d %d\n", list_sum(&nodes[0]), list_length(&nodes[0]));
  return 0;
}
