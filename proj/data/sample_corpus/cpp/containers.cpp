#include <string>
#include <vector>

int count_greater(const std::vector<int>& values, int limit) {
  int count = 0;
  for (std::size_t i = 0; i < values.size(); i++) {
    if (values[i] > limit) {
      count++;
    }
  }
  return count;
}

long sum_prefix(const std::vector<long>& values, std::size_t n) {
  long total = 0;
  std::size_t end = n < values.size() ? n : values.size();
  for (std::size_t i = 0; i < end; ++i) {
    total += values[i];
  }
  return total;
}

bool is_sorted_range(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); i++) {
    if (v[i - 1] > v[i]) {
      return false;
    }
  }
  return true;
}

int find_index(const std::vector<std::string>& names, const std::string& key) {
  int pos = -1;
  int i = 0;
  while (i < static_cast<int>(names.size())) {
    if (names[i] == key) {
      pos = i;
      break;
    }
    i++;
  }
  return pos;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) {
    return 0.0;
  }
  double acc = 0.0;
  for (double x : xs) {
    acc += x;
  }
  return acc / xs.size();
}

int clamp_value(int value, int low, int high) {
  int result = value;
  if (result < low) {
    result = low;
  } else if (result > high) {
    result = high;
  }
  return result;
}

std::string repeat_text(const std::string& text, int times) {
  std::string out;
  for (int k = 0; k < times; k++) {
    out += text;
  }
  return out;
}

int count_vowels(const std::string& word) {
  int vowels = 0;
  for (char c : word) {
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') {
      vowels += 1;
    }
  }
  return vowels;
}

int max_element_value(const std::vector<int>& data) {
  int best = data.empty() ? 0 : data[0];
  for (std::size_t j = 1; j < data.size(); j++) {
    best = data[j] > best ? data[j] : best;
  }
  return best;
}

unsigned int checksum(const std::string& bytes) {
  unsigned int hash = 2166136261u;
  for (std::size_t i = 0; i < bytes.size(); i++) {
    hash ^= static_cast<unsigned char>(bytes[i]);
    hash *= 16777619u;
  }
  return hash;
}
