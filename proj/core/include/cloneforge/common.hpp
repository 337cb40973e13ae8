#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cloneforge {

enum class Language { C, Cpp, Java };

std::string_view to_string(Language lang);
std::optional<Language> language_from_name(std::string_view name);
/// Maps ".c", ".cpp" and ".java" to a language; everything else is rejected.
std::optional<Language> language_from_extension(const std::filesystem::path& path);

/// Half-open byte range [start, end) into a source buffer.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  bool contains(std::size_t offset) const { return start <= offset && offset < end; }
  bool contains(const Span& other) const { return start <= other.start && other.end <= end; }

  auto operator<=>(const Span&) const = default;
};

/// Lower-case hex SHA-256 digest of `data`.
std::string sha256_hex(std::string_view data);

/// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  void update(std::string_view data);
  std::string hex_digest();

 private:
  void* ctx_;
};

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cloneforge
