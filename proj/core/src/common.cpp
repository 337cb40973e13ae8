#include "cloneforge/common.hpp"

#include <cmath>
#include <numbers>

#include <openssl/evp.h>

#include "cloneforge/rng.hpp"

namespace cloneforge {

Sha256::Sha256() : ctx_(EVP_MD_CTX_new()) {
  if (ctx_ == nullptr || EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 initialisation failed");
  }
}

Sha256::~Sha256() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha256::update(std::string_view data) {
  EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size());
}

std::string Sha256::hex_digest() {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), digest, &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  Sha256 h;
  h.update(data);
  return h.hex_digest();
}

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::C:
      return "c";
    case Language::Cpp:
      return "cpp";
    case Language::Java:
      return "java";
  }
  return "?";
}

std::optional<Language> language_from_name(std::string_view name) {
  if (name == "c" || name == "C") return Language::C;
  if (name == "cpp" || name == "c++" || name == "CPP") return Language::Cpp;
  if (name == "java" || name == "JAVA") return Language::Java;
  return std::nullopt;
}

std::optional<Language> language_from_extension(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".c") return Language::C;
  if (ext == ".cpp") return Language::Cpp;
  if (ext == ".java") return Language::Java;
  return std::nullopt;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace cloneforge
