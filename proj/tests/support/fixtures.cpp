#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cloneforge::testing {

std::string c_function(std::string_view body, std::string_view params) {
  return "void f(" + std::string(params) + ") {\n" + std::string(body) + "\n}\n";
}

std::string read_data(std::string_view relative) {
  const std::string path = std::string(CLONEFORGE_TEST_DATA) + "/" + std::string(relative);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cloneforge::testing
