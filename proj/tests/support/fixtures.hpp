#pragma once

#include <string>
#include <string_view>

#include "cloneforge/ast.hpp"

namespace cloneforge::testing {

/// Wraps statements in a C function body: "void f(void) { <body> }".
std::string c_function(std::string_view body, std::string_view params = "void");

/// Reads a file below tests/data.
std::string read_data(std::string_view relative);

}  // namespace cloneforge::testing
