#pragma once

// Random but well-formed C functions for scale tests and toy training data.

#include <cstdint>
#include <vector>

#include "cloneforge/ast.hpp"

namespace cloneforge::testing {

/// `count` distinct C functions with loops, branches, arrays, pointers, calls
/// and ternaries over declared locals and parameters. Deterministic per seed.
std::vector<ast::SourceFunction> synthetic_c_functions(std::size_t count, std::uint64_t seed);

}  // namespace cloneforge::testing
