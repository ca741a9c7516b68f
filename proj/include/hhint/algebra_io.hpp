#pragma once

#include <iosfwd>
#include <string>

#include "hhint/algebra.hpp"

namespace hhint {

// Text format for algebras, one declaration per line, '#' starts a comment:
//
//   p = 3
//   dim = 2
//   basis = 1, x            # optional labels
//   unit = 0:1              # sparse coordinates, index:coefficient
//   mul 0 1 = 1:1           # e_0 * e_1; omitted products are zero
//
// Parse errors report 1-based line numbers; the resulting algebra passes the
// same validation as programmatic construction.
Algebra parse_algebra(std::istream& in, const std::string& name = "file");
Algebra load_algebra_file(const std::string& path);
std::string dump_algebra(const Algebra& a);

}  // namespace hhint
