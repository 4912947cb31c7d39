#pragma once

#include <string>

#include "bimult/skew.hpp"

namespace bimult {

/// A parsed problem: base field plus the skew-polynomial matrix, with the
/// run options that do not live in the text form.
struct Problem {
  Field field;
  SkewMatrix matrix;
  long psi_exponent = 1;

  /// structural equality of the text-carried parts (field data and matrix)
  bool operator==(const Problem& o) const;
};

/// Grammar:
///   problem  := fieldspec "|" matrix
///   fieldspec:= "p=" int " n=" int [" mod=" tpoly]
///   matrix   := "[" row (";" row)* "]"        rows of "," separated polys
///   poly     := ["+"|"-"] term (("+"|"-") term)*
///   term     := coeff | coeff "*" "F" ["^" int] | "F" ["^" int]
///   coeff    := int | "(" tpoly ")"
/// Errors carry position and expectation.
Problem parse_problem(const std::string& text);

/// Canonical text: ascending exponents, coefficients reduced to [0, p),
/// "+"-joined; parse(print(P)) == P.
std::string print_problem(const Problem& p);

std::string print_matrix(const SkewMatrix& m);

}  // namespace bimult
