#pragma once

#include <stdexcept>
#include <string>

namespace bimult {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPrime : Error {
  explicit NonPrime(long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct ReducibleModulus : Error {
  using Error::Error;
};

struct NoEmbedding : Error {
  using Error::Error;
};

// An extension-degree search ran past its configured ceiling.  Never a silent
// truncation: the message carries how far the search got (and, when known,
// the degree that would be needed).
struct DegreeCeilingExceeded : Error {
  using Error::Error;
};

struct CeilingExceeded : Error {
  using Error::Error;
};

struct Singular : Error {
  using Error::Error;
};

// A value that must lie in the prime subfield did not.  This cannot happen
// for inputs in scope; it indicates an implementation bug.
struct NotInPrimeField : Error {
  using Error::Error;
};

struct LabelMismatch : Error {
  using Error::Error;
};

// Scalars of the change-of-basis matrices are model-dependent and are only
// pinned for single polynomials and diagonal matrices; elsewhere only the
// model-free product is available.
struct ModelDependentUnsupported : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  int line, col;
  std::string expected;
  SyntaxError(int line_, int col_, std::string expected_)
      : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
              ": expected " + expected_),
        line(line_),
        col(col_),
        expected(std::move(expected_)) {}
};

// A property the underlying theory guarantees failed to hold.  Treated as a
// build-stopping bug, not a data condition.
struct InternalInvariant : Error {
  using Error::Error;
};

}  // namespace bimult
