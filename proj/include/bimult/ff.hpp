#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bimult/errors.hpp"

namespace bimult {

/// Desk-scale ceilings.  Exactness over speed: a computation that would pass
/// one of these raises instead of truncating.
struct Limits {
  long max_prime = 97;
  long max_ext_degree = 1 << 16;  ///< ceiling on s in the F_{q^s} degree search
  long max_dense_dim = 256;       ///< F_p-dimension ceiling for dense kernel extraction
  double max_enum_log2 = 24.0;    ///< log2 ceiling on enumerated field size (oracles)
  long max_pi0_points = 1 << 12;  ///< ceiling on materialized kernel point groups
  long max_pairing_cells = 1 << 20;  ///< ceiling on pairing table size
  long max_group_order = 729;        ///< exhaustive-verification ceiling on |Gamma| (3^6)
};

Limits& limits();

bool is_prime(long p);

class FieldImpl;
using FieldPtr = std::shared_ptr<const FieldImpl>;
class Field;
class FFElem;

/// Element of F_{p^n}, stored in the power basis of the modulus root.
/// Immutable value; all arithmetic exact.
class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldPtr f, std::vector<long> coeffs);

  const FieldPtr& field_ptr() const { return f_; }
  Field field() const;
  const std::vector<long>& coeffs() const { return c_; }

  bool is_zero() const;
  bool in_prime_subfield() const;
  long prime_residue() const;  ///< throws NotInPrimeField when not a constant

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem inverse() const;  ///< throws Error on zero
  bool operator==(const FFElem& o) const;
  bool operator!=(const FFElem& o) const { return !(*this == o); }

  /// Counting order: compares Sum c_i p^i.  Fixes the element order used for
  /// deterministic choices (smallest roots, point orderings).
  bool operator<(const FFElem& o) const;

  std::string to_string() const;  ///< polynomial in t, e.g. "2*t+1"

 private:
  FieldPtr f_;
  std::vector<long> c_;
};

/// A concrete model F_p[t]/(modulus) of F_{p^n}.  Fields are immutable; the
/// per-field embedding cache is the only mutable state and behaves as if
/// updated atomically.
class Field {
 public:
  Field() = default;
  explicit Field(FieldPtr impl) : impl_(std::move(impl)) {}

  /// modulus: monic degree-n coefficients, constant term first, length n+1.
  /// Omitted modulus: the lexicographically smallest monic irreducible in
  /// counting order, so reports are reproducible across runs.
  static Field create(long p, long n, std::optional<std::vector<long>> modulus = std::nullopt);

  /// F_{q^s} over base q = p^n, canonical modulus of degree n*s over F_p.
  /// Records `base` so later embeddings into larger composita stay coherent
  /// with the base-field embedding.
  static Field extension_of(const Field& base, long s);

  long p() const;
  long n() const;
  const std::vector<long>& modulus() const;
  const FieldPtr& impl() const { return impl_; }
  bool valid() const { return impl_ != nullptr; }

  FFElem zero() const;
  FFElem one() const;
  FFElem gen() const;  ///< the class of t
  FFElem from_int(long c) const;
  FFElem from_coeffs(std::vector<long> c) const;
  FFElem element_at(unsigned long long index) const;  ///< counting order, index < p^n
  double size_log2() const;
  unsigned long long size() const;  ///< throws CeilingExceeded when > 2^62

  bool same(const Field& o) const;  ///< same object or identical (p, n, modulus)
  std::string spec_text() const;    ///< "p=3 n=2 mod=t^2+1"

 private:
  FieldPtr impl_;
};

/// x^(p^k); negative k uses the inverse automorphism (exponent reduced mod n).
FFElem frobenius(const FFElem& x, long k);

/// Ring-homomorphic image of x in `target`.  The embedding per (source,
/// target) pair is chosen once (smallest root of the source modulus, subject
/// to coherence with the recorded base field) and cached.
FFElem embed(const FFElem& x, const Field& target);

/// Dense matrix of residues mod p; exact row reduction.
struct FpMatrix {
  long p = 0;
  long rows = 0, cols = 0;
  std::vector<long> a;  // row-major

  FpMatrix() = default;
  FpMatrix(long p_, long r, long c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  long at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// F_p-basis of {v : Mv = 0}, in reduced row echelon normal form with free
/// columns in ascending order.  Deterministic.
std::vector<std::vector<long>> fp_kernel(FpMatrix M);

long fp_rank(FpMatrix M);

}  // namespace bimult
