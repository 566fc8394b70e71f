#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nlie {

struct NLieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldError : NLieError {
  using NLieError::NLieError;
};

/// Coefficient field selector: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
  enum class Kind : uint8_t { rationals, prime_field };

  FieldSpec() = default;  // rationals

  static FieldSpec Q() { return FieldSpec{}; }
  static FieldSpec GF(uint32_t p);

  Kind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }

  bool operator==(const FieldSpec&) const = default;

  std::string to_string() const;                  // "Q" or "GF(p)"
  static FieldSpec parse(const std::string& s);   // inverse of to_string

private:
  Kind kind_ = Kind::rationals;
  uint32_t p_ = 0;
};

bool is_prime_u32(uint32_t n);

/// Exact element of the active field. Rationals are kept in lowest terms with
/// positive denominator (mpq invariant); GF(p) values are canonical residues
/// in [0, p). Mixed-field arithmetic throws FieldError.
class Scalar {
public:
  Scalar() : Scalar(FieldSpec::Q()) {}
  explicit Scalar(const FieldSpec& f) : field_(f) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar from_residue(const FieldSpec& f, uint64_t r);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Value as a residue (prime fields only).
  uint32_t residue() const;
  /// Value as an exact rational (rationals only).
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws FieldError on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical string form: "a" or "a/b" over Q, decimal residue over GF(p).
  std::string to_string() const;
  static Scalar parse(const FieldSpec& f, const std::string& s);

  /// True when the value is an integer (always true over GF(p)).
  bool is_integral() const;
  /// Reduction mod q of an integral value (defined for integral scalars).
  uint32_t reduce_mod(uint32_t q) const;

private:
  void check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldError("scalar field mismatch");
  }
  const mpq_class& q() const;

  FieldSpec field_;
  uint64_t r_ = 0;                      // prime field residue
  std::shared_ptr<const mpq_class> q_;  // rational value; null means zero
};

uint64_t gf_inverse(uint64_t a, uint64_t p);

}  // namespace nlie
