#ifndef LIEMULT_FIELD_HPP
#define LIEMULT_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "liemult/errors.hpp"

namespace liemult {

/// Trial-division primality test for machine-word p.
bool is_prime_u32(std::uint32_t p);

/// The exact coefficient field: the rationals Q or a prime field GF(p)
/// with p < 2^31 (residues fit a machine word, products fit two words).
class FieldDescriptor {
 public:
  enum class Kind { rationals, prime_field };

  static FieldDescriptor rationals() {
    return FieldDescriptor(Kind::rationals, 0);
  }
  /// Throws invalid_parameter unless p is prime and p < 2^31.
  static FieldDescriptor prime_field(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  std::uint32_t prime() const { return p_; }

  bool operator==(const FieldDescriptor&) const = default;

  std::string str() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
  }

 private:
  FieldDescriptor(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

inline void require_same_field(const FieldDescriptor& a,
                               const FieldDescriptor& b,
                               const char* where) {
  if (!(a == b))
    throw field_mismatch(std::string(where) + ": " + a.str() + " vs " +
                         b.str());
}

/// An exact field element. Over Q the value is an arbitrary-precision
/// fraction kept in lowest terms with positive denominator; over GF(p)
/// it is a residue in [0, p).
class Scalar {
 public:
  static Scalar zero(const FieldDescriptor& f) { return from_int(f, 0); }
  static Scalar one(const FieldDescriptor& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldDescriptor& f, long v);
  /// Rationals only; canonicalizes.
  static Scalar from_rational(mpq_class q);
  /// Prime field only; reduces v mod p.
  static Scalar from_residue(const FieldDescriptor& f, std::uint64_t v);
  /// Rationals only; q must be canonical already (internal fast path).
  static Scalar from_mpq_canonical(mpq_class q);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rationals payload; only meaningful when field().is_rationals().
  const mpq_class& rational() const { return rat_; }
  /// Prime-field payload in [0, p).
  std::uint32_t residue() const { return res_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Division by zero throws invalid_parameter.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const { return one(field_) / *this; }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Equality across different fields throws field_mismatch.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p/q" / "-3" over Q; residue digits over GF(p).
  std::string str() const;

  /// Reduce a rational scalar mod p (denominator must be invertible;
  /// throws denominator_divisible_by_p otherwise). Identity on GF(p)
  /// scalars of the same p.
  Scalar to_prime_field(std::uint32_t p) const;

 private:
  explicit Scalar(const FieldDescriptor& f) : field_(f), res_(0) {}
  FieldDescriptor field_ = FieldDescriptor::rationals();
  mpq_class rat_;
  std::uint32_t res_ = 0;
};

namespace fp {
// Word arithmetic mod p, p < 2^31; all inputs already reduced.
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return std::uint32_t(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
}  // namespace fp

}  // namespace liemult

#endif
