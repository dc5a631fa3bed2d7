#include "liemult/field.hpp"

namespace liemult {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  if (p % 3 == 0) return p == 3;
  for (std::uint32_t d = 5; std::uint64_t(d) * d <= p; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
  if (p >= (1u << 31))
    throw invalid_parameter("prime field characteristic must be < 2^31, got " +
                            std::to_string(p));
  if (!is_prime_u32(p))
    throw invalid_parameter("prime field characteristic " + std::to_string(p) +
                            " is not prime");
  return FieldDescriptor(Kind::prime_field, p);
}

namespace fp {
std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw invalid_parameter("inverse of 0 in GF(p)");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}
}  // namespace fp

Scalar Scalar::from_int(const FieldDescriptor& f, long v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = mpq_class(v);
  } else {
    long r = v % long(f.prime());
    if (r < 0) r += f.prime();
    s.res_ = std::uint32_t(r);
  }
  return s;
}

Scalar Scalar::from_rational(mpq_class q) {
  q.canonicalize();
  Scalar s(FieldDescriptor::rationals());
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::from_mpq_canonical(mpq_class q) {
  Scalar s(FieldDescriptor::rationals());
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::from_residue(const FieldDescriptor& f, std::uint64_t v) {
  if (f.is_rationals())
    throw field_mismatch("from_residue requires a prime field");
  Scalar s(f);
  s.res_ = std::uint32_t(v % f.prime());
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? sgn(rat_) == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar +");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = fp::add(res_, o.res_, field_.prime());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar -");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = fp::sub(res_, o.res_, field_.prime());
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar *");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = fp::mul(res_, o.res_, field_.prime());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar /");
  if (o.is_zero()) throw invalid_parameter("scalar division by zero");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ / o.rat_;
  else
    s.res_ = fp::mul(res_, fp::inv(o.res_, field_.prime()), field_.prime());
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = -rat_;
  else
    s.res_ = fp::neg(res_, field_.prime());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(field_, o.field_, "scalar ==");
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rationals()) return rat_.get_str();
  return std::to_string(res_);
}

Scalar Scalar::to_prime_field(std::uint32_t p) const {
  FieldDescriptor f = FieldDescriptor::prime_field(p);
  if (!field_.is_rationals()) {
    require_same_field(field_, f, "to_prime_field");
    return *this;
  }
  std::uint32_t num = std::uint32_t(mpz_fdiv_ui(rat_.get_num().get_mpz_t(), p));
  std::uint32_t den = std::uint32_t(mpz_fdiv_ui(rat_.get_den().get_mpz_t(), p));
  if (den == 0)
    throw denominator_divisible_by_p("denominator of " + str() +
                                     " is divisible by " + std::to_string(p));
  return from_residue(f, fp::mul(num, fp::inv(den, p), p));
}

}  // namespace liemult
