#ifndef LIEMULT_ERRORS_HPP
#define LIEMULT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liemult {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct field_mismatch : error {
  using error::error;
};

struct dimension_mismatch : error {
  using error::error;
};

struct invalid_parameter : error {
  using error::error;
};

/// Jacobi identity fails on a basis triple; carries the triple and the
/// nonzero residual vector (printed form).
struct jacobi_violation : error {
  jacobi_violation(std::size_t i, std::size_t j, std::size_t k,
                   const std::string& residual)
      : error("Jacobi identity violated on triple (" + std::to_string(i) +
              ", " + std::to_string(j) + ", " + std::to_string(k) +
              "), residual " + residual),
        i(i), j(j), k(k), residual(residual) {}
  std::size_t i, j, k;
  std::string residual;
};

struct not_an_ideal : error {
  using error::error;
};

struct not_central : error {
  using error::error;
};

struct not_nilpotent : error {
  using error::error;
};

/// Bound requires dim(L^2) >= 1.
struct derived_trivial : error {
  using error::error;
};

/// Classification requires dim(L^2) = 1.
struct derived_dim_not_one : error {
  using error::error;
};

/// Computed invariants contradict a structural cross-check; signals an
/// engine bug (or a field-characteristic artifact), never swallowed.
struct inconsistent_classification : error {
  using error::error;
};

struct denominator_divisible_by_p : error {
  using error::error;
};

struct parse_error : error {
  parse_error(std::size_t line, const std::string& what)
      : error("parse error at line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

struct index_out_of_range : error {
  using error::error;
};

struct non_rational_scalar : error {
  using error::error;
};

}  // namespace liemult

#endif
