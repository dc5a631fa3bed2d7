#ifndef LIEMULT_KERNELS_HPP
#define LIEMULT_KERNELS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <exception>
#include <vector>

namespace liemult::kernels {

// Low-level elimination kernels. Each kernel exists in a serial reference
// form and an OpenMP form; the parallel loops update independent rows with
// identical per-entry arithmetic, so the results are bit-identical to the
// serial ones by construction (exact arithmetic, no reassociation).

/// Raised by the int64 kernels when an intermediate no longer fits; the
/// caller reruns the same computation with mpz entries.
struct int64_overflow : std::exception {
  const char* what() const noexcept override {
    return "int64 elimination overflow";
  }
};

namespace detail {

inline std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw int64_overflow{};
  return std::int64_t(v);
}

// t = (t*p - a*b) / d, the Bareiss update; division is exact.
inline void fused_update(std::int64_t& t, std::int64_t p, std::int64_t a,
                         std::int64_t b, std::int64_t d) {
  __int128 v = (__int128)t * p - (__int128)a * b;
  t = checked(v / d);
}

inline void fused_update(mpz_class& t, const mpz_class& p, const mpz_class& a,
                         const mpz_class& b, const mpz_class& d) {
  mpz_mul(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
  mpz_submul(t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
}

}  // namespace detail

/// Fraction-free (Bareiss) row elimination over the integers; returns the
/// rank. Destroys m. Pivoting is deterministic: leftmost column first,
/// then lowest row index. Int is int64_t (throws int64_overflow on
/// entry growth) or mpz_class.
template <class Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m, bool parallel);

extern template std::size_t bareiss_rank<std::int64_t>(
    std::vector<std::vector<std::int64_t>>&, bool);
extern template std::size_t bareiss_rank<mpz_class>(
    std::vector<std::vector<mpz_class>>&, bool);

/// Dense Gaussian elimination over GF(p); returns the rank. Destroys m.
std::size_t fp_rank(std::vector<std::vector<std::uint32_t>>& m,
                    std::uint32_t p, bool parallel);

/// Incremental echelon form over the integers: vectors are offered one at
/// a time and reduced fraction-free against the pivot rows collected so
/// far, with content (gcd) stripped after each combination so entries stay
/// near determinant size. rank() is the number of pivot rows.
///
/// fill() reports stored nonzeros relative to a dense pivot block; the
/// caller watches it and falls back to dense elimination when the echelon
/// stops being sparse.
template <class Int>
class StreamingEchelon {
 public:
  using Entry = std::pair<std::size_t, Int>;
  using SparseVec = std::vector<Entry>;  // sorted by index, nonzero values

  explicit StreamingEchelon(std::size_t length) : length_(length) {}

  /// Reduces v against the echelon; if a nonzero remainder is left it
  /// becomes a new pivot row. Returns true when the rank grew.
  bool offer(SparseVec v);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t length() const { return length_; }
  std::size_t stored_nonzeros() const { return stored_; }
  double fill() const {
    return pivots_.empty()
               ? 0.0
               : double(stored_) / (double(pivots_.size()) * double(length_));
  }
  /// Pivot rows, ascending leading index (for fallback re-elimination).
  const std::vector<SparseVec>& pivot_rows() const { return rows_; }

 private:
  std::size_t length_;
  std::size_t stored_ = 0;
  // leading index of rows_[i] is pivots_[i]; pivots_ strictly increasing
  std::vector<std::size_t> pivots_;
  std::vector<SparseVec> rows_;
};

extern template class StreamingEchelon<std::int64_t>;
extern template class StreamingEchelon<mpz_class>;

/// Reduced row echelon form over an arbitrary exact element type with
/// field operations passed in via Ops (see field_ops in elimination.cpp).
/// Naive Gauss-Jordan, kept deliberately simple: it is the independent
/// oracle the fraction-free paths are tested against.
///
/// Returns the pivot columns; m is replaced by its RREF (zero rows kept).
template <class Elem, class Ops>
std::vector<std::size_t> rref_inplace(std::vector<std::vector<Elem>>& m,
                                      const Ops& ops) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // first nonzero entry in column-major scan, rows in input order
    std::size_t pr = r;
    while (pr < rows && ops.is_zero(m[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    Elem inv = ops.inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = ops.mul(m[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(m[i][c])) continue;
      Elem f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ops.sub(m[i][j], ops.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace liemult::kernels

#endif
