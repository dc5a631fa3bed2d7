#ifndef LIEMULT_TESTS_HELPERS_HPP
#define LIEMULT_TESTS_HELPERS_HPP

// Test-side helpers. brute_force_rank is the independent oracle used to
// pin derived expected values: plain rational row reduction written from
// scratch, sharing no code with the library elimination paths.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "liemult/catalog.hpp"
#include "liemult/matrix.hpp"

namespace liemult::testing {

inline std::size_t brute_force_rank(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(),
                                        std::vector<mpq_class>(m.cols(), 0));
  for (const auto& [rc, v] : m.entries())
    a[rc.first][rc.second] = v.field().is_rationals()
                                 ? v.rational()
                                 : mpq_class(v.residue());
  // over GF(p) reduce mod p at every step instead
  const bool modular = !m.field().is_rationals();
  const mpq_class p = modular ? mpq_class(m.field().prime()) : mpq_class(0);
  auto normalize = [&](mpq_class& x) {
    if (!modular) return;
    mpz_class num = x.get_num();  // denominators stay 1 on this path
    mpz_class r = num % p.get_num();
    if (r < 0) r += p.get_num();
    x = mpq_class(r);
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      mpq_class f;
      if (modular) {
        // f = a[i][col] * a[rank][col]^{-1} mod p via Fermat is overkill;
        // scale-and-subtract keeps everything integral instead
        for (std::size_t j = col; j < m.cols(); ++j) {
          a[i][j] = a[i][j] * a[rank][col] - a[rank][j] * a[i][col];
          normalize(a[i][j]);
        }
      } else {
        f = a[i][col] / a[rank][col];
        for (std::size_t j = col; j < m.cols(); ++j)
          a[i][j] -= f * a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

inline Scalar q_scalar(long num, long den = 1) {
  return Scalar::from_rational(mpq_class(num, den));
}

// Random invertible basis change with small rational entries: identity
// composed with random shears, swaps and scalings.
inline std::vector<Vec> random_basis(std::mt19937_64& rng, std::size_t n,
                                     const FieldDescriptor& f) {
  std::vector<Vec> p(n, zero_vec(n, f));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = Scalar::one(f);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> op(0, 3);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (op(rng)) {
      case 0:  // shear: row_i += c * row_j
        if (i != j)
          vec_add_scaled(p[i], Scalar::from_rational(
                                   mpq_class(coeff(rng), den(rng))),
                         p[j]);
        break;
      case 1:
        std::swap(p[i], p[j]);
        break;
      case 2: {  // nonzero scaling
        int c = coeff(rng);
        if (c == 0) c = 1;
        for (auto& x : p[i])
          x = x * Scalar::from_rational(mpq_class(c, den(rng)));
        break;
      }
      default:
        break;
    }
  }
  return p;
}

// A random valid table: a random catalog algebra of dim <= 6 rewritten in
// a random basis (base change preserves the Jacobi identity).
inline LieAlgebra random_valid_algebra(std::mt19937_64& rng) {
  static const std::vector<const CatalogEntry*> small = [] {
    std::vector<const CatalogEntry*> out;
    for (const CatalogEntry& e : builtin_catalog())
      if (e.dim >= 2 && e.dim <= 6) out.push_back(&e);
    return out;
  }();
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  const LieAlgebra& base = small[pick(rng)]->algebra;
  return change_basis(base, random_basis(rng, base.dim(), base.field()));
}

}  // namespace liemult::testing

#endif
