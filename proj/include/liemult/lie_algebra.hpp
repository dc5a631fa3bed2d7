#ifndef LIEMULT_LIE_ALGEBRA_HPP
#define LIEMULT_LIE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liemult/elimination.hpp"
#include "liemult/matrix.hpp"

namespace liemult {

struct InvariantsReport;  // theorems.hpp

/// Dense coordinate vector in the standard basis e_0 .. e_{n-1}.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldDescriptor& f);
bool vec_is_zero(const Vec& v);
/// target += c * src
void vec_add_scaled(Vec& target, const Scalar& c, const Vec& src);
std::string vec_str(const Vec& v);

/// The raw bracket table: [e_i, e_j] = sum_k c^k_{ij} e_k for i < j.
/// Brackets with i >= j are never stored; antisymmetry is definitional.
class StructureConstants {
 public:
  using Coeffs = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by k

  StructureConstants(std::size_t dim, FieldDescriptor field)
      : dim_(dim), field_(field) {}

  std::size_t dim() const { return dim_; }
  const FieldDescriptor& field() const { return field_; }
  const std::map<std::pair<std::size_t, std::size_t>, Coeffs>& table() const {
    return table_;
  }

  /// Requires i < j < dim; zero coefficients are dropped, an all-zero
  /// bracket clears the entry.
  void set_bracket(std::size_t i, std::size_t j, const Coeffs& coeffs);

  /// [e_i, e_j] as a dense vector, any i, j (antisymmetry applied).
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// Coefficients of the Jacobi sum on the basis triple i < j < k.
  Vec jacobi_sum(std::size_t i, std::size_t j, std::size_t k) const;

  bool operator==(const StructureConstants& o) const;

 private:
  std::size_t dim_;
  FieldDescriptor field_;
  std::map<std::pair<std::size_t, std::size_t>, Coeffs> table_;
};

/// A subspace of the ambient coordinate space, stored as its canonical
/// reduced-echelon basis (pivots leftmost, leading ones, pivot columns
/// cleared); equality of subspaces is plain data comparison.
class Subspace {
 public:
  static Subspace span(std::size_t ambient_dim, const FieldDescriptor& f,
                       const std::vector<Vec>& vectors);
  static Subspace zero(std::size_t ambient_dim, const FieldDescriptor& f);
  static Subspace full(std::size_t ambient_dim, const FieldDescriptor& f);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const FieldDescriptor& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after subtracting the pivot-matched multiples of the
  /// basis; zero iff v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && field_ == o.field_ &&
           pivots_ == o.pivots_ && basis_ == o.basis_;
  }

 private:
  Subspace(std::size_t ambient, FieldDescriptor f)
      : ambient_dim_(ambient), field_(f) {}
  std::size_t ambient_dim_;
  FieldDescriptor field_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// A validated Lie algebra. Construction goes through validate(), which
/// checks the Jacobi identity on every basis triple, so every value of
/// this type is an actual Lie algebra. Immutable; all operations are
/// const and safe to call concurrently.
class LieAlgebra {
 public:
  /// Exhaustive Jacobi check over the C(dim, 3) basis triples; throws
  /// jacobi_violation on the first failing triple.
  static LieAlgebra validate(StructureConstants sc);

  std::size_t dim() const { return sc_.dim(); }
  const FieldDescriptor& field() const { return sc_.field(); }
  const StructureConstants& sc() const { return sc_; }

  /// Bilinear extension of the table; antisymmetric by construction.
  Vec bracket(const Vec& x, const Vec& y) const;
  /// [e_i, v]
  Vec bracket_basis_vec(std::size_t i, const Vec& v) const;

  /// Span of all [e_i, e_j]; its dimension is m.
  Subspace derived_subalgebra() const;
  /// Kernel of x -> (y -> [x, y]).
  Subspace center() const;
  /// L^1 = L, L^{i+1} = [L, L^i]; strictly decreasing dims, the final
  /// stable term included.
  std::vector<Subspace> lower_central_series() const;
  bool is_nilpotent() const;
  /// Smallest c with L^{c+1} = 0; requires nilpotency.
  std::size_t nilpotency_class() const;

  bool is_ideal(const Subspace& k) const;
  /// Quotient by the ideal k on the complement basis (standard basis
  /// vectors at non-pivot positions, ascending). Throws not_an_ideal.
  LieAlgebra quotient(const Subspace& k) const;
  /// The ideal k as a Lie algebra in its own right, in k's echelon basis.
  LieAlgebra subalgebra_on_ideal(const Subspace& k) const;

  bool operator==(const LieAlgebra& o) const { return sc_ == o.sc_; }

  /// Write-once report cache shared by copies; readers see either
  /// nothing or the completed report.
  std::shared_ptr<const InvariantsReport> cached_report() const;
  void store_report(std::shared_ptr<const InvariantsReport> r) const;

 private:
  explicit LieAlgebra(StructureConstants sc);
  StructureConstants sc_;
  struct CacheSlot;
  std::shared_ptr<CacheSlot> cache_;
};

/// Block-diagonal sum; all cross brackets vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Rewrites the table in the basis given by the rows of p (expressed in
/// the old coordinates); p must be invertible.
LieAlgebra change_basis(const LieAlgebra& l, const std::vector<Vec>& p);

}  // namespace liemult

#endif
