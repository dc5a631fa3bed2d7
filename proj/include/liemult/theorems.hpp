#ifndef LIEMULT_THEOREMS_HPP
#define LIEMULT_THEOREMS_HPP

#include <optional>
#include <string>

#include "liemult/multiplier.hpp"

namespace liemult {

/// Every quantitative invariant the bound checks consume. Computed once
/// per algebra and cached on the LieAlgebra value.
struct InvariantsReport {
  std::size_t n = 0;                       // dim L
  std::size_t m = 0;                       // dim L^2
  std::size_t dim_center = 0;              // dim Z(L)
  std::size_t dim_derived_cap_center = 0;  // dim(L^2 cap Z(L))
  std::size_t dim_multiplier = 0;          // dim M(L)
  long long t = 0;                         // n(n-1)/2 - dim M(L)
  // (n+m-2)(n-m-1)/2 + 1; absent when m = 0 (not applicable)
  std::optional<std::size_t> main_bound;
  std::size_t batten_lhs = 0;  // m + dim M(L)
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful when nilpotent
  std::size_t rank_d2 = 0, rank_d3 = 0;
};

InvariantsReport invariants_report(const LieAlgebra& l);

/// Exact halving with a divisibility assertion; every bound expression
/// here is an even product, so a remainder signals an engine bug.
std::size_t exact_half(std::size_t v);

enum class BoundName { main_theorem, batten, kunneth, corollary_sr };
std::string bound_name_str(BoundName b);

struct BoundVerdict {
  BoundName name;
  bool holds = false;  // lhs <= rhs
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool equality = false;  // lhs == rhs
};

/// dim M(L) <= (n+m-2)(n-m-1)/2 + 1 for nilpotent L with m >= 1.
/// Throws not_nilpotent / derived_trivial when not applicable.
BoundVerdict check_main_bound(const LieAlgebra& l);

/// m + dim M(L) <= n(n-1)/2 for nilpotent L.
BoundVerdict check_batten_bound(const LieAlgebra& l);

/// dim M(A + B) = dim M(A) + dim M(B) + codim(A^2) codim(B^2), both
/// sides computed independently; holds iff they agree.
BoundVerdict verify_kunneth(const LieAlgebra& a, const LieAlgebra& b);

/// How dim M(K) enters the quotient inequality: computed from K as an
/// algebra in its own right (any ideal), or by the abelian closed form
/// k(k-1)/2 (requires K central; throws not_central otherwise).
enum class SrMultiplierMode { computed, central_closed_form };

/// dim M(L) + dim(L^2 cap K) <= dim M(L/K) + dim M(K) + tensor term,
/// for an ideal K of L.
BoundVerdict check_corollary_sr(
    const LieAlgebra& l, const Subspace& k,
    SrMultiplierMode mode = SrMultiplierMode::computed);

/// Structure of a nilpotent algebra with one-dimensional derived
/// subalgebra: Heisenberg part of rank h plus an abelian complement,
/// read off the invariants (2h = n - dim Z(L)). The h = 1 family is
/// exactly the main-bound equality case; the two detections are
/// cross-asserted and a mismatch throws inconsistent_classification.
struct EqualityCaseDescriptor {
  std::size_t heisenberg_rank = 0;
  std::size_t abelian_dim = 0;
  bool h1_family = false;
};

EqualityCaseDescriptor classify_equality_case(const LieAlgebra& l);

/// Small values of t = n(n-1)/2 - dim M(L) pin the isomorphism type.
enum class SmallTLabel { abelian, h1, h1_plus_line };
std::string small_t_label_str(SmallTLabel label);

/// Labels t = 0, 1, 2; nullopt for larger t. The structural claims
/// behind each label are re-verified from the invariants; a mismatch
/// throws inconsistent_classification.
std::optional<SmallTLabel> classify_small_t(const LieAlgebra& l);

}  // namespace liemult

#endif
