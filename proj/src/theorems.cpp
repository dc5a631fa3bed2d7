#include "liemult/theorems.hpp"

namespace liemult {

std::size_t exact_half(std::size_t v) {
  if (v % 2 != 0)
    throw inconsistent_classification(
        "bound expression produced an odd product");
  return v / 2;
}

InvariantsReport invariants_report(const LieAlgebra& l) {
  if (auto cached = l.cached_report()) return *cached;

  InvariantsReport r;
  r.n = l.dim();
  const Subspace derived = l.derived_subalgebra();
  const Subspace center = l.center();
  r.m = derived.dim();
  r.dim_center = center.dim();
  r.dim_derived_cap_center = derived.intersect(center).dim();

  const MultiplierResult mult = schur_multiplier_dim(l);
  r.dim_multiplier = mult.dim_multiplier;
  r.rank_d2 = mult.rank_d2;
  r.rank_d3 = mult.rank_d3;
  r.t = (long long)(binom2(r.n)) - (long long)(r.dim_multiplier);
  r.batten_lhs = r.m + r.dim_multiplier;
  if (r.m >= 1 && r.n >= r.m + 1)
    r.main_bound = exact_half((r.n + r.m - 2) * (r.n - r.m - 1)) + 1;

  const auto chain = l.lower_central_series();
  r.nilpotent = chain.back().dim() == 0;
  r.nilpotency_class = r.nilpotent ? chain.size() - 1 : 0;

  auto shared = std::make_shared<const InvariantsReport>(r);
  l.store_report(shared);
  return r;
}

std::string bound_name_str(BoundName b) {
  switch (b) {
    case BoundName::main_theorem:
      return "main";
    case BoundName::batten:
      return "batten";
    case BoundName::kunneth:
      return "kunneth";
    case BoundName::corollary_sr:
      return "sr";
  }
  return "?";
}

namespace {
BoundVerdict make_verdict(BoundName name, std::size_t lhs, std::size_t rhs) {
  BoundVerdict v;
  v.name = name;
  v.lhs = lhs;
  v.rhs = rhs;
  v.holds = lhs <= rhs;
  v.equality = lhs == rhs;
  return v;
}
}  // namespace

BoundVerdict check_main_bound(const LieAlgebra& l) {
  const InvariantsReport r = invariants_report(l);
  if (!r.nilpotent)
    throw not_nilpotent("main bound requires a nilpotent algebra");
  if (r.m == 0)
    throw derived_trivial("main bound requires dim L^2 >= 1");
  return make_verdict(BoundName::main_theorem, r.dim_multiplier,
                      *r.main_bound);
}

BoundVerdict check_batten_bound(const LieAlgebra& l) {
  const InvariantsReport r = invariants_report(l);
  if (!r.nilpotent)
    throw not_nilpotent("batten bound requires a nilpotent algebra");
  return make_verdict(BoundName::batten, r.batten_lhs, binom2(r.n));
}

BoundVerdict verify_kunneth(const LieAlgebra& a, const LieAlgebra& b) {
  require_same_field(a.field(), b.field(), "verify_kunneth");
  const InvariantsReport ra = invariants_report(a);
  const InvariantsReport rb = invariants_report(b);
  const LieAlgebra sum = direct_sum(a, b);
  const std::size_t lhs = invariants_report(sum).dim_multiplier;
  const std::size_t rhs = ra.dim_multiplier + rb.dim_multiplier +
                          (ra.n - ra.m) * (rb.n - rb.m);
  BoundVerdict v = make_verdict(BoundName::kunneth, lhs, rhs);
  v.holds = v.equality;  // an identity, not an inequality
  return v;
}

BoundVerdict check_corollary_sr(const LieAlgebra& l, const Subspace& k,
                                SrMultiplierMode mode) {
  if (!l.is_ideal(k))
    throw not_an_ideal("corollary sr requires an ideal");
  const InvariantsReport rl = invariants_report(l);
  const std::size_t kd = k.dim();

  std::size_t dim_m_k = 0, codim_k = kd;
  if (mode == SrMultiplierMode::central_closed_form) {
    const Subspace center = l.center();
    for (const Vec& v : k.basis())
      if (!center.contains(v))
        throw not_central("closed form needs K inside the center");
    dim_m_k = binom2(kd);  // K abelian
  } else {
    const LieAlgebra as_algebra = l.subalgebra_on_ideal(k);
    const InvariantsReport rk = invariants_report(as_algebra);
    dim_m_k = rk.dim_multiplier;
    codim_k = kd - rk.m;
  }

  const std::size_t cap = l.derived_subalgebra().intersect(k).dim();
  const LieAlgebra h = l.quotient(k);
  const InvariantsReport rh = invariants_report(h);

  const std::size_t lhs = rl.dim_multiplier + cap;
  const std::size_t rhs =
      rh.dim_multiplier + dim_m_k + (rh.n - rh.m) * codim_k;
  return make_verdict(BoundName::corollary_sr, lhs, rhs);
}

EqualityCaseDescriptor classify_equality_case(const LieAlgebra& l) {
  const InvariantsReport r = invariants_report(l);
  if (!r.nilpotent)
    throw not_nilpotent("equality classification requires nilpotency");
  if (r.m != 1)
    throw derived_dim_not_one("equality classification requires dim L^2 = 1");
  if (r.dim_derived_cap_center != 1)
    throw inconsistent_classification(
        "dim L^2 = 1 but L^2 is not central; contradicts nilpotency");
  if ((r.n - r.dim_center) % 2 != 0 || r.dim_center < 1)
    throw inconsistent_classification(
        "center codimension is odd for an algebra with dim L^2 = 1");

  EqualityCaseDescriptor d;
  d.heisenberg_rank = (r.n - r.dim_center) / 2;
  d.abelian_dim = r.dim_center - 1;
  d.h1_family = d.heisenberg_rank == 1;

  const bool equality = r.main_bound && r.dim_multiplier == *r.main_bound;
  if (equality != d.h1_family)
    throw inconsistent_classification(
        "main-bound equality disagrees with the decomposition invariants");
  return d;
}

std::string small_t_label_str(SmallTLabel label) {
  switch (label) {
    case SmallTLabel::abelian:
      return "Abelian";
    case SmallTLabel::h1:
      return "H1";
    case SmallTLabel::h1_plus_line:
      return "H1PlusLine";
  }
  return "?";
}

std::optional<SmallTLabel> classify_small_t(const LieAlgebra& l) {
  const InvariantsReport r = invariants_report(l);
  if (!r.nilpotent)
    throw not_nilpotent("t classification requires a nilpotent algebra");
  switch (r.t) {
    case 0:
      if (r.m != 0)
        throw inconsistent_classification("t = 0 on a non-abelian algebra");
      return SmallTLabel::abelian;
    case 1: {
      if (r.m != 1)
        throw inconsistent_classification("t = 1 with dim L^2 != 1");
      const auto d = classify_equality_case(l);
      if (!d.h1_family || d.abelian_dim != 0 || r.n != 3)
        throw inconsistent_classification("t = 1 but the algebra is not H(1)");
      return SmallTLabel::h1;
    }
    case 2: {
      if (r.m != 1)
        throw inconsistent_classification("t = 2 with dim L^2 != 1");
      const auto d = classify_equality_case(l);
      if (!d.h1_family || d.abelian_dim != 1 || r.n != 4)
        throw inconsistent_classification(
            "t = 2 but the algebra is not H(1) plus a line");
      return SmallTLabel::h1_plus_line;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace liemult
