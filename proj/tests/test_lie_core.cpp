#include "doctest.h"

#include <random>

#include "liemult/catalog.hpp"
#include "helpers.hpp"

using namespace liemult;
using liemult::testing::brute_force_rank;
using liemult::testing::q_scalar;
using liemult::testing::random_basis;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n, Q);
  v[i] = Scalar::one(Q);
  return v;
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v = zero_vec(n, Q);
  for (auto& x : v) x = Scalar::from_rational(mpq_class(num(rng), den(rng)));
  return v;
}

// the non-Lie table [e0,e1] = e0, [e0,e2] = e2 (Jacobi fails on (0,1,2))
StructureConstants bad_table() {
  StructureConstants sc(3, Q);
  sc.set_bracket(0, 1, {{0, Scalar::one(Q)}});
  sc.set_bracket(0, 2, {{2, Scalar::one(Q)}});
  return sc;
}

// [e0,e1] = e1: solvable but not nilpotent
LieAlgebra non_nilpotent() {
  StructureConstants sc(3, Q);
  sc.set_bracket(0, 1, {{1, Scalar::one(Q)}});
  return LieAlgebra::validate(std::move(sc));
}

std::vector<std::size_t> series_dims(const LieAlgebra& l) {
  std::vector<std::size_t> dims;
  for (const Subspace& s : l.lower_central_series()) dims.push_back(s.dim());
  return dims;
}

}  // namespace

TEST_CASE("validate: abelian and heisenberg pass, a broken table fails") {
  CHECK(make_abelian(5).dim() == 5);
  CHECK(make_heisenberg(1).dim() == 3);

  try {
    LieAlgebra::validate(bad_table());
    FAIL("expected jacobi_violation");
  } catch (const jacobi_violation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
    // hand expansion: [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = e2
    CHECK(e.residual == "(0, 0, 1)");
  }
}

TEST_CASE("structure constants: storage rules") {
  StructureConstants sc(3, Q);
  CHECK_THROWS_AS(sc.set_bracket(1, 1, {}), invalid_parameter);
  CHECK_THROWS_AS(sc.set_bracket(2, 1, {}), invalid_parameter);
  CHECK_THROWS_AS(sc.set_bracket(0, 3, {}), index_out_of_range);
  CHECK_THROWS_AS(sc.set_bracket(0, 1, {{3, Scalar::one(Q)}}),
                  index_out_of_range);
  sc.set_bracket(0, 1, {{2, Scalar::zero(Q)}});
  CHECK(sc.table().empty());  // zero coefficients are dropped
}

TEST_CASE("bracket: pinned values and bilinearity") {
  const LieAlgebra h1 = make_heisenberg(1);
  CHECK(h1.bracket(basis_vec(3, 0), basis_vec(3, 1)) == basis_vec(3, 2));

  std::mt19937_64 rng(5);
  const LieAlgebra ab = make_abelian(4);
  CHECK(vec_is_zero(ab.bracket(random_vec(rng, 4), random_vec(rng, 4))));

  for (const auto* key : {"heisenberg_2", "filiform_5", "L6_21"}) {
    const LieAlgebra& l = find_catalog_entry(key)->algebra;
    const std::size_t n = l.dim();
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = random_vec(rng, n), y = random_vec(rng, n), z = random_vec(rng, n);
      CHECK(vec_is_zero(l.bracket(x, x)));  // alternating
      // antisymmetry and bilinearity
      Vec xy = l.bracket(x, y);
      Vec yx = l.bracket(y, x);
      for (std::size_t i = 0; i < n; ++i) CHECK(xy[i] == -yx[i]);
      Scalar a = q_scalar(3, 2), b = q_scalar(-5, 3);
      Vec lin = zero_vec(n, Q);
      vec_add_scaled(lin, a, x);
      vec_add_scaled(lin, b, y);
      Vec lhs = l.bracket(lin, z);
      Vec rhs = zero_vec(n, Q);
      vec_add_scaled(rhs, a, l.bracket(x, z));
      vec_add_scaled(rhs, b, l.bracket(y, z));
      CHECK(lhs == rhs);
    }
  }
  CHECK_THROWS_AS(h1.bracket(basis_vec(2, 0), basis_vec(3, 0)),
                  dimension_mismatch);
}

TEST_CASE("derived subalgebra dimensions") {
  CHECK(make_abelian(6).derived_subalgebra().dim() == 0);
  for (std::size_t m = 1; m <= 4; ++m)
    CHECK(make_heisenberg(m).derived_subalgebra().dim() == 1);
  CHECK(direct_sum(make_heisenberg(1), make_abelian(2))
            .derived_subalgebra()
            .dim() == 1);
  CHECK(make_filiform(6).derived_subalgebra().dim() == 4);
}

TEST_CASE("center: pinned cases, brute-force adjoint crosscheck") {
  CHECK(make_abelian(4).center().dim() == 4);
  for (std::size_t m = 1; m <= 4; ++m) {
    const Subspace z = make_heisenberg(m).center();
    CHECK(z.dim() == 1);
    CHECK(z.basis()[0] == basis_vec(2 * m + 1, 2 * m));  // spanned by v
  }

  for (std::size_t k = 1; k <= 3; ++k) {
    const LieAlgebra l = direct_sum(make_heisenberg(1), make_abelian(k));
    const std::size_t n = l.dim();
    CHECK(l.center().dim() == k + 1);
    // independent route: kernel dim of the stacked adjoint built here
    ExactMatrix ad(n * n, n, Q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < n; ++b) {
        Vec v = l.sc().bracket_basis(i, b);
        for (std::size_t r = 0; r < n; ++r)
          if (!v[r].is_zero()) ad.set(b * n + r, i, v[r]);
      }
    CHECK(n - brute_force_rank(ad) == k + 1);
  }
}

TEST_CASE("lower central series and nilpotency") {
  CHECK(series_dims(make_abelian(5)) == std::vector<std::size_t>{5, 0});
  CHECK(series_dims(make_abelian(0)) == std::vector<std::size_t>{0});
  for (std::size_t m = 1; m <= 3; ++m)
    CHECK(series_dims(make_heisenberg(m)) ==
          std::vector<std::size_t>{2 * m + 1, 1, 0});
  CHECK(series_dims(make_filiform(5)) ==
        std::vector<std::size_t>{5, 3, 2, 1, 0});

  CHECK(series_dims(non_nilpotent()) == std::vector<std::size_t>{3, 1});
  CHECK_FALSE(non_nilpotent().is_nilpotent());
  CHECK(make_heisenberg(2).is_nilpotent());
  CHECK(make_abelian(3).is_nilpotent());
  CHECK(make_heisenberg(2).nilpotency_class() == 2);
  CHECK(make_filiform(6).nilpotency_class() == 5);
  CHECK_THROWS_AS(non_nilpotent().nilpotency_class(), not_nilpotent);
}

TEST_CASE("subspaces: canonical form, reduce, intersection") {
  const Subspace s = Subspace::span(
      3, Q, {basis_vec(3, 0), [] {
        Vec v = basis_vec(3, 0);
        v[1] = q_scalar(1);
        return v;
      }()});
  // span{e0, e0+e1} == span{e0, e1}, canonically
  CHECK(s == Subspace::span(3, Q, {basis_vec(3, 1), basis_vec(3, 0)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(basis_vec(3, 1)));
  CHECK_FALSE(s.contains(basis_vec(3, 2)));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Vec> u_gens, w_gens;
    for (int i = 0; i < 3; ++i) {
      u_gens.push_back(random_vec(rng, 6));
      w_gens.push_back(random_vec(rng, 6));
    }
    const Subspace u = Subspace::span(6, Q, u_gens);
    const Subspace w = Subspace::span(6, Q, w_gens);
    const Subspace cap = u.intersect(w);
    std::vector<Vec> all = u.basis();
    for (const Vec& v : w.basis()) all.push_back(v);
    const Subspace sum = Subspace::span(6, Q, all);
    // Grassmann identity
    CHECK(cap.dim() + sum.dim() == u.dim() + w.dim());
    for (const Vec& v : cap.basis()) {
      CHECK(u.contains(v));
      CHECK(w.contains(v));
    }
    CHECK(cap == w.intersect(u));
  }
}

TEST_CASE("quotients") {
  const LieAlgebra h1 = make_heisenberg(1);
  CHECK(h1.quotient(Subspace::zero(3, Q)) == h1);
  CHECK(h1.quotient(h1.center()) == make_abelian(2));
  CHECK(h1.quotient(Subspace::full(3, Q)) == make_abelian(0));
  // span{e0} is not an ideal of h1: [e1, e0] = -e2 leaves it
  CHECK_THROWS_AS(h1.quotient(Subspace::span(3, Q, {basis_vec(3, 0)})),
                  not_an_ideal);

  for (const auto* key : {"filiform_5", "L6_15", "heisenberg_2", "L5_9"}) {
    const LieAlgebra& l = find_catalog_entry(key)->algebra;
    for (const Subspace& k : {l.derived_subalgebra(), l.center()}) {
      CHECK(l.is_ideal(k));
      const LieAlgebra q = l.quotient(k);
      CHECK(q.dim() == l.dim() - k.dim());
    }
    // quotient by the derived subalgebra is abelian
    CHECK(l.quotient(l.derived_subalgebra())
              .derived_subalgebra()
              .dim() == 0);
  }
}

TEST_CASE("direct sums") {
  const LieAlgebra h1 = make_heisenberg(1);
  CHECK(direct_sum(h1, make_abelian(0)) == h1);
  CHECK(direct_sum(make_abelian(0), h1) == h1);

  const LieAlgebra four = direct_sum(h1, make_abelian(1));
  CHECK(four.dim() == 4);
  CHECK(four.derived_subalgebra().dim() == 1);

  CHECK(direct_sum(h1, h1).derived_subalgebra().dim() == 2);

  std::mt19937_64 rng(29);
  const std::vector<const CatalogEntry*> entries = [] {
    std::vector<const CatalogEntry*> out;
    for (const CatalogEntry& e : builtin_catalog())
      if (e.dim <= 6) out.push_back(&e);
    return out;
  }();
  std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
  for (int trial = 0; trial < 15; ++trial) {
    const LieAlgebra& a = entries[pick(rng)]->algebra;
    const LieAlgebra& b = entries[pick(rng)]->algebra;
    const LieAlgebra s = direct_sum(a, b);
    CHECK(s.derived_subalgebra().dim() ==
          a.derived_subalgebra().dim() + b.derived_subalgebra().dim());
    CHECK(s.center().dim() == a.center().dim() + b.center().dim());
    auto da = series_dims(a), db = series_dims(b), ds = series_dims(s);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::size_t ea = i < da.size() ? da[i] : 0;
      const std::size_t eb = i < db.size() ? db[i] : 0;
      CHECK(ds[i] == ea + eb);
    }
  }
  CHECK_THROWS_AS(
      direct_sum(h1, make_abelian(1, FieldDescriptor::prime_field(5))),
      field_mismatch);
}

TEST_CASE("nilpotency forces a nonzero center and central derived part") {
  for (const CatalogEntry& e : builtin_catalog()) {
    if (e.dim == 0) continue;
    const LieAlgebra& l = e.algebra;
    CHECK(l.center().dim() >= 1);
    if (l.derived_subalgebra().dim() >= 1)
      CHECK(l.derived_subalgebra().intersect(l.center()).dim() >= 1);
  }
}

TEST_CASE("change of basis preserves everything visible") {
  std::mt19937_64 rng(59);
  for (const auto* key : {"heisenberg_2", "filiform_5", "L6_24", "L5_5"}) {
    const LieAlgebra& l = find_catalog_entry(key)->algebra;
    for (int trial = 0; trial < 5; ++trial) {
      const LieAlgebra moved = change_basis(l, random_basis(rng, l.dim(), Q));
      CHECK(moved.dim() == l.dim());
      CHECK(moved.derived_subalgebra().dim() == l.derived_subalgebra().dim());
      CHECK(moved.center().dim() == l.center().dim());
      CHECK(series_dims(moved) == series_dims(l));
    }
  }
  const LieAlgebra h1 = make_heisenberg(1);
  std::vector<Vec> singular(3, zero_vec(3, Q));
  CHECK_THROWS_AS(change_basis(h1, singular), invalid_parameter);
}
