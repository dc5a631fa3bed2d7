#include "liemult/lie_algebra.hpp"

#include <algorithm>
#include <mutex>

namespace liemult {

Vec zero_vec(std::size_t n, const FieldDescriptor& f) {
  return Vec(n, Scalar::zero(f));
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

void vec_add_scaled(Vec& target, const Scalar& c, const Vec& src) {
  if (target.size() != src.size())
    throw dimension_mismatch("vector length " + std::to_string(src.size()) +
                             " != " + std::to_string(target.size()));
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!src[i].is_zero()) target[i] += c * src[i];
  }
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------
// StructureConstants

void StructureConstants::set_bracket(std::size_t i, std::size_t j,
                                     const Coeffs& coeffs) {
  if (i >= dim_ || j >= dim_)
    throw index_out_of_range("bracket (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") outside dimension " +
                             std::to_string(dim_));
  if (i >= j)
    throw invalid_parameter("brackets are stored with i < j, got (" +
                            std::to_string(i) + ", " + std::to_string(j) +
                            ")");
  Coeffs clean;
  for (const auto& [k, c] : coeffs) {
    if (k >= dim_)
      throw index_out_of_range("coefficient index " + std::to_string(k) +
                               " outside dimension " + std::to_string(dim_));
    require_same_field(field_, c.field(), "structure constant");
    if (!c.is_zero()) clean.emplace_back(k, c);
  }
  std::sort(clean.begin(), clean.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t t = 1; t < clean.size(); ++t) {
    if (clean[t - 1].first == clean[t].first)
      throw invalid_parameter("duplicate coefficient index " +
                              std::to_string(clean[t].first));
  }
  if (clean.empty())
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(clean);
}

Vec StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out = zero_vec(dim_, field_);
  if (i == j) return out;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return out;
  for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
  return out;
}

Vec StructureConstants::jacobi_sum(std::size_t i, std::size_t j,
                                   std::size_t k) const {
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  Vec out = zero_vec(dim_, field_);
  auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
    Vec inner = bracket_basis(a, b);
    for (std::size_t s = 0; s < dim_; ++s) {
      if (inner[s].is_zero()) continue;
      Vec outer = bracket_basis(s, c);
      vec_add_scaled(out, inner[s], outer);
    }
  };
  accumulate(i, j, k);
  accumulate(j, k, i);
  accumulate(k, i, j);
  return out;
}

bool StructureConstants::operator==(const StructureConstants& o) const {
  if (dim_ != o.dim_ || !(field_ == o.field_)) return false;
  if (table_.size() != o.table_.size()) return false;
  auto a = table_.begin();
  auto b = o.table_.begin();
  for (; a != table_.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    if (a->second.size() != b->second.size()) return false;
    for (std::size_t t = 0; t < a->second.size(); ++t) {
      if (a->second[t].first != b->second[t].first ||
          a->second[t].second != b->second[t].second)
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, const FieldDescriptor& f,
                        const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw dimension_mismatch("span vector length " +
                               std::to_string(v.size()) + " != ambient " +
                               std::to_string(ambient_dim));
  }
  Subspace s(ambient_dim, f);
  s.basis_ = rref_rows(vectors, f, &s.pivots_);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim, const FieldDescriptor& f) {
  return Subspace(ambient_dim, f);
}

Subspace Subspace::full(std::size_t ambient_dim, const FieldDescriptor& f) {
  Subspace s(ambient_dim, f);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec e = zero_vec(ambient_dim, f);
    e[i] = Scalar::one(f);
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_dim_)
    throw dimension_mismatch("reduce: vector length " +
                             std::to_string(v.size()) + " != ambient " +
                             std::to_string(ambient_dim_));
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (!c.is_zero()) vec_add_scaled(v, -c, basis_[r]);
  }
  return v;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_dim_ != o.ambient_dim_)
    throw dimension_mismatch("intersect: ambient dims differ");
  require_same_field(field_, o.field_, "intersect");
  // columns of m are this->basis then o.basis; a kernel vector (a | b)
  // encodes sum a_i u_i = -sum b_j w_j, an intersection element
  const std::size_t p = dim(), q = o.dim();
  if (p == 0 || q == 0) return Subspace::zero(ambient_dim_, field_);
  ExactMatrix m(ambient_dim_, p + q, field_);
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t r = 0; r < ambient_dim_; ++r)
      m.set(r, c, basis_[c][r]);
  for (std::size_t c = 0; c < q; ++c)
    for (std::size_t r = 0; r < ambient_dim_; ++r)
      m.set(r, p + c, o.basis_[c][r]);
  std::vector<Vec> gens;
  for (const auto& k : kernel_basis(m)) {
    Vec v = zero_vec(ambient_dim_, field_);
    for (std::size_t c = 0; c < p; ++c) vec_add_scaled(v, k[c], basis_[c]);
    gens.push_back(std::move(v));
  }
  return Subspace::span(ambient_dim_, field_, gens);
}

// ---------------------------------------------------------------------
// LieAlgebra

struct LieAlgebra::CacheSlot {
  std::mutex m;
  std::shared_ptr<const InvariantsReport> report;
};

LieAlgebra::LieAlgebra(StructureConstants sc)
    : sc_(std::move(sc)), cache_(std::make_shared<CacheSlot>()) {}

LieAlgebra LieAlgebra::validate(StructureConstants sc) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec residual = sc.jacobi_sum(i, j, k);
        if (!vec_is_zero(residual))
          throw jacobi_violation(i, j, k, vec_str(residual));
      }
  return LieAlgebra(std::move(sc));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw dimension_mismatch("bracket: vector lengths " +
                             std::to_string(x.size()) + ", " +
                             std::to_string(y.size()) + " != dim " +
                             std::to_string(n));
  Vec out = zero_vec(n, field());
  for (const auto& [ij, coeffs] : sc_.table()) {
    const auto [i, j] = ij;
    Scalar s = x[i] * y[j] - x[j] * y[i];
    if (s.is_zero()) continue;
    for (const auto& [k, c] : coeffs) out[k] += s * c;
  }
  return out;
}

Vec LieAlgebra::bracket_basis_vec(std::size_t i, const Vec& v) const {
  Vec out = zero_vec(dim(), field());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (v[k].is_zero() || k == i) continue;
    vec_add_scaled(out, v[k], sc_.bracket_basis(i, k));
  }
  return out;
}

Subspace LieAlgebra::derived_subalgebra() const {
  std::vector<Vec> gens;
  gens.reserve(sc_.table().size());
  for (const auto& [ij, coeffs] : sc_.table()) {
    Vec v = zero_vec(dim(), field());
    for (const auto& [k, c] : coeffs) v[k] = c;
    gens.push_back(std::move(v));
  }
  return Subspace::span(dim(), field(), gens);
}

Subspace LieAlgebra::center() const {
  const std::size_t n = dim();
  // stacked adjoint: block b holds the matrix of x -> [x, e_b]
  ExactMatrix ad(n * n, n, field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = sc_.bracket_basis(i, b);
      for (std::size_t r = 0; r < n; ++r)
        if (!v[r].is_zero()) ad.set(b * n + r, i, v[r]);
    }
  return Subspace::span(n, field(), kernel_basis(ad));
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> chain;
  chain.push_back(Subspace::full(dim(), field()));
  for (;;) {
    const Subspace& current = chain.back();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim(); ++i)
      for (const Vec& v : current.basis())
        gens.push_back(bracket_basis_vec(i, v));
    Subspace next = Subspace::span(dim(), field(), gens);
    if (next.dim() == current.dim()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

bool LieAlgebra::is_nilpotent() const {
  return lower_central_series().back().dim() == 0;
}

std::size_t LieAlgebra::nilpotency_class() const {
  auto chain = lower_central_series();
  if (chain.back().dim() != 0)
    throw not_nilpotent("nilpotency_class: algebra is not nilpotent");
  return chain.size() - 1;
}

bool LieAlgebra::is_ideal(const Subspace& k) const {
  if (k.ambient_dim() != dim())
    throw dimension_mismatch("is_ideal: ambient dim mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    for (const Vec& v : k.basis())
      if (!k.contains(bracket_basis_vec(i, v))) return false;
  return true;
}

LieAlgebra LieAlgebra::quotient(const Subspace& k) const {
  if (!is_ideal(k))
    throw not_an_ideal("quotient: subspace is not an ideal");
  const std::size_t n = dim(), q = n - k.dim();
  std::vector<std::size_t> complement;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : k.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) complement.push_back(c);
  }
  std::vector<std::size_t> position(n, 0);
  for (std::size_t t = 0; t < q; ++t) position[complement[t]] = t;

  StructureConstants out(q, field());
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vec w = k.reduce(sc_.bracket_basis(complement[a], complement[b]));
      StructureConstants::Coeffs coeffs;
      for (std::size_t s = 0; s < n; ++s) {
        if (w[s].is_zero()) continue;
        // reduction mod k leaves support on the complement only
        coeffs.emplace_back(position[s], w[s]);
      }
      out.set_bracket(a, b, coeffs);
    }
  return validate(std::move(out));
}

LieAlgebra LieAlgebra::subalgebra_on_ideal(const Subspace& k) const {
  if (!is_ideal(k))
    throw not_an_ideal("subalgebra_on_ideal: subspace is not an ideal");
  const std::size_t d = k.dim();
  StructureConstants out(d, field());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vec v = bracket(k.basis()[a], k.basis()[b]);
      if (!k.contains(v))
        throw not_an_ideal("subalgebra_on_ideal: bracket leaves the ideal");
      // echelon basis: coordinates are read off at the pivot columns
      StructureConstants::Coeffs coeffs;
      for (std::size_t t = 0; t < d; ++t) {
        const Scalar& c = v[k.pivots()[t]];
        if (!c.is_zero()) coeffs.emplace_back(t, c);
      }
      out.set_bracket(a, b, coeffs);
    }
  return validate(std::move(out));
}

std::shared_ptr<const InvariantsReport> LieAlgebra::cached_report() const {
  std::lock_guard<std::mutex> lock(cache_->m);
  return cache_->report;
}

void LieAlgebra::store_report(
    std::shared_ptr<const InvariantsReport> r) const {
  std::lock_guard<std::mutex> lock(cache_->m);
  if (!cache_->report) cache_->report = std::move(r);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  require_same_field(a.field(), b.field(), "direct_sum");
  StructureConstants out(a.dim() + b.dim(), a.field());
  for (const auto& [ij, coeffs] : a.sc().table())
    out.set_bracket(ij.first, ij.second, coeffs);
  for (const auto& [ij, coeffs] : b.sc().table()) {
    StructureConstants::Coeffs shifted;
    for (const auto& [k, c] : coeffs) shifted.emplace_back(k + a.dim(), c);
    out.set_bracket(ij.first + a.dim(), ij.second + a.dim(), shifted);
  }
  return LieAlgebra::validate(std::move(out));
}

LieAlgebra change_basis(const LieAlgebra& l, const std::vector<Vec>& p) {
  const std::size_t n = l.dim();
  if (p.size() != n)
    throw invalid_parameter("change_basis: expected " + std::to_string(n) +
                            " basis vectors, got " + std::to_string(p.size()));
  // invert p^T once: old coords v relate to new coords w by p^T w = v
  const FieldDescriptor f = l.field();
  std::vector<Vec> aug(n, zero_vec(2 * n, f));
  for (std::size_t r = 0; r < n; ++r) {
    if (p[r].size() != n) throw dimension_mismatch("change_basis: row length");
    for (std::size_t c = 0; c < n; ++c) aug[c][r] = p[r][c];  // p^T
    aug[r][n + r] = Scalar::one(f);
  }
  std::vector<std::size_t> pivots;
  auto rref = rref_rows(std::move(aug), f, &pivots);
  const bool invertible =
      pivots.size() == n && (n == 0 || pivots[n - 1] == n - 1);
  if (!invertible)
    throw invalid_parameter("change_basis: basis matrix is singular");
  // inverse of p^T sits in the right half
  auto solve = [&](const Vec& v) {
    Vec w = zero_vec(n, f);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!rref[r][n + c].is_zero() && !v[c].is_zero())
          w[r] += rref[r][n + c] * v[c];
    return w;
  };

  StructureConstants out(n, f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec w = solve(l.bracket(p[a], p[b]));
      StructureConstants::Coeffs coeffs;
      for (std::size_t k = 0; k < n; ++k)
        if (!w[k].is_zero()) coeffs.emplace_back(k, w[k]);
      out.set_bracket(a, b, coeffs);
    }
  return LieAlgebra::validate(std::move(out));
}

}  // namespace liemult
