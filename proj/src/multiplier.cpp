#include "liemult/multiplier.hpp"

#include <map>

#include "liemult/kernels.hpp"

namespace liemult {

WedgeBasis::WedgeBasis(std::size_t n) : n_(n) {
  pair_offset_.resize(n ? n : 1, 0);
  triple_offset_.resize(n ? n : 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    pair_offset_[i] = pair_offset_[i - 1] + (n - i);
    triple_offset_[i] = triple_offset_[i - 1] + binom2(n - i);
  }
}

std::size_t WedgeBasis::pair_index(std::size_t i, std::size_t j) const {
  return pair_offset_[i] + (j - i - 1);
}

std::pair<std::size_t, std::size_t> WedgeBasis::pair_at(
    std::size_t idx) const {
  std::size_t i = 0;
  while (i + 1 < n_ && pair_offset_[i + 1] <= idx) ++i;
  return {i, idx - pair_offset_[i] + i + 1};
}

std::size_t WedgeBasis::triple_index(std::size_t i, std::size_t j,
                                     std::size_t k) const {
  // pairs (j, k) within the suffix starting at i+1
  const std::size_t sub_n = n_ - i - 1;
  const std::size_t jj = j - i - 1, kk = k - i - 1;
  return triple_offset_[i] + jj * (2 * sub_n - jj - 1) / 2 + (kk - jj - 1);
}

std::array<std::size_t, 3> WedgeBasis::triple_at(std::size_t idx) const {
  std::size_t i = 0;
  while (i + 1 < n_ && triple_offset_[i + 1] <= idx) ++i;
  std::size_t rem = idx - triple_offset_[i];
  const std::size_t sub_n = n_ - i - 1;
  std::size_t jj = 0, skip = sub_n - 1;
  while (rem >= skip) {
    rem -= skip;
    ++jj;
    --skip;
  }
  return {i, i + 1 + jj, i + 2 + jj + rem};
}

ExactMatrix boundary_d2(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  WedgeBasis w(n);
  ExactMatrix d2(n, w.pairs(), l.field());
  for (const auto& [ij, coeffs] : l.sc().table()) {
    const std::size_t col = w.pair_index(ij.first, ij.second);
    for (const auto& [k, c] : coeffs) d2.set(k, col, c);
  }
  return d2;
}

namespace {

// accumulates sign * (v ^ e_t) on the pair basis
template <class Sink>
void expand_wedge(const WedgeBasis& w, const Vec& v, std::size_t t, int sign,
                  Sink&& sink) {
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (s == t || v[s].is_zero()) continue;
    if (s < t)
      sink(w.pair_index(s, t), sign > 0 ? v[s] : -v[s]);
    else
      sink(w.pair_index(t, s), sign > 0 ? -v[s] : v[s]);
  }
}

// nonzero entries of the d3 column for the triple (i, j, k)
std::map<std::size_t, Scalar> d3_column(const LieAlgebra& l,
                                        const WedgeBasis& w, std::size_t i,
                                        std::size_t j, std::size_t k) {
  std::map<std::size_t, Scalar> acc;
  auto sink = [&](std::size_t row, Scalar val) {
    auto it = acc.find(row);
    if (it == acc.end()) {
      acc.emplace(row, std::move(val));
    } else {
      it->second += val;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  expand_wedge(w, l.sc().bracket_basis(i, j), k, +1, sink);
  expand_wedge(w, l.sc().bracket_basis(i, k), j, -1, sink);
  expand_wedge(w, l.sc().bracket_basis(j, k), i, +1, sink);
  return acc;
}

class D3Columns : public ColumnSource {
 public:
  explicit D3Columns(const LieAlgebra& l) : l_(l), w_(l.dim()) {}
  std::size_t length() const override { return w_.pairs(); }
  std::size_t count() const override { return w_.triples(); }
  void column(std::size_t c,
              std::vector<std::pair<std::size_t, mpq_class>>& out)
      const override {
    out.clear();
    const auto [i, j, k] = w_.triple_at(c);
    for (auto& [row, val] : d3_column(l_, w_, i, j, k))
      out.emplace_back(row, val.rational());
  }

 private:
  const LieAlgebra& l_;
  WedgeBasis w_;
};

std::size_t rank_d3_prime_field(const LieAlgebra& l) {
  // dense residue rows, no intermediate sparse matrix
  const WedgeBasis w(l.dim());
  std::vector<std::vector<std::uint32_t>> rows(
      w.pairs(), std::vector<std::uint32_t>(w.triples(), 0));
  for (std::size_t c = 0; c < w.triples(); ++c) {
    const auto [i, j, k] = w.triple_at(c);
    for (const auto& [row, val] : d3_column(l, w, i, j, k))
      rows[row][c] = val.residue();
  }
  return kernels::fp_rank(rows, l.field().prime(), false);
}

}  // namespace

ExactMatrix boundary_d3(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  WedgeBasis w(n);
  ExactMatrix d3(w.pairs(), w.triples(), l.field());
  for (std::size_t c = 0; c < w.triples(); ++c) {
    const auto [i, j, k] = w.triple_at(c);
    for (const auto& [row, val] : d3_column(l, w, i, j, k))
      d3.set(row, c, val);
  }
  return d3;
}

MultiplierResult schur_multiplier_dim(const LieAlgebra& l,
                                      RankStrategy strategy) {
  const std::size_t n = l.dim();
  const std::size_t m = l.derived_subalgebra().dim();
  const std::size_t rank_d2 = rank(boundary_d2(l), strategy);
  if (rank_d2 != m)
    throw inconsistent_classification(
        "rank of d2 disagrees with dim of the derived subalgebra");

  std::size_t rank_d3 = 0;
  if (!l.field().is_rationals()) {
    rank_d3 = rank_d3_prime_field(l);
  } else if (n > 24 && (strategy == RankStrategy::automatic ||
                        strategy == RankStrategy::streaming)) {
    rank_d3 = rank_streaming(D3Columns(l));
  } else {
    rank_d3 = rank(boundary_d3(l), strategy);
  }

  MultiplierResult r;
  r.n = n;
  r.m = m;
  r.rank_d2 = rank_d2;
  r.rank_d3 = rank_d3;
  r.dim_multiplier = binom2(n) - m - rank_d3;
  return r;
}

}  // namespace liemult
