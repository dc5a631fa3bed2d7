#include "liemult/elimination.hpp"

#include <algorithm>

#include "liemult/kernels.hpp"

namespace liemult {

namespace {

struct scalar_ops {
  bool is_zero(const Scalar& s) const { return s.is_zero(); }
  Scalar inverse(const Scalar& s) const { return s.inverse(); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
};

// Dense integer rows of a rational matrix: each row is scaled by the lcm
// of its denominators, which changes neither rank nor kernel.
std::vector<std::vector<mpz_class>> integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(),
                                           std::vector<mpz_class>(m.cols()));
  std::vector<mpz_class> lcm(m.rows(), 1);
  for (const auto& [rc, v] : m.entries())
    mpz_lcm(lcm[rc.first].get_mpz_t(), lcm[rc.first].get_mpz_t(),
            v.rational().get_den().get_mpz_t());
  for (const auto& [rc, v] : m.entries()) {
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), lcm[rc.first].get_mpz_t(),
                 v.rational().get_den().get_mpz_t());
    rows[rc.first][rc.second] = v.rational().get_num() * scale;
  }
  return rows;
}

bool fits_int64(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()); }

std::size_t bareiss_dense_rank(const ExactMatrix& m, bool parallel) {
  auto rows = integer_rows(m);
  bool small = true;
  for (const auto& r : rows)
    for (const auto& v : r)
      if (!fits_int64(v)) {
        small = false;
        break;
      }
  if (small) {
    std::vector<std::vector<std::int64_t>> w(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      w[i].resize(rows[i].size());
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        w[i][j] = rows[i][j].get_si();
    }
    try {
      return kernels::bareiss_rank(w, parallel);
    } catch (const kernels::int64_overflow&) {
      // fall through to the arbitrary-precision run
    }
  }
  return kernels::bareiss_rank(rows, parallel);
}

std::size_t fp_dense_rank(const ExactMatrix& m, std::uint32_t p,
                          bool parallel) {
  std::vector<std::vector<std::uint32_t>> rows(
      m.rows(), std::vector<std::uint32_t>(m.cols(), 0));
  if (m.field().is_rationals()) {
    for (const auto& [rc, v] : m.entries())
      rows[rc.first][rc.second] = v.to_prime_field(p).residue();
  } else {
    for (const auto& [rc, v] : m.entries())
      rows[rc.first][rc.second] = v.residue();
  }
  return kernels::fp_rank(rows, p, parallel);
}

std::size_t reference_rank(const ExactMatrix& m) {
  std::vector<std::vector<Scalar>> rows(
      m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(m.field())));
  for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
  return kernels::rref_inplace(rows, scalar_ops{}).size();
}

// Integer column of a ColumnSource, denominators cleared columnwise.
std::vector<std::pair<std::size_t, mpz_class>> integer_column(
    const ColumnSource& src, std::size_t c,
    std::vector<std::pair<std::size_t, mpq_class>>& scratch) {
  scratch.clear();
  src.column(c, scratch);
  mpz_class lcm = 1;
  for (const auto& [i, q] : scratch)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<std::pair<std::size_t, mpz_class>> out;
  out.reserve(scratch.size());
  for (const auto& [i, q] : scratch) {
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(),
                 q.get_den().get_mpz_t());
    mpz_class v = q.get_num() * scale;
    if (sgn(v) != 0) out.emplace_back(i, std::move(v));
  }
  return out;
}

// Dense fallback: the rank of the column span equals the rank of the
// row-stack of (current pivot rows + remaining columns).
template <class Int>
std::size_t dense_fallback(const kernels::StreamingEchelon<Int>& engine,
                           const ColumnSource& src, std::size_t next_col) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(engine.rank() + (src.count() - next_col));
  for (const auto& pr : engine.pivot_rows()) {
    std::vector<mpz_class> dense(src.length());
    for (const auto& [i, v] : pr) dense[i] = v;
    rows.push_back(std::move(dense));
  }
  std::vector<std::pair<std::size_t, mpq_class>> scratch;
  for (std::size_t c = next_col; c < src.count(); ++c) {
    std::vector<mpz_class> dense(src.length());
    for (auto& [i, v] : integer_column(src, c, scratch))
      dense[i] = std::move(v);
    rows.push_back(std::move(dense));
  }
  return kernels::bareiss_rank(rows, false);
}

template <class Int>
std::size_t streaming_rank_typed(const ColumnSource& src) {
  kernels::StreamingEchelon<Int> engine(src.length());
  std::vector<std::pair<std::size_t, mpq_class>> scratch;
  const std::size_t min_rank_for_fallback = 16;
  for (std::size_t c = 0; c < src.count(); ++c) {
    typename kernels::StreamingEchelon<Int>::SparseVec col;
    for (auto& [i, v] : integer_column(src, c, scratch)) {
      if constexpr (std::is_same_v<Int, std::int64_t>) {
        if (!fits_int64(v)) throw kernels::int64_overflow{};
        col.emplace_back(i, v.get_si());
      } else {
        col.emplace_back(i, std::move(v));
      }
    }
    engine.offer(std::move(col));
    if (engine.rank() >= min_rank_for_fallback && engine.fill() > 0.5)
      return dense_fallback(engine, src, c + 1) ;
  }
  return engine.rank();
}

// Adapter so materialized matrices can use the streaming path.
class MatrixColumns : public ColumnSource {
 public:
  explicit MatrixColumns(const ExactMatrix& m) : m_(m), cols_(m.cols()) {
    for (const auto& [rc, v] : m.entries())
      cols_by_index_[rc.second].emplace_back(rc.first, v.rational());
  }
  std::size_t length() const override { return m_.rows(); }
  std::size_t count() const override { return m_.cols(); }
  void column(std::size_t c,
              std::vector<std::pair<std::size_t, mpq_class>>& out)
      const override {
    auto it = cols_by_index_.find(c);
    out = it == cols_by_index_.end()
              ? std::vector<std::pair<std::size_t, mpq_class>>{}
              : it->second;
  }

 private:
  const ExactMatrix& m_;
  std::size_t cols_;
  std::map<std::size_t, std::vector<std::pair<std::size_t, mpq_class>>>
      cols_by_index_;
};

}  // namespace

std::size_t rank_streaming(const ColumnSource& src) {
  if (src.length() == 0 || src.count() == 0) return 0;
  try {
    return streaming_rank_typed<std::int64_t>(src);
  } catch (const kernels::int64_overflow&) {
    return streaming_rank_typed<mpz_class>(src);
  }
}

std::size_t rank(const ExactMatrix& m, RankStrategy strategy) {
  if (m.rows() == 0 || m.cols() == 0 || m.nnz() == 0) return 0;
  if (strategy == RankStrategy::gauss_reference) return reference_rank(m);
  if (!m.field().is_rationals())
    return fp_dense_rank(m, m.field().prime(),
                         strategy == RankStrategy::bareiss_parallel);
  switch (strategy) {
    case RankStrategy::bareiss:
      return bareiss_dense_rank(m, false);
    case RankStrategy::bareiss_parallel:
      return bareiss_dense_rank(m, true);
    case RankStrategy::streaming:
      return rank_streaming(MatrixColumns(m));
    case RankStrategy::automatic:
    default: {
      const double density =
          double(m.nnz()) / (double(m.rows()) * double(m.cols()));
      const bool tiny = m.rows() <= 16 || m.cols() <= 16;
      if (!tiny && density <= 0.5) return rank_streaming(MatrixColumns(m));
      return bareiss_dense_rank(m, false);
    }
  }
}

std::size_t kernel_dim(const ExactMatrix& m, RankStrategy strategy) {
  return m.cols() - rank(m, strategy);
}

std::vector<std::vector<Scalar>> rref_rows(
    std::vector<std::vector<Scalar>> rows, const FieldDescriptor& field,
    std::vector<std::size_t>* pivot_cols) {
  auto pivots = kernels::rref_inplace(rows, scalar_ops{});
  rows.resize(pivots.size(),
              std::vector<Scalar>());  // rows below the pivots are zero
  if (pivot_cols) *pivot_cols = std::move(pivots);
  (void)field;
  return rows;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  const FieldDescriptor f = m.field();
  const std::size_t n = m.cols();
  std::vector<std::vector<Scalar>> rows(
      m.rows(), std::vector<Scalar>(n, Scalar::zero(f)));
  for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
  auto pivots = kernels::rref_inplace(rows, scalar_ops{});

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[fcol] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -rows[r][fcol];
    basis.push_back(std::move(v));
  }
  // canonicalize the kernel basis itself
  return rref_rows(std::move(basis), f);
}

std::size_t modular_rank_crosscheck(const ExactMatrix& m, std::uint32_t p) {
  if (!m.field().is_rationals())
    throw field_mismatch("modular_rank_crosscheck expects a rational matrix");
  if (!is_prime_u32(p))
    throw invalid_parameter("modulus " + std::to_string(p) + " is not prime");
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return fp_dense_rank(m, p, false);
}

std::uint32_t random_prime_30bit(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(1u << 29, (1u << 30) - 1);
  for (;;) {
    std::uint32_t c = dist(rng) | 1u;
    if (is_prime_u32(c)) return c;
  }
}

}  // namespace liemult
