#include "liemult/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "liemult/field.hpp"

namespace liemult::kernels {

namespace {

bool is_zero_int(std::int64_t v) { return v == 0; }
bool is_zero_int(const mpz_class& v) { return sgn(v) == 0; }

int sign_of(std::int64_t v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
int sign_of(const mpz_class& v) { return sgn(v); }

bool is_one(std::int64_t v) { return v == 1; }
bool is_one(const mpz_class& v) { return v == 1; }

void divexact(std::int64_t& v, std::int64_t d) { v /= d; }
void divexact(mpz_class& v, const mpz_class& d) {
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

// g = gcd(g, v), nonnegative
void gcd_accum(std::int64_t& g, std::int64_t v) {
  g = std::gcd(g < 0 ? -g : g, v < 0 ? -v : v);
}
void gcd_accum(mpz_class& g, const mpz_class& v) {
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
}

// a*x - b*y (int64 path overflow-checked)
std::int64_t combine(std::int64_t a, std::int64_t x, std::int64_t b,
                     std::int64_t y) {
  return detail::checked((__int128)a * x - (__int128)b * y);
}
mpz_class combine(const mpz_class& a, const mpz_class& x, const mpz_class& b,
                  const mpz_class& y) {
  mpz_class r;
  mpz_mul(r.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
  mpz_submul(r.get_mpz_t(), b.get_mpz_t(), y.get_mpz_t());
  return r;
}

}  // namespace

template <class Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m, bool parallel) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  Int prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pr = rank;
    while (pr < rows && is_zero_int(m[pr][col])) ++pr;
    if (pr == rows) continue;
    if (pr != rank) std::swap(m[rank], m[pr]);
    const Int piv = m[rank][col];
    const auto& prow = m[rank];
    const std::int64_t lo = std::int64_t(rank) + 1;
    const std::int64_t hi = std::int64_t(rows);
    // exceptions must not cross the omp region; overflow is flagged and
    // rethrown after the loop (the matrix is discarded by the caller)
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t ii = lo; ii < hi; ++ii) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      try {
        auto& row = m[std::size_t(ii)];
        const Int f = row[col];
        for (std::size_t j = col + 1; j < cols; ++j)
          detail::fused_update(row[j], piv, f, prow[j], prev);
        row[col] = Int(0);
      } catch (const int64_overflow&) {
        overflow.store(true, std::memory_order_relaxed);
      }
    }
    if (overflow.load()) throw int64_overflow{};
    prev = piv;
    ++rank;
  }
  return rank;
}

template std::size_t bareiss_rank<std::int64_t>(
    std::vector<std::vector<std::int64_t>>&, bool);
template std::size_t bareiss_rank<mpz_class>(
    std::vector<std::vector<mpz_class>>&, bool);

std::size_t fp_rank(std::vector<std::vector<std::uint32_t>>& m,
                    std::uint32_t p, bool parallel) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pr = rank;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != rank) std::swap(m[rank], m[pr]);
    const std::uint32_t inv = fp::inv(m[rank][col], p);
    const auto& prow = m[rank];
    const std::int64_t lo = std::int64_t(rank) + 1;
    const std::int64_t hi = std::int64_t(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t ii = lo; ii < hi; ++ii) {
      auto& row = m[std::size_t(ii)];
      if (row[col] == 0) continue;
      const std::uint32_t f = fp::mul(row[col], inv, p);
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (prow[j] != 0) row[j] = fp::sub(row[j], fp::mul(f, prow[j], p), p);
      }
      row[col] = 0;
    }
    ++rank;
  }
  return rank;
}

template <class Int>
bool StreamingEchelon<Int>::offer(SparseVec v) {
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    if (it == pivots_.end() || *it != lead) {
      // new pivot: strip content, leading entry made positive
      Int g(0);
      for (const auto& e : v) gcd_accum(g, e.second);
      if (sign_of(v.front().second) < 0) g = -g;
      if (!is_one(g))
        for (auto& e : v) divexact(e.second, g);
      const std::size_t pos = std::size_t(it - pivots_.begin());
      stored_ += v.size();
      pivots_.insert(it, lead);
      rows_.insert(rows_.begin() + std::ptrdiff_t(pos), std::move(v));
      return true;
    }
    // v <- pl*v - vl*pivot, fraction-free; leading entry cancels
    const SparseVec& pivot = rows_[std::size_t(it - pivots_.begin())];
    const Int pl = pivot.front().second;
    const Int vl = v.front().second;
    SparseVec out;
    out.reserve(v.size() + pivot.size());
    auto a = v.begin();
    auto b = pivot.begin();
    Int g(0);
    while (a != v.end() || b != pivot.end()) {
      Int val;
      std::size_t idx;
      if (b == pivot.end() || (a != v.end() && a->first < b->first)) {
        idx = a->first;
        val = combine(pl, a->second, vl, Int(0));
        ++a;
      } else if (a == v.end() || b->first < a->first) {
        idx = b->first;
        val = combine(pl, Int(0), vl, b->second);
        ++b;
      } else {
        idx = a->first;
        val = combine(pl, a->second, vl, b->second);
        ++a;
        ++b;
      }
      if (!is_zero_int(val)) {
        gcd_accum(g, val);
        out.emplace_back(idx, std::move(val));
      }
    }
    if (!out.empty() && !is_one(g))
      for (auto& e : out) divexact(e.second, g);
    v = std::move(out);
  }
  return false;
}

template class StreamingEchelon<std::int64_t>;
template class StreamingEchelon<mpz_class>;

}  // namespace liemult::kernels
