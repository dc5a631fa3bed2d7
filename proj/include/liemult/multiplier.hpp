#ifndef LIEMULT_MULTIPLIER_HPP
#define LIEMULT_MULTIPLIER_HPP

#include <array>
#include <cstddef>

#include "liemult/lie_algebra.hpp"

namespace liemult {

inline std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }
inline std::size_t binom3(std::size_t n) {
  return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

/// Lexicographic indexing of the wedge bases e_i ^ e_j (i < j) and
/// e_i ^ e_j ^ e_k (i < j < k): (0,1) < (0,2) < ... < (1,2) < ...
class WedgeBasis {
 public:
  explicit WedgeBasis(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t pairs() const { return binom2(n_); }
  std::size_t triples() const { return binom3(n_); }

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> pair_at(std::size_t idx) const;

  std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) const;
  std::array<std::size_t, 3> triple_at(std::size_t idx) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> pair_offset_;    // pair_index(i, i+1)
  std::vector<std::size_t> triple_offset_;  // triple_index(i, i+1, i+2)
};

/// The n x C(n,2) matrix of e_i ^ e_j -> [e_i, e_j], columns in wedge
/// order. Its image spans the derived subalgebra, so rank = dim L^2.
ExactMatrix boundary_d2(const LieAlgebra& l);

/// The C(n,2) x C(n,3) matrix of
///   e_i ^ e_j ^ e_k -> [e_i,e_j]^e_k - [e_i,e_k]^e_j + [e_j,e_k]^e_i,
/// wedges normalized onto the i < j basis (swap and negate).
/// d2 . d3 = 0 is the Jacobi identity in disguise.
ExactMatrix boundary_d3(const LieAlgebra& l);

struct MultiplierResult {
  std::size_t dim_multiplier;  // dim H2 = C(n,2) - m - rank_d3
  std::size_t rank_d2;         // equals m
  std::size_t rank_d3;
  std::size_t n;
  std::size_t m;  // dim L^2
};

/// Dimension of the multiplier as dim H2 of the chain complex
/// wedge^3 L -> wedge^2 L -> L. Over the rationals the big boundary
/// matrix is streamed column-by-column above dimension 24 and never
/// materialized.
MultiplierResult schur_multiplier_dim(
    const LieAlgebra& l, RankStrategy strategy = RankStrategy::automatic);

}  // namespace liemult

#endif
