#ifndef LIEMULT_ELIMINATION_HPP
#define LIEMULT_ELIMINATION_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "liemult/matrix.hpp"

namespace liemult {

/// How rank is computed over the rationals.
///
///   automatic        sparse streaming elimination with a dense fallback
///                    once fill-in passes 50%, dense fraction-free
///                    (Bareiss) for dense inputs
///   bareiss          dense fraction-free elimination, serial
///   bareiss_parallel dense fraction-free elimination, OpenMP rows
///   gauss_reference  naive exact Gaussian elimination on Scalar values;
///                    slow, simple, kept as the independent oracle
///   streaming        force the sparse streaming path
///
/// All strategies return the same value; over a prime field the word
/// kernels are used regardless (gauss_reference stays available).
enum class RankStrategy {
  automatic,
  bareiss,
  bareiss_parallel,
  gauss_reference,
  streaming,
};

std::size_t rank(const ExactMatrix& m,
                 RankStrategy strategy = RankStrategy::automatic);

/// cols(m) - rank(m).
std::size_t kernel_dim(const ExactMatrix& m,
                       RankStrategy strategy = RankStrategy::automatic);

/// Basis of { v : m v = 0 } in canonical reduced echelon form (computed
/// via the naive reference elimination; these matrices are small).
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

/// Rank of a rational matrix reduced mod p. Requires that p divides no
/// denominator (throws denominator_divisible_by_p) and p prime. Always
/// <= the rational rank; equality is overwhelmingly likely for a random
/// 30-bit p, which makes this the cheap consistency oracle.
std::size_t modular_rank_crosscheck(const ExactMatrix& m, std::uint32_t p);

/// Reduced row echelon form of a list of row vectors over the field;
/// zero rows are dropped, so the result is the canonical basis of the
/// row span. Pivot columns are reported when requested.
std::vector<std::vector<Scalar>> rref_rows(
    std::vector<std::vector<Scalar>> rows, const FieldDescriptor& field,
    std::vector<std::size_t>* pivot_cols = nullptr);

/// Column-by-column access to a rational matrix that is never fully
/// materialized (large boundary matrices are fed through this). Columns
/// must be reproducible: the fallback path re-reads them.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual std::size_t length() const = 0;
  virtual std::size_t count() const = 0;
  /// Nonzero entries of column c, ascending row index.
  virtual void column(std::size_t c,
                      std::vector<std::pair<std::size_t, mpq_class>>& out)
      const = 0;
};

/// Rank of the column span of src: streaming fraction-free elimination,
/// int64 fast path with exact escalation to arbitrary precision, dense
/// fallback once the echelon fill-in exceeds 50%.
std::size_t rank_streaming(const ColumnSource& src);

/// Uniform random prime in [2^29, 2^30).
std::uint32_t random_prime_30bit(std::mt19937_64& rng);

}  // namespace liemult

#endif
