#ifndef LIEMULT_CATALOG_HPP
#define LIEMULT_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

/// All brackets zero.
LieAlgebra make_abelian(std::size_t n,
                        FieldDescriptor f = FieldDescriptor::rationals());

/// The Heisenberg algebra H(m) of dimension 2m + 1, basis
/// v_1, ..., v_{2m}, v (v last) with [v_{2i-1}, v_{2i}] = v; requires
/// m >= 1. Satisfies L^2 = Z(L) of dimension 1.
LieAlgebra make_heisenberg(std::size_t m,
                           FieldDescriptor f = FieldDescriptor::rationals());

/// The standard filiform algebra of dimension n >= 3:
/// [e_1, e_i] = e_{i+1} for 2 <= i <= n-1 (maximal nilpotency class).
LieAlgebra make_filiform(std::size_t n,
                         FieldDescriptor f = FieldDescriptor::rationals());

struct CatalogEntry {
  std::string key;
  std::size_t dim;
  LieAlgebra algebra;
  enum class Source { constructed, classification_table } source;
  /// Literature citation / parameter record for classification tables.
  std::string note;
  /// Golden multiplier dimension over Q, frozen after two independent
  /// elimination strategies agreed on it (or a closed form for the
  /// constructed families).
  std::optional<std::size_t> expected_dim_multiplier;
};

/// The built-in corpus: abelian(n <= 8), heisenberg(m <= 5), the sums
/// heisenberg(h) + abelian(k) of dim <= 9, filiform(3..7), and the full
/// classification of nilpotent Lie algebras of dimension <= 6 over Q.
/// Every entry is validated and nilpotent; keys are unique.
const std::vector<CatalogEntry>& builtin_catalog();

/// nullptr when the key does not exist.
const CatalogEntry* find_catalog_entry(std::string_view key);

/// Structure-constants text format, the single interchange format:
///
///   # comment
///   dim 5
///   field Q          (or: field GF(7))
///   0 1 -> 2:1 4:1/2
///
/// 0-based indices, i < j, unspecified brackets are zero, rationals in
/// lowest terms. serialize/deserialize round-trip bit-exactly.
std::string serialize(const StructureConstants& sc);
std::string serialize(const LieAlgebra& l);
StructureConstants deserialize(std::string_view text);

}  // namespace liemult

#endif
