#ifndef LIEMULT_MATRIX_HPP
#define LIEMULT_MATRIX_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "liemult/field.hpp"

namespace liemult {

/// Sparse exact matrix with dense access semantics: absent entries read
/// as zero, stored entries are always nonzero. Entry order is row-major,
/// which makes iteration (and everything built on it) deterministic.
class ExactMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  ExactMatrix(std::size_t rows, std::size_t cols, FieldDescriptor field)
      : rows_(rows), cols_(cols), field_(field) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }
  std::size_t nnz() const { return entries_.size(); }

  /// Stores v at (r, c); storing a zero erases the entry.
  void set(std::size_t r, std::size_t c, const Scalar& v);
  /// Adds v into (r, c).
  void add(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;

  const std::map<Index, Scalar>& entries() const { return entries_; }

  ExactMatrix transpose() const;

  /// Column c as sorted (row, value) pairs.
  std::vector<std::pair<std::size_t, Scalar>> column(std::size_t c) const;

  bool is_zero() const { return entries_.empty(); }
  bool operator==(const ExactMatrix& o) const;

  static ExactMatrix identity(std::size_t n, const FieldDescriptor& f);
  /// Rows given densely; zero entries dropped.
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                               std::size_t cols, const FieldDescriptor& f);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_, cols_;
  FieldDescriptor field_;
  std::map<Index, Scalar> entries_;
};

/// Exact matrix product; dimensions and fields must agree.
ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace liemult

#endif
