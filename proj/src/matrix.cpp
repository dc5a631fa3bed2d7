#include "liemult/matrix.hpp"

#include <string>

namespace liemult {

void ExactMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw index_out_of_range("matrix index (" + std::to_string(r) + ", " +
                             std::to_string(c) + ") outside " +
                             std::to_string(rows_) + "x" +
                             std::to_string(cols_));
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c);
  require_same_field(field_, v.field(), "matrix entry");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_.insert_or_assign({r, c}, v);
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  check_index(r, c);
  require_same_field(field_, v.field(), "matrix entry");
  if (v.is_zero()) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    entries_.emplace(Index{r, c}, v);
    return;
  }
  Scalar s = it->second + v;
  if (s.is_zero())
    entries_.erase(it);
  else
    it->second = s;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (const auto& [rc, v] : entries_) t.entries_.emplace(Index{rc.second, rc.first}, v);
  return t;
}

std::vector<std::pair<std::size_t, Scalar>> ExactMatrix::column(
    std::size_t c) const {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto it = entries_.find({r, c});
    if (it != entries_.end()) out.emplace_back(r, it->second);
  }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    return false;
  if (entries_.size() != o.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  for (; a != entries_.end(); ++a, ++b) {
    if (a->first != b->first || a->second != b->second) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldDescriptor& f) {
  ExactMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                                   std::size_t cols,
                                   const FieldDescriptor& f) {
  ExactMatrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw dimension_mismatch("row length " + std::to_string(rows[r].size()) +
                               " != " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a.field(), b.field(), "matrix product");
  if (a.cols() != b.rows())
    throw dimension_mismatch("product of " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " with " +
                             std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
  // rows of b, indexed for the inner loop
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> brows(b.rows());
  for (const auto& [rc, v] : b.entries()) brows[rc.first].emplace_back(rc.second, v);

  ExactMatrix out(a.rows(), b.cols(), a.field());
  for (const auto& [rc, v] : a.entries()) {
    for (const auto& [c, w] : brows[rc.second]) out.add(rc.first, c, v * w);
  }
  return out;
}

}  // namespace liemult
