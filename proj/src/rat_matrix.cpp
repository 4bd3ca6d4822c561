#include "twistordef/rat_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistordef {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_)
    throw std::invalid_argument("row has " + std::to_string(values.size()) + " entries, expected " +
                                std::to_string(cols_));
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column block exceeds matrix width");
  RatMatrix b(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
  return b;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

RatMatrix row_space_basis(const RatMatrix& m) {
  // Gauss-Jordan elimination; the reduced echelon form is unique, so the
  // output does not depend on pivoting order.
  RatMatrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r, c), a(pivot_row, c));

    const Rational inv = Rational(1) / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pivot_row || a(other, col).is_zero()) continue;
      const Rational factor = a(other, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(other, c) -= factor * a(pivot_row, c);
    }
    ++pivot_row;
  }

  RatMatrix basis(0, a.cols());
  for (std::size_t r = 0; r < pivot_row; ++r) basis.append_row(a.row(r));
  return basis;
}

std::size_t rank(const RatMatrix& m) { return row_space_basis(m).rows(); }

std::size_t quotient_dimension(std::size_t ambient_dim, const RatMatrix& span) {
  if (span.cols() != ambient_dim)
    throw std::invalid_argument("span has " + std::to_string(span.cols()) +
                                " columns, ambient dimension is " + std::to_string(ambient_dim));
  return ambient_dim - rank(span);
}

}  // namespace twistordef
