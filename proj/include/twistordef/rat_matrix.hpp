#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "twistordef/rational.hpp"

namespace twistordef {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  /// Throws std::invalid_argument if the rows have differing lengths.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> entries() const { return entries_; }

  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;
  /// Columns [first, first + count) as a new matrix.
  RatMatrix column_block(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over Q.
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon basis of the row space; one row per pivot.
RatMatrix row_space_basis(const RatMatrix& m);

/// ambient_dim - rank(span). Throws std::invalid_argument if span does not
/// have ambient_dim columns.
std::size_t quotient_dimension(std::size_t ambient_dim, const RatMatrix& span);

}  // namespace twistordef
