#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gsp::exact {

using Q = mpq_class;
using Z = mpz_class;

std::string to_string(const Q& q);
Q parse_rational(const std::string& text);

// Dense row-major matrix over Q. Zero-sized shapes are allowed.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Q& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Q& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix operator-() const;
  QMatrix scaled(const Q& s) const;
  QMatrix& operator+=(const QMatrix& other);
  bool operator==(const QMatrix& other) const;
  bool operator!=(const QMatrix& other) const { return !(*this == other); }

  QMatrix transpose() const;
  bool is_zero() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);
  QMatrix column(std::size_t c) const;
  QMatrix select_columns(const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Q> data_;
};

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);

struct Echelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  QMatrix transform;                // invertible, transform * input == reduced
};

Echelon rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Columns form a basis of the null space.
QMatrix kernel(const QMatrix& m);
// Pivot columns of m: a basis of its column space.
QMatrix column_space(const QMatrix& m);
// Columns of `candidates` that extend the independent columns of `base`, chosen greedily in order.
QMatrix extend_basis(const QMatrix& base, const QMatrix& candidates);
// Solves a * x == b, or nullopt when inconsistent. Free variables are set to zero.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);
std::optional<QMatrix> inverse(const QMatrix& m);
Q determinant(const QMatrix& m);

}  // namespace gsp::exact
