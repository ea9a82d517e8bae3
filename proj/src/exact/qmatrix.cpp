#include "exact/qmatrix.hpp"

#include <stdexcept>

namespace gsp::exact {

std::string to_string(const Q& q) {
  Q c = q;
  c.canonicalize();
  return c.get_str();
}

Q parse_rational(const std::string& text) {
  Q q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  return q;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Q& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  r += o;
  return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + (-o); }

QMatrix QMatrix::operator-() const { return scaled(-1); }

QMatrix QMatrix::scaled(const Q& s) const {
  QMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix r(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

QMatrix QMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

QMatrix QMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  QMatrix r(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, cols[j]);
  return r;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  QMatrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  QMatrix r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Echelon rref(const QMatrix& m) {
  Echelon e{m, {}, QMatrix::identity(m.rows())};
  QMatrix& a = e.reduced;
  QMatrix& t = e.transform;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      for (std::size_t j = 0; j < rows; ++j) std::swap(t(p, j), t(r, j));
    }
    Q inv = 1 / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t j = 0; j < rows; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Q f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      for (std::size_t j = 0; j < rows; ++j)
        if (t(r, j) != 0) t(i, j) -= f * t(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix kernel(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

QMatrix column_space(const QMatrix& m) { return m.select_columns(rref(m).pivots); }

QMatrix extend_basis(const QMatrix& base, const QMatrix& candidates) {
  QMatrix acc = column_space(base);
  std::vector<std::size_t> chosen;
  std::size_t r = acc.cols();
  for (std::size_t c = 0; c < candidates.cols(); ++c) {
    QMatrix trial = hstack(acc, candidates.column(c));
    if (rank(trial) > r) {
      acc = trial;
      ++r;
      chosen.push_back(c);
    }
  }
  return candidates.select_columns(chosen);
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Echelon e = rref(a);
  QMatrix tb = e.transform * b;
  const std::size_t r = e.pivots.size();
  for (std::size_t i = r; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (tb(i, j) != 0) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = tb(i, j);
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Echelon e = rref(m);
  if (e.pivots.size() != m.rows()) return std::nullopt;
  return e.transform;
}

Q determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Q f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace gsp::exact
