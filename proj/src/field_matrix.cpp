#include "chainmmc/field_matrix.hpp"

#include <stdexcept>

namespace chainmmc {

FieldMatrix::FieldMatrix(FiniteField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  v_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FieldMatrix FieldMatrix::identity(const FiniteField& field, int n) {
  FieldMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::uint64_t FieldMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  return v_[idx(r, c)];
}

void FieldMatrix::set(int r, int c, std::uint64_t value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  if (value >= field_.order()) throw std::invalid_argument("element code out of range");
  v_[idx(r, c)] = value;
}

static void require_same_shape(const FieldMatrix& a, const FieldMatrix& b) {
  if (!a.field().same_field(b.field())) throw std::invalid_argument("field mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  require_same_shape(*this, o);
  FieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.add(v_[i], o.v_[i]);
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  require_same_shape(*this, o);
  FieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.sub(v_[i], o.v_[i]);
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (!field_.same_field(o.field_)) throw std::invalid_argument("field mismatch");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  FieldMatrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        std::uint64_t p = field_.mul(a, o(k, j));
        r(i, j) = field_.add(r(i, j), p);
      }
    }
  return r;
}

FieldMatrix FieldMatrix::scaled(std::uint64_t c) const {
  FieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_.mul(v_[i], c);
  return r;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return field_.same_field(o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
}

bool FieldMatrix::is_zero() const {
  for (std::uint64_t x : v_)
    if (x != 0) return false;
  return true;
}

FieldMatrix FieldMatrix::rows_slice(int r0, int r1) const {
  if (r0 < 0 || r1 < r0 || r1 > rows_) throw std::invalid_argument("bad row slice");
  FieldMatrix r(field_, r1 - r0, cols_);
  for (int i = r0; i < r1; ++i)
    for (int j = 0; j < cols_; ++j) r(i - r0, j) = (*this)(i, j);
  return r;
}

FieldMatrix FieldMatrix::cols_slice(int c0, int c1) const {
  if (c0 < 0 || c1 < c0 || c1 > cols_) throw std::invalid_argument("bad column slice");
  FieldMatrix r(field_, rows_, c1 - c0);
  for (int i = 0; i < rows_; ++i)
    for (int j = c0; j < c1; ++j) r(i, j - c0) = (*this)(i, j);
  return r;
}

int FieldMatrix::rank() const {
  FieldMatrix w = *this;
  const FiniteField& F = field_;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int i = rank; i < rows_; ++i)
      if (w(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(w(piv, j), w(rank, j));
    std::uint64_t inv = F.inv(w(rank, col));
    for (int j = col; j < cols_; ++j) w(rank, j) = F.mul(w(rank, j), inv);
    for (int i = rank + 1; i < rows_; ++i) {
      std::uint64_t f = w(i, col);
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j)
        w(i, j) = F.sub(w(i, j), F.mul(f, w(rank, j)));
    }
    ++rank;
  }
  return rank;
}

FieldSolveResult field_solve(const FieldMatrix& M, const FieldMatrix& B) {
  if (!M.field().same_field(B.field())) throw std::invalid_argument("field mismatch");
  if (M.rows() != B.rows()) throw std::invalid_argument("right side row count mismatch");
  const FiniteField& F = M.field();
  const int m = M.rows(), n = M.cols(), w = B.cols();

  // Reduced row echelon form of the augmented block [M | B].
  FieldMatrix a(F, m, n + w);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = M(i, j);
    for (int j = 0; j < w; ++j) a(i, n + j) = B(i, j);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n + w; ++j) std::swap(a(piv, j), a(row, j));
    std::uint64_t inv = F.inv(a(row, col));
    for (int j = col; j < n + w; ++j) a(row, j) = F.mul(a(row, j), inv);
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      std::uint64_t f = a(i, col);
      if (f == 0) continue;
      for (int j = col; j < n + w; ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(row, j)));
    }
    pivot_col.push_back(col);
    ++row;
  }
  const int r = row;

  // Inconsistent iff some zero row of the M block has a nonzero B entry.
  for (int i = r; i < m; ++i)
    for (int j = 0; j < w; ++j)
      if (a(i, n + j) != 0)
        return {FieldSolveResult::Kind::None, FieldMatrix(F, n, w), {}};

  FieldMatrix particular(F, n, w);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < w; ++j) particular(pivot_col[static_cast<std::size_t>(k)], j) = a(k, n + j);

  std::vector<std::vector<std::uint64_t>> kernel;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<std::uint64_t> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int k = 0; k < r; ++k)
      v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(k)])] = F.neg(a(k, free));
    kernel.push_back(std::move(v));
  }

  if (kernel.empty()) return {FieldSolveResult::Kind::Unique, std::move(particular), {}};
  return {FieldSolveResult::Kind::Affine, std::move(particular), std::move(kernel)};
}

}  // namespace chainmmc
