#include "chainmmc/ring_matrix.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "chainmmc/errors.hpp"

namespace chainmmc {

RingMatrix::RingMatrix(ChainRing ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  v_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

RingMatrix::RingMatrix(ChainRing ring,
                       std::initializer_list<std::initializer_list<std::uint64_t>> rows)
    : ring_(std::move(ring)), rows_(static_cast<int>(rows.size())), cols_(0) {
  for (const auto& r : rows) cols_ = std::max(cols_, static_cast<int>(r.size()));
  v_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0);
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged initializer rows");
    int j = 0;
    for (std::uint64_t x : r) {
      if (x >= ring_.order()) throw std::invalid_argument("element code out of range");
      v_[idx(i, j)] = x;
      ++j;
    }
    ++i;
  }
}

RingMatrix RingMatrix::identity(const ChainRing& ring, int n) {
  RingMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RingMatrix RingMatrix::pi_power_diagonal(const ChainRing& ring, int rows, int cols,
                                         const SShape& rho) {
  if (rho.s() != ring.s()) throw std::invalid_argument("shape length must equal ring index");
  if (rho.last() > std::min(rows, cols))
    throw std::invalid_argument("shape exceeds matrix dimensions");
  RingMatrix m(ring, rows, cols);
  // Diagonal entry t gets valuation v(t) = min{i : t < rho_i}; entries past
  // rho_{s-1} stay zero. Valuations are non-decreasing along the diagonal.
  for (int t = 0; t < rho.last(); ++t) {
    int v = 0;
    while (t >= rho[v]) ++v;
    m(t, t) = ring.pi_pow(v);
  }
  return m;
}

std::uint64_t RingMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  return v_[idx(r, c)];
}

void RingMatrix::set(int r, int c, std::uint64_t value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  if (value >= ring_.order()) throw std::invalid_argument("element code out of range");
  v_[idx(r, c)] = value;
}

static void require_same_shape(const RingMatrix& a, const RingMatrix& b) {
  if (!a.ring().same_ring(b.ring())) throw std::invalid_argument("ring mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  require_same_shape(*this, o);
  RingMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = ring_.add(v_[i], o.v_[i]);
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  require_same_shape(*this, o);
  RingMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = ring_.sub(v_[i], o.v_[i]);
  return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("ring mismatch");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RingMatrix r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r(i, j) = ring_.add(r(i, j), ring_.mul(a, o(k, j)));
    }
  return r;
}

RingMatrix RingMatrix::scaled(std::uint64_t c) const {
  RingMatrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = ring_.mul(v_[i], c);
  return r;
}

RingMatrix RingMatrix::scaled_pi_pow(int i) const {
  RingMatrix r(ring_, rows_, cols_);
  for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] = ring_.mul_pi_pow(v_[k], i);
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return ring_.same_ring(o.ring_) && rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
}

bool RingMatrix::is_zero() const {
  for (std::uint64_t x : v_)
    if (x != 0) return false;
  return true;
}

FieldMatrix RingMatrix::digit(int i) const {
  FieldMatrix m(ring_.residue_field(), rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = ring_.digit((*this)(r, c), i);
  return m;
}

RingMatrix RingMatrix::truncate(int i) const {
  RingMatrix m(ring_, rows_, cols_);
  for (std::size_t k = 0; k < v_.size(); ++k) m.v_[k] = ring_.truncate(v_[k], i);
  return m;
}

FieldMatrix RingMatrix::residue() const {
  FieldMatrix m(ring_.residue_field(), rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = ring_.residue((*this)(r, c));
  return m;
}

RingMatrix RingMatrix::lift(const ChainRing& ring, const FieldMatrix& m) {
  if (!ring.residue_field().same_field(m.field()))
    throw std::invalid_argument("field does not match ring residue field");
  RingMatrix out(ring, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = ring.lift(m(r, c));
  return out;
}

bool RingMatrix::satisfies_column_constraint(const SShape& lambda) const {
  if (lambda.s() != ring_.s()) throw std::invalid_argument("shape length must equal ring index");
  if (cols_ != lambda.last()) throw std::invalid_argument("column count must equal lambda_{s-1}");
  for (int c = 0; c < cols_; ++c) {
    int g = column_level(lambda, c);
    for (int r = 0; r < rows_; ++r)
      if (ring_.valuation((*this)(r, c)) < g) return false;
  }
  return true;
}

RingMatrix RingMatrix::rows_slice(int r0, int r1) const {
  if (r0 < 0 || r1 < r0 || r1 > rows_) throw std::invalid_argument("bad row slice");
  RingMatrix r(ring_, r1 - r0, cols_);
  for (int i = r0; i < r1; ++i)
    for (int j = 0; j < cols_; ++j) r(i - r0, j) = (*this)(i, j);
  return r;
}

RingMatrix RingMatrix::cols_slice(int c0, int c1) const {
  if (c0 < 0 || c1 < c0 || c1 > cols_) throw std::invalid_argument("bad column slice");
  RingMatrix r(ring_, rows_, c1 - c0);
  for (int i = 0; i < rows_; ++i)
    for (int j = c0; j < c1; ++j) r(i, j - c0) = (*this)(i, j);
  return r;
}

RingMatrix RingMatrix::hstack(const RingMatrix& a, const RingMatrix& b) {
  if (!a.ring().same_ring(b.ring())) throw std::invalid_argument("ring mismatch");
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch");
  RingMatrix r(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

std::string RingMatrix::to_text() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += ring_.element_to_string((*this)(i, j));
    }
    out += '\n';
  }
  return out;
}

RingMatrix read_matrix(const ChainRing& ring, std::istream& in) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw SpecError("matrix text must start with 'rows cols'");
  if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096)
    throw SpecError("matrix dimensions out of range");
  RingMatrix m(ring, static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw SpecError("matrix text ended early at entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      m(i, j) = ring.element_parse(tok);
    }
  return m;
}

RingMatrix parse_matrix(const ChainRing& ring, const std::string& text) {
  std::istringstream in(text);
  return read_matrix(ring, in);
}

}  // namespace chainmmc
