#include "chainmmc/gabidulin.hpp"

#include <stdexcept>

#include "chainmmc/errors.hpp"

namespace chainmmc {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::uint64_t(1) << 62) / base) throw GuardExceeded(what);
    r *= base;
  }
  return r;
}

}  // namespace

GabidulinCode::GabidulinCode(FiniteField base, int rows, int width, int k)
    : GabidulinCode(std::move(base), rows, width, k, {}) {}

GabidulinCode::GabidulinCode(FiniteField base, int rows, int width, int k,
                             std::vector<std::uint64_t> points)
    : base_(std::move(base)),
      ext_(width == 1 ? base_ : FiniteField::extension(base_, width)),
      n_(rows),
      m_(width),
      k_(k),
      points_(std::move(points)) {
  if (n_ < 1) throw std::invalid_argument("code needs at least one row");
  if (m_ < n_) throw std::invalid_argument("code width must be at least the row count");
  if (k_ < 0 || k_ > n_) throw std::invalid_argument("dimension must lie in [0, rows]");
  if (points_.empty()) {
    // Power basis of the defining root; independent by construction.
    std::uint64_t z = base_.order();
    std::uint64_t p = 1;
    for (int j = 0; j < n_; ++j) {
      points_.push_back(p);
      if (j + 1 < n_) p *= z;
    }
  }
  if (points_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("need one evaluation point per row");
  for (std::uint64_t g : points_)
    if (g >= ext_.order()) throw std::invalid_argument("evaluation point out of range");
  // The points must be independent over the base field for the evaluation
  // map to be injective and the distance to meet the Singleton bound.
  FieldMatrix coords(base_, m_, n_);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < m_; ++i)
      coords(i, j) = m_ == 1 ? points_[static_cast<std::size_t>(j)]
                             : ext_.coord(points_[static_cast<std::size_t>(j)], i);
  if (coords.rank() != n_)
    throw std::invalid_argument("evaluation points are linearly dependent");

  frob_points_.resize(static_cast<std::size_t>(k_));
  std::vector<std::uint64_t> cur = points_;
  for (int t = 0; t < k_; ++t) {
    frob_points_[static_cast<std::size_t>(t)] = cur;
    for (auto& g : cur) g = m_ == 1 ? g : ext_.frobenius(g);
  }

  for (int t = 0; t < k_; ++t)
    for (int b = 0; b < m_; ++b) {
      Message unit(static_cast<std::size_t>(k_), 0);
      std::uint64_t coeff = 1;
      for (int i = 0; i < b; ++i) coeff *= base_.order();
      unit[static_cast<std::size_t>(t)] = coeff;
      unit_codewords_.push_back(encode(unit));
    }
}

std::uint64_t GabidulinCode::message_space_size() const {
  return checked_pow(ext_.order(), k_, "message space too large to enumerate");
}

Message GabidulinCode::message_from_index(std::uint64_t index) const {
  if (index >= message_space_size()) throw std::invalid_argument("message index out of range");
  Message m(static_cast<std::size_t>(k_));
  for (int t = 0; t < k_; ++t) {
    m[static_cast<std::size_t>(t)] = index % ext_.order();
    index /= ext_.order();
  }
  return m;
}

Message GabidulinCode::random_message(TrialRng& rng) const {
  Message m(static_cast<std::size_t>(k_));
  for (auto& c : m) c = rng.below(ext_.order());
  return m;
}

FieldMatrix GabidulinCode::encode(const Message& msg) const {
  if (msg.size() != static_cast<std::size_t>(k_))
    throw std::invalid_argument("message length mismatch");
  for (std::uint64_t c : msg)
    if (c >= ext_.order()) throw std::invalid_argument("message symbol out of range");
  FieldMatrix out(base_, n_, m_);
  for (int j = 0; j < n_; ++j) {
    std::uint64_t y = 0;
    for (int t = 0; t < k_; ++t)
      y = ext_.add(y, ext_.mul(msg[static_cast<std::size_t>(t)],
                               frob_points_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]));
    for (int i = 0; i < m_; ++i) out(j, i) = m_ == 1 ? y : ext_.coord(y, i);
  }
  return out;
}

ComponentDecodeOutcome GabidulinCode::decode_coherent(const FieldMatrix& Y,
                                                      const FieldMatrix& A) const {
  if (!A.field().same_field(base_) || !Y.field().same_field(base_))
    throw std::invalid_argument("field mismatch");
  if (A.cols() != n_ || Y.cols() != m_ || Y.rows() != A.rows())
    throw std::invalid_argument("observation dimensions mismatch");
  const int a = A.rows();
  // Base-field coordinates of the message are the unknowns; the system is
  // exact, so the solve classifies the compatible codeword set.
  FieldMatrix M(base_, a * m_, k_ * m_);
  for (int u = 0; u < k_ * m_; ++u) {
    FieldMatrix img = A * unit_codewords_[static_cast<std::size_t>(u)];
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < m_; ++c) M(r * m_ + c, u) = img(r, c);
  }
  FieldMatrix rhs(base_, a * m_, 1);
  for (int r = 0; r < a; ++r)
    for (int c = 0; c < m_; ++c) rhs(r * m_ + c, 0) = Y(r, c);

  FieldSolveResult sol = field_solve(M, rhs);
  if (sol.kind == FieldSolveResult::Kind::None)
    return {ComponentDecodeOutcome::Status::Inconsistent, {}};
  if (sol.kind == FieldSolveResult::Kind::Affine)
    return {ComponentDecodeOutcome::Status::Ambiguous, {}};
  Message msg(static_cast<std::size_t>(k_));
  for (int t = 0; t < k_; ++t) {
    std::vector<std::uint64_t> coords(static_cast<std::size_t>(m_));
    for (int b = 0; b < m_; ++b)
      coords[static_cast<std::size_t>(b)] = sol.particular(t * m_ + b, 0);
    msg[static_cast<std::size_t>(t)] =
        m_ == 1 ? coords[0] : ext_.from_coords(coords);
  }
  return {ComponentDecodeOutcome::Status::Ok, std::move(msg)};
}

int rank_distance(const FieldMatrix& x, const FieldMatrix& y) { return (x - y).rank(); }

int min_rank_distance(const ComponentCode& code, std::uint64_t guard) {
  std::uint64_t size = code.message_space_size();
  if (size > guard || size * size > guard * 16)
    throw GuardExceeded("codebook too large for pairwise distance enumeration");
  std::vector<FieldMatrix> words;
  words.reserve(static_cast<std::size_t>(size));
  for (std::uint64_t i = 0; i < size; ++i)
    words.push_back(code.encode(code.message_from_index(i)));
  // Convention: a codebook without distinct pairs has distance rows + 1, one
  // past any achievable rank.
  int best = code.rows() + 1;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, rank_distance(words[i], words[j]));
  return best;
}

bool rank_deficiency_correcting_oracle(const ComponentCode& code, int b, std::uint64_t guard) {
  const FiniteField& F = code.field();
  const int n = code.rows();
  if (b < 0 || b > n) throw std::invalid_argument("deficiency out of range");
  std::uint64_t size = code.message_space_size();
  if (size > guard) throw GuardExceeded("codebook too large to enumerate");
  std::uint64_t nmat = checked_pow(F.order(), n * n, "transfer space too large to enumerate");
  if (nmat > guard) throw GuardExceeded("transfer space too large to enumerate");

  std::vector<FieldMatrix> words;
  words.reserve(static_cast<std::size_t>(size));
  for (std::uint64_t i = 0; i < size; ++i)
    words.push_back(code.encode(code.message_from_index(i)));

  std::vector<FieldMatrix> transfers;
  for (std::uint64_t idx = 0; idx < nmat; ++idx) {
    FieldMatrix A(F, n, n);
    std::uint64_t rest = idx;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        A(r, c) = rest % F.order();
        rest /= F.order();
      }
    if (A.rank() >= n - b) transfers.push_back(std::move(A));
  }

  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      FieldMatrix diff = words[i] - words[j];
      for (const FieldMatrix& A : transfers)
        if ((A * diff).is_zero()) return false;
    }
  return true;
}

}  // namespace chainmmc
