#include "chainmmc/composite_code.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "chainmmc/errors.hpp"

namespace chainmmc {

CompositeCode::CompositeCode(ChainRing ring, int n, SShape lambda,
                             std::vector<std::shared_ptr<const ComponentCode>> components,
                             int shots)
    : ring_(std::move(ring)), n_(n), lambda_(std::move(lambda)),
      components_(std::move(components)), shots_(shots) {
  if (n_ < 1) throw std::invalid_argument("composite code needs at least one row");
  if (shots_ < 1) throw std::invalid_argument("shot count must be positive");
  if (lambda_.s() != ring_.s()) throw std::invalid_argument("shape length must equal ring index");
  if (components_.size() != static_cast<std::size_t>(ring_.s()))
    throw std::invalid_argument("need one component per digit level");
  for (int i = 0; i < ring_.s(); ++i) {
    const ComponentCode& c = *components_[static_cast<std::size_t>(i)];
    if (!c.field().same_field(ring_.residue_field()))
      throw std::invalid_argument("component field must be the residue field");
    if (c.rows() != n_) throw std::invalid_argument("component row count mismatch");
    if (c.width() != lambda_[i]) throw std::invalid_argument("component width must be lambda_i");
  }
}

double CompositeCode::rate_qdigits() const {
  double r = 0;
  for (const auto& c : components_) r += c->rate_qdigits();
  return r;
}

CompositeMessage CompositeCode::random_message(TrialRng& rng) const {
  CompositeMessage m;
  m.messages.resize(static_cast<std::size_t>(ring_.s()));
  for (int i = 0; i < ring_.s(); ++i)
    for (int j = 0; j < shots_; ++j)
      m.messages[static_cast<std::size_t>(i)].push_back(
          components_[static_cast<std::size_t>(i)]->random_message(rng));
  return m;
}

std::vector<RingMatrix> CompositeCode::encode(const CompositeMessage& m) const {
  const int s = ring_.s();
  if (m.messages.size() != static_cast<std::size_t>(s))
    throw std::invalid_argument("message must have one layer per digit level");
  for (const auto& layer : m.messages)
    if (layer.size() != static_cast<std::size_t>(shots_))
      throw std::invalid_argument("message must have one entry per shot");
  std::vector<RingMatrix> out;
  const int ell = lambda_.last();
  for (int j = 0; j < shots_; ++j) {
    RingMatrix X(ring_, n_, ell);
    for (int i = 0; i < s; ++i) {
      FieldMatrix Ci =
          components_[static_cast<std::size_t>(i)]->encode(m.messages[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      // Columns past lambda_i stay zero: layer i of an admissible input
      // vanishes on columns of level > i.
      RingMatrix padded(ring_, n_, ell);
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < lambda_[i]; ++c) padded(r, c) = ring_.lift(Ci(r, c));
      X = X + padded.scaled_pi_pow(i);
    }
    out.push_back(std::move(X));
  }
  return out;
}

std::uint64_t CompositeCode::message_space_size() const {
  if (shots_ != 1) throw std::invalid_argument("codebook enumeration is single-shot only");
  std::uint64_t total = 1;
  for (const auto& c : components_) {
    std::uint64_t sz = c->message_space_size();
    if (sz != 0 && total > (std::uint64_t(1) << 62) / sz)
      throw GuardExceeded("composite codebook too large");
    total *= sz;
  }
  return total;
}

CompositeMessage CompositeCode::message_from_index(std::uint64_t index) const {
  if (index >= message_space_size()) throw std::invalid_argument("message index out of range");
  CompositeMessage m;
  m.messages.resize(static_cast<std::size_t>(ring_.s()));
  for (int i = 0; i < ring_.s(); ++i) {
    const ComponentCode& c = *components_[static_cast<std::size_t>(i)];
    std::uint64_t sz = c.message_space_size();
    m.messages[static_cast<std::size_t>(i)].push_back(c.message_from_index(index % sz));
    index /= sz;
  }
  return m;
}

CompositeDecodeResult CompositeCode::decode(const std::vector<RingMatrix>& outputs,
                                            const std::vector<RingMatrix>& transfers) const {
  const int s = ring_.s();
  if (outputs.size() != static_cast<std::size_t>(shots_) ||
      transfers.size() != static_cast<std::size_t>(shots_))
    throw std::invalid_argument("need one output and one transfer per shot");

  struct ShotState {
    SmithDecomposition snf;
    ExtractedDigits digits;
    FieldMatrix q_res;
    RingMatrix xhat;
  };
  std::vector<ShotState> shots;
  for (int j = 0; j < shots_; ++j) {
    const RingMatrix& A = transfers[static_cast<std::size_t>(j)];
    const RingMatrix& Y = outputs[static_cast<std::size_t>(j)];
    if (!A.ring().same_ring(ring_) || !Y.ring().same_ring(ring_))
      throw std::invalid_argument("ring mismatch");
    if (A.cols() != n_ || Y.rows() != A.rows() || Y.cols() != lambda_.last())
      throw std::invalid_argument("observation dimensions mismatch");
    SmithDecomposition snf = smith_normal_form(A);
    // P is invertible, so P^{-1} Y = D (Q X) exposes the digit layers of
    // Q X through the diagonal.
    RingMatrix yt = solve_unit(snf.P, Y);
    try {
      ExtractedDigits digits = extract_digits(snf.D, yt, lambda_);
      FieldMatrix qr = snf.Q.residue();
      shots.push_back(ShotState{std::move(snf), std::move(digits), std::move(qr),
                                RingMatrix(ring_, n_, lambda_.last())});
    } catch (const InconsistentSystem&) {
      CompositeDecodeResult r;
      r.status = CompositeDecodeResult::Status::ChannelMismatch;
      r.failed_shot = j;
      return r;
    }
  }

  CompositeMessage decoded;
  decoded.messages.assign(static_cast<std::size_t>(s), {});
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < shots_; ++j) {
      ShotState& st = shots[static_cast<std::size_t>(j)];
      const int r = st.digits.rho[s - 1 - i];
      // Digit i of (Q X) on the known rows, with the carry of the already
      // decoded layers removed, is a residue-field observation of layer i
      // through phi(Q).
      RingMatrix carry = st.snf.Q.rows_slice(0, r) * st.xhat;
      FieldMatrix known = st.digits.layer[static_cast<std::size_t>(i)] -
                          carry.cols_slice(0, lambda_[i]).digit(i);
      FieldMatrix Ai = st.q_res.rows_slice(0, r);
      ComponentDecodeOutcome out =
          components_[static_cast<std::size_t>(i)]->decode_coherent(known, Ai);
      if (out.status != ComponentDecodeOutcome::Status::Ok) {
        CompositeDecodeResult fail;
        fail.status = CompositeDecodeResult::Status::StageFailure;
        fail.failed_stage = i;
        fail.failed_shot = j;
        fail.component_status = out.status;
        return fail;
      }
      FieldMatrix Ci = components_[static_cast<std::size_t>(i)]->encode(out.message);
      RingMatrix padded(ring_, n_, lambda_.last());
      for (int rr = 0; rr < n_; ++rr)
        for (int cc = 0; cc < lambda_[i]; ++cc) padded(rr, cc) = ring_.lift(Ci(rr, cc));
      st.xhat = st.xhat + padded.scaled_pi_pow(i);
      decoded.messages[static_cast<std::size_t>(i)].push_back(std::move(out.message));
    }
  }

  CompositeDecodeResult ok;
  ok.status = CompositeDecodeResult::Status::Ok;
  ok.message = std::move(decoded);
  for (int j = 0; j < shots_; ++j) {
    // The reconstruction must reproduce the observation exactly; with the
    // channel law intact this cannot fire, and it certifies every Ok result.
    if (transfers[static_cast<std::size_t>(j)] * shots[static_cast<std::size_t>(j)].xhat !=
        outputs[static_cast<std::size_t>(j)]) {
      CompositeDecodeResult r;
      r.status = CompositeDecodeResult::Status::ChannelMismatch;
      r.failed_shot = j;
      return r;
    }
    ok.codewords.push_back(std::move(shots[static_cast<std::size_t>(j)].xhat));
  }
  return ok;
}

CompositeCode mrd_composite(const ChainRing& ring, int n, const SShape& lambda,
                            const SShape& beta, int shots) {
  if (lambda.s() != ring.s() || beta.s() != ring.s())
    throw std::invalid_argument("shape length must equal ring index");
  if (lambda[0] < n)
    throw std::invalid_argument("mrd composite needs lambda_0 >= n");
  if (beta.last() > n) throw std::invalid_argument("deficiency exceeds row count");
  std::vector<std::shared_ptr<const ComponentCode>> comps;
  for (int i = 0; i < ring.s(); ++i)
    comps.push_back(std::make_shared<GabidulinCode>(ring.residue_field(), n, lambda[i],
                                                    n - beta[i]));
  return CompositeCode(ring, n, lambda, std::move(comps), shots);
}

namespace {

std::string key_of(const RingMatrix& m) {
  std::string k;
  k.reserve(static_cast<std::size_t>(m.rows() * m.cols()) * sizeof(std::uint64_t));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::uint64_t v = m(i, j);
      k.append(reinterpret_cast<const char*>(&v), sizeof v);
    }
  return k;
}

}  // namespace

bool shape_deficiency_correcting(const CompositeCode& code, const SShape& beta,
                                 DeficiencyCheckMode mode, int m_rows, std::uint64_t guard) {
  const ChainRing& R = code.ring();
  const int n = code.n();
  if (beta.s() != R.s()) throw std::invalid_argument("shape length must equal ring index");
  if (beta.last() > n) throw std::invalid_argument("deficiency exceeds row count");
  std::uint64_t size = code.message_space_size();
  if (size > guard) throw GuardExceeded("codebook too large to enumerate");
  std::vector<RingMatrix> words;
  words.reserve(static_cast<std::size_t>(size));
  for (std::uint64_t i = 0; i < size; ++i)
    words.push_back(code.encode(code.message_from_index(i))[0]);

  if (mode == DeficiencyCheckMode::Criterion) {
    // Difference-shape characterization: a deficiency-beta transfer exists
    // that merges two codewords iff their difference has shape <= beta.
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        if (shape_leq(shape_of(words[i] - words[j]), beta)) return false;
    return true;
  }

  const int m = m_rows < 0 ? n : m_rows;
  std::uint64_t nmat = 1;
  for (int e = 0; e < m * n; ++e) {
    if (nmat > guard / R.order()) throw GuardExceeded("transfer space too large to enumerate");
    nmat *= R.order();
  }
  SShape min_shape = scalar_sub_shape(n, beta);
  for (std::uint64_t idx = 0; idx < nmat; ++idx) {
    RingMatrix A(R, m, n);
    std::uint64_t rest = idx;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        A(r, c) = rest % R.order();
        rest /= R.order();
      }
    if (!shape_leq(min_shape, shape_of(A))) continue;
    std::unordered_set<std::string> images;
    for (const RingMatrix& w : words)
      if (!images.insert(key_of(A * w)).second) return false;
  }
  return true;
}

}  // namespace chainmmc
