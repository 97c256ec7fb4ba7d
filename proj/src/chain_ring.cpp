#include "chainmmc/chain_ring.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "chainmmc/errors.hpp"

namespace chainmmc {

namespace {

// q^s must stay within this bound so element codes and enumeration sizes
// remain comfortably exact.
constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 31;

std::uint64_t parse_u64(const std::string& tok, const std::string& what) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw SpecError("bad " + what + " '" + tok + "'");
  }
  if (pos != tok.size()) throw SpecError("bad " + what + " '" + tok + "'");
  return v;
}

}  // namespace

struct ChainRing::Impl {
  RingFamily family;
  std::uint32_t p;
  int r;
  int s;
  std::uint64_t q;
  std::uint64_t order;
  FiniteField residue;
  std::vector<std::uint64_t> q_pow;  // q^0 .. q^s

  Impl(RingFamily fam, std::uint32_t p_, int r_, int s_, FiniteField f)
      : family(fam), p(p_), r(r_), s(s_), q(f.order()), order(1), residue(std::move(f)) {
    q_pow.resize(static_cast<std::size_t>(s) + 1);
    q_pow[0] = 1;
    for (int i = 1; i <= s; ++i) {
      if (q_pow[static_cast<std::size_t>(i - 1)] > kMaxOrder / q)
        throw SpecError("ring order q^s exceeds 2^31");
      q_pow[static_cast<std::size_t>(i)] = q_pow[static_cast<std::size_t>(i - 1)] * q;
    }
    order = q_pow[static_cast<std::size_t>(s)];
  }
};

ChainRing ChainRing::integer_mod(std::uint32_t p, int s) {
  if (s < 1) throw SpecError("nilpotency index must be at least 1");
  FiniteField f = FiniteField::prime(p);
  return ChainRing(std::make_shared<Impl>(RingFamily::IntegerMod, p, 1, s, std::move(f)));
}

ChainRing ChainRing::poly_nilpotent(std::uint32_t p, int r, int s) {
  if (s < 1) throw SpecError("nilpotency index must be at least 1");
  if (r < 1) throw SpecError("residue field degree must be at least 1");
  FiniteField fp = FiniteField::prime(p);
  FiniteField f = (r == 1) ? fp : FiniteField::extension(fp, r);
  return ChainRing(std::make_shared<Impl>(RingFamily::PolyNilpotent, p, r, s, std::move(f)));
}

ChainRing ChainRing::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() == 3 && parts[0] == "z") {
    std::uint64_t p = parse_u64(parts[1], "prime");
    std::uint64_t s = parse_u64(parts[2], "nilpotency index");
    if (p > 0xffffffffULL) throw SpecError("prime out of range");
    return integer_mod(static_cast<std::uint32_t>(p), static_cast<int>(s));
  }
  if (parts.size() == 4 && parts[0] == "fqu") {
    std::uint64_t p = parse_u64(parts[1], "prime");
    std::uint64_t r = parse_u64(parts[2], "field degree");
    std::uint64_t s = parse_u64(parts[3], "nilpotency index");
    if (p > 0xffffffffULL) throw SpecError("prime out of range");
    return poly_nilpotent(static_cast<std::uint32_t>(p), static_cast<int>(r),
                          static_cast<int>(s));
  }
  throw SpecError("bad ring text '" + text + "' (expected z:p:s or fqu:p:r:s)");
}

std::string ChainRing::to_string() const {
  if (impl_->family == RingFamily::IntegerMod)
    return "z:" + std::to_string(impl_->p) + ":" + std::to_string(impl_->s);
  return "fqu:" + std::to_string(impl_->p) + ":" + std::to_string(impl_->r) + ":" +
         std::to_string(impl_->s);
}

RingFamily ChainRing::family() const { return impl_->family; }
std::uint32_t ChainRing::p() const { return impl_->p; }
int ChainRing::r() const { return impl_->r; }
int ChainRing::s() const { return impl_->s; }
std::uint64_t ChainRing::q() const { return impl_->q; }
std::uint64_t ChainRing::order() const { return impl_->order; }
const FiniteField& ChainRing::residue_field() const { return impl_->residue; }

std::uint64_t ChainRing::add(std::uint64_t a, std::uint64_t b) const {
  if (impl_->family == RingFamily::IntegerMod) return (a + b) % impl_->order;
  const FiniteField& F = impl_->residue;
  std::uint64_t out = 0;
  for (int i = impl_->s; i-- > 0;) {
    std::uint64_t qi = impl_->q_pow[static_cast<std::size_t>(i)];
    out = out * impl_->q + F.add((a / qi) % impl_->q, (b / qi) % impl_->q);
  }
  return out;
}

std::uint64_t ChainRing::neg(std::uint64_t a) const {
  if (impl_->family == RingFamily::IntegerMod) return a == 0 ? 0 : impl_->order - a;
  const FiniteField& F = impl_->residue;
  std::uint64_t out = 0;
  for (int i = impl_->s; i-- > 0;)
    out = out * impl_->q + F.neg((a / impl_->q_pow[static_cast<std::size_t>(i)]) % impl_->q);
  return out;
}

std::uint64_t ChainRing::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t ChainRing::mul(std::uint64_t a, std::uint64_t b) const {
  if (impl_->family == RingFamily::IntegerMod) return (a * b) % impl_->order;
  const FiniteField& F = impl_->residue;
  const int s = impl_->s;
  // Polynomial product in u truncated at u^s; u^s = 0 absorbs the tail.
  std::uint64_t out = 0;
  for (int k = s; k-- > 0;) {
    std::uint64_t ck = 0;
    for (int i = 0; i <= k; ++i) {
      std::uint64_t ai = (a / impl_->q_pow[static_cast<std::size_t>(i)]) % impl_->q;
      if (ai == 0) continue;
      std::uint64_t bj = (b / impl_->q_pow[static_cast<std::size_t>(k - i)]) % impl_->q;
      ck = F.add(ck, F.mul(ai, bj));
    }
    out = out * impl_->q + ck;
  }
  return out;
}

bool ChainRing::is_unit(std::uint64_t a) const { return a % impl_->q != 0; }

std::uint64_t ChainRing::inv_unit(std::uint64_t a) const {
  if (!is_unit(a)) throw std::invalid_argument("ring inverse of a non-unit");
  // Newton lifting: the defect 1 - a*y squares each step, so the valuation
  // of the error doubles and ceil(log2 s) steps reach pi^s = 0.
  std::uint64_t y = lift(impl_->residue.inv(residue(a)));
  const std::uint64_t one = 1;
  for (int reach = 1; reach < impl_->s; reach *= 2)
    y = mul(y, sub(add(one, one), mul(a, y)));
  return y;
}

std::uint64_t ChainRing::pi() const { return impl_->s == 1 ? 0 : impl_->q; }

std::uint64_t ChainRing::pi_pow(int i) const {
  if (i < 0) throw std::invalid_argument("negative power of pi");
  if (i >= impl_->s) return 0;
  return impl_->q_pow[static_cast<std::size_t>(i)];
}

std::uint64_t ChainRing::mul_pi_pow(std::uint64_t a, int i) const {
  if (i < 0) throw std::invalid_argument("negative power of pi");
  if (i >= impl_->s) return 0;
  // Multiplying by pi^i shifts the digit expansion up by i in both families.
  return (a * impl_->q_pow[static_cast<std::size_t>(i)]) % impl_->order;
}

std::uint64_t ChainRing::digit(std::uint64_t a, int i) const {
  if (i < 0 || i >= impl_->s) throw std::invalid_argument("digit index out of range");
  return (a / impl_->q_pow[static_cast<std::size_t>(i)]) % impl_->q;
}

std::uint64_t ChainRing::from_digits(const std::vector<std::uint64_t>& d) const {
  if (d.size() > static_cast<std::size_t>(impl_->s))
    throw std::invalid_argument("too many digits");
  std::uint64_t out = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= impl_->q) throw std::invalid_argument("digit out of range");
    out = out * impl_->q + d[i];
  }
  return out;
}

std::uint64_t ChainRing::truncate(std::uint64_t a, int i) const {
  if (i < 0 || i > impl_->s) throw std::invalid_argument("truncation level out of range");
  return a % impl_->q_pow[static_cast<std::size_t>(i)];
}

int ChainRing::valuation(std::uint64_t a) const {
  if (a == 0) return impl_->s;
  int v = 0;
  while (a % impl_->q == 0) {
    a /= impl_->q;
    ++v;
  }
  return v;
}

std::uint64_t ChainRing::residue(std::uint64_t a) const { return a % impl_->q; }

std::uint64_t ChainRing::lift(std::uint64_t field_code) const {
  if (field_code >= impl_->q) throw std::invalid_argument("residue code out of range");
  return field_code;
}

std::string ChainRing::element_to_string(std::uint64_t a) const {
  if (impl_->family == RingFamily::IntegerMod) return std::to_string(a);
  std::string out;
  for (int i = 0; i < impl_->s; ++i) {
    if (i) out += ',';
    out += std::to_string(digit(a, i));
  }
  return out;
}

std::uint64_t ChainRing::element_parse(const std::string& text) const {
  if (text.empty()) throw SpecError("empty ring element token");
  if (impl_->family == RingFamily::IntegerMod) {
    std::uint64_t v = parse_u64(text, "ring element");
    if (v >= impl_->order) throw SpecError("ring element " + text + " out of range");
    return v;
  }
  std::vector<std::uint64_t> digits;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) digits.push_back(parse_u64(tok, "ring element digit"));
  if (digits.size() > static_cast<std::size_t>(impl_->s))
    throw SpecError("ring element '" + text + "' has more digits than the ring");
  for (std::uint64_t d : digits)
    if (d >= impl_->q) throw SpecError("ring element digit out of range in '" + text + "'");
  std::uint64_t out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * impl_->q + digits[i];
  return out;
}

bool ChainRing::same_ring(const ChainRing& other) const {
  return impl_->family == other.impl_->family && impl_->p == other.impl_->p &&
         impl_->r == other.impl_->r && impl_->s == other.impl_->s;
}

}  // namespace chainmmc
