#include "chainmmc/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "chainmmc/errors.hpp"

namespace chainmmc {
namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> decode_digits(std::uint64_t code, std::uint64_t b, int len) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = code % b;
    code /= b;
  }
  return out;
}

std::uint64_t encode_digits(const std::vector<std::uint64_t>& c, std::uint64_t b) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * b + c[i];
  return code;
}

}  // namespace

struct FiniteField::Impl {
  std::uint32_t characteristic = 0;
  std::uint64_t order = 0;
  int degree = 1;  // over the immediate base
  std::shared_ptr<const Impl> base;        // null for prime fields
  std::vector<std::uint64_t> modulus;      // empty for prime fields
  std::vector<std::uint32_t> mul_table;    // filled when order <= kTableMax
  std::vector<std::uint32_t> inv_table;

  static constexpr std::uint64_t kTableMax = 256;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (!base) return (a + b) % order;
    std::uint64_t bo = base->order;
    auto x = decode_digits(a, bo, degree);
    auto y = decode_digits(b, bo, degree);
    for (int i = 0; i < degree; ++i)
      x[static_cast<std::size_t>(i)] = base->add(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
    return encode_digits(x, bo);
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (!base) return a == 0 ? 0 : order - a;
    std::uint64_t bo = base->order;
    auto x = decode_digits(a, bo, degree);
    for (auto& d : x) d = base->neg(d);
    return encode_digits(x, bo);
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
    if (!base) return (a * b) % order;
    std::uint64_t bo = base->order;
    auto x = decode_digits(a, bo, degree);
    auto y = decode_digits(b, bo, degree);
    // Convolution followed by reduction; the modulus is monic.
    std::vector<std::uint64_t> c(static_cast<std::size_t>(2 * degree - 1), 0);
    for (int i = 0; i < degree; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < degree; ++j) {
        auto& slot = c[static_cast<std::size_t>(i + j)];
        slot = base->add(slot, base->mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]));
      }
    }
    for (int i = 2 * degree - 2; i >= degree; --i) {
      std::uint64_t lead = c[static_cast<std::size_t>(i)];
      if (lead == 0) continue;
      c[static_cast<std::size_t>(i)] = 0;
      for (int j = 0; j < degree; ++j) {
        auto& slot = c[static_cast<std::size_t>(i - degree + j)];
        slot = base->sub(slot, base->mul(lead, modulus[static_cast<std::size_t>(j)]));
      }
    }
    c.resize(static_cast<std::size_t>(degree));
    return encode_digits(c, bo);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!mul_table.empty()) return mul_table[static_cast<std::size_t>(a * order + b)];
    return mul_raw(a, b);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("field inverse of zero");
    if (!inv_table.empty()) return inv_table[static_cast<std::size_t>(a)];
    return pow(a, order - 2);
  }

  void build_tables() {
    if (order <= kTableMax) {
      mul_table.resize(static_cast<std::size_t>(order * order));
      for (std::uint64_t a = 0; a < order; ++a)
        for (std::uint64_t b = 0; b < order; ++b)
          mul_table[static_cast<std::size_t>(a * order + b)] =
              static_cast<std::uint32_t>(mul_raw(a, b));
      inv_table.resize(static_cast<std::size_t>(order));
      inv_table[0] = 0;
      for (std::uint64_t a = 1; a < order; ++a)
        inv_table[static_cast<std::size_t>(a)] = static_cast<std::uint32_t>(pow(a, order - 2));
    }
  }
};

namespace {

using Impl = FiniteField::Impl;
using Poly = std::vector<std::uint64_t>;  // coefficients low to high, base codes

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, const Impl& K) {
  // m monic of degree >= 1.
  int dm = static_cast<int>(m.size()) - 1;
  poly_trim(f);
  while (static_cast<int>(f.size()) - 1 >= dm) {
    std::uint64_t lead = f.back();
    int shift = static_cast<int>(f.size()) - 1 - dm;
    if (lead != 0)
      for (int j = 0; j <= dm; ++j) {
        auto& slot = f[static_cast<std::size_t>(j + shift)];
        slot = K.sub(slot, K.mul(lead, m[static_cast<std::size_t>(j)]));
      }
    f.pop_back();
    poly_trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Impl& K) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
  }
  return poly_mod(std::move(c), m, K);
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& m, const Impl& K) {
  Poly r{1};
  a = poly_mod(std::move(a), m, K);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, m, K);
    a = poly_mulmod(a, a, m, K);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const Impl& K) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Make b monic before reducing so poly_mod applies.
    std::uint64_t li = K.inv(b.back());
    for (auto& c : b) c = K.mul(c, li);
    Poly r = poly_mod(a, b, K);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree m >= 1 over the field K. True iff f has no irreducible
// factor of degree <= m/2, which for monic f is equivalent to irreducibility.
bool poly_irreducible(const Poly& f, const Impl& K) {
  int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  Poly x{0, 1};
  Poly t = x;
  for (int d = 1; d <= m / 2; ++d) {
    t = poly_powmod(std::move(t), K.order, f, K);  // now t = x^(q^d) mod f
    Poly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = K.sub(diff[1], 1);
    poly_trim(diff);
    Poly g = poly_gcd(f, std::move(diff), K);
    if (static_cast<int>(g.size()) - 1 != 0) return false;
  }
  return true;
}

Poly canonical_modulus(const Impl& K, int degree) {
  // Least code of the non-leading coefficient vector wins. The search space
  // is tiny for the orders this library targets.
  std::uint64_t bound = 1;
  for (int i = 0; i < degree; ++i) {
    if (bound > (std::uint64_t(1) << 40) / K.order)
      throw GuardExceeded("canonical modulus search space too large");
    bound *= K.order;
  }
  for (std::uint64_t code = 0; code < bound; ++code) {
    Poly f = decode_digits(code, K.order, degree);
    f.push_back(1);
    if (poly_irreducible(f, K)) return f;
  }
  throw VerificationError("no irreducible polynomial found");  // unreachable
}

}  // namespace

FiniteField FiniteField::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw SpecError("field characteristic must be prime, got " + std::to_string(p));
  auto impl = std::make_shared<Impl>();
  impl->characteristic = p;
  impl->order = p;
  impl->degree = 1;
  impl->build_tables();
  return FiniteField(std::move(impl));
}

FiniteField FiniteField::extension(const FiniteField& base, int degree,
                                   std::vector<std::uint64_t> modulus) {
  if (degree < 2) throw SpecError("extension degree must be at least 2");
  if (modulus.size() != static_cast<std::size_t>(degree) + 1 || modulus.back() != 1)
    throw SpecError("defining polynomial must be monic of the extension degree");
  for (std::uint64_t c : modulus)
    if (c >= base.order()) throw SpecError("defining polynomial coefficient out of range");
  std::uint64_t order = 1;
  for (int i = 0; i < degree; ++i) {
    if (order > (std::uint64_t(1) << 62) / base.order())
      throw GuardExceeded("field order exceeds representable range");
    order *= base.order();
  }
  Poly f(modulus.begin(), modulus.end());
  if (!poly_irreducible(f, *base.impl_))
    throw SpecError("defining polynomial is reducible");
  auto impl = std::make_shared<Impl>();
  impl->characteristic = base.characteristic();
  impl->order = order;
  impl->degree = degree;
  impl->base = base.impl_;
  impl->modulus = std::move(modulus);
  impl->build_tables();
  return FiniteField(std::move(impl));
}

FiniteField FiniteField::extension(const FiniteField& base, int degree) {
  if (degree < 2) throw SpecError("extension degree must be at least 2");
  Poly f = canonical_modulus(*base.impl_, degree);
  return extension(base, degree, std::vector<std::uint64_t>(f.begin(), f.end()));
}

std::uint64_t FiniteField::order() const { return impl_->order; }
std::uint32_t FiniteField::characteristic() const { return impl_->characteristic; }
bool FiniteField::is_prime_field() const { return impl_->base == nullptr; }
int FiniteField::degree() const { return impl_->degree; }

FiniteField FiniteField::base() const {
  return FiniteField(impl_->base ? impl_->base : impl_);
}

const std::vector<std::uint64_t>& FiniteField::modulus() const { return impl_->modulus; }

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const { return impl_->add(a, b); }
std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const { return impl_->sub(a, b); }
std::uint64_t FiniteField::neg(std::uint64_t a) const { return impl_->neg(a); }
std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const { return impl_->mul(a, b); }
std::uint64_t FiniteField::inv(std::uint64_t a) const { return impl_->inv(a); }
std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const { return impl_->pow(a, e); }

std::uint64_t FiniteField::frobenius(std::uint64_t a) const {
  std::uint64_t b = impl_->base ? impl_->base->order : impl_->order;
  return impl_->pow(a, b);
}

std::uint64_t FiniteField::coord(std::uint64_t a, int i) const {
  if (i < 0 || i >= impl_->degree) throw std::invalid_argument("coordinate index out of range");
  std::uint64_t b = impl_->base ? impl_->base->order : impl_->order;
  for (int k = 0; k < i; ++k) a /= b;
  return a % b;
}

std::uint64_t FiniteField::from_coords(const std::vector<std::uint64_t>& c) const {
  if (c.size() > static_cast<std::size_t>(impl_->degree))
    throw std::invalid_argument("too many coordinates");
  std::uint64_t b = impl_->base ? impl_->base->order : impl_->order;
  for (std::uint64_t v : c)
    if (v >= b) throw std::invalid_argument("coordinate out of range");
  return encode_digits(c, b);
}

std::uint64_t FiniteField::gen() const {
  if (impl_->degree < 2) throw std::invalid_argument("prime field has no defining root");
  return impl_->base->order;
}

bool FiniteField::same_field(const FiniteField& other) const {
  const Impl* a = impl_.get();
  const Impl* b = other.impl_.get();
  while (a && b) {
    if (a == b) return true;
    if (a->order != b->order || a->degree != b->degree || a->modulus != b->modulus) return false;
    a = a->base.get();
    b = b->base.get();
  }
  return a == b;
}

std::string FiniteField::to_string() const { return "F" + std::to_string(impl_->order); }

}  // namespace chainmmc
