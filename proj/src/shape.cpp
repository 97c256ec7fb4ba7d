#include "chainmmc/shape.hpp"

#include <numeric>
#include <sstream>

#include "chainmmc/errors.hpp"

namespace chainmmc {

SShape::SShape(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw SpecError("shape must have at least one entry");
  int prev = 0;
  for (int v : e_) {
    if (v < 0) throw SpecError("shape entries must be non-negative");
    if (v < prev) throw SpecError("shape entries must be non-decreasing");
    prev = v;
  }
}

SShape SShape::constant(int m, int s) {
  if (s < 1) throw SpecError("shape length must be positive");
  if (m < 0) throw SpecError("shape entries must be non-negative");
  return SShape(std::vector<int>(static_cast<std::size_t>(s), m));
}

SShape SShape::parse(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw SpecError("bad shape entry '" + tok + "' in '" + text + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size())
      throw SpecError("bad shape entry '" + tok + "' in '" + text + "'");
    entries.push_back(v);
  }
  if (entries.empty()) throw SpecError("empty shape text '" + text + "'");
  return SShape(std::move(entries));
}

int SShape::size() const { return std::accumulate(e_.begin(), e_.end(), 0); }

std::string SShape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e_[i]);
  }
  return out;
}

static void require_same_length(const SShape& a, const SShape& b) {
  if (a.s() != b.s()) throw SpecError("shape length mismatch");
}

bool shape_leq(const SShape& a, const SShape& b) {
  require_same_length(a, b);
  for (int i = 0; i < a.s(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

SShape shape_add(const SShape& a, const SShape& b) {
  require_same_length(a, b);
  std::vector<int> e(static_cast<std::size_t>(a.s()));
  for (int i = 0; i < a.s(); ++i) e[static_cast<std::size_t>(i)] = a[i] + b[i];
  return SShape(std::move(e));
}

SShape shape_sub_scalar(const SShape& mu, int n) {
  if (n < 0 || n > mu[0]) throw SpecError("shape_sub_scalar: need 0 <= n <= mu_0");
  std::vector<int> e(static_cast<std::size_t>(mu.s()));
  for (int i = 0; i < mu.s(); ++i) e[static_cast<std::size_t>(i)] = mu[i] - n;
  return SShape(std::move(e));
}

SShape scalar_sub_shape(int n, const SShape& mu) {
  if (n < mu.last()) throw SpecError("scalar_sub_shape: need n >= mu_{s-1}");
  std::vector<int> e(static_cast<std::size_t>(mu.s()));
  // Reversal keeps the result non-decreasing.
  for (int i = 0; i < mu.s(); ++i)
    e[static_cast<std::size_t>(i)] = n - mu[mu.s() - 1 - i];
  return SShape(std::move(e));
}

int column_level(const SShape& lambda, int c) {
  if (c < 0 || c >= lambda.last())
    throw SpecError("column_level: column index out of range");
  for (int i = 0; i < lambda.s(); ++i)
    if (c < lambda[i]) return i;
  return lambda.s();  // unreachable given the range check
}

}  // namespace chainmmc
