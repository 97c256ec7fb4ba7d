#ifndef CHAINMMC_ERRORS_HPP
#define CHAINMMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainmmc {

// Bad user-facing input: malformed ring/shape/matrix text, invalid experiment
// configuration. CLI maps this to exit code 2.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact/exhaustive computation was requested above the enumeration guard.
// CLI maps this to exit code 3.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal self-check failed (e.g. a factorization did not multiply back).
// CLI maps this to exit code 4.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A linear system that the channel law promises to be solvable turned out not
// to be: no input matrix is compatible with the given output.
class InconsistentSystem : public std::runtime_error {
 public:
  explicit InconsistentSystem(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chainmmc

#endif
