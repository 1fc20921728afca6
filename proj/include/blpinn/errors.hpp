#ifndef BLPINN_ERRORS_HPP
#define BLPINN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blpinn {

// Forcing data fails the well-definedness scan (radicand <= 0 somewhere).
struct DataConditionViolation : std::runtime_error {
  explicit DataConditionViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Layer amplitude vanishes; the normalized corrector is undefined.
struct DegenerateCorrector : std::runtime_error {
  explicit DegenerateCorrector(const std::string& what)
      : std::runtime_error(what) {}
};

struct NewtonDivergence : std::runtime_error {
  explicit NewtonDivergence(const std::string& what)
      : std::runtime_error(what) {}
};

struct MeshTooCoarse : std::runtime_error {
  explicit MeshTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroTruthNorm : std::runtime_error {
  explicit ZeroTruthNorm(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteLoss : std::runtime_error {
  NonFiniteLoss(const std::string& what, long iteration)
      : std::runtime_error(what), iteration(iteration) {}
  long iteration;
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blpinn

#endif  // BLPINN_ERRORS_HPP
