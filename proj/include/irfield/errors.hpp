#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace irfield {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument outside a function's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// Invalid or incomplete run configuration (CLI surface).
struct ConfigError : Error {
  using Error::Error;
};

// Evaluation budget exhausted before the tolerance was met.
struct NonConvergence : Error {
  using Error::Error;
};

// Integrand returned NaN or infinity; carries the offending abscissa.
struct NonFiniteEvaluation : Error {
  explicit NonFiniteEvaluation(double x)
      : Error("non-finite integrand value at x = " + std::to_string(x)), where(x) {}
  double where;
};

// One or more scale inequalities of the model are broken; lists all of them.
struct HierarchyViolation : Error {
  explicit HierarchyViolation(std::vector<std::string> violated)
      : Error(join(violated)), violations(std::move(violated)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "hierarchy violated:";
    for (const auto& name : v) s += " " + name;
    return s;
  }
};

// The smeared denominator only supports a source at rest, q = (m, 0, 0, 0).
struct RestFrameRequired : Error {
  using Error::Error;
};

// Enumeration size beyond the supported factorial range.
struct TooLarge : Error {
  using Error::Error;
};

// A permutation prefix sum vanishes at epsilon = 0; the weights are singular.
struct SingularPrefix : Error {
  using Error::Error;
};

// Momentum transfer outside the small-|p| validity window of the form factor.
struct NonrelativisticViolation : Error {
  using Error::Error;
};

// Output file could not be written.
struct IOError : Error {
  using Error::Error;
};

}  // namespace irfield
