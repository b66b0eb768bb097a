#ifndef QENT_ERRORS_HPP
#define QENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

/// Which density-matrix invariant failed and by how much.
struct DensityViolation {
  enum class Kind { Hermiticity, Trace, Positivity };
  Kind kind;
  double amount;
  std::string describe() const;
};

class InvalidDensity : public Error {
 public:
  explicit InvalidDensity(const DensityViolation& v) : Error(v.describe()), violation_(v) {}
  const DensityViolation& violation() const { return violation_; }

 private:
  DensityViolation violation_;
};

/// supp(sigma) is not contained in supp(rho); the relative entropy is infinite.
class SupportViolation : public Error {
 public:
  using Error::Error;
};

/// A family parameter breaks the family's admissible range.
class FamilyConstraint : public Error {
 public:
  FamilyConstraint(std::string parameter, const std::string& what)
      : Error(what), parameter_(std::move(parameter)) {}
  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

class RootNotBracketed : public Error {
 public:
  using Error::Error;
};

/// Malformed state file or family spec.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qent

#endif  // QENT_ERRORS_HPP
