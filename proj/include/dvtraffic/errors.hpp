#ifndef DVTRAFFIC_ERRORS_HPP
#define DVTRAFFIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dvtraffic {

/// Base class for every error raised by the solver library.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A density too close to 1 for 1/(1-rho) to be evaluated.
class SingularityError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A state or argument outside its admissible domain.
class DomainError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A fundamental diagram that fails validation.
class DiagramError : public SolverError {
 public:
  using SolverError::SolverError;
};

class RootBracketError : public SolverError {
 public:
  RootBracketError(const std::string& what, double lo, double hi)
      : SolverError(what + " (bracket [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "])"),
        lo_(lo),
        hi_(hi) {}

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Zero-strength wave where a wave speed was requested.
class DegenerateWaveError : public SolverError {
 public:
  using SolverError::SolverError;
};

class CflError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace dvtraffic

#endif  // DVTRAFFIC_ERRORS_HPP
