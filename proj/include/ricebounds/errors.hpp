#ifndef RICEBOUNDS_ERRORS_HPP
#define RICEBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ricebounds {

/// Argument outside the domain of the requested representation.
class DomainError : public std::domain_error {
public:
   using std::domain_error::domain_error;
};

/// Base for failures of the numerics themselves (tolerance, overflow, divergence).
class NumericalError : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
};

class OverflowError : public NumericalError {
public:
   using NumericalError::NumericalError;
};

/// A series did not settle within its term cap, or produced a non-finite partial sum.
class ConvergenceError : public NumericalError {
public:
   using NumericalError::NumericalError;
};

/// The adaptive integrator could not meet the requested tolerance.
/// Carries the best estimate reached and its error estimate.
class QuadratureError : public NumericalError {
public:
   QuadratureError(const std::string &what, double best_estimate, double est_error)
       : NumericalError(what), best_estimate_(best_estimate), est_error_(est_error)
   {
   }

   double best_estimate() const noexcept { return best_estimate_; }
   double est_error() const noexcept { return est_error_; }

private:
   double best_estimate_;
   double est_error_;
};

} // namespace ricebounds

#endif // RICEBOUNDS_ERRORS_HPP
