#ifndef ORDQ_ERRORS_HPP
#define ORDQ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ordq {

// Bad argument values (NaN inputs, quantile outside (0,1), ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Invariant violations on domain objects (datasets, draw stores, shifts).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Out-of-range intermediate (exp overflow in the cut-point map).
struct RangeError : std::range_error {
  using std::range_error::range_error;
};

// Cholesky failure; `origin` names the module that built the matrix.
struct SingularityError : std::runtime_error {
  std::string origin;
  explicit SingularityError(const std::string& origin_, const std::string& what_)
      : std::runtime_error(what_ + " [matrix built by: " + origin_ + "]"),
        origin(origin_) {}
};

// Optimizer gave up; carries the last iterate for postmortems.
struct ConvergenceError : std::runtime_error {
  std::vector<double> last_iterate;
  double last_objective;
  ConvergenceError(const std::string& what_, std::vector<double> iterate,
                   double objective)
      : std::runtime_error(what_),
        last_iterate(std::move(iterate)),
        last_objective(objective) {}
};

// Survey ingestion problems.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a chain reaches a non-finite log-likelihood; carries the sweep.
struct ChainError : std::runtime_error {
  long sweep;
  ChainError(const std::string& what_, long sweep_)
      : std::runtime_error(what_ + " (sweep " + std::to_string(sweep_) + ")"),
        sweep(sweep_) {}
};

}  // namespace ordq

#endif  // ORDQ_ERRORS_HPP
