#ifndef SEQTAG_LBFGS_HPP
#define SEQTAG_LBFGS_HPP

#include <functional>
#include <vector>

#include "seqtag/error.hpp"

namespace seqtag {

// Smooth objective callback: fills `grad` (same size as x) and returns
// f(x). The L1 term, when any, belongs to the optimizer, not to f.
using SmoothObjective =
    std::function<double(const std::vector<double>& x, std::vector<double>& grad)>;

struct LbfgsConfig {
  double c1 = 0.0;  // L1 coefficient; > 0 switches to the orthant-wise variant
  int max_iterations = 200;
  int memory = 10;
  double grad_tolerance = 1e-5;

  void validate() const;
};

struct LbfgsTrace {
  // Penalized objective at x0 and after every accepted step;
  // non-increasing along accepted iterates.
  std::vector<double> objective;
  int iterations = 0;  // accepted steps
  bool converged = false;
  double final_objective = 0.0;
  double final_grad_norm = 0.0;  // inf-norm of the (pseudo-)gradient
};

struct LbfgsResult {
  std::vector<double> x;
  LbfgsTrace trace;
};

// Line search exhausted its 50 halvings; carries the best point found.
class StalledError : public NumericError {
 public:
  StalledError(const std::string& msg, std::vector<double> best_x,
               double best_value)
      : NumericError(msg), best_x_(std::move(best_x)), best_value_(best_value) {}

  const std::vector<double>& best_x() const { return best_x_; }
  double best_value() const { return best_value_; }

 private:
  std::vector<double> best_x_;
  double best_value_;
};

// Minimizes f(x) + c1*||x||_1 by limited-memory BFGS (two-loop
// recursion, Armijo backtracking with c=1e-4 and shrink 0.5). With
// c1 > 0 runs OWL-QN: pseudo-gradient, orthant projection of the search
// direction and of every trial point. Stops when the (pseudo-)gradient
// inf-norm is <= tolerance, or its 2-norm relative to max(1, ||x||_2)
// is, or after max_iterations accepted steps.
//
// Throws NumericError on a non-finite value/gradient (message carries
// the iteration index) and StalledError when a line search fails.
LbfgsResult lbfgs_minimize(const SmoothObjective& f, std::vector<double> x0,
                           const LbfgsConfig& config);

}  // namespace seqtag

#endif  // SEQTAG_LBFGS_HPP
