#pragma once

#include <functional>

namespace planarvac {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated local error estimate
};

// Adaptive Gauss-Kronrod 15(7) on [lo, hi]. Throws QuadratureError when the
// local error cannot be pushed below max(abs_tol, rel_tol*|I|) within the
// subdivision budget. `where` names the caller for the error message.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi, double abs_tol,
                              double rel_tol, const char* where);

}  // namespace planarvac
