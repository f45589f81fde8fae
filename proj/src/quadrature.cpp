#include "planarvac/quadrature.hpp"

#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "planarvac/errors.hpp"

namespace planarvac {

namespace {

// 15-point Kronrod extension of 7-point Gauss (positive abscissae).
const double kXgk[8] = {0.9914553711208126, 0.9491079123427585,
                        0.8648644233597691, 0.7415311855993944,
                        0.5860872354676911, 0.4058451513773972,
                        0.2077849550078985, 0.0};
const double kWgk[8] = {0.2293532201052922e-1, 0.6309209262997855e-1,
                        0.1047900103222502,    0.1406532597155259,
                        0.1690047266392679,    0.1903505780647854,
                        0.2044329400752989,    0.2094821410847278};
const double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                       0.3818300505051189, 0.4179591836734694};

struct Segment {
  double lo, hi, val, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fs = f(c - x) + f(c + x);
    kron += kWgk[j] * fs;
    if (j % 2 == 1) gauss += kWg[j / 2] * fs;
  }
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.val = kron * h;
  s.err = std::abs((kron - gauss) * h);
  return s;
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi, double abs_tol,
                              double rel_tol, const char* where) {
  if (!(hi > lo)) throw DomainError("integrate_adaptive: empty interval");
  std::priority_queue<Segment> queue;
  queue.push(gk15(f, lo, hi));
  double total_val = queue.top().val;
  double total_err = queue.top().err;
  int splits = 0;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total_val))) {
    if (++splits > 4000)
      throw QuadratureError(std::string(where) +
                            ": refinement budget exhausted");
    Segment worst = queue.top();
    queue.pop();
    total_val -= worst.val;
    total_err -= worst.err;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw QuadratureError(std::string(where) +
                            ": interval below machine resolution");
    Segment left = gk15(f, worst.lo, mid);
    Segment right = gk15(f, mid, worst.hi);
    total_val += left.val + right.val;
    total_err += left.err + right.err;
    queue.push(left);
    queue.push(right);
  }
  return {total_val, total_err};
}

}  // namespace planarvac
