#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace dispwave {

// Natural cubic spline through strictly increasing abscissae.
// Provides C2 interpolation with first and second derivatives.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double value(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;

    std::size_t size() const { return x_.size(); }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

  private:
    std::size_t segment(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at the knots
};

// Composite Simpson integral of f over [a, b] with n subintervals (n even).
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n);

// Root of a monotone function on [lo, hi] by bisection; |f(root)| driven
// below ftol or the bracket below xtol, whichever comes first.
double bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                       double ftol, double xtol);

// Least-squares straight line through (x_i, y_i); returns {slope, intercept}.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Runs fn(i) for i in [0, n), possibly on several threads.  The thread count
// is min(hardware_concurrency, DISPWAVE_MAX_THREADS if set).  fn must only
// write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::size_t max_threads();

}  // namespace dispwave
