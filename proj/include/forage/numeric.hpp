#ifndef FORAGE_NUMERIC_HPP
#define FORAGE_NUMERIC_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "forage/errors.hpp"

namespace forage {

// Compensated (Kahan) accumulator for long sums.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// expm1(z)/z, continuous through z = 0.
inline double expm1_over(double z) {
  if (std::abs(z) < 1e-300) return 1.0;
  return std::expm1(z) / z;
}

// (1 - e^{-k h}) / k, the integral of e^{-k s} over [0, h]; k may be 0.
inline double decay_integral(double k, double h) {
  return h * expm1_over(-k * h);
}

// One classical RK4 step for dy/dt = f(t, y).
template <std::size_t N, class F>
std::array<double, N> rk4_step(const F& f, double t,
                               const std::array<double, N>& y, double h) {
  const auto k1 = f(t, y);
  std::array<double, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  const auto k2 = f(t + 0.5 * h, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  const auto k3 = f(t + 0.5 * h, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
  const auto k4 = f(t + h, tmp);
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

// Bisection for a sign change of f on [lo, hi].  Requires f(lo) and f(hi) of
// opposite (or zero) sign.
template <class F>
double bisect(const F& f, double lo, double hi, double tol = 1e-13,
              int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw domain_error("bisect: no sign change on the bracket");
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Composite Simpson quadrature of f over [lo, hi] with n panels (n even).
template <class F>
double simpson(const F& f, double lo, double hi, int n) {
  if (n % 2 != 0) ++n;
  const double h = (hi - lo) / n;
  KahanSum s;
  s.add(f(lo));
  s.add(f(hi));
  for (int i = 1; i < n; ++i) s.add((i % 2 ? 4.0 : 2.0) * f(lo + i * h));
  return s.value() * h / 3.0;
}

// Monotone (Fritsch-Carlson) piecewise-cubic Hermite interpolant.  Nodes must
// be strictly increasing; data may be non-monotone, in which case the limiter
// still prevents overshoot between nodes.
class Pchip {
 public:
  Pchip() = default;

  Pchip(std::vector<double> t, std::vector<double> x)
      : t_(std::move(t)), x_(std::move(x)) {
    const std::size_t n = t_.size();
    if (n < 2 || x_.size() != n)
      throw domain_error("Pchip: need at least two matching nodes");
    for (std::size_t i = 1; i < n; ++i)
      if (!(t_[i] > t_[i - 1]))
        throw domain_error("Pchip: nodes must be strictly increasing");
    m_.resize(n);
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] = (x_[i + 1] - x_[i]) / (t_[i + 1] - t_[i]);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        m_[i] = 0.0;
      } else {
        const double w1 = 2.0 * (t_[i + 1] - t_[i]) + (t_[i] - t_[i - 1]);
        const double w2 = (t_[i + 1] - t_[i]) + 2.0 * (t_[i] - t_[i - 1]);
        m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
  }

  double operator()(double t) const {
    const std::size_t i = segment(t);
    const double h = t_[i + 1] - t_[i];
    const double s = (t - t_[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * x_[i] + h10 * h * m_[i] + h01 * x_[i + 1] + h11 * h * m_[i + 1];
  }

  double front_time() const { return t_.front(); }
  double back_time() const { return t_.back(); }
  bool empty() const { return t_.empty(); }

 private:
  std::size_t segment(double t) const {
    if (t <= t_.front()) return 0;
    if (t >= t_.back()) return t_.size() - 2;
    std::size_t lo = 0, hi = t_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (t_[mid] <= t ? lo : hi) = mid;
    }
    return lo;
  }

  std::vector<double> t_, x_, m_;
};

}  // namespace forage

#endif
