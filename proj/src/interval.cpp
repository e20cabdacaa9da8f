#include "pimcert/interval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pimcert {
namespace {

constexpr double kOutward = 1e-15;

double round_down(double v) { return v - kOutward * std::abs(v); }
double round_up(double v) { return v + kOutward * std::abs(v); }

Interval outward(double lo, double hi) {
  return Interval::make(round_down(lo), round_up(hi));
}

}  // namespace

Interval Interval::make(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw MalformedInterval("malformed interval [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  return Interval(lo, hi);
}

double Interval::mig() const {
  if (lo_ > 0.0) return lo_;
  if (hi_ < 0.0) return -hi_;
  return 0.0;
}

Interval operator+(const Interval& a, const Interval& b) {
  return outward(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
  return outward(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator-(const Interval& a) {
  return Interval(-a.hi_, -a.lo_);  // exact
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo_ * b.lo_;
  const double p2 = a.lo_ * b.hi_;
  const double p3 = a.hi_ * b.lo_;
  const double p4 = a.hi_ * b.hi_;
  return outward(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_ <= 0.0 && 0.0 <= b.hi_) {
    throw DivisionByZeroInterval("interval divisor [" + std::to_string(b.lo_) + ", " +
                                 std::to_string(b.hi_) + "] contains zero");
  }
  const double q1 = a.lo_ / b.lo_;
  const double q2 = a.lo_ / b.hi_;
  const double q3 = a.hi_ / b.lo_;
  const double q4 = a.hi_ / b.hi_;
  return outward(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

Interval scale(const Interval& a, double s) {
  const double x = a.lo() * s;
  const double y = a.hi() * s;
  return outward(std::min(x, y), std::max(x, y));
}

}  // namespace pimcert
