#pragma once

#include <cmath>

#include "pimcert/errors.hpp"

namespace pimcert {

// Closed interval [lo, hi] with finite endpoints, lo <= hi.
//
// Arithmetic is outward-rounded by inflating each computed endpoint by one
// relative epsilon (1e-15 * |endpoint|).  Exact endpoints of value zero stay
// zero.  This gives enclosures without fiddling with rounding modes; the
// price is bounds that are one ulp-ish wider than optimal.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}

  // Throws MalformedInterval unless lo <= hi and both are finite.
  static Interval make(double lo, double hi);
  static Interval point(double v) { return make(v, v); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  double mid() const { return 0.5 * (lo_ + hi_); }
  double rad() const { return 0.5 * (hi_ - lo_); }
  // mig: smallest |x| over the interval; mag: largest.
  double mig() const;
  double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws DivisionByZeroInterval when 0 is in b.
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {}
  double lo_;
  double hi_;
};

// Scale by an exact scalar (still outward-rounded).
Interval scale(const Interval& a, double s);

}  // namespace pimcert
