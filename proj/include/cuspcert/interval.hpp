#pragma once
// Double-precision interval arithmetic with portable outward rounding:
// arithmetic endpoints are widened one ulp, libm transcendental endpoints two
// ulps, so no rounding-mode control is ever needed. ComplexBox layers
// rectangular complex enclosures (principal log with branch-cut guards) on top.
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace cuspcert {

struct IntervalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

struct Interval {
  double lo = 0.0, hi = 0.0;
  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}  // exact point (no widening)
  Interval(double l, double h) : lo(l), hi(h) {
    if (!(l <= h)) throw IntervalError("invalid interval bounds");
  }
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool interior_contains(const Interval& o) const { return lo < o.lo && o.hi < hi; }
};

// one ulp outward (arithmetic results are IEEE nearest-rounded)
inline Interval widen1(Interval a) { return Interval(next_down(a.lo), next_up(a.hi)); }
// two ulps outward (libm results are faithful to <= 1 ulp, not correctly rounded)
inline Interval widen2(Interval a) {
  return Interval(next_down(next_down(a.lo)), next_up(next_up(a.hi)));
}

inline Interval operator-(Interval a) { return Interval(-a.hi, -a.lo); }
inline Interval operator+(Interval a, Interval b) {
  return widen1(Interval(a.lo + b.lo, a.hi + b.hi));
}
inline Interval operator-(Interval a, Interval b) { return a + (-b); }

Interval operator*(Interval a, Interval b);
Interval operator/(Interval a, Interval b);  // throws if b contains 0
Interval isquare(Interval a);
Interval iabs(Interval a);
Interval isqrt(Interval a);  // throws if a.lo < 0
Interval ilog(Interval a);   // throws if a.lo <= 0
// arg of the box (x + iy); throws if the box contains 0 or crosses the
// negative-real branch cut.
Interval iatan2(Interval y, Interval x);
Interval ihull(Interval a, Interval b);
Interval iintersect(Interval a, Interval b);  // throws if empty
Interval interval_pi();

struct ComplexBox {
  Interval re, im;
  ComplexBox() = default;
  ComplexBox(Interval r, Interval i) : re(r), im(i) {}
  ComplexBox(std::complex<double> z) : re(z.real()), im(z.imag()) {}
  std::complex<double> mid() const { return {re.mid(), im.mid()}; }
  double width() const { return std::max(re.width(), im.width()); }
  bool contains(std::complex<double> z) const {
    return re.contains(z.real()) && im.contains(z.imag());
  }
  bool contains(const ComplexBox& o) const {
    return re.contains(o.re) && im.contains(o.im);
  }
  bool interior_contains(const ComplexBox& o) const {
    return re.interior_contains(o.re) && im.interior_contains(o.im);
  }
};

inline ComplexBox operator-(const ComplexBox& a) { return {-a.re, -a.im}; }
inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
  return {a.re + b.re, a.im + b.im};
}
inline ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
  return {a.re - b.re, a.im - b.im};
}
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);  // throws if b can vanish

Interval cabs(const ComplexBox& z);
// principal log as a box (log|z|, arg z); throws on 0 or branch-cut crossing
ComplexBox clog(const ComplexBox& z);
// 1/(1-z); throws if 1-z can vanish
ComplexBox creciprocal_one_minus(const ComplexBox& z);

ComplexBox box_around(std::complex<double> center, double half_width);
// widen every bound outward by `fraction` of the larger half-width
ComplexBox inflate_relative(const ComplexBox& b, double fraction);
ComplexBox chull(const ComplexBox& a, const ComplexBox& b);
ComplexBox cintersect(const ComplexBox& a, const ComplexBox& b);

}  // namespace cuspcert
