#include "cuspcert/interval.hpp"

#include <algorithm>

namespace cuspcert {

Interval operator*(Interval a, Interval b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widen1(Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4))));
}

Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    throw IntervalError("division by interval containing zero");
  double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return widen1(Interval(std::min(std::min(q1, q2), std::min(q3, q4)),
                         std::max(std::max(q1, q2), std::max(q3, q4))));
}

Interval isquare(Interval a) {
  Interval m = iabs(a);
  return widen1(Interval(m.lo * m.lo, m.hi * m.hi));
}

Interval iabs(Interval a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return Interval(-a.hi, -a.lo);
  return Interval(0.0, std::max(-a.lo, a.hi));
}

Interval isqrt(Interval a) {
  if (a.lo < 0.0) throw IntervalError("sqrt of interval with negative part");
  return widen1(Interval(std::sqrt(a.lo), std::sqrt(a.hi)));
}

Interval ilog(Interval a) {
  if (a.lo <= 0.0) throw IntervalError("log of interval touching zero");
  return widen2(Interval(std::log(a.lo), std::log(a.hi)));
}

Interval iatan2(Interval y, Interval x) {
  bool x_straddles = x.lo <= 0.0 && x.hi >= 0.0;
  bool y_straddles = y.lo <= 0.0 && y.hi >= 0.0;
  if (x_straddles && y_straddles) throw IntervalError("arg of box containing zero");
  bool y_strict = y.lo < 0.0 && y.hi > 0.0;
  if (x.lo < 0.0 && y_strict) throw IntervalError("arg of box crossing the branch cut");
  double c1 = std::atan2(y.lo, x.lo), c2 = std::atan2(y.lo, x.hi);
  double c3 = std::atan2(y.hi, x.lo), c4 = std::atan2(y.hi, x.hi);
  return widen2(Interval(std::min(std::min(c1, c2), std::min(c3, c4)),
                         std::max(std::max(c1, c2), std::max(c3, c4))));
}

Interval ihull(Interval a, Interval b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval iintersect(Interval a, Interval b) {
  double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) throw IntervalError("empty interval intersection");
  return Interval(lo, hi);
}

Interval interval_pi() {
  return Interval(next_down(M_PI), next_up(M_PI));
}

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
  Interval den = isquare(b.re) + isquare(b.im);
  if (den.lo <= 0.0) throw IntervalError("division by box containing zero");
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Interval cabs(const ComplexBox& z) {
  return isqrt(isquare(z.re) + isquare(z.im));
}

ComplexBox clog(const ComplexBox& z) {
  Interval m = cabs(z);
  if (m.lo <= 0.0) throw IntervalError("log of box containing zero");
  return {ilog(m), iatan2(z.im, z.re)};
}

ComplexBox creciprocal_one_minus(const ComplexBox& z) {
  ComplexBox one((Interval(1.0)), Interval(0.0));
  return one / (one - z);
}

ComplexBox box_around(std::complex<double> center, double half_width) {
  return {Interval(next_down(center.real() - half_width), next_up(center.real() + half_width)),
          Interval(next_down(center.imag() - half_width), next_up(center.imag() + half_width))};
}

ComplexBox inflate_relative(const ComplexBox& b, double fraction) {
  double h = 0.5 * std::max(b.re.width(), b.im.width());
  double d = fraction * h;
  return {Interval(next_down(b.re.lo - d), next_up(b.re.hi + d)),
          Interval(next_down(b.im.lo - d), next_up(b.im.hi + d))};
}

ComplexBox chull(const ComplexBox& a, const ComplexBox& b) {
  return {ihull(a.re, b.re), ihull(a.im, b.im)};
}

ComplexBox cintersect(const ComplexBox& a, const ComplexBox& b) {
  return {iintersect(a.re, b.re), iintersect(a.im, b.im)};
}

}  // namespace cuspcert
