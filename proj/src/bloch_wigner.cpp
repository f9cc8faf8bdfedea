#include "cuspcert/bloch_wigner.hpp"

#include <gmpxx.h>

#include <array>
#include <vector>

namespace cuspcert {

namespace {

// Series length: after orbit reduction |u| <= pi/3 + slop, and terms decay
// like (|u|/2pi)^n, so 50 terms leave a tail far below 1e-30.
constexpr int kTerms = 50;

// c_n = B_n / (n+1)!  (exact Bernoulli rationals, converted once with a
// one-ulp enclosure for the rigorous flavor).
struct SeriesCoefficients {
  std::array<double, kTerms> mid{};
  std::array<Interval, kTerms> enc{};
  SeriesCoefficients() {
    std::vector<mpq_class> B(kTerms);
    B[0] = 1;
    for (int m = 1; m < kTerms; ++m) {
      mpq_class acc = 0;
      for (int j = 0; j < m; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
        acc += mpq_class(binom) * B[j];
      }
      B[m] = -acc / (m + 1);
    }
    mpz_class fact = 1;
    for (int n = 0; n < kTerms; ++n) {
      fact *= n + 1;
      mpq_class c = B[n] / mpq_class(fact);
      double d = c.get_d();
      mid[n] = d;
      enc[n] = d == 0.0 ? Interval(0.0) : Interval(next_down(d), next_up(d));
    }
  }
};

const SeriesCoefficients& coeffs() {
  static const SeriesCoefficients c;
  return c;
}

// The six-fold symmetry orbit of the shape: D is invariant under the first
// three transforms and flips sign under the last three.
constexpr int kOrbit = 6;

std::complex<double> orbit_point(int k, std::complex<double> z) {
  std::complex<double> one(1.0, 0.0);
  switch (k) {
    case 0: return z;
    case 1: return one / (one - z);
    case 2: return one - one / z;
    case 3: return one / z;
    case 4: return one - z;
    default: return z / (z - one);
  }
}

ComplexBox orbit_box(int k, const ComplexBox& z) {
  ComplexBox one(std::complex<double>(1.0, 0.0));
  switch (k) {
    case 0: return z;
    case 1: return creciprocal_one_minus(z);
    case 2: return one - one / z;
    case 3: return one / z;
    case 4: return one - z;
    default: return z / (z - one);
  }
}

int orbit_sign(int k) { return k < 3 ? 1 : -1; }

// Pick the representative with the smallest |u| = |log(1-w)|.
int best_orbit_index(std::complex<double> z) {
  int best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kOrbit; ++k) {
    std::complex<double> omw = 1.0 - orbit_point(k, z);
    if (omw == std::complex<double>(0.0)) continue;
    double s = std::abs(std::log(omw));
    if (s < best_score) {
      best_score = s;
      best = k;
    }
  }
  return best;
}

ComplexBox scaled(Interval c, const ComplexBox& b) { return {c * b.re, c * b.im}; }

}  // namespace

double bloch_wigner(std::complex<double> z) {
  if (z == std::complex<double>(0.0) || z == std::complex<double>(1.0))
    throw DilogError("dilogarithm pole at 0 or 1");
  if (z.imag() == 0.0) return 0.0;

  int k = best_orbit_index(z);
  std::complex<double> w = orbit_point(k, z);
  std::complex<double> omw = 1.0 - w;
  std::complex<double> u = -std::log(omw);
  std::complex<double> li2(0.0, 0.0), upow = u;
  const auto& c = coeffs();
  for (int n = 0; n < kTerms; ++n) {
    std::complex<double> term = c.mid[n] * upow;
    li2 += term;
    upow *= u;
    if (c.mid[n] != 0.0 && std::abs(term) < 1e-18) break;
  }
  double d = li2.imag() + std::arg(omw) * std::log(std::abs(w));
  return orbit_sign(k) * d;
}

Interval bloch_wigner(const ComplexBox& z) {
  int k = best_orbit_index(z.mid());
  ComplexBox w = orbit_box(k, z);
  ComplexBox one(std::complex<double>(1.0, 0.0));
  ComplexBox omw = one - w;
  ComplexBox u = -clog(omw);
  ComplexBox li2(Interval(0.0), Interval(0.0)), upow = u;
  const auto& c = coeffs();
  for (int n = 0; n < kTerms; ++n) {
    li2 = li2 + scaled(c.enc[n], upow);
    upow = upow * u;
  }
  // tail over n >= kTerms: |c_n| <= 4 / ((2pi)^n (n+1)) gives a geometric bound
  Interval umag = cabs(u);
  Interval ratio = umag / (Interval(2.0) * interval_pi());
  if (ratio.hi >= 1.0) throw DilogError("box too wide for the series tail bound");
  Interval rpow(1.0);
  for (int n = 0; n < kTerms; ++n) rpow = rpow * ratio;
  Interval tail = Interval(4.0) * umag * rpow /
                  (Interval(static_cast<double>(kTerms + 1)) * (Interval(1.0) - ratio));
  double t = tail.hi;
  Interval im_li2 = li2.im + Interval(-t, t);
  Interval d = im_li2 + iatan2(omw.im, omw.re) * ilog(cabs(w));
  return orbit_sign(k) > 0 ? d : -d;
}

}  // namespace cuspcert
