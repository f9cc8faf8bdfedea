#include "cuspcert/krawczyk.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdio>

#include "cuspcert/bloch_wigner.hpp"
#include "cuspcert/exact.hpp"
#include "json.hpp"

namespace cuspcert {

namespace {

ComplexBox scaled(long long c, const ComplexBox& b) {
  Interval ci(static_cast<double>(c));
  return {ci * b.re, ci * b.im};
}

ComplexBox scalar_mul(std::complex<double> a, const ComplexBox& b) {
  return ComplexBox(a) * b;
}

// Enclosures of (log z, log 1/(1-z), log(1 - 1/z)), matching the floating
// principal-branch evaluation exactly.
std::array<ComplexBox, 3> log_triple_box(const ComplexBox& x) {
  ComplexBox one(std::complex<double>(1.0, 0.0));
  return {clog(x), clog(creciprocal_one_minus(x)), clog(one - one / x)};
}

std::string hex_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

// Decimal digits shared by both bounds, last one decorated "?"; values
// straddling zero (or tiny) collapse to the magnitude-only "0.?eK" form.
std::string decorate(Interval iv) {
  double mx = iv.mag();
  if (mx == 0.0) return "0";
  char a[64], b[64];
  if (!(iv.lo < 0.0 && iv.hi > 0.0) && mx >= 1e-6) {
    for (int dec = 14; dec >= 0; --dec) {
      std::snprintf(a, sizeof a, "%.*f", dec, iv.lo);
      std::snprintf(b, sizeof b, "%.*f", dec, iv.hi);
      if (std::string(a) == b) return std::string(a) + "?";
    }
  }
  int k = static_cast<int>(std::floor(std::log10(mx))) + 1;
  std::snprintf(a, sizeof a, "0.?e%d", k);
  return a;
}

}  // namespace

std::vector<int> square_subsystem(const GluingSystem& sys) {
  // One peripheral row per cusp (the filling row, else the meridian), then
  // edge rows. Taking both rows of one cusp must be avoided: they are
  // independent over Q, but their differentials are dependent at a complete
  // solution (the cusp holonomy relation), which would make the midpoint
  // Jacobian singular. Longitudes enter only as a last resort.
  std::vector<int> order;
  for (size_t i = 0; i < sys.rows.size(); ++i)
    if (sys.kinds[i] == RowKind::meridian || sys.kinds[i] == RowKind::filling)
      order.push_back(static_cast<int>(i));
  for (size_t i = 0; i < sys.rows.size(); ++i)
    if (sys.kinds[i] == RowKind::edge) order.push_back(static_cast<int>(i));
  for (size_t i = 0; i < sys.rows.size(); ++i)
    if (sys.kinds[i] == RowKind::longitude) order.push_back(static_cast<int>(i));
  auto kept = independent_rows(reduced_columns(sys.rows), order, sys.n);
  if (static_cast<int>(kept.size()) < sys.n)
    throw CertifyError("square subsystem rank-deficient: only " +
                       std::to_string(kept.size()) + " independent rows of " +
                       std::to_string(sys.n));
  return kept;
}

std::vector<ComplexBox> interval_residual(const GluingSystem& sys,
                                          const std::vector<ComplexBox>& boxes) {
  if (static_cast<int>(boxes.size()) != sys.n)
    throw CertifyError("box count does not match system width");
  std::vector<std::array<ComplexBox, 3>> logs;
  logs.reserve(boxes.size());
  for (const auto& b : boxes) logs.push_back(log_triple_box(b));
  Interval pi = interval_pi();
  std::vector<ComplexBox> out;
  out.reserve(sys.rows.size());
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    ComplexBox acc(Interval(0.0), Interval(0.0));
    const auto& row = sys.rows[i];
    for (int j = 0; j < sys.n; ++j)
      for (int s = 0; s < 3; ++s)
        if (long long c = row[3 * j + s]) acc = acc + scaled(c, logs[j][s]);
    acc.im = acc.im - Interval(static_cast<double>(sys.targets[i])) * pi;
    out.push_back(acc);
  }
  return out;
}

namespace {

// One Krawczyk operator evaluation: K = y - Y F(y) + (I - Y J(X))(X - y).
// Returns true when K is interior-contained in X; fills K and leaves the
// caller to intersect.
bool krawczyk_step(const GluingSystem& sys, const std::vector<int>& sub,
                   const Eigen::MatrixXcd& Y, const std::vector<ComplexBox>& X,
                   std::vector<ComplexBox>& K) {
  int n = sys.n;
  ComplexBox one(std::complex<double>(1.0, 0.0));
  std::vector<std::complex<double>> y(n);
  for (int j = 0; j < n; ++j) y[j] = X[j].mid();

  // F(y) on width-0 boxes (captures evaluation rounding)
  std::vector<ComplexBox> points;
  points.reserve(n);
  for (int j = 0; j < n; ++j) points.push_back(ComplexBox(y[j]));
  GluingSystem square;
  square.n = n;
  for (int i : sub) {
    square.rows.push_back(sys.rows[i]);
    square.targets.push_back(sys.targets[i]);
    square.kinds.push_back(sys.kinds[i]);
  }
  std::vector<ComplexBox> Fy = interval_residual(square, points);

  // interval Jacobian over X; the derivative sees only the reduced columns:
  // drow/dz_j = (a - c)/z_j + (b - c)/(1 - z_j)
  std::vector<std::vector<ComplexBox>> JX(n, std::vector<ComplexBox>(n));
  for (int j = 0; j < n; ++j) {
    ComplexBox inv_z = one / X[j];
    ComplexBox inv_omz = creciprocal_one_minus(X[j]);
    for (int i = 0; i < n; ++i) {
      const auto& row = sys.rows[sub[i]];
      long long ac = row[3 * j] - row[3 * j + 2];
      long long bc = row[3 * j + 1] - row[3 * j + 2];
      JX[i][j] = scaled(ac, inv_z) + scaled(bc, inv_omz);
    }
  }

  bool inside = true;
  K.assign(n, ComplexBox());
  for (int i = 0; i < n; ++i) {
    ComplexBox acc = ComplexBox(y[i]);
    for (int k = 0; k < n; ++k) acc = acc - scalar_mul(Y(i, k), Fy[k]);
    for (int j = 0; j < n; ++j) {
      // row i of I - Y J(X), entry j
      ComplexBox m(std::complex<double>(i == j ? 1.0 : 0.0, 0.0));
      for (int k = 0; k < n; ++k) m = m - scalar_mul(Y(i, k), JX[k][j]);
      acc = acc + m * (X[j] - ComplexBox(y[j]));
    }
    K[i] = acc;
    if (!X[i].interior_contains(K[i])) inside = false;
  }
  return inside;
}

}  // namespace

Certificate krawczyk_certify(const GluingSystem& sys, const ShapeAssignment& approx) {
  const auto& z = approx.shapes;
  double res = residual(sys, z);
  if (!(res < 1e-8))
    throw CertifyError("approximate residual too large for certification");
  auto sub = square_subsystem(sys);
  int n = sys.n;

  Eigen::MatrixXcd J(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = sys.rows[sub[i]];
    for (int j = 0; j < n; ++j) {
      std::complex<double> zj = z[j];
      J(i, j) = static_cast<double>(row[3 * j]) / zj +
                static_cast<double>(row[3 * j + 1]) / (1.0 - zj) +
                static_cast<double>(row[3 * j + 2]) / (zj * (zj - 1.0));
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(J);
  if (!lu.isInvertible())
    throw CertifyError("midpoint Jacobian of the square subsystem is singular");
  Eigen::MatrixXcd Y = lu.inverse();

  double h = std::max(1e-14, 10.0 * res);
  for (int attempt = 0; attempt < 7; ++attempt, h *= 8.0) {
    std::vector<ComplexBox> X;
    X.reserve(n);
    for (int j = 0; j < n; ++j) X.push_back(box_around(z[j], h));
    std::vector<ComplexBox> K;
    if (!krawczyk_step(sys, sub, Y, X, K)) continue;

    Certificate cert;
    cert.boxes.reserve(n);
    for (int j = 0; j < n; ++j) cert.boxes.push_back(cintersect(K[j], X[j]));
    for (const auto& r : interval_residual(sys, cert.boxes))
      if (!r.re.contains(0.0) || !r.im.contains(0.0))
        throw CertifyError("full-system residual enclosure excludes zero");
    cert.unique = true;
    cert.geometric = true;
    for (const auto& b : cert.boxes)
      if (!(b.im.lo > 0.0)) cert.geometric = false;
    if (cert.geometric) {
      Interval vol(0.0);
      for (const auto& b : cert.boxes) vol = vol + bloch_wigner(b);
      cert.volume_enclosure = vol;
    }
    cert.system_digest = sys.digest();
    cert.subsystem_rows = sub;
    return cert;
  }
  throw CertifyError("Krawczyk containment failed after the inflation ladder");
}

std::string serialize_certificate(const Certificate& cert) {
  nlohmann::json doc;
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& b : cert.boxes) {
    nlohmann::json rec;
    rec["re"] = {hex_double(b.re.lo), hex_double(b.re.hi)};
    rec["im"] = {hex_double(b.im.lo), hex_double(b.im.hi)};
    boxes.push_back(std::move(rec));
  }
  doc["boxes"] = std::move(boxes);
  doc["geometric"] = cert.geometric;
  doc["unique"] = cert.unique;
  doc["volume_enclosure"] = {hex_double(cert.volume_enclosure.lo),
                             hex_double(cert.volume_enclosure.hi)};
  doc["system_digest"] = cert.system_digest;
  doc["subsystem_rows"] = cert.subsystem_rows;
  return doc.dump(1) + "\n";
}

std::string render_certificate(const Certificate& cert) {
  std::string out = cert.unique && cert.geometric ? "(True,\n [" : "(False,\n [";
  for (size_t i = 0; i < cert.boxes.size(); ++i) {
    if (i) out += ",\n  ";
    const auto& b = cert.boxes[i];
    out += decorate(b.re);
    if (b.im.hi <= 0.0 && b.im.lo < 0.0)
      out += " - " + decorate(-b.im) + "*I";
    else
      out += " + " + decorate(b.im) + "*I";
  }
  out += "])";
  return out;
}

}  // namespace cuspcert
