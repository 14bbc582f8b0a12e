#include "ricci/roots_oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace ricci {

std::array<std::complex<double>, 4> quartic_roots(double p3, double p2, double p1, double p0) {
  Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
  c(0, 3) = -p0;
  c(1, 3) = -p1;
  c(2, 3) = -p2;
  c(3, 3) = -p3;
  c(1, 0) = c(2, 1) = c(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(c, false);
  std::array<std::complex<double>, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

std::array<std::complex<double>, 3> cubic_roots(double p2, double p1, double p0) {
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
  c(0, 2) = -p0;
  c(1, 2) = -p1;
  c(2, 2) = -p2;
  c(1, 0) = c(2, 1) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix3d> es(c, false);
  std::array<std::complex<double>, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

OracleResult oracle_pattern(const DepressedQuartic<double>& q, double merge_tol) {
  OracleResult res;
  res.roots = quartic_roots(0.0, q.c2, -q.c3, q.c4);
  const double scale = std::max(1.0, detail::root_scale(q));
  const double eps = merge_tol * scale;

  // Greedy agglomerative clustering with radius eps.
  struct Cl {
    std::vector<std::complex<double>> members;
    std::complex<double> mean;
  };
  std::vector<Cl> cls;
  std::vector<std::complex<double>> sorted(res.roots.begin(), res.roots.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (const auto& r : sorted) {
    bool placed = false;
    for (auto& c : cls) {
      if (std::abs(r - c.mean) < eps) {
        c.members.push_back(r);
        std::complex<double> s(0, 0);
        for (const auto& m : c.members) s += m;
        c.mean = s / static_cast<double>(c.members.size());
        placed = true;
        break;
      }
    }
    if (!placed) cls.push_back({{r}, r});
  }

  res.separation = 1e300;
  res.spread = 0.0;
  for (size_t i = 0; i < cls.size(); ++i) {
    for (size_t j = i + 1; j < cls.size(); ++j)
      res.separation = std::min(res.separation, std::abs(cls[i].mean - cls[j].mean));
    for (const auto& m : cls[i].members)
      res.spread = std::max(res.spread, std::abs(m - cls[i].mean));
  }
  if (cls.size() == 1) res.separation = 1e300;

  double realness_margin = 1e300;  // distance of any complex root from the real axis
  for (auto& c : cls) {
    RootCluster rc;
    rc.multiplicity = static_cast<int>(c.members.size());
    rc.real = std::abs(c.mean.imag()) < eps;
    rc.value = rc.real ? std::complex<double>(c.mean.real(), 0.0) : c.mean;
    if (!rc.real) realness_margin = std::min(realness_margin, std::abs(c.mean.imag()));
    if (rc.real) {
      // real roots should be *clearly* real for confidence purposes
      if (std::abs(c.mean.imag()) > 0.0)
        res.spread = std::max(res.spread, std::abs(c.mean.imag()));
    }
    res.clusters.push_back(rc);
  }

  // Derive the pattern.
  std::vector<int> rmult, zmult;
  for (const auto& c : res.clusters) {
    if (c.real)
      rmult.push_back(c.multiplicity);
    else if (c.value.imag() > 0)
      zmult.push_back(c.multiplicity);
  }
  std::sort(rmult.rbegin(), rmult.rend());
  std::sort(zmult.rbegin(), zmult.rend());
  auto pat = [&]() -> RootPattern {
    if (rmult == std::vector<int>{1, 1, 1, 1}) return RootPattern::R1R2R3R4;
    if (rmult == std::vector<int>{1, 1} && zmult == std::vector<int>{1}) return RootPattern::R1R2ZZb;
    if (rmult.empty() && zmult == std::vector<int>{1, 1}) return RootPattern::Z1Zb1Z2Zb2;
    if (rmult == std::vector<int>{2, 1, 1}) return RootPattern::R1R2R3x2;
    if (rmult == std::vector<int>{2} && zmult == std::vector<int>{1}) return RootPattern::Rx2ZZb;
    if (rmult == std::vector<int>{2, 2}) return RootPattern::R1x2R2x2;
    if (rmult.empty() && zmult == std::vector<int>{2}) return RootPattern::Zx2Zbx2;
    if (rmult == std::vector<int>{3, 1}) return RootPattern::R1R2x3;
    if (rmult == std::vector<int>{4}) return RootPattern::Rx4;
    return RootPattern::R1R2R3R4;  // conjugation-asymmetric artifact; low confidence
  };
  res.pattern = pat();

  // Confidence: clusters well separated relative to the merge radius, members
  // tight, and complex roots far from the real axis.
  const bool sep_ok = res.separation > 50.0 * eps;
  const bool tight_ok = res.spread < 0.02 * eps;
  const bool realness_ok = realness_margin > 50.0 * eps || realness_margin == 1e300;
  int count = 0;
  for (const auto& c : res.clusters) count += c.multiplicity;
  bool conj_ok = true;
  {
    int zup = 0, zdn = 0;
    for (const auto& c : res.clusters) {
      if (!c.real && c.value.imag() > 0) zup += c.multiplicity;
      if (!c.real && c.value.imag() < 0) zdn += c.multiplicity;
    }
    conj_ok = (zup == zdn);
  }
  res.high_confidence = sep_ok && tight_ok && realness_ok && conj_ok && count == 4;
  return res;
}

std::vector<Vec4<double>> kernel_basis_f(const Mat4<double>& m, double rank_tol) {
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = m[i][j];
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  std::vector<Vec4<double>> out;
  for (int i = 0; i < 4; ++i) {
    // Floor the scale: when the matrix is itself a near-annihilator, smax is
    // already roundoff and every direction belongs to the kernel.
    if (sv(i) <= rank_tol * std::max(smax, 1.0)) {
      Vec4<double> v;
      for (int j = 0; j < 4; ++j) v[j] = svd.matrixV()(j, i);
      out.push_back(v);
    }
  }
  if (smax == 0.0) {
    out.clear();
    for (int i = 0; i < 4; ++i) {
      Vec4<double> v{0, 0, 0, 0};
      v[i] = 1.0;
      out.push_back(v);
    }
  }
  return out;
}

Inertia inertia_symmetric_f(const std::vector<std::vector<double>>& g, double tol) {
  const int n = static_cast<int>(g.size());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  double mx = 0.0;
  for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(es.eigenvalues()(i)));
  Inertia out;
  for (int i = 0; i < n; ++i) {
    const double e = es.eigenvalues()(i);
    // Floor the scale at 1: callers pass Grams of unit-norm vectors against a
    // metric with O(1) entries, so an all-tiny Gram is a genuinely null one.
    if (std::abs(e) <= tol * std::max(mx, 1.0))
      ++out.zero;
    else if (e > 0)
      ++out.pos;
    else
      ++out.neg;
  }
  return out;
}

}  // namespace ricci
