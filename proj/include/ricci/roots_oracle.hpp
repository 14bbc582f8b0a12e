#pragma once

// Floating-point numerics: companion-matrix root finding with multiplicity
// clustering (the brute-force oracle for the exact quartic criteria) and small
// dense kernel/inertia helpers used by the float classification path.

#include "ricci/linalg.hpp"
#include "ricci/quartic.hpp"

#include <complex>
#include <vector>

namespace ricci {

struct RootCluster {
  std::complex<double> value;  // cluster mean
  int multiplicity = 0;
  bool real = false;
};

struct OracleResult {
  std::array<std::complex<double>, 4> roots{};
  std::vector<RootCluster> clusters;
  RootPattern pattern = RootPattern::R1R2R3R4;
  bool high_confidence = false;
  double separation = 0.0;  // smallest gap between cluster means
  double spread = 0.0;      // largest intra-cluster spread
};

// Roots of the monic quartic x^4 + p3 x^3 + p2 x^2 + p1 x + p0.
std::array<std::complex<double>, 4> quartic_roots(double p3, double p2, double p1, double p0);

// Roots of the monic cubic x^3 + p2 x^2 + p1 x + p0.
std::array<std::complex<double>, 3> cubic_roots(double p2, double p1, double p0);

// Cluster the roots of W(x) = x^4 + c2 x^2 - c3 x + c4 into a real-coefficient
// multiplicity pattern. merge_tol is the relative clustering radius.
OracleResult oracle_pattern(const DepressedQuartic<double>& q, double merge_tol = 1e-6);

// Float kernel basis via SVD; singular values below rank_tol * sigma_max are
// treated as zero.
std::vector<Vec4<double>> kernel_basis_f(const Mat4<double>& m, double rank_tol = 1e-9);

// Inertia of a small symmetric matrix with threshold tol * max|eigenvalue|.
Inertia inertia_symmetric_f(const std::vector<std::vector<double>>& g, double tol = 1e-9);

}  // namespace ricci
