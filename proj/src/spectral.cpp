#include "ricci/spectral.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace ricci {

namespace {

// ---- exact helpers ---------------------------------------------------------

Mat4<Rat> apply_factor(const Mat4<Rat>& m, const detail::Factor& f) {
  const Mat4<Rat> id = identity_mat<Rat>();
  if (!f.quad) return mat_add(m, mat_scale(Rat(-f.r), id));
  return mat_add(matmul(m, m), mat_add(mat_scale(f.p, m), mat_scale(f.q, id)));
}

int kernel_dim(const Mat4<Rat>& m) { return static_cast<int>(kernel_basis(m).size()); }

CausalClass eigenspace_class(const std::vector<Vec4<Rat>>& basis, Tetrad tetrad) {
  const Mat4<Rat> g = metric<Rat>(tetrad);
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gram[a][b] += g[i][j] * basis[a][i] * basis[b][j];
  return class_from_inertia(inertia_symmetric(gram));
}

std::string pair_value_str(const Rat& p, const Rat& q) {
  const Rat re = -p / Rat(2);
  const Rat im2 = q - p * p / Rat(4);
  Rat im;
  std::string im_str = rational_sqrt(im2, &im) ? im.str() : ("sqrt(" + im2.str() + ")");
  return re.str() + " +/- " + im_str + " i";
}

// ---- float helpers ---------------------------------------------------------

struct FFactor {
  bool quad = false;
  double r = 0.0, p = 0.0, q = 0.0;  // (x - r) or (x^2 + p x + q)
  int mult = 0;
};

Mat4<double> apply_factor_f(const Mat4<double>& m, const FFactor& f) {
  const Mat4<double> id = identity_mat<double>();
  if (!f.quad) return mat_add(m, mat_scale(-f.r, id));
  return mat_add(matmul(m, m), mat_add(mat_scale(f.p, m), mat_scale(f.q, id)));
}

// Cluster the float roots of W into the multiplicity structure dictated by a
// (trusted) root pattern.
std::vector<FFactor> forced_factors(const DepressedQuartic<double>& w, RootPattern pat) {
  std::vector<int> rm, zm;
  detail::pattern_mults(pat, &rm, &zm);
  const auto roots = quartic_roots(0.0, w.c2, -w.c3, w.c4);
  int nreal = 0;
  for (int m : rm) nreal += m;
  // The nreal roots nearest the real axis are the real ones.
  std::vector<std::complex<double>> rs(roots.begin(), roots.end());
  std::sort(rs.begin(), rs.end(),
            [](const auto& a, const auto& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  std::vector<double> reals;
  for (int i = 0; i < nreal; ++i) reals.push_back(rs[i].real());
  std::sort(reals.begin(), reals.end());
  std::vector<std::complex<double>> cplx(rs.begin() + nreal, rs.end());

  std::vector<FFactor> out;
  auto push_real = [&](double v, int mult) {
    FFactor f;
    f.r = v;
    f.mult = mult;
    out.push_back(f);
  };
  // Partition sorted reals into groups of the required sizes, choosing the
  // grouping that minimizes within-group spread.
  std::sort(rm.rbegin(), rm.rend());
  if (rm == std::vector<int>{4}) {
    double s = 0;
    for (double v : reals) s += v;
    push_real(s / 4.0, 4);
  } else if (rm == std::vector<int>{3, 1}) {
    const double w0 = reals[2] - reals[0], w1 = reals[3] - reals[1];
    const int start = (w0 <= w1) ? 0 : 1;
    const double mean = (reals[start] + reals[start + 1] + reals[start + 2]) / 3.0;
    push_real(mean, 3);
    push_real(reals[start == 0 ? 3 : 0], 1);
  } else if (rm == std::vector<int>{2, 2}) {
    push_real((reals[0] + reals[1]) / 2.0, 2);
    push_real((reals[2] + reals[3]) / 2.0, 2);
  } else if (rm == std::vector<int>{2, 1, 1}) {
    double best = 1e300;
    int bi = 0;
    for (int i = 0; i + 1 < static_cast<int>(reals.size()); ++i)
      if (reals[i + 1] - reals[i] < best) {
        best = reals[i + 1] - reals[i];
        bi = i;
      }
    push_real((reals[bi] + reals[bi + 1]) / 2.0, 2);
    for (int i = 0; i < static_cast<int>(reals.size()); ++i)
      if (i != bi && i != bi + 1) push_real(reals[i], 1);
  } else if (rm == std::vector<int>{2}) {
    push_real((reals[0] + reals[1]) / 2.0, 2);
  } else {
    for (double v : reals) push_real(v, 1);
  }
  // Complex pairs: group positive-imaginary roots.
  std::vector<std::complex<double>> up;
  for (const auto& z : cplx)
    if (z.imag() > 0) up.push_back(z);
  std::sort(up.begin(), up.end(), [](const auto& a, const auto& b) { return a.real() < b.real(); });
  std::sort(zm.rbegin(), zm.rend());
  auto push_pair = [&](std::complex<double> z, int mult) {
    FFactor f;
    f.quad = true;
    f.p = -2.0 * z.real();
    f.q = std::norm(z);
    f.r = 0.0;
    f.mult = mult;
    out.push_back(f);
  };
  if (zm == std::vector<int>{2}) {
    std::complex<double> mean = up.size() == 2 ? (up[0] + up[1]) / 2.0
                                               : (up.empty() ? std::complex<double>(0, 1) : up[0]);
    push_pair(mean, 2);
  } else if (zm == std::vector<int>{1, 1}) {
    for (const auto& z : up) push_pair(z, 1);
  } else if (zm == std::vector<int>{1}) {
    if (!up.empty()) push_pair(up[0], 1);
  }
  return out;
}

EigenReport float_structure(const Mat4<double>& m, Tetrad tetrad, const DepressedQuartic<double>& w,
                            RootPattern pat, double tol) {
  EigenReport rep;
  rep.exact = false;
  const auto fs = forced_factors(w, pat);
  const Mat4<double> g = metric<double>(tetrad);
  int total_alg = 0;
  Mat4<double> annihilator = identity_mat<double>();
  for (const auto& f : fs) {
    const int deg = f.quad ? 2 : 1;
    total_alg += f.mult * deg;
    const Mat4<double> F = apply_factor_f(m, f);
    const auto ker = kernel_basis_f(F, 1e-9);
    const int d1 = static_cast<int>(ker.size());
    int e = 1;
    Mat4<double> P = F;
    int dim = d1;
    while (dim < f.mult * deg && e < 4) {
      P = matmul(P, F);
      ++e;
      dim = static_cast<int>(kernel_basis_f(P, 1e-9).size());
    }
    if (dim != f.mult * deg)
      throw ClassifyError(ErrorKind::NoAnnihilation,
                          "kernel dimension never reaches the algebraic multiplicity");
    for (int i = 0; i < e; ++i) annihilator = matmul(annihilator, F);
    EigenEntry ent;
    ent.pair = f.quad;
    ent.alg = f.mult;
    ent.q = e;
    if (f.quad) {
      ent.re = -f.p / 2.0;
      ent.im = std::sqrt(std::max(0.0, f.q - f.p * f.p / 4.0));
      if (d1 % 2 != 0)
        throw ClassifyError(ErrorKind::Internal, "odd real kernel dimension for a conjugate pair");
      ent.geo = d1 / 2;
      rep.v += d1;
    } else {
      ent.re = f.r;
      ent.geo = d1;
      ent.has_cls = true;
      const int n = d1;
      std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) gram[a][b] += g[i][j] * ker[a][i] * ker[b][j];
      // Defective eigenvalues are recovered to roughly sqrt(machine epsilon),
      // so the Gram of their eigenvectors carries errors well above 1e-9.
      ent.cls = class_from_inertia(inertia_symmetric_f(gram, 1e-6));
      rep.v += d1;
    }
    {
      std::ostringstream os;
      os.precision(12);
      if (ent.pair)
        os << ent.re << " +/- " << ent.im << " i";
      else
        os << ent.re;
      ent.value_str = os.str();
    }
    rep.entries.push_back(ent);
  }
  if (total_alg != 4)
    throw ClassifyError(ErrorKind::InconsistentPattern, "multiplicities do not sum to 4");
  const double scale = std::max(1.0, mat_max_abs(m));
  double bound = 1.0;
  for (const auto& f : fs) bound *= std::pow(4.0 * scale * scale, f.quad ? 2.0 : 1.0);
  if (mat_max_abs(annihilator) > std::max(tol, 1e-7) * bound)
    throw ClassifyError(ErrorKind::NoAnnihilation, "minimal polynomial does not annihilate");
  detail::sort_entries(&rep.entries);
  return rep;
}

}  // namespace

EigenReport eigen_structure(const MixedMatrix<Rat>& mm, const DepressedQuartic<Rat>& w,
                            RootPattern pat, double tol) {
  auto fs_opt = detail::factor_exact(w, pat);
  if (!fs_opt) {
    Mat4<double> md;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) md[i][j] = to_double(mm.m[i][j]);
    DepressedQuartic<double> wd{to_double(w.c2), to_double(w.c3), to_double(w.c4)};
    EigenReport rep = float_structure(md, mm.tetrad, wd, pat, tol);
    rep.notes.push_back("irrational eigendata: eigen report computed in floating point");
    return rep;
  }
  const auto& fs = *fs_opt;
  EigenReport rep;
  rep.exact = true;
  int total_alg = 0;
  Mat4<Rat> annihilator = identity_mat<Rat>();
  for (const auto& f : fs) {
    const int deg = f.quad ? 2 : 1;
    total_alg += f.mult * deg;
    const Mat4<Rat> F = apply_factor(mm.m, f);
    const auto ker = kernel_basis(F);
    const int d1 = static_cast<int>(ker.size());
    int e = 1;
    Mat4<Rat> P = F;
    int dim = d1;
    while (dim < f.mult * deg && e < 4) {
      P = matmul(P, F);
      ++e;
      dim = kernel_dim(P);
    }
    if (dim != f.mult * deg)
      throw ClassifyError(ErrorKind::NoAnnihilation,
                          "kernel dimension never reaches the algebraic multiplicity");
    for (int i = 0; i < e; ++i) annihilator = matmul(annihilator, F);
    EigenEntry ent;
    ent.pair = f.quad;
    ent.alg = f.mult;
    ent.q = e;
    if (f.quad) {
      ent.re = to_double(Rat(-f.p / Rat(2)));
      ent.im = std::sqrt(std::max(0.0, to_double(Rat(f.q - f.p * f.p / Rat(4)))));
      if (d1 % 2 != 0)
        throw ClassifyError(ErrorKind::Internal, "odd real kernel dimension for a conjugate pair");
      ent.geo = d1 / 2;
      ent.value_str = pair_value_str(f.p, f.q);
      rep.v += d1;
    } else {
      ent.re = to_double(f.r);
      ent.geo = d1;
      ent.has_cls = true;
      ent.cls = eigenspace_class(ker, mm.tetrad);
      ent.value_str = f.r.str();
      rep.v += d1;
    }
    rep.entries.push_back(ent);
  }
  if (total_alg != 4)
    throw ClassifyError(ErrorKind::InconsistentPattern, "multiplicities do not sum to 4");
  if (!mat_is_zero(annihilator))
    throw ClassifyError(ErrorKind::NoAnnihilation, "minimal polynomial does not annihilate");
  detail::sort_entries(&rep.entries);
  (void)tol;
  return rep;
}

EigenReport eigen_structure(const MixedMatrix<double>& mm, const DepressedQuartic<double>& w,
                            RootPattern pat, double tol) {
  return float_structure(mm.m, mm.tetrad, w, pat, tol);
}

}  // namespace ricci
