#include "qifd/linalg.hpp"

#include <algorithm>

namespace qifd {

namespace {

// Real determinant of a Hermitian 3x3 (the imaginary part of det vanishes).
double hermitian_det(const DensityMatrix3& a) {
  const cplx d = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                 a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                 a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
  return d.real();
}

}  // namespace

std::array<double, 3> hermitian_eigenvalues(const DensityMatrix3& a) {
  const double q = a.trace_real() / 3.0;
  const double p1 = std::norm(a.at(0, 1)) + std::norm(a.at(0, 2)) + std::norm(a.at(1, 2));
  const double d00 = a.at(0, 0).real() - q;
  const double d11 = a.at(1, 1).real() - q;
  const double d22 = a.at(2, 2).real() - q;
  const double p2 = d00 * d00 + d11 * d11 + d22 * d22 + 2.0 * p1;
  if (p2 <= 0.0) return {q, q, q};  // multiple of the identity
  const double p = std::sqrt(p2 / 6.0);

  DensityMatrix3 b;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      b.at(r, c) = (a.at(r, c) - (r == c ? cplx{q, 0.0} : cplx{})) / p;
  double r = hermitian_det(b) / 2.0;
  r = std::clamp(r, -1.0, 1.0);

  const double phi = std::acos(r) / 3.0;
  const double two_pi_3 = 2.0 * 3.14159265358979323846 / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + two_pi_3);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> ev{e3, e2, e1};
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace qifd
