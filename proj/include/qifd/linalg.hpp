// Fixed-size complex linear algebra for a single qutrit: 3-vectors for pure
// states, 3x3 matrices for operators and density matrices. Everything is a
// stack value and every operation is pure, so these types can be shared
// freely between threads.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qifd {

using cplx = std::complex<double>;

// Tolerances for double-precision chains of up to ~2N+1 products, N <= 1000.
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kDensityTol = 1e-10;

// Clamp a squared-amplitude to [0,1]; residuals beyond `residual_tol` are a
// logic error upstream, not numerical noise.
inline double clamp_probability(double p, double residual_tol = 1e-10) {
  if (!std::isfinite(p) || p < -residual_tol || p > 1.0 + residual_tol) {
    throw std::logic_error("probability outside [0,1] beyond tolerance");
  }
  return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
}

struct PureState3 {
  std::array<cplx, 3> c{};

  static PureState3 ground() { return PureState3{{cplx{1.0, 0.0}, {}, {}}}; }
  static PureState3 basis(int i) {
    PureState3 s;
    s.c[static_cast<size_t>(i)] = 1.0;
    return s;
  }

  double norm2() const {
    return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
  }
  bool is_normalized(double tol = kUnitaryTol) const {
    return std::abs(norm2() - 1.0) <= tol;
  }
  // |c_i|^2 for a normalized state, clamped.
  std::array<double, 3> probabilities() const {
    return {clamp_probability(std::norm(c[0])), clamp_probability(std::norm(c[1])),
            clamp_probability(std::norm(c[2]))};
  }
};

struct Operator3 {
  // Row-major 3x3.
  std::array<cplx, 9> m{};

  static Operator3 identity() {
    Operator3 u;
    u.m[0] = u.m[4] = u.m[8] = 1.0;
    return u;
  }
  static Operator3 zero() { return Operator3{}; }

  cplx& at(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }
  const cplx& at(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }

  Operator3 dagger() const {
    Operator3 d;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) d.at(r, c) = std::conj(at(c, r));
    return d;
  }

  Operator3 operator+(const Operator3& o) const {
    Operator3 r;
    for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
    return r;
  }
  Operator3 operator-(const Operator3& o) const {
    Operator3 r;
    for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
    return r;
  }
  Operator3 operator*(double s) const {
    Operator3 r;
    for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] * s;
    return r;
  }
  Operator3 operator*(cplx s) const {
    Operator3 r;
    for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] * s;
    return r;
  }

  cplx trace() const { return m[0] + m[4] + m[8]; }

  bool is_unitary(double tol = kUnitaryTol) const;
};

inline Operator3 matmul(const Operator3& a, const Operator3& b) {
  Operator3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j) +
                   a.at(i, 2) * b.at(2, j);
  return r;
}

inline Operator3 operator*(const Operator3& a, const Operator3& b) {
  return matmul(a, b);
}

inline PureState3 apply(const Operator3& u, const PureState3& psi) {
  PureState3 r;
  for (int i = 0; i < 3; ++i)
    r.c[static_cast<size_t>(i)] = u.at(i, 0) * psi.c[0] + u.at(i, 1) * psi.c[1] +
                                  u.at(i, 2) * psi.c[2];
  return r;
}

inline bool Operator3::is_unitary(double tol) const {
  const Operator3 p = matmul(dagger(), *this);
  const Operator3 id = identity();
  for (size_t i = 0; i < 9; ++i)
    if (std::abs(p.m[i] - id.m[i]) > tol) return false;
  return true;
}

inline double frobenius_distance(const Operator3& a, const Operator3& b) {
  double s = 0.0;
  for (size_t i = 0; i < 9; ++i) s += std::norm(a.m[i] - b.m[i]);
  return std::sqrt(s);
}

struct DensityMatrix3 {
  std::array<cplx, 9> m{};

  static DensityMatrix3 pure_ground() {
    DensityMatrix3 rho;
    rho.m[0] = 1.0;
    return rho;
  }
  static DensityMatrix3 from_pure(const PureState3& psi) {
    DensityMatrix3 rho;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        rho.at(r, c) = psi.c[static_cast<size_t>(r)] *
                       std::conj(psi.c[static_cast<size_t>(c)]);
    return rho;
  }
  static DensityMatrix3 diagonal(double p0, double p1, double p2) {
    DensityMatrix3 rho;
    rho.m[0] = p0;
    rho.m[4] = p1;
    rho.m[8] = p2;
    return rho;
  }

  cplx& at(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }
  const cplx& at(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }

  double trace_real() const { return m[0].real() + m[4].real() + m[8].real(); }

  bool is_hermitian(double tol = kUnitaryTol) const {
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c)
        if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
  }

  std::array<double, 3> diagonal_probabilities() const {
    return {clamp_probability(m[0].real()), clamp_probability(m[4].real()),
            clamp_probability(m[8].real())};
  }

  // Trace = 1 within kDensityTol, Hermitian, eigenvalues >= -1e-10.
  void validate(bool normalized = true) const;
};

inline DensityMatrix3 conjugate_by(const Operator3& u, const DensityMatrix3& rho) {
  // U rho U^dag
  std::array<cplx, 9> t{};  // u * rho
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[static_cast<size_t>(3 * i + j)] =
          u.at(i, 0) * rho.at(0, j) + u.at(i, 1) * rho.at(1, j) +
          u.at(i, 2) * rho.at(2, j);
  DensityMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.at(i, j) = t[static_cast<size_t>(3 * i)] * std::conj(u.at(j, 0)) +
                   t[static_cast<size_t>(3 * i + 1)] * std::conj(u.at(j, 1)) +
                   t[static_cast<size_t>(3 * i + 2)] * std::conj(u.at(j, 2));
  return r;
}

// Eigenvalues of a 3x3 Hermitian matrix, ascending, via the trigonometric
// solution of the characteristic cubic.
std::array<double, 3> hermitian_eigenvalues(const DensityMatrix3& a);

inline void DensityMatrix3::validate(bool normalized) const {
  if (!is_hermitian()) throw std::invalid_argument("density matrix not Hermitian");
  const double tr = trace_real();
  if (normalized) {
    if (std::abs(tr - 1.0) > kDensityTol)
      throw std::invalid_argument("density matrix trace != 1");
  } else if (tr > 1.0 + kDensityTol) {
    throw std::invalid_argument("conditional density matrix trace > 1");
  }
  if (hermitian_eigenvalues(*this)[0] < -kDensityTol)
    throw std::invalid_argument("density matrix not positive semidefinite");
}

}  // namespace qifd
