#ifndef SPECTRAL_LATTICE_HPP
#define SPECTRAL_LATTICE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "spectral/tree.hpp"

namespace spectral {

using LatticeVector = Eigen::VectorXcd;

/// (Delta v)(n) = sum over the 2d periodic neighbors m of (v(n) - v(m)).
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> apply_lattice_laplacian(
    const LatticeTorus& torus, const Eigen::Vector<Scalar, Eigen::Dynamic>& v) {
  if (v.size() != torus.vertex_count())
    throw std::invalid_argument("apply_lattice_laplacian: size mismatch");
  Eigen::Vector<Scalar, Eigen::Dynamic> out(v.size());
  for (std::int64_t idx = 0; idx < torus.vertex_count(); ++idx) {
    Scalar s = Scalar(2 * torus.dimension()) * v[idx];
    for (int axis = 0; axis < torus.dimension(); ++axis) {
      s -= v[torus.neighbor(idx, axis, +1)];
      s -= v[torus.neighbor(idx, axis, -1)];
    }
    out[idx] = s;
  }
  return out;
}

/// Fourier symbol of the lattice Laplacian: 4 sum_k sin^2(x_k / 2), in [0, 4d].
inline double lattice_symbol(const std::vector<double>& x) {
  double s = 0;
  for (double xk : x) {
    double h = std::sin(xk / 2.0);
    s += 4.0 * h * h;
  }
  return s;
}

struct DftReport {
  double max_residual = 0;  // plane-wave eigen-relation
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
  Eigen::VectorXd eigenvalues;  // symbol values, one per frequency
};

/// For every frequency m, checks that the plane wave exp(2 pi i m.n / L) is an
/// eigenvector of the lattice Laplacian with eigenvalue symbol(2 pi m / L).
inline DftReport dft_verify(const LatticeTorus& torus) {
  if (torus.vertex_count() > 100000)
    throw std::invalid_argument("dft_verify: lattice too large for the dense check");
  DftReport rep;
  std::int64_t count = torus.vertex_count();
  rep.eigenvalues.resize(count);
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  rep.max_eigenvalue = -std::numeric_limits<double>::infinity();
  int side = torus.side();
  for (std::int64_t f = 0; f < count; ++f) {
    std::vector<int> freq = torus.coords(f);
    std::vector<double> x(torus.dimension());
    for (int k = 0; k < torus.dimension(); ++k)
      x[k] = 2.0 * std::numbers::pi * freq[k] / side;
    double lam = lattice_symbol(x);
    rep.eigenvalues[f] = lam;
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, lam);
    rep.max_eigenvalue = std::max(rep.max_eigenvalue, lam);

    LatticeVector wave(count);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<int> c = torus.coords(idx);
      double phase = 0;
      for (int k = 0; k < torus.dimension(); ++k) phase += x[k] * c[k];
      wave[idx] = std::polar(1.0, phase);
    }
    LatticeVector res = apply_lattice_laplacian<std::complex<double>>(torus, wave) - lam * wave;
    rep.max_residual = std::max(rep.max_residual, res.cwiseAbs().maxCoeff());
  }
  return rep;
}

}  // namespace spectral

#endif
