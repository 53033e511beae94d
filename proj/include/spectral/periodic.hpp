#ifndef SPECTRAL_PERIODIC_HPP
#define SPECTRAL_PERIODIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace spectral {

/// Exact (integer) coefficients of the n-th characteristic polynomial of the
/// half-line Laplacian boundary problem, ascending order in lambda:
/// p_1 = 1 - x, p_2 = 1 - 3x + x^2, p_{n+1} = (2 - x) p_n - p_{n-1}.
inline std::vector<std::int64_t> char_poly(int n) {
  if (n < 1) throw std::invalid_argument("char_poly: n must be >= 1");
  std::vector<std::int64_t> prev{1, -1};
  if (n == 1) return prev;
  std::vector<std::int64_t> cur{1, -3, 1};
  for (int k = 2; k < n; ++k) {
    std::vector<std::int64_t> next(cur.size() + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j] += 2 * cur[j];      // 2 * p_n
      next[j + 1] -= cur[j];      // -x * p_n
    }
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline double eval_poly(const std::vector<std::int64_t>& coeffs, double x) {
  double v = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * x + static_cast<double>(coeffs[j]);
  return v;
}

/// Real roots via the companion matrix of the (monic up to sign) polynomial.
inline std::vector<double> poly_roots(const std::vector<std::int64_t>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  double lead = static_cast<double>(coeffs[deg]);
  for (int j = 0; j < deg; ++j) companion(j, deg - 1) = -static_cast<double>(coeffs[j]) / lead;
  for (int j = 1; j < deg; ++j) companion(j, j - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  std::vector<double> roots;
  for (int j = 0; j < deg; ++j) {
    auto z = solver.eigenvalues()[j];
    if (std::abs(z.imag()) < 1e-10) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// The two roots of p_2: (3 -+ sqrt(5))/2, in ascending order.
inline std::pair<double, double> golden_eigenvalues() {
  double r = std::sqrt(5.0);
  return {(3.0 - r) / 2.0, (3.0 + r) / 2.0};
}

/// Eigenvector recursion of the half-line Laplacian for a fixed lambda:
/// v_0 = 1, v_1 = 1 - lambda, v_{k+1} = (2 - lambda) v_k - v_{k-1}.
/// Returns v_0..v_L.
inline Eigen::VectorXd eigvec_generate(double lambda, int length) {
  if (length < 2) throw std::invalid_argument("eigvec_generate: length must be >= 2");
  Eigen::VectorXd v(length + 1);
  v[0] = 1.0;
  v[1] = 1.0 - lambda;
  for (int k = 1; k < length; ++k) v[k + 1] = (2.0 - lambda) * v[k] - v[k - 1];
  return v;
}

/// Max eigen-relation residual of a sequence: |(Delta v)_k - lambda v_k| over
/// k = 0..L-1, with (Delta v)_0 = v_0 - v_1 and (Delta v)_k = 2v_k - v_{k-1} - v_{k+1}.
inline double eigvec_residual(const Eigen::VectorXd& v, double lambda) {
  if (v.size() < 3) throw std::invalid_argument("eigvec_residual: sequence too short");
  double r = std::abs((v[0] - v[1]) - lambda * v[0]);
  for (Eigen::Index k = 1; k + 1 < v.size(); ++k)
    r = std::max(r, std::abs((2.0 * v[k] - v[k - 1] - v[k + 1]) - lambda * v[k]));
  return r;
}

/// Smallest period q <= L/2 with max |v_{k+q} - v_k| <= tol, if any.
inline std::optional<int> detect_period(const Eigen::VectorXd& v, double tol = 1e-9) {
  int len = static_cast<int>(v.size());
  if (len < 20) throw std::invalid_argument("detect_period: sequence too short");
  for (int q = 1; q <= len / 2; ++q) {
    bool ok = true;
    for (int k = 0; k + q < len; ++k) {
      if (std::abs(v[k + q] - v[k]) > tol) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  return std::nullopt;
}

}  // namespace spectral

#endif
