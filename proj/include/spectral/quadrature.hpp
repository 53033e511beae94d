#ifndef SPECTRAL_QUADRATURE_HPP
#define SPECTRAL_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

namespace spectral {

/// Gauss-Chebyshev rule of the second kind, normalized against the
/// semicircle measure (2/pi) sqrt(1-x^2) dx on [-1,1]:
///   integral f dmu ~= sum_j w_j f(x_j),
/// x_j = cos(j pi/(K+1)), w_j = (2/(K+1)) sin^2(j pi/(K+1)).
/// Exact for polynomials of degree <= 2K-1.
class SemicircleQuadrature {
public:
  explicit SemicircleQuadrature(int nodes = 512) {
    if (nodes < 1) throw std::invalid_argument("SemicircleQuadrature: need >= 1 node");
    x_.resize(nodes);
    w_.resize(nodes);
    for (int j = 1; j <= nodes; ++j) {
      double theta = j * std::numbers::pi / (nodes + 1);
      x_[j - 1] = std::cos(theta);
      double s = std::sin(theta);
      w_[j - 1] = 2.0 / (nodes + 1) * s * s;
    }
  }

  int size() const { return static_cast<int>(x_.size()); }
  const Eigen::VectorXd& nodes() const { return x_; }
  const Eigen::VectorXd& weights() const { return w_; }

  template <typename F>
  double integrate(F&& f) const {
    double s = 0;
    for (int j = 0; j < size(); ++j) s += w_[j] * f(x_[j]);
    return s;
  }

  /// Integral of a function given by its values at the nodes.
  double integrate_values(const Eigen::VectorXd& fv) const {
    if (fv.size() != x_.size())
      throw std::invalid_argument("SemicircleQuadrature: value vector size mismatch");
    return w_.dot(fv);
  }

private:
  Eigen::VectorXd x_;
  Eigen::VectorXd w_;
};

}  // namespace spectral

#endif
