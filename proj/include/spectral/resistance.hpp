#ifndef SPECTRAL_RESISTANCE_HPP
#define SPECTRAL_RESISTANCE_HPP

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "spectral/operators.hpp"
#include "spectral/tree.hpp"
#include "spectral/words.hpp"

namespace spectral {

/// Closed-form potential for Delta v = delta_root - delta_target on the tree:
/// v(w) = |target| - common_prefix_len(w, target).
inline VertexVector potential(const Word& target, const TruncatedTree& tree) {
  int n = target.length();
  if (n < 1) throw std::invalid_argument("potential: target must not be the root");
  if (tree.depth() < n + 1) throw std::invalid_argument("potential: depth too small");
  VertexVector v(tree.vertex_count());
  for (std::int64_t idx = 0; idx < tree.vertex_count(); ++idx)
    v[idx] = n - common_prefix_len(tree.word(idx), target);
  return v;
}

/// Dirichlet energy pairing, summing over both orientations of every edge:
/// E(u', u) = sum_x sum_{y~x} c(xy) (u'(x)-u'(y)) (u(x)-u(y)).
inline double energy(const VertexVector& u, const VertexVector& u2, const TruncatedTree& tree) {
  check_size(tree, u, "energy");
  check_size(tree, u2, "energy");
  double s = 0;
  for (std::int64_t x = 1; x < tree.vertex_count(); ++x) {
    std::int64_t p = tree.parent_index(x);
    s += tree.conductance(x) * (u[x] - u[p]) * (u2[x] - u2[p]);
  }
  return 2.0 * s;
}

/// Resistance metric on the tree: sqrt(2 * path length).
inline double resistance_dist(const Word& x, const Word& y) {
  return std::sqrt(2.0 * tree_path_length(x, y));
}

/// The same metric through the potentials:
/// sqrt(2) * (v_x(y) + v_y(x) - v_x(x) - v_y(y))^{1/2}, written out with the
/// closed-form potential values.
inline double resistance_dist_via_potentials(const Word& x, const Word& y) {
  if (x == y) return 0.0;
  int p = common_prefix_len(x, y);
  double vx_y = x.length() - p;       // v_x evaluated at y
  double vy_x = y.length() - p;       // v_y evaluated at x
  double vx_x = 0.0, vy_y = 0.0;
  return std::sqrt(2.0) * std::sqrt(vx_y + vy_x - vx_x - vy_y);
}

/// Covariance of the potential process: <v_x, v_y>_E = 2 (v_y(root) - v_y(x))
/// = 2 * common_prefix_len(x, y).
inline double covariance(const Word& x, const Word& y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("covariance: arguments must not be the root");
  return 2.0 * common_prefix_len(x, y);
}

/// Quadratic form sum_x sum_y conj(xi(x)) l(x,y) xi(y) for a mean-zero vector
/// xi over the given vertex set; negative semidefinite, so the value is <= 0.
/// The input is projected onto the mean-zero subspace first.
inline double neg_semidefinite_form(const std::vector<Word>& vertices, Eigen::VectorXd xi) {
  if (xi.size() != static_cast<Eigen::Index>(vertices.size()))
    throw std::invalid_argument("neg_semidefinite_form: size mismatch");
  if (xi.size() == 0) return 0.0;
  xi.array() -= xi.mean();  // enforce sum xi = 0
  double s = 0;
  for (Eigen::Index a = 0; a < xi.size(); ++a)
    for (Eigen::Index b = 0; b < xi.size(); ++b)
      s += xi[a] * tree_path_length(vertices[a], vertices[b]) * xi[b];
  return s;
}

/// Residual of the independent-increments identity for nested x <= y <= z
/// (prefix order): v_y(y) + v_z(x) - v_y(x) - v_z(y) must vanish.
inline double independent_increments_residual(const Word& x, const Word& y, const Word& z) {
  auto is_prefix = [](const Word& a, const Word& b) {
    return common_prefix_len(a, b) == a.length();
  };
  if (!is_prefix(x, y) || !is_prefix(y, z))
    throw std::invalid_argument("independent_increments_residual: inputs not in prefix order");
  int ny = y.length(), nz = z.length();
  double vy_y = 0.0;
  double vz_x = nz - common_prefix_len(z, x);
  double vy_x = ny - common_prefix_len(y, x);
  double vz_y = nz - common_prefix_len(z, y);
  return vy_y + vz_x - vy_x - vz_y;
}

}  // namespace spectral

#endif
