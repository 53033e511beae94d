#ifndef SPECTRAL_OPERATORS_HPP
#define SPECTRAL_OPERATORS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spectral/tree.hpp"

namespace spectral {

using VertexVector = Eigen::VectorXd;

inline void check_size(const TruncatedTree& tree, const VertexVector& v, const char* where) {
  if (v.size() != tree.vertex_count())
    throw std::invalid_argument(std::string(where) + ": vector size does not match tree");
}

/// (Delta v)(x) = sum over neighbors y of c(xy) (v(x) - v(y)).
/// Neighbors beyond the truncation depth are absent.
inline VertexVector apply_laplacian(const TruncatedTree& tree, const VertexVector& v) {
  check_size(tree, v, "apply_laplacian");
  VertexVector out = VertexVector::Zero(v.size());
  // Each parent edge (p, x) contributes c (v(x)-v(p)) at x and c (v(p)-v(x)) at p.
  for (std::int64_t x = 1; x < tree.vertex_count(); ++x) {
    std::int64_t p = tree.parent_index(x);
    double flux = tree.conductance(x) * (v[x] - v[p]);
    out[x] += flux;
    out[p] -= flux;
  }
  return out;
}

/// (Uv)(x) = v(parent of x); the root reads itself.
inline VertexVector apply_parent_shift(const TruncatedTree& tree, const VertexVector& v) {
  check_size(tree, v, "apply_parent_shift");
  VertexVector out(v.size());
  out[0] = v[0];
  for (std::int64_t x = 1; x < tree.vertex_count(); ++x) out[x] = v[tree.parent_index(x)];
  return out;
}

/// Adjoint of apply_parent_shift: (U* v)(root) = v(root) + sum_i v(i),
/// (U* v)(w) = sum_i v(wi); children beyond depth contribute 0.
inline VertexVector apply_parent_shift_adjoint(const TruncatedTree& tree, const VertexVector& v) {
  check_size(tree, v, "apply_parent_shift_adjoint");
  VertexVector out = VertexVector::Zero(v.size());
  out[0] = v[0];
  for (std::int64_t x = 1; x < tree.vertex_count(); ++x) out[tree.parent_index(x)] += v[x];
  return out;
}

/// (S_i v)(x) = v(xi), reading the i-th child; vertices at the truncation
/// depth read 0.
inline VertexVector apply_letter_shift(const TruncatedTree& tree, const VertexVector& v, int i) {
  check_size(tree, v, "apply_letter_shift");
  if (i < 1 || i > tree.branching())
    throw std::invalid_argument("apply_letter_shift: letter out of range");
  VertexVector out = VertexVector::Zero(v.size());
  std::int64_t interior_end = tree.level_offset(tree.depth());
  for (std::int64_t x = 0; x < interior_end; ++x) out[x] = v[tree.child_index(x, i)];
  return out;
}

/// (S_i* v)(wi) = v(w), (S_i* v) = 0 at the root and at words not ending in i.
inline VertexVector apply_letter_shift_adjoint(const TruncatedTree& tree, const VertexVector& v,
                                               int i) {
  check_size(tree, v, "apply_letter_shift_adjoint");
  if (i < 1 || i > tree.branching())
    throw std::invalid_argument("apply_letter_shift_adjoint: letter out of range");
  VertexVector out = VertexVector::Zero(v.size());
  std::int64_t interior_end = tree.level_offset(tree.depth());
  for (std::int64_t x = 0; x < interior_end; ++x) out[tree.child_index(x, i)] = v[x];
  return out;
}

struct OperatorIdentityReport {
  double dev_isometry = 0;        // S_i S_i* = I
  double dev_completeness = 0;    // sum_i S_i* S_i = I - P_root
  double dev_adjoint = 0;         // U* = sum_i S_i + P_root
  double dev_laplacian = 0;       // Delta = (N+1) I - (U + U* - P_root)
  double max_deviation() const {
    double m = dev_isometry;
    if (dev_completeness > m) m = dev_completeness;
    if (dev_adjoint > m) m = dev_adjoint;
    if (dev_laplacian > m) m = dev_laplacian;
    return m;
  }
};

/// Checks the shift-operator identities on all basis vectors supported at
/// depth <= D-2, where the truncation is invisible. Conductance must be 1.
inline OperatorIdentityReport verify_operator_identities(const TruncatedTree& tree) {
  if (tree.depth() < 3)
    throw std::invalid_argument("verify_operator_identities: depth must be >= 3");
  int n = tree.branching();
  OperatorIdentityReport rep;
  std::int64_t interior_end = tree.level_offset(tree.depth() - 1);
  for (std::int64_t x = 0; x < interior_end; ++x) {
    VertexVector e = VertexVector::Zero(tree.vertex_count());
    e[x] = 1.0;

    for (int i = 1; i <= n; ++i) {
      VertexVector r = apply_letter_shift(tree, apply_letter_shift_adjoint(tree, e, i), i) - e;
      rep.dev_isometry = std::max(rep.dev_isometry, r.cwiseAbs().maxCoeff());
    }

    VertexVector sum = VertexVector::Zero(tree.vertex_count());
    for (int i = 1; i <= n; ++i)
      sum += apply_letter_shift_adjoint(tree, apply_letter_shift(tree, e, i), i);
    VertexVector expect = e;
    if (x == 0) expect[0] -= 1.0;  // I - P_root on the root vector
    rep.dev_completeness = std::max(rep.dev_completeness, (sum - expect).cwiseAbs().maxCoeff());

    VertexVector lhs = apply_parent_shift_adjoint(tree, e);
    VertexVector rhs = VertexVector::Zero(tree.vertex_count());
    for (int i = 1; i <= n; ++i) rhs += apply_letter_shift(tree, e, i);
    if (x == 0) rhs[0] += 1.0;
    rep.dev_adjoint = std::max(rep.dev_adjoint, (lhs - rhs).cwiseAbs().maxCoeff());

    VertexVector lap = apply_laplacian(tree, e);
    VertexVector comb = (n + 1.0) * e - apply_parent_shift(tree, e) -
                        apply_parent_shift_adjoint(tree, e);
    if (x == 0) comb[0] += 1.0;
    rep.dev_laplacian = std::max(rep.dev_laplacian, (lap - comb).cwiseAbs().maxCoeff());
  }
  return rep;
}

/// Symmetric tridiagonal matrix given by its diagonal and off-diagonal.
struct JacobiMatrix {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;  // size diag.size() - 1

  Eigen::Index size() const { return diag.size(); }

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const {
    if (v.size() != diag.size()) throw std::invalid_argument("JacobiMatrix::apply: size mismatch");
    Eigen::VectorXd out = diag.cwiseProduct(v);
    for (Eigen::Index k = 0; k + 1 < diag.size(); ++k) {
      out[k] += off[k] * v[k + 1];
      out[k + 1] += off[k] * v[k];
    }
    return out;
  }

  Eigen::MatrixXd dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(diag.size(), diag.size());
    for (Eigen::Index k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
    for (Eigen::Index k = 0; k + 1 < diag.size(); ++k) {
      m(k, k + 1) = off[k];
      m(k + 1, k) = off[k];
    }
    return m;
  }
};

/// Root block of the cyclic decomposition: diagonal (N, N+1, N+1, ...),
/// off-diagonal -sqrt(N).
inline JacobiMatrix jacobi_root_block(int branching, Eigen::Index size) {
  if (size < 1) throw std::invalid_argument("jacobi_root_block: size must be >= 1");
  JacobiMatrix j;
  j.diag = Eigen::VectorXd::Constant(size, branching + 1.0);
  j.diag[0] = branching;
  j.off = Eigen::VectorXd::Constant(size > 1 ? size - 1 : 0, -std::sqrt(double(branching)));
  return j;
}

/// Generic block of the cyclic decomposition: diagonal N+1, off-diagonal -sqrt(N).
inline JacobiMatrix jacobi_generic_block(int branching, Eigen::Index size) {
  if (size < 1) throw std::invalid_argument("jacobi_generic_block: size must be >= 1");
  JacobiMatrix j;
  j.diag = Eigen::VectorXd::Constant(size, branching + 1.0);
  j.off = Eigen::VectorXd::Constant(size > 1 ? size - 1 : 0, -std::sqrt(double(branching)));
  return j;
}

/// <e_0, J^n e_0> by repeated application. Requires size >= n+1 so the
/// truncation cannot pollute the value.
inline double jacobi_moment(const JacobiMatrix& j, int n) {
  if (n < 0) throw std::invalid_argument("jacobi_moment: order must be >= 0");
  if (j.size() < n + 1)
    throw std::invalid_argument("jacobi_moment: matrix too small for requested order");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(j.size());
  v[0] = 1.0;
  for (int k = 0; k < n; ++k) v = j.apply(v);
  return v[0];
}

}  // namespace spectral

#endif
