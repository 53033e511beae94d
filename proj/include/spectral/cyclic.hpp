#ifndef SPECTRAL_CYCLIC_HPP
#define SPECTRAL_CYCLIC_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "spectral/operators.hpp"
#include "spectral/tree.hpp"
#include "spectral/words.hpp"

namespace spectral {

/// Label of a cyclic block: the empty word labels the root block; any other
/// label is a word whose last letter is != 1.
struct CyclicLabel {
  Word word;  // empty for the root block

  bool is_root_block() const { return word.empty(); }

  static CyclicLabel root() { return {}; }
  static CyclicLabel of(Word w) {
    if (!w.empty() && w.letter(w.length() - 1) == 1)
      throw std::invalid_argument("CyclicLabel: last letter must not be 1");
    return {std::move(w)};
  }
};

/// Orthonormal basis x_1..x_N of R^N whose first vector is (1,...,1)/sqrt(N),
/// completed by the Householder reflection mapping e_1 to that vector.
inline Eigen::MatrixXd orthobasis_with_mean_vector(int branching) {
  if (branching < 1)
    throw std::invalid_argument("orthobasis_with_mean_vector: branching must be >= 1");
  int n = branching;
  Eigen::VectorXd s0 = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  u[0] = 1.0;
  u -= s0;
  double nn = u.squaredNorm();
  if (nn < 1e-30) return Eigen::MatrixXd::Identity(n, n);  // N = 1
  return Eigen::MatrixXd::Identity(n, n) - (2.0 / nn) * u * u.transpose();
}

/// Realization on the truncated tree of the block basis vector at the given
/// level: value at a word of length n+p is prod_k x_{i_k}(w_k) * N^{-p/2},
/// supported on words of that exact length.
inline VertexVector cyclic_vector(const CyclicLabel& label, int level, const TruncatedTree& tree) {
  int n = label.word.length();
  if (n + level > tree.depth())
    throw std::invalid_argument("cyclic_vector: label length + level exceeds depth");
  int branching = tree.branching();
  Eigen::MatrixXd basis = orthobasis_with_mean_vector(branching);
  double tail = std::pow(double(branching), -0.5 * level);

  VertexVector v = VertexVector::Zero(tree.vertex_count());
  std::int64_t begin = tree.level_offset(n + level);
  std::int64_t end = begin + tree.level_size(n + level);
  for (std::int64_t idx = begin; idx < end; ++idx) {
    Word w = tree.word(idx);
    double val = tail;
    for (int k = 0; k < n; ++k) val *= basis(w.letter(k) - 1, label.word.letter(k) - 1);
    v[idx] = val;
  }
  return v;
}

struct BlockStructureReport {
  double max_deviation = 0;        // entries vs Jacobi blocks, same label
  double max_cross_deviation = 0;  // entries across distinct labels
};

/// Builds the cyclic basis vectors for the given labels and levels 0..max_level
/// and compares all Laplacian inner products against the block tridiagonal
/// entries: root block for the empty label, generic block otherwise, zero
/// across labels.
inline BlockStructureReport verify_block_structure(const TruncatedTree& tree,
                                                   const std::vector<CyclicLabel>& labels,
                                                   int max_level) {
  for (const auto& l : labels)
    if (l.word.length() + max_level > tree.depth() - 1)
      throw std::invalid_argument("verify_block_structure: depth too small for labels/levels");
  int n = tree.branching();
  BlockStructureReport rep;

  std::vector<std::vector<VertexVector>> vecs(labels.size());
  std::vector<std::vector<VertexVector>> lap(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (int p = 0; p <= max_level; ++p) {
      vecs[a].push_back(cyclic_vector(labels[a], p, tree));
      lap[a].push_back(apply_laplacian(tree, vecs[a].back()));
    }
  }

  JacobiMatrix root = jacobi_root_block(n, max_level + 1);
  JacobiMatrix generic = jacobi_generic_block(n, max_level + 1);

  for (std::size_t a = 0; a < labels.size(); ++a) {
    const JacobiMatrix& block = labels[a].is_root_block() ? root : generic;
    for (std::size_t b = 0; b < labels.size(); ++b) {
      for (int p = 0; p <= max_level; ++p) {
        for (int q = 0; q <= max_level; ++q) {
          double entry = vecs[a][p].dot(lap[b][q]);
          if (a == b) {
            double expect = 0;
            if (p == q) expect = block.diag[p];
            else if (std::abs(p - q) == 1) expect = block.off[std::min(p, q)];
            rep.max_deviation = std::max(rep.max_deviation, std::abs(entry - expect));
          } else {
            rep.max_cross_deviation = std::max(rep.max_cross_deviation, std::abs(entry));
          }
        }
      }
    }
  }
  return rep;
}

/// All admissible labels with word length in [1, max_len] (last letter != 1),
/// preceded by the root label.
inline std::vector<CyclicLabel> cyclic_labels_up_to(int branching, int max_len) {
  std::vector<CyclicLabel> out;
  out.push_back(CyclicLabel::root());
  std::vector<Word> frontier{Word()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= branching; ++i) next.push_back(w.child(i));
    for (const auto& w : next)
      if (w.letter(w.length() - 1) != 1) out.push_back(CyclicLabel::of(w));
    frontier = std::move(next);
  }
  return out;
}

/// Discrete spectral measure of e_0 for the size-M root block:
/// eigenvalues with weights |<e_0, eigenvector>|^2.
struct DiscreteMeasure {
  Eigen::VectorXd points;   // ascending
  Eigen::VectorXd weights;  // nonnegative, sums to 1
};

inline DiscreteMeasure truncated_spectral_measure(int branching, Eigen::Index size) {
  JacobiMatrix j = jacobi_root_block(branching, size);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(j.dense());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("truncated_spectral_measure: eigen solver failed");
  DiscreteMeasure m;
  m.points = solver.eigenvalues();
  m.weights = solver.eigenvectors().row(0).transpose().array().square();
  return m;
}

}  // namespace spectral

#endif
