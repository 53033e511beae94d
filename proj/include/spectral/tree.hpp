#ifndef SPECTRAL_TREE_HPP
#define SPECTRAL_TREE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "spectral/words.hpp"

namespace spectral {

/// All words of length <= D over {1..N}, indexed level by level
/// (breadth-first, lexicographic within a level). Edges carry a positive
/// conductance, 1 by default. Each non-root vertex owns the edge to its
/// parent, so edge conductances are stored per vertex (entry 0 unused).
class TruncatedTree {
public:
  TruncatedTree(int branching, int depth)
      : n_(branching), depth_(depth) {
    if (branching < 1) throw std::invalid_argument("TruncatedTree: branching must be >= 1");
    if (depth < 1) throw std::invalid_argument("TruncatedTree: depth must be >= 1");
    level_offset_.resize(depth + 2);
    level_offset_[0] = 0;
    std::int64_t level_size = 1;
    for (int k = 0; k <= depth; ++k) {
      level_offset_[k + 1] = level_offset_[k] + level_size;
      level_size *= branching;
      if (level_offset_[k + 1] > (std::int64_t{1} << 40))
        throw std::invalid_argument("TruncatedTree: too many vertices");
    }
    edge_conductance_ = Eigen::VectorXd::Ones(vertex_count());
  }

  int branching() const { return n_; }
  int depth() const { return depth_; }
  std::int64_t vertex_count() const { return level_offset_[depth_ + 1]; }
  std::int64_t level_offset(int k) const { return level_offset_.at(k); }
  std::int64_t level_size(int k) const { return level_offset_.at(k + 1) - level_offset_.at(k); }

  std::int64_t index(const Word& w) const {
    int len = w.length();
    if (len > depth_) throw std::invalid_argument("TruncatedTree::index: word too long");
    std::int64_t local = 0;
    for (int k = 0; k < len; ++k) {
      int a = w.letter(k);
      if (a < 1 || a > n_) throw std::invalid_argument("TruncatedTree::index: letter out of range");
      local = local * n_ + (a - 1);
    }
    return level_offset_[len] + local;
  }

  Word word(std::int64_t idx) const {
    int len = level_of(idx);
    std::int64_t local = idx - level_offset_[len];
    std::vector<int> ls(len);
    for (int k = len - 1; k >= 0; --k) {
      ls[k] = static_cast<int>(local % n_) + 1;
      local /= n_;
    }
    return Word(std::move(ls));
  }

  int level_of(std::int64_t idx) const {
    if (idx < 0 || idx >= vertex_count()) throw std::out_of_range("TruncatedTree: bad index");
    int len = 0;
    while (level_offset_[len + 1] <= idx) ++len;
    return len;
  }

  std::int64_t parent_index(std::int64_t idx) const {
    int len = level_of(idx);
    if (len == 0) return 0;
    std::int64_t local = idx - level_offset_[len];
    return level_offset_[len - 1] + local / n_;
  }

  /// Child obtained by adjoining letter i (1-based); the child must exist.
  std::int64_t child_index(std::int64_t idx, int i) const {
    int len = level_of(idx);
    if (len >= depth_) throw std::out_of_range("TruncatedTree: child beyond depth");
    if (i < 1 || i > n_) throw std::invalid_argument("TruncatedTree: letter out of range");
    std::int64_t local = idx - level_offset_[len];
    return level_offset_[len + 1] + local * n_ + (i - 1);
  }

  /// Conductance of the parent edge of vertex idx (idx != root).
  double conductance(std::int64_t idx) const { return edge_conductance_[idx]; }
  void set_conductance(std::int64_t idx, double c) {
    if (idx <= 0 || idx >= vertex_count())
      throw std::out_of_range("TruncatedTree::set_conductance: bad vertex");
    if (!(c > 0)) throw std::invalid_argument("TruncatedTree: conductance must be positive");
    edge_conductance_[idx] = c;
  }

private:
  int n_;
  int depth_;
  std::vector<std::int64_t> level_offset_;
  Eigen::VectorXd edge_conductance_;
};

/// d-dimensional torus Z_L^d with periodic nearest-neighbor edges.
class LatticeTorus {
public:
  LatticeTorus(int dimension, int side)
      : d_(dimension), side_(side) {
    if (dimension < 1) throw std::invalid_argument("LatticeTorus: dimension must be >= 1");
    if (side < 2) throw std::invalid_argument("LatticeTorus: side must be >= 2");
    count_ = 1;
    for (int k = 0; k < dimension; ++k) {
      count_ *= side;
      if (count_ > (std::int64_t{1} << 40))
        throw std::invalid_argument("LatticeTorus: too many vertices");
    }
  }

  int dimension() const { return d_; }
  int side() const { return side_; }
  std::int64_t vertex_count() const { return count_; }

  std::int64_t index(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != d_)
      throw std::invalid_argument("LatticeTorus::index: wrong dimension");
    std::int64_t idx = 0;
    for (int k = 0; k < d_; ++k) {
      int c = coords[k] % side_;
      if (c < 0) c += side_;
      idx = idx * side_ + c;
    }
    return idx;
  }

  std::vector<int> coords(std::int64_t idx) const {
    std::vector<int> c(d_);
    for (int k = d_ - 1; k >= 0; --k) {
      c[k] = static_cast<int>(idx % side_);
      idx /= side_;
    }
    return c;
  }

  /// Neighbor of idx shifted by +-1 along the given axis (periodic).
  std::int64_t neighbor(std::int64_t idx, int axis, int dir) const {
    std::vector<int> c = coords(idx);
    c[axis] = (c[axis] + dir + side_) % side_;
    return index(c);
  }

private:
  int d_;
  int side_;
  std::int64_t count_;
};

}  // namespace spectral

#endif
