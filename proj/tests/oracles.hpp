// Test-side oracles, deliberately independent of the library's computation
// paths: explicit adjacency lists plus BFS, brute-force walk enumeration,
// series expansions, and dense linear solves.
#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

#include <cstdint>
#include <deque>
#include <vector>

#include <Eigen/Dense>

#include "spectral/measures.hpp"
#include "spectral/tree.hpp"

namespace oracles {

/// Adjacency lists of the truncated tree, built from scratch.
inline std::vector<std::vector<std::int64_t>> tree_adjacency(const spectral::TruncatedTree& tree) {
  std::vector<std::vector<std::int64_t>> adj(tree.vertex_count());
  for (std::int64_t x = 1; x < tree.vertex_count(); ++x) {
    std::int64_t p = tree.parent_index(x);
    adj[x].push_back(p);
    adj[p].push_back(x);
  }
  return adj;
}

/// Graph distance by breadth-first search.
inline int bfs_distance(const spectral::TruncatedTree& tree, std::int64_t a, std::int64_t b) {
  auto adj = tree_adjacency(tree);
  std::vector<int> dist(tree.vertex_count(), -1);
  std::deque<std::int64_t> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    std::int64_t x = queue.front();
    queue.pop_front();
    if (x == b) return dist[x];
    for (std::int64_t y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return -1;
}

/// Closed walks of length n from the root of the looped tree, by explicit
/// enumeration of every step sequence. The loop is one extra edge at the
/// root. Exponential in n; meant for n <= 8.
inline std::uint64_t brute_force_returns(int branching, int steps) {
  spectral::TruncatedTree tree(branching, steps + 1);
  std::uint64_t total = 0;
  // Walk state: vertex index. At the root the moves are {loop, children};
  // elsewhere {parent, children}. Depth-first over move sequences.
  struct Frame {
    std::int64_t vertex;
    int next_move;  // 0 = loop/parent, 1..N = child
  };
  std::vector<Frame> frames{{0, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (static_cast<int>(frames.size()) == steps + 1) {
      if (f.vertex == 0) ++total;
      frames.pop_back();
      continue;
    }
    if (f.next_move > branching) {
      frames.pop_back();
      continue;
    }
    int m = f.next_move++;
    std::int64_t next;
    if (m == 0) next = f.vertex == 0 ? 0 : tree.parent_index(f.vertex);
    else next = tree.child_index(f.vertex, m);
    frames.push_back({next, 0});
  }
  return total;
}

/// Catalan number as a double, by the ratio recurrence; valid far beyond the
/// exact 64-bit range.
inline double catalan_double(int n) {
  double c = 1.0;
  for (int k = 0; k < n; ++k) c *= 2.0 * (2 * k + 1) / (k + 2);
  return c;
}

/// Semicircle moment in doubles: C_{n/2}/2^n for even n, 0 for odd.
inline double semicircle_moment(int n) {
  if (n % 2 != 0) return 0.0;
  return catalan_double(n / 2) / std::ldexp(1.0, n);
}

/// Stieltjes series of the semicircle Borel transform:
/// F(z) = -sum_n m_n / z^{n+1}, m_n the moments of mu_c.
inline std::complex<double> borel_series(std::complex<double> z, int terms) {
  std::complex<double> sum = 0;
  std::complex<double> zp = 1.0 / z;
  for (int n = 0; n < terms; ++n) {
    sum += semicircle_moment(n) * zp;
    zp /= z;
  }
  return -sum;
}

/// Dense solve of Delta v = delta_root - delta_target with the value at one
/// reference vertex pinned to the given number; resolves the constant kernel.
inline Eigen::VectorXd solve_potential(const spectral::TruncatedTree& tree, std::int64_t target,
                                       std::int64_t pin_vertex, double pin_value) {
  std::int64_t count = tree.vertex_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(count, count);
  for (std::int64_t x = 1; x < count; ++x) {
    std::int64_t p = tree.parent_index(x);
    double c = tree.conductance(x);
    lap(x, x) += c;
    lap(p, p) += c;
    lap(x, p) -= c;
    lap(p, x) -= c;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(count);
  rhs[0] = 1.0;
  rhs[target] -= 1.0;
  lap.row(pin_vertex).setZero();
  lap(pin_vertex, pin_vertex) = 1.0;
  rhs[pin_vertex] = pin_value;
  return lap.fullPivLu().solve(rhs);
}

/// Composite Simpson integral of f over [a, b].
template <typename F>
double simpson(F&& f, double a, double b, int intervals = 2000) {
  int m = intervals % 2 == 0 ? intervals : intervals + 1;
  double h = (b - a) / m;
  double s = f(a) + f(b);
  for (int j = 1; j < m; ++j) s += (j % 2 == 1 ? 4.0 : 2.0) * f(a + j * h);
  return s * h / 3.0;
}

}  // namespace oracles

#endif
