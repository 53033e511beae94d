#ifndef SPECTRAL_WALKS_HPP
#define SPECTRAL_WALKS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "spectral/operators.hpp"
#include "spectral/tree.hpp"

namespace spectral {

/// Exact closed-walk counts on the looped tree (the N-ary tree with one loop
/// edge at the root). Distance from the root is a sufficient statistic:
/// from level 0 a step stays (the loop, 1 way) or descends (N ways); from
/// level k >= 1 it ascends (1 way) or descends (N ways).
class WalkCounter {
public:
  WalkCounter(int branching, int horizon) : n_(branching), horizon_(horizon) {
    if (branching < 1) throw std::invalid_argument("WalkCounter: branching must be >= 1");
    if (horizon < 0) throw std::invalid_argument("WalkCounter: horizon must be >= 0");
    std::vector<std::uint64_t> level(horizon + 2, 0);
    level[0] = 1;
    root_counts_.push_back(1);
    for (int step = 1; step <= horizon; ++step) {
      std::vector<std::uint64_t> next(horizon + 2, 0);
      next[0] = add(level[0], level[1]);  // loop, or up from level 1
      for (int k = 1; k <= step; ++k) next[k] = add(mul(level[k - 1], n_), level[k + 1]);
      level = std::move(next);
      root_counts_.push_back(level[0]);
    }
  }

  int branching() const { return n_; }
  int horizon() const { return horizon_; }

  /// Number of closed walks of length n from the root to itself.
  std::uint64_t count(int step) const {
    if (step < 0 || step > horizon_) throw std::out_of_range("WalkCounter::count: step out of range");
    return root_counts_[step];
  }

private:
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("WalkCounter: 64-bit overflow");
    return r;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("WalkCounter: 64-bit overflow");
    return r;
  }

  int n_;
  int horizon_;
  std::vector<std::uint64_t> root_counts_;
};

inline std::uint64_t path_count(int branching, int steps) {
  return WalkCounter(branching, steps).count(steps);
}

/// Return probability after n steps of the uniform walk on the looped tree:
/// count / (N+1)^n.
inline double return_probability_exact(int branching, int steps) {
  return static_cast<double>(path_count(branching, steps)) /
         std::pow(branching + 1.0, steps);
}

/// One step of the transition operator of the looped tree on the truncated
/// tree: every edge has weight 1/(N+1), the root loop included. Vertices at
/// the truncation depth see their missing children as absent.
inline VertexVector apply_looped_transition(const TruncatedTree& tree, const VertexVector& v) {
  check_size(tree, v, "apply_looped_transition");
  double c = 1.0 / (tree.branching() + 1.0);
  VertexVector out = VertexVector::Zero(v.size());
  out[0] = c * v[0];  // the loop
  for (std::int64_t x = 1; x < tree.vertex_count(); ++x) {
    std::int64_t p = tree.parent_index(x);
    out[x] += c * v[p];
    out[p] += c * v[x];
  }
  return out;
}

struct WalkConfig {
  int branching = 1;
  int steps = 0;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
};

struct WalkResult {
  double frequency = 0;       // fraction of trials back at the root
  double standard_error = 0;  // binomial
  std::int64_t hits = 0;
};

/// Monte Carlo estimate of the return probability. The walk state is the
/// distance from the root; deterministic given the seed.
inline WalkResult walk_simulate(const WalkConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("walk_simulate: trials must be >= 1");
  if (cfg.steps < 0) throw std::invalid_argument("walk_simulate: steps must be >= 0");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> move(0, cfg.branching);  // N+1 equally likely edges
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    int level = 0;
    for (int s = 0; s < cfg.steps; ++s) {
      int m = move(rng);
      if (level == 0) {
        if (m > 0) level = 1;  // m == 0 is the loop
      } else {
        if (m == 0) --level;
        else ++level;
      }
    }
    if (level == 0) ++hits;
  }
  WalkResult res;
  res.hits = hits;
  res.frequency = static_cast<double>(hits) / cfg.trials;
  double p = res.frequency;
  res.standard_error = std::sqrt(std::max(p * (1.0 - p), 0.0) / cfg.trials);
  return res;
}

}  // namespace spectral

#endif
