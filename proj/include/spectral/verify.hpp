#ifndef SPECTRAL_VERIFY_HPP
#define SPECTRAL_VERIFY_HPP

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "spectral/cyclic.hpp"
#include "spectral/lattice.hpp"
#include "spectral/measures.hpp"
#include "spectral/operators.hpp"
#include "spectral/periodic.hpp"
#include "spectral/quadrature.hpp"
#include "spectral/resistance.hpp"
#include "spectral/tree.hpp"
#include "spectral/walks.hpp"
#include "spectral/words.hpp"

namespace spectral {

struct Check {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

inline Check make_check(std::string name, double residual, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::int64_t trials = 100000;  // Monte Carlo trials per (N, n)
};

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

inline std::vector<Check> verify_operators_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;

  for (int n : {1, 2, 3}) {
    TruncatedTree tree(n, 6);
    auto rep = verify_operator_identities(tree);
    out.push_back(make_check("operators/identities/N" + std::to_string(n), rep.max_deviation(),
                             1e-12));

    VertexVector u(tree.vertex_count()), v(tree.vertex_count());
    for (auto& x : u) x = gauss(rng);
    for (auto& x : v) x = gauss(rng);
    double sym = std::abs(u.dot(apply_laplacian(tree, v)) - apply_laplacian(tree, u).dot(v));
    out.push_back(make_check("operators/symmetry/N" + std::to_string(n), sym, 1e-10));
    double quad = v.dot(apply_laplacian(tree, v));
    out.push_back(make_check("operators/positivity/N" + std::to_string(n), std::max(0.0, -quad),
                             1e-12));
  }

  // Moments of Re S (diag 0, off 1/2) against Catalan numbers.
  JacobiMatrix re_shift;
  re_shift.diag = Eigen::VectorXd::Zero(26);
  re_shift.off = Eigen::VectorXd::Constant(25, 0.5);
  double even_dev = 0, odd_dev = 0;
  for (int n = 0; n <= 12; ++n) {
    double expect = static_cast<double>(catalan(n)) / std::ldexp(1.0, 2 * n);
    even_dev = std::max(even_dev, std::abs(jacobi_moment(re_shift, 2 * n) - expect));
    if (2 * n + 1 <= 25) odd_dev = std::max(odd_dev, std::abs(jacobi_moment(re_shift, 2 * n + 1)));
  }
  out.push_back(make_check("operators/semicircle_even_moments", even_dev, 1e-12));
  out.push_back(make_check("operators/semicircle_odd_moments", odd_dev, 1e-14));
  return out;
}

// ---------------------------------------------------------------------------
// measures
// ---------------------------------------------------------------------------

inline std::vector<Check> verify_measures_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 1);
  SemicircleQuadrature quad(512);

  // Quadrature exactness on monomials against the closed-form moments.
  double dev = 0;
  for (int n = 0; n <= 40; ++n)
    dev = std::max(dev, std::abs(quad.integrate([&](double x) { return std::pow(x, n); }) -
                                 mu_c_moment(n)));
  out.push_back(make_check("measures/quadrature_moments", dev, 1e-12));

  // Catalan recursion equals the ratio recurrence, exactly.
  {
    std::vector<std::uint64_t> table{1};
    bool exact = true;
    for (int k = 0; k < 25; ++k) {
      unsigned __int128 s = 0;
      for (int m = 0; m <= k; ++m)
        s += static_cast<unsigned __int128>(table[m]) * table[k - m];
      table.push_back(static_cast<std::uint64_t>(s));
      if (table.back() != catalan(k + 1)) exact = false;
    }
    out.push_back(make_check("measures/catalan_recursion", exact ? 0.0 : 1.0, 0.0));
  }

  // Generating function: series vs closed form. Coefficients by the ratio
  // recurrence in doubles; terms decay like (4|x|)^n, so 800 terms suffice
  // even at x = 0.24.
  {
    double d = 0;
    for (double x : {0.1, -0.2, 0.24, 0.01}) {
      double series = 0, xn = 1, c = 1;
      for (int n = 0; n < 800; ++n) {
        series += c * xn;
        xn *= x;
        c *= 2.0 * (2 * n + 1) / (n + 2);
      }
      d = std::max(d, std::abs(series - catalan_gf(x)));
    }
    out.push_back(make_check("measures/catalan_gf", d, 1e-12));
  }

  // Herglotz property on random upper-half-plane points.
  {
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.05, 3.0);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      std::complex<double> z{re(rng), im(rng)};
      worst = std::min(worst, borel_mu_c(z).imag());
      for (int n : {1, 2, 3, 4})
        worst = std::min(worst, aronszajn_krein(z, 1.0 / (2.0 * std::sqrt(double(n)))).imag());
    }
    out.push_back(make_check("measures/herglotz", std::max(0.0, -worst), 0.0));
  }

  // Odd symmetry F(-z) = -F(z).
  {
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.2, 3.0);
    double d = 0;
    for (int k = 0; k < 100; ++k) {
      std::complex<double> z{re(rng), im(rng)};
      d = std::max(d, std::abs(borel_mu_c(-z) + borel_mu_c(z)));
    }
    out.push_back(make_check("measures/odd_symmetry", d, 1e-12));
  }

  // Boundary values of F_alpha against the closed-form perturbed density.
  for (int n : {1, 2, 4}) {
    double alpha = 1.0 / (2.0 * std::sqrt(double(n)));
    double sup = 0;
    for (int k = 0; k <= 396; ++k) {
      double x = -0.99 + k * 0.005;
      sup = std::max(sup, std::abs(boundary_density(x, alpha, 1e-6) - mu_cp_density(x, n)));
    }
    out.push_back(make_check("measures/boundary_density/N" + std::to_string(n), sup, 1e-4));
  }

  // Perturbed measure: unit mass and the second-moment bridge (N+1)/(4N).
  for (int n : {1, 2, 3, 4}) {
    double mass = mu_cp_integral([](double) { return 1.0; }, n);
    out.push_back(make_check("measures/cp_mass/N" + std::to_string(n), std::abs(mass - 1.0),
                             1e-10));
    double m2 = mu_cp_integral([](double x) { return x * x; }, n);
    out.push_back(make_check("measures/cp_second_moment/N" + std::to_string(n),
                             std::abs(m2 - (n + 1.0) / (4.0 * n)), 1e-10));
  }

  // The resolvent integral I_lambda: antisymmetry, the edge value 1/sqrt(N),
  // and agreement with the Borel closed form away from the edge.
  for (int n : {1, 2, 4}) {
    double edge = 2.0 * std::sqrt(double(n));
    double anti = std::abs(i_lambda(-3.0 * edge, n, quad) + i_lambda(3.0 * edge, n, quad));
    out.push_back(make_check("measures/i_lambda_antisymmetry/N" + std::to_string(n), anti, 1e-12));
    // Endpoint singularity: the rule converges at rate ~ 1/K here.
    double at_edge = std::abs(i_lambda(edge, n, quad) - 1.0 / std::sqrt(double(n)));
    out.push_back(make_check("measures/i_lambda_edge/N" + std::to_string(n), at_edge,
                             3.0 / quad.size()));
    double interior = std::abs(i_lambda(1.5 * edge, n, quad) - i_lambda_closed(1.5 * edge, n));
    out.push_back(make_check("measures/i_lambda_closed_form/N" + std::to_string(n), interior,
                             1e-12));
  }

  // Resolvent solve residual, including near the spectral edge.
  for (int n : {1, 2}) {
    double edge = 2.0 * std::sqrt(double(n));
    for (double lambda : {edge + 1.0, edge + 1e-3}) {
      Eigen::VectorXd g = Eigen::VectorXd::Ones(quad.size());
      Eigen::VectorXd f = resolvent_mean_shifted_mult(lambda, n, quad, g);
      Eigen::VectorXd res = lambda * f - apply_mean_shifted_mult(n, quad, f) - g;
      double l2 = std::sqrt(quad.integrate_values(res.cwiseAbs2()));
      out.push_back(make_check("measures/resolvent_residual/N" + std::to_string(n) + "_lam" +
                                   std::to_string(lambda),
                               l2, 1e-8));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// cyclic decomposition
// ---------------------------------------------------------------------------

inline std::vector<Check> verify_cyclic_suite(const VerifyOptions&) {
  std::vector<Check> out;

  for (int n : {1, 2, 3, 4}) {
    Eigen::MatrixXd basis = orthobasis_with_mean_vector(n);
    double gram = (basis.transpose() * basis - Eigen::MatrixXd::Identity(n, n))
                      .cwiseAbs()
                      .maxCoeff();
    out.push_back(make_check("cyclic/orthobasis_gram/N" + std::to_string(n), gram, 1e-14));
  }

  for (int n : {2, 3}) {
    TruncatedTree tree(n, 8);
    auto labels = cyclic_labels_up_to(n, 2);
    auto rep = verify_block_structure(tree, labels, 5);
    out.push_back(make_check("cyclic/block_entries/N" + std::to_string(n), rep.max_deviation,
                             1e-12));
    out.push_back(make_check("cyclic/block_cross_zeros/N" + std::to_string(n),
                             rep.max_cross_deviation, 1e-12));

    // Orthonormality of the whole constructed family.
    std::vector<VertexVector> family;
    for (const auto& l : labels)
      for (int p = 0; p <= 5; ++p) family.push_back(cyclic_vector(l, p, tree));
    double dev = 0;
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b)
        dev = std::max(dev, std::abs(family[a].dot(family[b]) - (a == b ? 1.0 : 0.0)));
    out.push_back(make_check("cyclic/family_orthonormal/N" + std::to_string(n), dev, 1e-12));
  }

  // Completeness: the cyclic vectors supported at word-length m span N^m dims.
  for (int n : {2, 3}) {
    TruncatedTree tree(n, 6);
    bool complete = true;
    for (int m = 1; m <= 5; ++m) {
      std::vector<Eigen::VectorXd> rows;
      auto labels = cyclic_labels_up_to(n, m);
      for (const auto& l : labels) {
        int len = l.word.length();
        if (len > m) continue;
        VertexVector v = cyclic_vector(l, m - len, tree);
        rows.push_back(v.segment(tree.level_offset(m), tree.level_size(m)));
      }
      Eigen::MatrixXd mat(rows.size(), tree.level_size(m));
      for (std::size_t r = 0; r < rows.size(); ++r) mat.row(r) = rows[r];
      Eigen::Index rank = Eigen::FullPivLU<Eigen::MatrixXd>(mat).rank();
      if (rank != tree.level_size(m)) complete = false;
    }
    out.push_back(make_check("cyclic/completeness/N" + std::to_string(n), complete ? 0.0 : 1.0,
                             0.0));
  }

  // Root-block moments against quadrature moments of N+1-2 sqrt(N) x under mu_{c+p}.
  for (int n : {1, 2, 3, 4}) {
    double edge = 2.0 * std::sqrt(double(n));
    JacobiMatrix root = jacobi_root_block(n, 18);
    double rel = 0;
    for (int k = 0; k <= 16; ++k) {
      double direct = jacobi_moment(root, k);
      double viaq =
          mu_cp_integral([&](double x) { return std::pow(n + 1.0 - edge * x, k); }, n);
      rel = std::max(rel, std::abs(direct - viaq) / std::max(1.0, std::abs(viaq)));
    }
    out.push_back(make_check("cyclic/root_block_moments/N" + std::to_string(n), rel, 1e-9));
  }

  // Truncated spectral measure: eigenvalue containment and Kolmogorov distance.
  for (int n : {1, 2, 3, 4}) {
    auto [lo, hi] = spectrum_interval(n);
    DiscreteMeasure m = truncated_spectral_measure(n, 200);
    double overshoot = std::max(lo - m.points.minCoeff(), m.points.maxCoeff() - hi);
    out.push_back(make_check("cyclic/spectrum_containment/N" + std::to_string(n),
                             std::max(0.0, overshoot), 0.05));
    double edge = 2.0 * std::sqrt(double(n));
    double kolm = 0, acc = 0;
    for (Eigen::Index j = 0; j < m.points.size(); ++j) {
      // Image CDF: lambda <= t iff x >= (N+1-t)/(2 sqrt N).
      double x = (n + 1.0 - m.points[j]) / edge;
      double cdf = 1.0 - mu_cp_cdf(x, n);
      kolm = std::max(kolm, std::abs(acc - cdf));  // left limit
      acc += m.weights[j];
      kolm = std::max(kolm, std::abs(acc - cdf));
    }
    out.push_back(make_check("cyclic/kolmogorov/N" + std::to_string(n), kolm, 0.02));
  }
  return out;
}

// ---------------------------------------------------------------------------
// resistance
// ---------------------------------------------------------------------------

inline std::vector<Word> all_words_up_to(int branching, int depth) {
  TruncatedTree tree(branching, depth);
  std::vector<Word> out;
  out.reserve(tree.vertex_count());
  for (std::int64_t i = 0; i < tree.vertex_count(); ++i) out.push_back(tree.word(i));
  return out;
}

inline std::vector<Check> verify_resistance_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 2);
  std::normal_distribution<double> gauss;

  for (int n : {1, 2, 3}) {
    TruncatedTree tree(n, 7);
    std::int64_t interior_end = tree.level_offset(tree.depth());

    // Closed-form potentials solve Delta v = delta_root - delta_target on the interior.
    double dev = 0;
    for (std::int64_t t = 1; t < tree.level_offset(7); ++t) {  // targets up to depth 6
      Word target = tree.word(t);
      VertexVector v = potential(target, tree);
      VertexVector lap = apply_laplacian(tree, v);
      lap[0] -= 1.0;
      lap[t] += 1.0;
      dev = std::max(dev, lap.head(interior_end).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("resistance/potential_residual/N" + std::to_string(n), dev, 1e-12));

    // Energy pairing identities on random interior-supported vectors.
    double pair_dev = 0, energy_dev = 0;
    for (int rep = 0; rep < 20; ++rep) {
      VertexVector u = VertexVector::Zero(tree.vertex_count());
      for (std::int64_t i = 0; i < interior_end; ++i) u[i] = gauss(rng);
      energy_dev = std::max(energy_dev,
                            std::abs(energy(u, u, tree) - 2.0 * u.dot(apply_laplacian(tree, u))));
      std::int64_t t = 1 + static_cast<std::int64_t>(rng() % (tree.level_offset(7) - 1));
      Word target = tree.word(t);
      VertexVector v = potential(target, tree);
      pair_dev = std::max(pair_dev, std::abs(energy(v, u, tree) - 2.0 * (u[0] - u[t])));
    }
    out.push_back(make_check("resistance/energy_identity/N" + std::to_string(n), energy_dev,
                             1e-9));
    out.push_back(make_check("resistance/energy_pairing/N" + std::to_string(n), pair_dev, 1e-9));
  }

  // Distance computed two ways, and the triangle inequality.
  {
    double dev = 0, tri = 0;
    for (int n : {1, 2, 3}) {
      auto words = all_words_up_to(n, n == 3 ? 5 : 6);
      for (const auto& a : words)
        for (const auto& b : words)
          dev = std::max(dev,
                         std::abs(resistance_dist(a, b) - resistance_dist_via_potentials(a, b)));
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      for (int k = 0; k < 2000; ++k) {
        const Word &a = words[pick(rng)], &b = words[pick(rng)], &c = words[pick(rng)];
        tri = std::max(tri,
                       resistance_dist(a, c) - resistance_dist(a, b) - resistance_dist(b, c));
      }
    }
    out.push_back(make_check("resistance/dist_two_ways", dev, 1e-12));
    out.push_back(make_check("resistance/triangle_inequality", std::max(0.0, tri), 1e-12));
  }

  // Negative semidefiniteness of the path-length kernel on mean-zero vectors.
  {
    auto words = all_words_up_to(2, 4);
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      Eigen::VectorXd xi(words.size());
      for (auto& x : xi) x = gauss(rng);
      worst = std::max(worst, neg_semidefinite_form(words, xi));
    }
    out.push_back(make_check("resistance/neg_semidefinite", std::max(0.0, worst), 1e-10));
  }

  // Covariance Gram matrix is positive semidefinite.
  {
    auto words = all_words_up_to(2, 4);
    words.erase(words.begin());  // drop the root
    Eigen::MatrixXd gram(words.size(), words.size());
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = 0; b < words.size(); ++b)
        gram(a, b) = covariance(words[a], words[b]);
    double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram).eigenvalues().minCoeff();
    out.push_back(make_check("resistance/covariance_psd", std::max(0.0, -min_eig), 1e-10));
  }

  // Independent increments along nested triples.
  {
    double dev = 0;
    std::uniform_int_distribution<int> letter(1, 2), len(0, 2);
    for (int k = 0; k < 500; ++k) {
      Word x;
      for (int j = len(rng); j > 0; --j) x = x.child(letter(rng));
      Word y = x;
      for (int j = len(rng); j > 0; --j) y = y.child(letter(rng));
      Word z = y;
      for (int j = len(rng); j > 0; --j) z = z.child(letter(rng));
      dev = std::max(dev, std::abs(independent_increments_residual(x, y, z)));
    }
    out.push_back(make_check("resistance/independent_increments", dev, 1e-12));
  }
  return out;
}

// ---------------------------------------------------------------------------
// walks
// ---------------------------------------------------------------------------

inline std::vector<Check> verify_walks_suite(const VerifyOptions& opt) {
  std::vector<Check> out;

  for (int n : {1, 2, 3}) {
    // Small closed forms: N_T(2) = N+1, N_T(3) = 2N+1.
    bool small_ok = path_count(n, 0) == 1 && path_count(n, 1) == 1 &&
                    path_count(n, 2) == static_cast<std::uint64_t>(n + 1) &&
                    path_count(n, 3) == static_cast<std::uint64_t>(2 * n + 1);
    out.push_back(make_check("walks/small_counts/N" + std::to_string(n), small_ok ? 0.0 : 1.0,
                             0.0));

    // Matrix-free transition powers reproduce the DP exactly. Depth 8 is
    // enough: a 14-step returning walk never goes deeper than 7.
    double dev = 0;
    TruncatedTree tree(n, 8);
    VertexVector v = VertexVector::Zero(tree.vertex_count());
    v[0] = 1.0;
    for (int steps = 1; steps <= 14; ++steps) {
      v = apply_looped_transition(tree, v);
      double exact = return_probability_exact(n, steps);
      dev = std::max(dev, std::abs(v[0] - exact) / exact);
    }
    out.push_back(make_check("walks/matrix_free_return/N" + std::to_string(n), dev, 1e-12));

    // Delta_T = (N+1) I - (N+1) M on interior vectors.
    double iddev = 0;
    TruncatedTree small(n, 5);
    for (std::int64_t x = 0; x < small.level_offset(small.depth()); ++x) {
      VertexVector e = VertexVector::Zero(small.vertex_count());
      e[x] = 1.0;
      VertexVector lhs = apply_laplacian(small, e);
      VertexVector rhs = (n + 1.0) * e - (n + 1.0) * apply_looped_transition(small, e);
      iddev = std::max(iddev, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    out.push_back(make_check("walks/laplacian_transition_identity/N" + std::to_string(n), iddev,
                             1e-12));
  }

  // Moment identity: integral of x^n dmu_{c+p} = N_T(n)/(2 sqrt N)^n.
  for (int n : {1, 2, 3, 4}) {
    double edge = 2.0 * std::sqrt(double(n));
    double rel = 0;
    for (int k = 0; k <= 16; ++k) {
      double viaq = mu_cp_integral([&](double x) { return std::pow(x, k); }, n);
      double viac = static_cast<double>(path_count(n, k)) / std::pow(edge, k);
      rel = std::max(rel, std::abs(viaq - viac) / std::max(1e-30, std::abs(viac)));
    }
    out.push_back(make_check("walks/moment_identity/N" + std::to_string(n), rel, 1e-10));

    // Root-block Jacobi moments against the exact integer path-count route:
    // <e0, D^k e0> = sum_j binom(k,j) (N+1)^{k-j} (-1)^j N_T(j).
    JacobiMatrix root = jacobi_root_block(n, 18);
    double bridge = 0;
    for (int k = 0; k <= 14; ++k) {
      __int128 sum = 0;
      __int128 binom = 1;
      for (int j = 0; j <= k; ++j) {
        __int128 pw = 1;
        for (int t = 0; t < k - j; ++t) pw *= (n + 1);
        __int128 term = binom * pw * static_cast<__int128>(path_count(n, j));
        sum += (j % 2 == 0) ? term : -term;
        binom = binom * (k - j) / (j + 1);
      }
      double expect = static_cast<double>(sum);
      double direct = jacobi_moment(root, k);
      bridge = std::max(bridge, std::abs(direct - expect) / std::max(1.0, std::abs(expect)));
    }
    out.push_back(make_check("walks/jacobi_path_bridge/N" + std::to_string(n), bridge, 1e-9));
  }

  // Monte Carlo within 4 binomial standard deviations of the exact value.
  for (int n : {1, 2}) {
    double worst_sigma = 0;
    for (int steps = 1; steps <= 10; ++steps) {
      WalkConfig cfg{n, steps, opt.trials, opt.seed + 100 * n + steps};
      WalkResult res = walk_simulate(cfg);
      double p = return_probability_exact(n, steps);
      double sigma = std::sqrt(p * (1.0 - p) / cfg.trials);
      worst_sigma = std::max(worst_sigma, std::abs(res.frequency - p) / sigma);
    }
    out.push_back(make_check("walks/monte_carlo_4sigma/N" + std::to_string(n), worst_sigma, 4.0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// periodic eigenvectors (N = 1 half-line)
// ---------------------------------------------------------------------------

inline std::vector<Check> verify_eigen_suite(const VerifyOptions&) {
  std::vector<Check> out;

  {
    auto p3 = char_poly(3);
    bool ok = p3 == std::vector<std::int64_t>{1, -6, 5, -1};
    out.push_back(make_check("eigen/char_poly_3", ok ? 0.0 : 1.0, 0.0));
  }

  {
    auto [lo, hi] = golden_eigenvalues();
    auto p2 = char_poly(2);
    double dev = std::max(std::abs(eval_poly(p2, lo)), std::abs(eval_poly(p2, hi)));
    dev = std::max(dev, std::abs(lo * hi - 1.0));
    dev = std::max(dev, std::abs(lo + hi - 3.0));
    out.push_back(make_check("eigen/golden_roots", dev, 1e-14));
  }

  {
    auto [lo, hi] = golden_eigenvalues();
    struct Case {
      double lambda;
      int period;
    };
    double res_dev = 0;
    bool periods_ok = true;
    for (Case c : {Case{0.0, 1}, Case{1.0, 6}, Case{lo, 10}, Case{hi, 10}}) {
      Eigen::VectorXd v = eigvec_generate(c.lambda, 200);
      res_dev = std::max(res_dev, eigvec_residual(v, c.lambda));
      auto q = detect_period(v);
      if (!q || *q != c.period) periods_ok = false;
    }
    out.push_back(make_check("eigen/sequence_residual", res_dev, 1e-9));
    out.push_back(make_check("eigen/periods", periods_ok ? 0.0 : 1.0, 0.0));
  }

  // Roots of p_n are eigenvalues with bounded eigenvector sequences.
  {
    double res_dev = 0, bound = 0;
    for (int n = 1; n <= 5; ++n) {
      for (double lambda : poly_roots(char_poly(n))) {
        Eigen::VectorXd v = eigvec_generate(lambda, 200);
        res_dev = std::max(res_dev, eigvec_residual(v, lambda));
        bound = std::max(bound, v.cwiseAbs().maxCoeff());
      }
    }
    out.push_back(make_check("eigen/root_residuals", res_dev, 1e-8));
    out.push_back(make_check("eigen/root_boundedness", bound, 10.0));
  }

  // v_n(lambda) = p_n(lambda) as functions of lambda.
  {
    double dev = 0;
    for (int n = 1; n <= 6; ++n) {
      auto p = char_poly(n);
      for (double lambda : {0.3, 1.7, 2.5, -0.4}) {
        Eigen::VectorXd v = eigvec_generate(lambda, n + 2);
        dev = std::max(dev, std::abs(v[n] - eval_poly(p, lambda)));
      }
    }
    out.push_back(make_check("eigen/poly_vs_sequence", dev, 1e-10));
  }

  // Partial energies grow without bound (linear trend for periodic sequences).
  {
    auto [lo, hi] = golden_eigenvalues();
    bool growing = true;
    for (double lambda : {0.0, 1.0, lo, hi}) {
      Eigen::VectorXd v = eigvec_generate(lambda, 400);
      double e100 = v.head(101).squaredNorm();
      double e200 = v.head(201).squaredNorm();
      double e400 = v.squaredNorm();
      if (!(e200 > 1.5 * e100 && e400 > 1.5 * e200)) growing = false;
    }
    out.push_back(make_check("eigen/energy_growth", growing ? 0.0 : 1.0, 0.0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// lattice
// ---------------------------------------------------------------------------

inline std::vector<Check> verify_lattice_suite(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 3);
  std::normal_distribution<double> gauss;

  struct Shape {
    int d, side;
  };
  for (Shape s : {Shape{1, 16}, Shape{2, 16}, Shape{3, 8}}) {
    LatticeTorus torus(s.d, s.side);
    DftReport rep = dft_verify(torus);
    std::string tag = "/d" + std::to_string(s.d) + "L" + std::to_string(s.side);
    out.push_back(make_check("lattice/plane_wave_residual" + tag, rep.max_residual, 1e-10));
    double range_overshoot =
        std::max(0.0, std::max(-rep.min_eigenvalue, rep.max_eigenvalue - 4.0 * s.d));
    out.push_back(make_check("lattice/symbol_range" + tag, range_overshoot, 1e-12));

    Eigen::VectorXd u(torus.vertex_count()), v(torus.vertex_count());
    for (auto& x : u) x = gauss(rng);
    for (auto& x : v) x = gauss(rng);
    Eigen::VectorXd lu = apply_lattice_laplacian<double>(torus, u);
    Eigen::VectorXd lv = apply_lattice_laplacian<double>(torus, v);
    out.push_back(make_check("lattice/symmetry" + tag, std::abs(u.dot(lv) - lu.dot(v)), 1e-9));
    out.push_back(make_check("lattice/positivity" + tag, std::max(0.0, -v.dot(lv)), 1e-12));
  }

  // Full dense diagonalization matches the symbol multiset at small sizes.
  for (Shape s : {Shape{1, 16}, Shape{2, 5}}) {
    LatticeTorus torus(s.d, s.side);
    std::int64_t count = torus.vertex_count();
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(count, count);
    for (std::int64_t i = 0; i < count; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(count);
      e[i] = 1.0;
      mat.col(i) = apply_lattice_laplacian<double>(torus, e);
    }
    Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(mat).eigenvalues();
    Eigen::VectorXd sym = dft_verify(torus).eigenvalues;
    std::sort(sym.begin(), sym.end());
    out.push_back(make_check("lattice/dense_diagonalization/d" + std::to_string(s.d),
                             (eig - sym).cwiseAbs().maxCoeff(), 1e-10));
  }
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "operators") return verify_operators_suite(opt);
  if (name == "measures") return verify_measures_suite(opt);
  if (name == "cyclic") return verify_cyclic_suite(opt);
  if (name == "resistance") return verify_resistance_suite(opt);
  if (name == "walks") return verify_walks_suite(opt);
  if (name == "eigen") return verify_eigen_suite(opt);
  if (name == "lattice") return verify_lattice_suite(opt);
  if (name == "all") {
    std::vector<Check> out;
    for (const char* s : {"operators", "measures", "cyclic", "resistance", "walks", "eigen",
                          "lattice"}) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace spectral

#endif
