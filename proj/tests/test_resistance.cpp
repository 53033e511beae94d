#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectral/resistance.hpp"

using namespace spectral;

TEST_CASE("closed-form potential equals the pinned dense solve") {
  TruncatedTree tree(2, 4);
  for (std::int64_t t = 1; t < tree.level_offset(4); ++t) {  // targets up to depth 3
    Word target = tree.word(t);
    VertexVector closed = potential(target, tree);
    // Pin the root to its closed-form value; the solution is then unique.
    Eigen::VectorXd solved = oracles::solve_potential(tree, t, 0, closed[0]);
    CHECK((closed - solved).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK_THROWS_AS(potential(Word(), tree), std::invalid_argument);
  CHECK_THROWS_AS(potential(Word::parse("1111"), tree), std::invalid_argument);
}

TEST_CASE("potential values: explicit small case") {
  TruncatedTree tree(2, 3);
  VertexVector v = potential(Word::parse("12"), tree);
  CHECK(v[tree.index(Word())] == 2.0);
  CHECK(v[tree.index(Word::parse("1"))] == 1.0);
  CHECK(v[tree.index(Word::parse("12"))] == 0.0);
  CHECK(v[tree.index(Word::parse("121"))] == 0.0);  // below the target: same value
  CHECK(v[tree.index(Word::parse("2"))] == 2.0);    // off the path: root value
}

TEST_CASE("energy form: identity with the laplacian and the pairing rule") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  TruncatedTree tree(2, 5);
  std::int64_t interior_end = tree.level_offset(tree.depth());
  for (int rep = 0; rep < 10; ++rep) {
    VertexVector u = VertexVector::Zero(tree.vertex_count());
    for (std::int64_t i = 0; i < interior_end; ++i) u[i] = gauss(rng);
    CHECK(energy(u, u, tree) ==
          doctest::Approx(2.0 * u.dot(apply_laplacian(tree, u))).epsilon(1e-10));
    CHECK(energy(u, u, tree) >= 0.0);
  }
  // Pairing with a potential picks out boundary values: E(v_target, u) = 2(u(root) - u(target)).
  Word target = Word::parse("21");
  VertexVector v = potential(target, tree);
  VertexVector u = VertexVector::Zero(tree.vertex_count());
  for (std::int64_t i = 0; i < interior_end; ++i) u[i] = gauss(rng);
  CHECK(energy(v, u, tree) ==
        doctest::Approx(2.0 * (u[0] - u[tree.index(target)])).epsilon(1e-10));
}

TEST_CASE("resistance distance: closed form, potentials, BFS oracle") {
  TruncatedTree tree(3, 4);
  for (std::int64_t a = 0; a < tree.vertex_count(); a += 7) {
    for (std::int64_t b = 0; b < tree.vertex_count(); b += 11) {
      Word wa = tree.word(a), wb = tree.word(b);
      double d = resistance_dist(wa, wb);
      CHECK(d == doctest::Approx(std::sqrt(2.0 * oracles::bfs_distance(tree, a, b))));
      CHECK(d == doctest::Approx(resistance_dist_via_potentials(wa, wb)));
    }
  }
  CHECK(resistance_dist(Word::parse("12"), Word::parse("2")) == doctest::Approx(std::sqrt(6.0)));
  CHECK(resistance_dist(Word(), Word()) == 0.0);
}

TEST_CASE("covariance: common prefix rule and PSD on a small family") {
  CHECK(covariance(Word::parse("112"), Word::parse("11")) == 4.0);
  CHECK(covariance(Word::parse("1"), Word::parse("2")) == 0.0);
  CHECK_THROWS_AS(covariance(Word(), Word::parse("1")), std::invalid_argument);

  std::vector<Word> pts{Word::parse("1"), Word::parse("2"), Word::parse("11"),
                        Word::parse("12"), Word::parse("122")};
  Eigen::MatrixXd gram(pts.size(), pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) gram(a, b) = covariance(pts[a], pts[b]);
  double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram).eigenvalues().minCoeff();
  CHECK(min_eig >= -1e-12);
}

TEST_CASE("path-length kernel: negative on mean-zero vectors, hand-checked pair") {
  std::vector<Word> two{Word::parse("1"), Word::parse("2")};
  Eigen::VectorXd xi(2);
  xi << 1.0, -1.0;
  // sum_{a,b} xi_a l(a,b) xi_b = -2 l("1","2") = -4.
  CHECK(neg_semidefinite_form(two, xi) == doctest::Approx(-4.0));

  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  std::vector<Word> pts{Word(),           Word::parse("1"),   Word::parse("2"),
                        Word::parse("11"), Word::parse("21"), Word::parse("212")};
  for (int rep = 0; rep < 200; ++rep) {
    Eigen::VectorXd v(pts.size());
    for (auto& x : v) x = gauss(rng);
    CHECK(neg_semidefinite_form(pts, v) <= 1e-10);
  }
}

TEST_CASE("independent increments along nested words") {
  Word x = Word::parse("1");
  Word y = Word::parse("12");
  Word z = Word::parse("1221");
  CHECK(independent_increments_residual(x, y, z) == 0.0);
  CHECK(independent_increments_residual(Word(), y, z) == 0.0);
  CHECK_THROWS_AS(independent_increments_residual(y, x, z), std::invalid_argument);
}
