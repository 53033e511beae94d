#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "spectral/operators.hpp"

using namespace spectral;

namespace {
VertexVector random_vector(const TruncatedTree& tree, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  VertexVector v(tree.vertex_count());
  for (auto& x : v) x = gauss(rng);
  return v;
}
}  // namespace

TEST_CASE("laplacian matches the dense matrix built from adjacency lists") {
  TruncatedTree tree(2, 4);
  auto adj = oracles::tree_adjacency(tree);
  std::int64_t count = tree.vertex_count();
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(count, count);
  for (std::int64_t x = 0; x < count; ++x) {
    for (std::int64_t y : adj[x]) {
      dense(x, x) += 1.0;
      dense(x, y) -= 1.0;
    }
  }
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    VertexVector v = random_vector(tree, rng);
    CHECK((apply_laplacian(tree, v) - dense * v).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("laplacian respects edge conductances") {
  TruncatedTree tree(2, 2);
  std::int64_t one = tree.index(Word::parse("1"));
  tree.set_conductance(one, 3.0);
  VertexVector v = VertexVector::Zero(tree.vertex_count());
  v[one] = 1.0;
  VertexVector lap = apply_laplacian(tree, v);
  // Vertex "1" has the weight-3 parent edge plus two unit child edges.
  CHECK(lap[one] == doctest::Approx(5.0));
  CHECK(lap[0] == doctest::Approx(-3.0));
}

TEST_CASE("shift operators: definitions on basis vectors") {
  TruncatedTree tree(2, 3);
  VertexVector e = VertexVector::Zero(tree.vertex_count());
  std::int64_t w12 = tree.index(Word::parse("12"));
  e[w12] = 1.0;

  VertexVector u = apply_parent_shift(tree, e);
  // (Uv)(x) = v(parent x): mass appears on both children of "12".
  CHECK(u[tree.index(Word::parse("121"))] == 1.0);
  CHECK(u[tree.index(Word::parse("122"))] == 1.0);
  CHECK(u.sum() == 2.0);

  VertexVector s2 = apply_letter_shift(tree, e, 2);
  // (S_2 v)(x) = v(x2): mass moves to "1".
  CHECK(s2[tree.index(Word::parse("1"))] == 1.0);
  CHECK(s2.sum() == 1.0);

  VertexVector s2a = apply_letter_shift_adjoint(tree, e, 2);
  CHECK(s2a[tree.index(Word::parse("122"))] == 1.0);
  CHECK(s2a.sum() == 1.0);

  // Depth-D vertices read zero children, so shift output vanishes there.
  VertexVector deep = VertexVector::Zero(tree.vertex_count());
  deep[tree.index(Word::parse("111"))] = 1.0;
  VertexVector shifted = apply_letter_shift(tree, deep, 1);
  CHECK(shifted[tree.index(Word::parse("11"))] == 1.0);
  CHECK(shifted.sum() == 1.0);
  CHECK(shifted.tail(tree.level_size(3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("adjointness of the shift pairs on random vectors") {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 3}) {
    TruncatedTree tree(n, 4);
    VertexVector u = random_vector(tree, rng);
    VertexVector v = random_vector(tree, rng);
    CHECK(u.dot(apply_parent_shift(tree, v)) ==
          doctest::Approx(apply_parent_shift_adjoint(tree, u).dot(v)).epsilon(1e-12));
    for (int i = 1; i <= n; ++i)
      CHECK(u.dot(apply_letter_shift(tree, v, i)) ==
            doctest::Approx(apply_letter_shift_adjoint(tree, u, i).dot(v)).epsilon(1e-12));
  }
}

TEST_CASE("operator identity report is clean away from the truncation") {
  for (int n : {1, 2, 3}) {
    TruncatedTree tree(n, 5);
    auto rep = verify_operator_identities(tree);
    CHECK(rep.max_deviation() <= 1e-12);
  }
  CHECK_THROWS_AS(verify_operator_identities(TruncatedTree(2, 2)), std::invalid_argument);
}

TEST_CASE("jacobi matrices: dense vs matrix-free, and small moments") {
  JacobiMatrix j = jacobi_root_block(3, 6);
  CHECK(j.diag[0] == 3.0);
  CHECK(j.diag[1] == 4.0);
  CHECK(j.off[0] == doctest::Approx(-std::sqrt(3.0)));

  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(j.size());
  for (auto& x : v) x = gauss(rng);
  CHECK((j.apply(v) - j.dense() * v).cwiseAbs().maxCoeff() < 1e-12);

  // <e0, D e0> = N and <e0, D^2 e0> = N^2 + N by hand.
  for (int n : {1, 2, 4}) {
    JacobiMatrix root = jacobi_root_block(n, 4);
    CHECK(jacobi_moment(root, 0) == doctest::Approx(1.0));
    CHECK(jacobi_moment(root, 1) == doctest::Approx(double(n)));
    CHECK(jacobi_moment(root, 2) == doctest::Approx(double(n) * n + n));
    JacobiMatrix gen = jacobi_generic_block(n, 4);
    CHECK(jacobi_moment(gen, 1) == doctest::Approx(n + 1.0));
  }
  CHECK_THROWS_AS(jacobi_moment(jacobi_root_block(2, 3), 3), std::invalid_argument);
}

TEST_CASE("argument validation") {
  TruncatedTree tree(2, 3);
  VertexVector bad(3);
  CHECK_THROWS_AS(apply_laplacian(tree, bad), std::invalid_argument);
  VertexVector ok = VertexVector::Zero(tree.vertex_count());
  CHECK_THROWS_AS(apply_letter_shift(tree, ok, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_letter_shift(tree, ok, 3), std::invalid_argument);
}
