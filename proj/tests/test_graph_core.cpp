#include <doctest.h>

#include "oracles.hpp"
#include "spectral/tree.hpp"
#include "spectral/words.hpp"

using namespace spectral;

TEST_CASE("words: parse, parent, child, printing") {
  Word root;
  CHECK(root.empty());
  CHECK(root.str() == "@");
  CHECK(root.parent() == root);

  Word w = Word::parse("121");
  CHECK(w.length() == 3);
  CHECK(w.letter(0) == 1);
  CHECK(w.letter(2) == 1);
  CHECK(w.str() == "121");
  CHECK(w.parent() == Word::parse("12"));
  CHECK(w.child(3) == Word::parse("1213"));
  CHECK(parent(w) == w.parent());

  CHECK_THROWS_AS(Word::parse("102"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1a"), std::invalid_argument);
  CHECK_THROWS_AS(Word({1, 0}), std::invalid_argument);
}

TEST_CASE("words: children in letter order") {
  auto kids = children(Word::parse("2"), 3);
  REQUIRE(kids.size() == 3);
  CHECK(kids[0] == Word::parse("21"));
  CHECK(kids[2] == Word::parse("23"));
  CHECK_THROWS_AS(children(Word::parse("3"), 2), std::invalid_argument);
}

TEST_CASE("words: prefixes and path lengths") {
  Word a = Word::parse("112");
  Word b = Word::parse("121");
  CHECK(common_prefix_len(a, b) == 1);
  CHECK(tree_path_length(a, b) == 4);
  CHECK(tree_path_length(a, a) == 0);
  CHECK(tree_path_length(Word(), a) == 3);
  // Symmetry
  CHECK(tree_path_length(b, a) == tree_path_length(a, b));
}

TEST_CASE("tree: index/word bijection, levels, parents, children") {
  for (auto [n, d] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{1, 5}}) {
    TruncatedTree tree(n, d);
    std::int64_t expect = 0, level_size = 1;
    for (int k = 0; k <= d; ++k) {
      CHECK(tree.level_size(k) == level_size);
      expect += level_size;
      level_size *= n;
    }
    CHECK(tree.vertex_count() == expect);

    for (std::int64_t i = 0; i < tree.vertex_count(); ++i) {
      Word w = tree.word(i);
      CHECK(tree.index(w) == i);
      CHECK(tree.level_of(i) == w.length());
      if (i > 0) CHECK(tree.word(tree.parent_index(i)) == w.parent());
      if (w.length() < d)
        for (int a = 1; a <= n; ++a) CHECK(tree.word(tree.child_index(i, a)) == w.child(a));
    }
  }
}

TEST_CASE("tree: path length agrees with breadth-first search") {
  TruncatedTree tree(2, 4);
  for (std::int64_t a = 0; a < tree.vertex_count(); a += 3)
    for (std::int64_t b = 0; b < tree.vertex_count(); b += 5)
      CHECK(tree_path_length(tree.word(a), tree.word(b)) == oracles::bfs_distance(tree, a, b));
}

TEST_CASE("tree: conductances and argument validation") {
  TruncatedTree tree(2, 3);
  CHECK(tree.conductance(5) == 1.0);
  tree.set_conductance(5, 2.5);
  CHECK(tree.conductance(5) == 2.5);
  CHECK_THROWS_AS(tree.set_conductance(0, 1.0), std::out_of_range);
  CHECK_THROWS_AS(tree.set_conductance(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(tree.set_conductance(5, -1.0), std::invalid_argument);

  CHECK_THROWS_AS(TruncatedTree(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedTree(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(tree.index(Word::parse("1111")), std::invalid_argument);
  CHECK_THROWS_AS(tree.index(Word::parse("3")), std::invalid_argument);
  CHECK_THROWS_AS(tree.child_index(tree.index(Word::parse("111")), 1), std::out_of_range);
}

TEST_CASE("lattice torus: coordinates, neighbors, wraparound") {
  LatticeTorus torus(2, 4);
  CHECK(torus.vertex_count() == 16);
  for (std::int64_t i = 0; i < torus.vertex_count(); ++i) {
    CHECK(torus.index(torus.coords(i)) == i);
    for (int axis = 0; axis < 2; ++axis) {
      CHECK(torus.neighbor(torus.neighbor(i, axis, +1), axis, -1) == i);
      CHECK(torus.neighbor(i, axis, +1) != i);
    }
  }
  CHECK(torus.index({4, 4}) == torus.index({0, 0}));
  CHECK(torus.index({-1, 0}) == torus.index({3, 0}));
  CHECK_THROWS_AS(LatticeTorus(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(LatticeTorus(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(torus.index({1, 2, 3}), std::invalid_argument);
}
