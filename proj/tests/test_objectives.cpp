#include <algorithm>
#include <numeric>

#include "bicvis/layout.hpp"
#include "bicvis/objectives.hpp"
#include "doctest.h"
#include "support/testutil.hpp"

using namespace bicvis;

namespace {

// One cluster with rows {1,2,5} and columns {2,3,4}; under the identity the
// rows split into runs {1,2} and {5} while the columns stay in one run.
struct SplitClusterInstance {
  Biclustering bc{{{{1, 2, 5}, {2, 3, 4}}}};
  Permutation rows = Permutation::identity(5);
  Permutation cols = Permutation::identity(5);
};

}  // namespace

TEST_CASE("proximity is the bounding-box area") {
  SplitClusterInstance fig;
  CHECK(cons(image_of(fig.rows, fig.bc.clusters[0].rows)) == std::vector<IndexRun>{{1, 2}, {5, 5}});
  CHECK(cons(image_of(fig.cols, fig.bc.clusters[0].cols)) == std::vector<IndexRun>{{2, 4}});
  CHECK(score_prox(fig.bc.clusters[0], fig.rows, fig.cols) == 15);

  CHECK(score_prox({{2}, {3}}, Permutation::identity(3), Permutation::identity(3)) == 1);
  testutil::D1 d1;
  const Layout id = Layout::identity(d1.d);
  CHECK(score_prox(d1.bc.clusters[0], id.rows, id.cols) == 4);
  CHECK_THROWS_AS(score_prox(Bicluster{}, id.rows, id.cols), std::invalid_argument);
}

TEST_CASE("f_prox sums cluster bounding boxes") {
  testutil::D1 d1;
  const Layout id = Layout::identity(d1.d);
  CHECK(f_prox(d1.bc, id.rows, id.cols) == 8);
  CHECK(f_prox(Biclustering{}, id.rows, id.cols) == 0);

  // a cluster covering the whole matrix has hull m*n under any layout
  const Biclustering full{{{{1, 2, 3}, {1, 2}}}};
  testutil::TestRng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pr = testutil::random_element_permutation(rng, 3);
    const auto pc = testutil::random_element_permutation(rng, 2);
    CHECK(f_prox(full, pr, pc) == 6);
  }
}

TEST_CASE("consecutive cluster area sums squared rectangle areas") {
  SplitClusterInstance fig;
  CHECK(score_area(fig.bc.clusters[0], fig.rows, fig.cols) == 45);  // (2*3)^2 + (1*3)^2

  // a cluster shown as one a x b rectangle scores (a*b)^2
  const Biclustering rect{{{{1, 2}, {1, 2, 3}}}};
  CHECK(score_area(rect.clusters[0], Permutation::identity(2), Permutation::identity(3)) == 36);

  testutil::D1 d1;
  const Layout id = Layout::identity(d1.d);
  CHECK(score_area(d1.bc.clusters[0], id.rows, id.cols) == 16);
  CHECK(f_area(d1.bc, id.rows, id.cols) == 32);
  CHECK(f_area(Biclustering{}, id.rows, id.cols) == 0);
  const Biclustering two_cells{{{{1}, {1}}, {{2}, {3}}}};
  CHECK(f_area(two_cells, Permutation::identity(2), Permutation::identity(3)) == 2);
}

TEST_CASE("nonzero_block unions the positions of cluster-sharing blocks") {
  // five rows, four clusters; column blocks 2 and 3 relate to different
  // subsets of the row blocks
  const Biclustering bc{{
      {{1, 2, 3}, {1, 2}},
      {{2, 3, 4}, {3}},
      {{5}, {2, 3}},
      {{5}, {4}},
  }};
  const auto d = compute_blocks(bc, 5, 4);
  REQUIRE(d.col_blocks.size() == 4);
  REQUIRE(d.col_blocks[1].members == std::vector<Index>{2});
  REQUIRE(d.col_blocks[2].members == std::vector<Index>{3});
  const Permutation rows = Permutation::identity(5);
  CHECK(nonzero_block(d.col_blocks[1], d.row_blocks, rows) == std::vector<Index>{1, 2, 3, 5});
  CHECK(nonzero_block(d.col_blocks[2], d.row_blocks, rows) == std::vector<Index>{2, 3, 4, 5});

  const Block lonely{Axis::Column, {9}, {}};
  CHECK(nonzero_block(lonely, d.row_blocks, rows).empty());

  testutil::D1 d1;
  const Layout id = Layout::identity(d1.d);
  CHECK(nonzero_block(d1.d.row_blocks[0], d1.d.col_blocks, id.cols) == std::vector<Index>{1, 2});
}

TEST_CASE("f_unint rewards long uninterrupted cluster stretches") {
  testutil::D1 d1;
  CHECK(f_unint(d1.d, Layout::identity(d1.d)) == 56);

  const auto empty_d = compute_blocks(Biclustering{}, 3, 3);
  CHECK(f_unint(empty_d, Layout::identity(empty_d)) == 0);

  const Biclustering full{{{{1, 2}, {1, 2, 3}}}};
  const auto full_d = compute_blocks(full, 2, 3);
  CHECK(f_unint(full_d, Layout::identity(full_d)) == 36 + 36);
}

TEST_CASE("f_unint agrees with the oracle on random block layouts") {
  testutil::TestRng rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = rng.in_range(1, 10);
    const int n = rng.in_range(1, 10);
    const auto bc = testutil::random_biclustering(rng, m, n, 4);
    const auto d = compute_blocks(bc, m, n);
    const Layout layout = random_layout(d, rng.next());
    CHECK(f_unint(d, layout) == oracle::f_unint(bc, m, n, layout.rows, layout.cols));
  }
}

TEST_CASE("demerit counts one-sided cluster memberships") {
  testutil::D1 d1;
  const auto& rb = d1.d.row_blocks;  // {1,2} sig {1}; {3,4} sig {2}
  const auto& cb = d1.d.col_blocks;  // {1} sig {1}; {2} sig {1,2}; {3} sig {2}; {4} sig {}
  CHECK(demerit_triple(rb[0], cb[0], cb[1]) == 0);  // both share cluster 1
  CHECK(demerit_triple(rb[0], cb[0], cb[2]) == 4);  // cluster 2 side is empty
  CHECK(demerit_triple(rb[0], cb[1], cb[1]) == 0);  // identical, non-empty intersection

  CHECK(pair_weight(cb[0], cb[2], d1.d.row_blocks) == 8);
  CHECK(pair_weight(cb[0], cb[2], d1.d.row_blocks) == pair_weight(cb[2], cb[0], d1.d.row_blocks));
  CHECK(pair_weight(cb[1], cb[1], d1.d.row_blocks) == 0);

  std::vector<int> identity_order = {0, 1, 2, 3};
  const Score lib = demerit_perm(identity_order, d1.d.col_blocks, d1.d.row_blocks);
  CHECK(lib == 14);  // 0+4+2 seen from rows {1,2}, 4+0+4 seen from rows {3,4}
  const auto ocols = oracle::blocks(d1.bc, 4, false);
  CHECK(lib == oracle::demerit_of_order(ocols, oracle::blocks(d1.bc, 4, true)));
  CHECK(demerit_perm(std::vector<int>{2}, d1.d.col_blocks, d1.d.row_blocks) == 0);
}

TEST_CASE("demerit symmetry and reversal invariance") {
  testutil::TestRng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.in_range(1, 10);
    const int n = rng.in_range(2, 10);
    const auto bc = testutil::random_biclustering(rng, m, n, 4);
    const auto d = compute_blocks(bc, m, n);
    const auto& cb = d.col_blocks;
    const Block& base = d.row_blocks[static_cast<std::size_t>(
        rng.below(static_cast<int>(d.row_blocks.size())))];
    const Block& x = cb[static_cast<std::size_t>(rng.below(static_cast<int>(cb.size())))];
    const Block& y = cb[static_cast<std::size_t>(rng.below(static_cast<int>(cb.size())))];
    CHECK(demerit_triple(base, x, y) == demerit_triple(base, y, x));

    const Layout layout = random_layout(d, rng.next());
    std::vector<int> reversed = layout.col_order;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(demerit_perm(layout.col_order, cb, d.row_blocks) ==
          demerit_perm(reversed, cb, d.row_blocks));
  }
}

TEST_CASE("partial scores restrict to placed blocks") {
  testutil::D1 d1;
  const std::vector<int> no_rows;
  const std::vector<int> no_cols;
  for (ObjectiveKind kind : kAllObjectives) {
    CHECK(partial_score(kind, no_rows, no_cols, d1.bc, d1.d) == 0);
  }

  // rows {1,2} placed; column blocks {1} and {2} placed: cluster 1 restricts
  // to a full 2x2 rectangle, cluster 2 loses all rows
  const std::vector<int> placed_rows = {0};
  const std::vector<int> placed_cols = {0, 1};
  CHECK(partial_score(ObjectiveKind::ConsecutiveClusterArea, placed_rows, placed_cols, d1.bc,
                      d1.d) == 16);
}

TEST_CASE("partial score with everything placed equals the full objective") {
  testutil::TestRng rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = rng.in_range(1, 10);
    const int n = rng.in_range(1, 10);
    const auto bc = testutil::random_biclustering(rng, m, n, 4);
    const auto d = compute_blocks(bc, m, n);
    const Layout layout = random_layout(d, rng.next());
    for (ObjectiveKind kind : kAllObjectives) {
      CHECK(partial_score(kind, layout.row_order, layout.col_order, bc, d) ==
            evaluate_objective(kind, bc, d, layout));
    }
  }
}

TEST_CASE("area conservation and extremal bounds") {
  testutil::TestRng rng(105);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = rng.in_range(1, 12);
    const int n = rng.in_range(1, 12);
    const auto bc = testutil::random_biclustering(rng, m, n, 4);
    const auto d = compute_blocks(bc, m, n);
    const Layout layout = random_layout(d, rng.next());
    for (const Bicluster& cl : bc.clusters) {
      const Score cells =
          static_cast<Score>(cl.rows.size()) * static_cast<Score>(cl.cols.size());
      CHECK(oracle::unsquared_area(cl, layout.rows, layout.cols) == cells);

      const bool single_runs = cons(image_of(layout.rows, cl.rows)).size() == 1 &&
                               cons(image_of(layout.cols, cl.cols)).size() == 1;
      const Score prox = score_prox(cl, layout.rows, layout.cols);
      CHECK(prox >= cells);
      CHECK((prox == cells) == single_runs);
      const Score area = score_area(cl, layout.rows, layout.cols);
      CHECK(area <= cells * cells);
      CHECK((area == cells * cells) == single_runs);
    }
  }
}

TEST_CASE("scores depend on the element order, not on block labels") {
  testutil::TestRng rng(106);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = rng.in_range(2, 10);
    const int n = rng.in_range(2, 10);
    const auto bc = testutil::random_biclustering(rng, m, n, 4);
    const auto d = compute_blocks(bc, m, n);
    const Layout layout = random_layout(d, rng.next());

    // relabel row blocks with a random shuffle and adjust the order so the
    // element permutation is untouched
    BlockDecomposition relabeled = d;
    std::vector<int> tau(d.row_blocks.size());
    std::iota(tau.begin(), tau.end(), 0);
    for (std::size_t i = tau.size(); i > 1; --i) {
      std::swap(tau[i - 1], tau[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
    }
    for (std::size_t i = 0; i < tau.size(); ++i) {
      relabeled.row_blocks[static_cast<std::size_t>(tau[i])] = d.row_blocks[i];
    }
    std::vector<int> relabeled_order;
    relabeled_order.reserve(layout.row_order.size());
    for (int id : layout.row_order) relabeled_order.push_back(tau[static_cast<std::size_t>(id)]);
    const Layout relabeled_layout =
        Layout::from_block_orders(relabeled, relabeled_order, layout.col_order);

    REQUIRE(relabeled_layout.rows == layout.rows);
    for (ObjectiveKind kind : kAllObjectives) {
      CHECK(evaluate_objective(kind, bc, relabeled, relabeled_layout) ==
            evaluate_objective(kind, bc, d, layout));
    }
  }
}

TEST_CASE("f_unint rejects a non-contiguous hand-built layout") {
  testutil::D1 d1;
  Layout broken = Layout::identity(d1.d);
  broken.rows = Permutation({1, 3, 2, 4});  // splits row block {1,2}
  CHECK_THROWS_AS(f_unint(d1.d, broken), std::invalid_argument);
}
