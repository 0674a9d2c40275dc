#include <doctest.h>

#include "hyperqueens/domination.hpp"
#include "hyperqueens/errors.hpp"
#include "oracles.hpp"

using namespace hyperqueens;

TEST_CASE("placement keeps queens sorted and unique") {
  const BoardSpec b(2, 4);
  Placement p(b, {{3, 2}, {0, 0}, {3, 2}});
  CHECK(p.size() == 2);
  CHECK(p.cells() == std::vector<CellIndex>{0, 11});
  CHECK_THROWS_AS(Placement(b, {{4, 0}}), InvalidArgument);
}

TEST_CASE("coverage") {
  CHECK(coverage(Placement(BoardSpec(3, 3), {{1, 1, 1}})).count() == 27);
  CHECK(coverage(Placement(BoardSpec(2, 4))).count() == 0);
  CHECK(coverage(Placement(BoardSpec(2, 2), {{0, 0}})).count() == 4);

  // Duplicates collapse, and adding a queen never clears a bit.
  const BoardSpec b(3, 4);
  Placement p(b);
  CoverageMask before = coverage(p);
  for (CellIndex c : {5u, 17u, 5u, 40u, 63u}) {
    p = p.with(decode(b, c));
    CoverageMask after = coverage(p);
    CHECK(before.bits().is_subset_of(after.bits()));
    before = after;
  }
  CHECK(p.size() == 4);
}

TEST_CASE("is_dominating") {
  CHECK(is_dominating(Placement(BoardSpec(2, 3), {{1, 1}})));
  CHECK(is_dominating(Placement(BoardSpec(4, 1), {{0, 0, 0, 0}})));

  const BoardSpec b42(2, 4);
  const Placement corner(b42, {{0, 0}});
  CHECK_FALSE(is_dominating(corner));
  CHECK_FALSE(coverage(corner).test(encode(b42, {1, 3})));
  // Pairwise scan agrees that (1,3) is the kind of cell left uncovered.
  CHECK_FALSE(oracle::steps_to({0, 0}, {1, 3}, 4));
}

TEST_CASE("lower bound") {
  CHECK(domination_lower_bound(8, 3) == 5);
  CHECK(domination_lower_bound(3, 3) == 1);
  CHECK(domination_lower_bound(14, 3) == 16);
  CHECK(domination_lower_bound(1, 1) == 1);
  CHECK(domination_lower_bound(5, 1) == 1);
  CHECK_THROWS_AS(domination_lower_bound(0, 3), InvalidArgument);
  CHECK_THROWS_AS(domination_lower_bound(1u << 20, 5), OverflowError);
}

TEST_CASE("reported upper bound") {
  CHECK(reported_upper_bound(8, 2) == 4);
  CHECK(reported_upper_bound(3, 3) == 3);
  CHECK(reported_upper_bound(8, 3) == 22);
  CHECK(reported_upper_bound(3, 2) == 2);
  CHECK_THROWS_AS(reported_upper_bound(1u << 22, 4), OverflowError);
}

TEST_CASE("insufficiency") {
  CHECK(insufficiency_check({14, 3, 1}));
  CHECK_FALSE(insufficiency_check({13, 3, 1}));
  CHECK(insufficiency_check({7, 4, 1}));
  CHECK_FALSE(insufficiency_check({1000, 3, 2}));
  CHECK_THROWS_AS(insufficiency_check({5, 3, 3}), InvalidArgument);
  CHECK_THROWS_AS(insufficiency_check({5, 3, -1}), InvalidArgument);

  CHECK(min_insufficient_n(3, 1) == 14);
  CHECK(min_insufficient_n(4, 1) == 7);
  CHECK(min_insufficient_n(4, 2) == 41);
  CHECK_THROWS_AS(min_insufficient_n(4, 3), InvalidArgument);
  CHECK_THROWS_AS(min_insufficient_n(1, 0), InvalidArgument);

  // The threshold is the first n where the check flips, by linear scan.
  for (int d = 2; d <= 6; ++d) {
    for (int k = 0; k <= d - 2; ++k) {
      const auto t = min_insufficient_n(d, k);
      CHECK(insufficiency_check({t, d, k}));
      if (t > 1) CHECK_FALSE(insufficiency_check({t - 1, d, k}));
    }
  }
  CHECK(min_insufficient_n(30, 0) > 1);
}

TEST_CASE("insufficiency agrees with the lower bound") {
  for (int d = 3; d <= 5; ++d) {
    for (std::uint64_t n = 1; n <= 50; ++n) {
      if (insufficiency_check({n, d, 1})) CHECK(domination_lower_bound(n, d) > n);
    }
  }
}

TEST_CASE("greedy dominating") {
  auto g3 = greedy_dominating(BoardSpec(2, 3));
  CHECK(g3.size() == 1);
  CHECK(is_dominating(g3));

  auto g1 = greedy_dominating(BoardSpec(1, 1));
  CHECK(g1.queens() == std::vector<Position>{{0}});

  auto g5 = greedy_dominating(BoardSpec(2, 5));
  CHECK(g5.size() <= 5);
  CHECK(is_dominating(g5));

  for (auto [d, n] : {std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 3}, std::pair{2, 9}}) {
    auto g = greedy_dominating(BoardSpec(d, n));
    CHECK(is_dominating(g));
    CHECK(g.cells() == greedy_dominating(BoardSpec(d, n)).cells());
  }
}

TEST_CASE("min_dominating small cases") {
  auto r3 = min_dominating(BoardSpec(2, 3));
  CHECK(r3.status == SolveStatus::optimal);
  CHECK(r3.gamma == 1);

  auto r1 = min_dominating(BoardSpec(3, 1));
  CHECK(r1.gamma == 1);
  CHECK(r1.witness.queens() == std::vector<Position>{{0, 0, 0}});

  auto r4 = min_dominating(BoardSpec(2, 4));
  CHECK(r4.gamma == static_cast<std::uint64_t>(oracle::brute_gamma(4, 2)));
}

TEST_CASE("min_dominating matches brute force where n^d <= 64") {
  for (auto [d, n] : {std::pair{1, 5}, std::pair{2, 2}, std::pair{2, 5}, std::pair{2, 6},
                      std::pair{2, 7}, std::pair{2, 8}, std::pair{3, 2}, std::pair{3, 3},
                      std::pair{3, 4}, std::pair{4, 2}, std::pair{6, 2}}) {
    CAPTURE(d);
    CAPTURE(n);
    const BoardSpec board(d, n);
    auto r = min_dominating(board);
    REQUIRE(r.status == SolveStatus::optimal);
    REQUIRE(r.gamma.has_value());
    if (board.cell_count() <= 49) CHECK(*r.gamma == static_cast<std::uint64_t>(oracle::brute_gamma(n, d)));
    CHECK(is_dominating(r.witness));
    CHECK(r.witness.size() == *r.gamma);
    CHECK(domination_lower_bound(static_cast<std::uint64_t>(n), d) <= *r.gamma);
    CHECK(*r.gamma <= greedy_dominating(board).size());
    CHECK(r.lb <= *r.gamma);
    CHECK(*r.gamma <= r.ub);
  }
}

TEST_CASE("known 2-D queen domination numbers") {
  // 8x8 needs five queens.
  const std::uint64_t expected[] = {1, 1, 1, 2, 3, 3, 4, 5};
  for (int n = 1; n <= 8; ++n) {
    CHECK(min_dominating(BoardSpec(2, n)).gamma == expected[n - 1]);
  }
}

TEST_CASE("prunes never cut a feasible branch") {
  for (auto [d, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{2, 6}, std::pair{2, 7}, std::pair{3, 3},
                      std::pair{3, 4}, std::pair{4, 2}}) {
    CAPTURE(d);
    CAPTURE(n);
    const BoardSpec board(d, n);
    DominationOptions plain;
    plain.reach_prune = false;
    plain.gain_prune = false;
    plain.start_at_lower_bound = false;
    const auto base = min_dominating(board, plain);
    REQUIRE(base.status == SolveStatus::optimal);

    DominationOptions reach_only = plain;
    reach_only.reach_prune = true;
    DominationOptions gain_only = plain;
    gain_only.gain_prune = true;
    for (const auto& opts : {reach_only, gain_only, DominationOptions{}}) {
      const auto r = min_dominating(board, opts);
      CHECK(r.gamma == base.gamma);
      CHECK(is_dominating(r.witness));
      CHECK(r.nodes_explored <= base.nodes_explored);
    }
  }
}

TEST_CASE("node budget degrades to bounds-only") {
  const BoardSpec board(2, 8);
  DominationOptions opts;
  opts.node_budget = 10;
  const auto r = min_dominating(board, opts);
  CHECK(r.status == SolveStatus::bounds_only);
  CHECK_FALSE(r.gamma.has_value());
  CHECK(r.nodes_explored <= 10);
  CHECK(r.lb <= r.ub);
  CHECK(r.lb <= 5);
  CHECK(is_dominating(r.witness));
  CHECK(r.witness.size() == r.ub);

  const auto again = min_dominating(board, opts);
  CHECK(again.lb == r.lb);
  CHECK(again.witness.cells() == r.witness.cells());
}

TEST_CASE("min_dominating is deterministic") {
  const BoardSpec board(3, 4);
  const auto a = min_dominating(board);
  const auto b = min_dominating(board);
  CHECK(a.witness.cells() == b.witness.cells());
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("board of size three is dominated by its center") {
  for (int d = 1; d <= 4; ++d) {
    const BoardSpec board(d, 3);
    CHECK(min_dominating(board).gamma == 1);
    CHECK(is_dominating(Placement(board, {Position(std::vector<int>(static_cast<std::size_t>(d), 1))})));
  }
}

TEST_CASE("no four queens dominate the 8x8 board (exhaustive)") {
  // 64 cells fit one word: cover[c] is the bitmask a queen on c covers.
  std::uint64_t cover[64];
  for (std::uint64_t c = 0; c < 64; ++c) {
    cover[c] = std::uint64_t{1} << c;
    for (auto a : oracle::scan_attacked(c, 8, 2)) cover[c] |= std::uint64_t{1} << a;
  }
  bool any = false;
  oracle::for_each_subset(64, 4, [&](const std::vector<std::uint64_t>& s) {
    any = (cover[s[0]] | cover[s[1]] | cover[s[2]] | cover[s[3]]) == ~std::uint64_t{0};
    return any;
  });
  CHECK_FALSE(any);
  const auto r = min_dominating(BoardSpec(2, 8));
  CHECK(r.gamma == 5);
  CHECK(is_dominating(r.witness));
}
