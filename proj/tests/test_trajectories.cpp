#include <catch2/catch_amalgamated.hpp>

#include "lampkit/construction.hpp"
#include "lampkit/io.hpp"
#include "lampkit/trajectories.hpp"

using namespace lampkit;

TEST_CASE("grid trajectories are straight rows and columns") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 5}, {4, 3}}) {
    BuildResult g = grid(a, b);
    std::vector<Trajectory> ts = trajectories(g.lattice, g.layout);
    REQUIRE((int)ts.size() == (a - 1) + (b - 1));
    for (const Trajectory& t : ts) REQUIRE_FALSE(t.hat);
    TrajectoryOrder T = trajectory_order(g.lattice, g.layout);
    REQUIRE(T.block_count == (a - 1) + (b - 1));
    for (int i = 0; i < T.quotient.n; ++i)
      for (int j = 0; j < T.quotient.n; ++j)
        if (i != j) REQUIRE_FALSE(T.quotient.le(i, j));  // antichain
  }
}

TEST_CASE("trajectories partition the edges") {
  for (const char* text : {"grid 3 4", "grid 2 2; fork 0 0 3", "grid 3 3; fork 1 1 2"}) {
    BuildResult L = build(parse_recipe(text));
    std::vector<Trajectory> ts = trajectories(L.lattice, L.layout);
    size_t total = 0;
    std::vector<bool> seen(L.lattice.covers.size(), false);
    for (const Trajectory& t : ts)
      for (int e : t.edges) {
        REQUIRE_FALSE(seen[e]);
        seen[e] = true;
        ++total;
      }
    REQUIRE(total == L.lattice.covers.size());
  }
}

TEST_CASE("fan trajectories") {
  BuildResult s1 = build(parse_recipe("grid 2 2; fork 0 0 1"));
  TrajectoryOrder T1 = trajectory_order(s1.lattice, s1.layout);
  REQUIRE(T1.trajs.size() == 3);
  int hats = 0;
  int hat_idx = -1;
  for (int i = 0; i < (int)T1.trajs.size(); ++i)
    if (T1.trajs[i].hat) {
      ++hats;
      hat_idx = i;
    }
  REQUIRE(hats == 1);
  // The single hat relates to both straight trajectories, straights to none.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      bool expect = i == hat_idx;
      REQUIRE(T1.sigma[i][j] == expect);
      if (!T1.trajs[i].hat)
        REQUIRE_FALSE(sigma_related(s1.lattice, T1.trajs[i], T1.trajs[j]));
    }

  BuildResult s2 = build(parse_recipe("grid 2 2; fork 0 0 2"));
  TrajectoryOrder T2 = trajectory_order(s2.lattice, s2.layout);
  REQUIRE(T2.trajs.size() == 4);
  int h0 = -1, h1 = -1;
  for (int i = 0; i < 4; ++i)
    if (T2.trajs[i].hat) (h0 < 0 ? h0 : h1) = i;
  REQUIRE(h1 >= 0);
  // Same-lamp hats relate both ways and collapse into one block.
  REQUIRE(T2.sigma[h0][h1]);
  REQUIRE(T2.sigma[h1][h0]);
  REQUIRE(T2.block[h0] == T2.block[h1]);
  REQUIRE(T2.block_count == 3);
}

TEST_CASE("quotient poset matches the lamps and the congruences") {
  for (const char* text :
       {"grid 2 2", "grid 3 3", "grid 2 2; fork 0 0 2", "grid 2 2; fork 0 0 1; fork 0 0 1",
        "grid 3 3; fork 0 0 2; fork 1 0 2", "grid 2 4; fork 0 1 2"}) {
    BuildResult L = build(parse_recipe(text));
    QuotientIsoReport q = check_quotient_iso(L.lattice, L.layout);
    INFO(text);
    REQUIRE(q.block_lamp_bijection);
    REQUIRE(q.order_agrees);
    REQUIRE(q.con_top_matches);
    REQUIRE(q.iso_jir_con);
    REQUIRE(q.ok());
  }
}

TEST_CASE("the raw join-irreducible reading differs in general") {
  // Straight trajectories form an antichain in the quotient, while the
  // nonzero join-irreducible elements of a grid form two chains.
  BuildResult g = grid(3, 3);
  QuotientIsoReport q = check_quotient_iso(g.lattice, g.layout);
  REQUIRE(q.iso_jir_con);
  REQUIRE_FALSE(q.iso_jir_elems);
  // On the square both readings coincide (two singleton chains).
  BuildResult g22 = grid(2, 2);
  REQUIRE(check_quotient_iso(g22.lattice, g22.layout).iso_jir_elems);
}

TEST_CASE("a one-fork wide lattice and its rank-3 extension") {
  // A 4x5 grid with one rank-1 fork: eight trajectories, one hat. Extending
  // by rank 3 at any distributive 4-cell gives four hats and seven straights.
  BuildResult base = build(parse_recipe("grid 4 5; fork 1 1 1"));
  QuotientIsoReport qb = check_quotient_iso(base.lattice, base.layout);
  REQUIRE(qb.trajectory_count == 8);
  REQUIRE(qb.hat_count == 1);

  auto cells = distributive_cells(base.lattice, base.layout);
  REQUIRE_FALSE(cells.empty());
  MultiforkResult ext = multifork(base.lattice, base.layout, cells.front(), 3);
  QuotientIsoReport qe = check_quotient_iso(ext.lattice, ext.layout);
  REQUIRE(qe.trajectory_count == 11);
  REQUIRE(qe.hat_count == 4);
  REQUIRE(qe.trajectory_count - qe.hat_count == 7);
}
