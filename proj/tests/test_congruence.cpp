#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "lampkit/congruence.hpp"
#include "lampkit/construction.hpp"
#include "lampkit/io.hpp"
#include "lampkit/lamps.hpp"

using namespace lampkit;

namespace {

FiniteLattice chain(int k) {
  std::vector<CoverPair> cv;
  for (int i = 0; i + 1 < k; ++i) cv.emplace_back(i, i + 1);
  return build_lattice(k, cv);
}

Poset lattice_order_poset(const FiniteLattice& L) {
  std::vector<std::pair<int, int>> rel;
  for (Elem x = 0; x < L.n; ++x)
    for (Elem y = 0; y < L.n; ++y)
      if (L.lt(x, y)) rel.emplace_back(x, y);
  return poset_from_relations(L.n, rel);
}

}  // namespace

TEST_CASE("principal congruence basics") {
  BuildResult g = grid(2, 3);
  const FiniteLattice& L = g.lattice;
  REQUIRE(principal_congruence(L, 2, 2) == identity_congruence(L));
  Congruence all = principal_congruence(L, L.bottom, L.top);
  REQUIRE(all.block_count() == 1);
  for (auto [p, q] : L.covers) REQUIRE(is_congruence(L, principal_congruence(L, p, q)));
}

TEST_CASE("congruence blocks are order convex") {
  BuildResult s2 = build(parse_recipe("grid 2 2; fork 0 0 2"));
  const FiniteLattice& L = s2.lattice;
  for (auto [p, q] : L.covers) {
    Congruence c = principal_congruence(L, p, q);
    for (Elem x = 0; x < L.n; ++x)
      for (Elem y = 0; y < L.n; ++y) {
        if (!c.same(x, y) || !L.le(x, y)) continue;
        for (Elem z = 0; z < L.n; ++z)
          if (L.le(x, z) && L.le(z, y)) REQUIRE(c.same(x, z));
      }
  }
}

TEST_CASE("closure does not depend on the sweep order") {
  BuildResult s2 = build(parse_recipe("grid 2 2; fork 0 0 2"));
  const FiniteLattice& L = s2.lattice;
  std::mt19937 rng(123);
  std::vector<Elem> order(L.n);
  std::iota(order.begin(), order.end(), 0);
  for (auto [p, q] : L.covers) {
    Congruence base = principal_congruence(L, p, q);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(order.begin(), order.end(), rng);
      REQUIRE(principal_congruence(L, p, q, &order) == base);
    }
  }
}

TEST_CASE("grid congruence lattices are boolean") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}}) {
    BuildResult g = grid(a, b);
    JirCon jc = jir_con(g.lattice);
    REQUIRE((int)jc.members.size() == (a - 1) + (b - 1));
    // antichain
    for (int i = 0; i < jc.poset.n; ++i)
      for (int j = 0; j < jc.poset.n; ++j)
        if (i != j) REQUIRE_FALSE(jc.poset.le(i, j));
    REQUIRE(con_count(g.lattice, jc) == (uint64_t{1} << ((a - 1) + (b - 1))));
  }
}

TEST_CASE("chains collapse edge by edge") {
  for (int k = 2; k <= 6; ++k) {
    FiniteLattice C = chain(k);
    REQUIRE(con_count(C) == (uint64_t{1} << (k - 1)));
  }
}

TEST_CASE("fans have three join-irreducible congruences") {
  for (int n = 1; n <= 4; ++n) {
    BuildResult sn = build(parse_recipe("grid 2 2; fork 0 0 " + std::to_string(n)));
    REQUIRE(jir_con(sn.lattice).members.size() == 3);
  }
}

TEST_CASE("tube and lamp generate the same congruence") {
  for (int n = 2; n <= 4; ++n) {
    BuildResult sn = build(parse_recipe("grid 2 2; fork 0 0 " + std::to_string(n)));
    const Lamp& I = [&]() -> Lamp {
      for (const Lamp& J : lamps(sn.lattice, sn.layout))
        if (J.internal()) return J;
      throw std::runtime_error("no internal lamp");
    }();
    Congruence via_lamp = principal_congruence(sn.lattice, I.foot, I.peak);
    for (Elem m : I.tubes)
      REQUIRE(principal_congruence(sn.lattice, m, I.peak) == via_lamp);
  }
}

TEST_CASE("join closure agrees with the exhaustive partition oracle") {
  std::vector<FiniteLattice> tiny;
  tiny.push_back(grid(2, 2).lattice);
  tiny.push_back(grid(2, 3).lattice);
  tiny.push_back(build(parse_recipe("grid 2 2; fork 0 0 1")).lattice);  // 7 elements
  tiny.push_back(chain(5));
  tiny.push_back(build_lattice({{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}}));  // pentagon
  tiny.push_back(build_lattice({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));  // diamond
  for (const FiniteLattice& L : tiny) REQUIRE(con_count(L) == con_count_exhaustive(L));
}

TEST_CASE("explicit congruence lattice is the Birkhoff image of its atoms") {
  BuildResult g = grid(3, 3);
  ConLattice cl = con_lattice(g.lattice);
  REQUIRE(cl.lattice.n == 16);
  JirCon jc = jir_con(g.lattice);
  DownsetLattice dl = downset_lattice(jc.poset);
  REQUIRE(poset_isomorphic(lattice_order_poset(cl.lattice), lattice_order_poset(dl.lattice)));

  BuildResult s1 = build(parse_recipe("grid 2 2; fork 0 0 1"));
  REQUIRE(con_lattice(s1.lattice).lattice.n == 5);
  try {
    con_lattice(grid(2, 8).lattice, 16);
    FAIL("expected BoundTooLarge");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::BoundTooLarge);
  }
}
