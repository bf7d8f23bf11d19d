#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lampkit/verify.hpp"

using namespace lampkit;

TEST_CASE("the full battery passes on a small enumeration") {
  std::ostringstream os;
  VerifySummary s = run_verify(EnumBounds{14, 2, 2}, os);
  REQUIRE(s.lattices > 30);
  REQUIRE(s.failures == 0);
  REQUIRE(os.str().find("FAIL") == std::string::npos);
}

TEST_CASE("verify output is deterministic") {
  std::ostringstream a, b;
  run_verify(EnumBounds{12, 2, 2}, a);
  run_verify(EnumBounds{12, 2, 2}, b);
  REQUIRE(a.str() == b.str());
  // every line carries a replayable recipe
  std::istringstream in(a.str());
  std::string line;
  int with_recipe = 0, lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    if (line.find("recipe: grid") != std::string::npos) ++with_recipe;
  }
  REQUIRE(with_recipe == lines - 1);  // all but the tally line
}

TEST_CASE("deliberate corruption is detected") {
  // A negative control for the isomorphism machinery: compare the lamp count
  // against a poset with one member dropped and against a rewired order.
  BuildResult s2 = build(parse_recipe("grid 2 2; fork 0 0 2"));
  LampPoset LP = lamp_poset(s2.lattice, s2.layout);
  JirCon jc = jir_con(s2.lattice);
  REQUIRE((int)jc.members.size() == (int)LP.lamps.size());

  Poset dropped = poset_from_relations(jc.poset.n - 1, {});
  REQUIRE_FALSE(poset_isomorphic(dropped, jc.poset));
  // rewire: make the two maxima comparable
  Poset rewired = poset_from_relations(3, {{0, 1}, {0, 2}, {1, 2}});
  REQUIRE_FALSE(poset_isomorphic(rewired, jc.poset));
}

TEST_CASE("main-lemma verdict with diff on corruption") {
  BuildResult s2 = build(parse_recipe("grid 2 2; fork 0 0 2"));
  MainLemmaReport good = check_main_lemma(s2.lattice, s2.layout);
  REQUIRE(good.ok());
  REQUIRE(good.diff.empty());

  // Negative control: rewire the lamp order so a boundary lamp sits below
  // the internal one; the comparison must fail and say where.
  LampPoset LP = lamp_poset(s2.lattice, s2.layout);
  JirCon jc = jir_con(s2.lattice);
  LampPoset corrupted = LP;
  int internal = -1, boundary = -1;
  for (int i = 0; i < (int)LP.lamps.size(); ++i)
    (LP.lamps[i].internal() ? internal : boundary) = i;
  std::vector<std::pair<int, int>> rel = {{boundary, internal}};
  corrupted.poset = poset_from_relations((int)LP.lamps.size(), rel);
  MainLemmaReport bad =
      compare_lamp_poset_to_jir(s2.lattice, s2.layout, corrupted, jc);
  REQUIRE_FALSE(bad.ok());
  REQUIRE_FALSE(bad.diff.empty());
}
