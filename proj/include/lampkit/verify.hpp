#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lampkit/congruence.hpp"
#include "lampkit/construction.hpp"
#include "lampkit/io.hpp"
#include "lampkit/lamps.hpp"
#include "lampkit/properties.hpp"
#include "lampkit/trajectories.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// The lamp order against the congruence oracle: the map sending a lamp to
// the congruence generated by its foot/peak interval must be a bijection
// onto the join-irreducible congruences and an order isomorphism, and every
// cover of the lamp order must already lie in rho_alg.
// ---------------------------------------------------------------------------

struct MainLemmaReport {
  bool phi_defined = true;    // every lamp congruence is join-irreducible
  bool phi_bijective = true;
  bool phi_order_iso = true;
  bool covers_in_rho_alg = true;
  std::vector<std::string> diff;

  bool ok() const {
    return phi_defined && phi_bijective && phi_order_iso && covers_in_rho_alg;
  }
};

inline MainLemmaReport compare_lamp_poset_to_jir(const FiniteLattice& L, const Layout& lay,
                                                 const LampPoset& LP, const JirCon& jc) {
  MainLemmaReport rep;
  int k = (int)LP.lamps.size();
  std::vector<int> image(k, -1);
  for (int i = 0; i < k; ++i) {
    Congruence c = principal_congruence(L, LP.lamps[i].foot, LP.lamps[i].peak);
    EdgeMask m = collapsed_edges(L, c);
    for (int g = 0; g < (int)jc.masks.size(); ++g)
      if (jc.masks[g] == m) image[i] = g;
    if (image[i] < 0) {
      rep.phi_defined = false;
      rep.diff.push_back("lamp " + std::to_string(i) +
                         " generates a congruence outside the join-irreducibles");
    }
  }
  if ((int)jc.members.size() != k) {
    rep.phi_bijective = false;
    rep.diff.push_back("lamp count " + std::to_string(k) + " vs " +
                       std::to_string(jc.members.size()) + " join-irreducible congruences");
  }
  if (rep.phi_defined) {
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      rep.phi_bijective = false;
      rep.diff.push_back("two lamps generate the same congruence");
    }
  }
  if (rep.phi_defined && rep.phi_bijective)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (LP.poset.le(i, j) != jc.poset.le(image[i], image[j])) {
          rep.phi_order_iso = false;
          rep.diff.push_back("order mismatch on lamps (" + std::to_string(i) + "," +
                             std::to_string(j) + "): lamp order says " +
                             (LP.poset.le(i, j) ? "<=" : "||") +
                             ", congruences say " +
                             (jc.poset.le(image[i], image[j]) ? "<=" : "||"));
        }
  for (auto [i, j] : LP.poset.cover_pairs())
    if (!relation(L, lay, LP.lamps, i, j, LampRelation::RhoAlg)) {
      rep.covers_in_rho_alg = false;
      rep.diff.push_back("cover " + std::to_string(i) + " -< " + std::to_string(j) +
                         " of the lamp order is not generated directly");
    }
  return rep;
}

inline MainLemmaReport check_main_lemma(const FiniteLattice& L, const Layout& lay) {
  return compare_lamp_poset_to_jir(L, lay, lamp_poset(L, lay), jir_con(L));
}

// ---------------------------------------------------------------------------
// The full per-lattice check battery used by `verify` and the acceptance
// suite: structure, lamps, the eight relations, the lamp poset against the
// congruence oracle, trajectories, and the toolkit statements.
// ---------------------------------------------------------------------------

struct LatticeChecks {
  std::vector<std::string> failures;
  int size = 0, edges = 0, lamp_count = 0, internal_lamps = 0;
  int trajectory_count = 0, hat_count = 0;
  uint64_t con_size = 0, downset_size = 0;

  bool ok() const { return failures.empty(); }
};

inline LatticeChecks check_lattice(const FiniteLattice& L, const Layout& lay) {
  LatticeChecks out;
  out.size = L.n;
  out.edges = (int)L.covers.size();
  auto flag = [&](bool good, const std::string& name) {
    if (!good) out.failures.push_back(name);
  };

  flag(validate_slim_rectangular(L, lay).all_ok(), "validation");
  try {
    boundary_chains(L, lay);
  } catch (const Error&) {
    flag(false, "boundary-chains");
  }

  LampPoset LP;
  try {
    LP = lamp_poset(L, lay);
  } catch (const Error&) {
    flag(false, "lamp-poset-antisymmetry");
    return out;
  }
  const std::vector<Lamp>& lam = LP.lamps;
  out.lamp_count = (int)lam.size();
  for (const Lamp& I : lam)
    if (I.internal()) ++out.internal_lamps;

  // Tubes partition the meet-irreducible edges.
  {
    auto irr = irreducibles(L);
    int tube_total = 0;
    for (const Lamp& I : lam) tube_total += (int)I.tubes.size();
    flag(tube_total == (int)irr.mir.size(), "tube-partition");
  }

  // Eight relations coincide.
  {
    bool same = true;
    for (int i = 0; i < (int)lam.size() && same; ++i)
      for (int j = 0; j < (int)lam.size() && same; ++j) {
        bool base = relation(L, lay, lam, i, j, LampRelation::RhoAlg);
        for (LampRelation k : all_lamp_relations())
          if (relation(L, lay, lam, i, j, k) != base) {
            same = false;
            break;
          }
      }
    flag(same, "eight-relations");
  }

  // Peaks are monotone along the lamp order; maximal lamps are exactly the
  // boundary lamps.
  {
    bool peak_monotone = true;
    for (int i = 0; i < (int)lam.size(); ++i)
      for (int j = 0; j < (int)lam.size(); ++j)
        if (LP.poset.le(i, j) && !L.le(lam[i].peak, lam[j].peak)) peak_monotone = false;
    flag(peak_monotone, "peak-monotone");
    std::vector<int> mx = LP.poset.maximal();
    std::vector<bool> is_max(lam.size(), false);
    for (int m : mx) is_max[m] = true;
    bool boundary_iff_max = true;
    for (int i = 0; i < (int)lam.size(); ++i)
      if (is_max[i] == lam[i].internal()) boundary_iff_max = false;
    flag(boundary_iff_max, "maximal-lamps-boundary");
  }

  // Peak I = lift(foot I).
  {
    bool lift_ok = true;
    for (const Lamp& I : lam)
      if (lift(L, I.foot) != I.peak) lift_ok = false;
    flag(lift_ok, "lift-of-foot");
  }

  // The lamp poset is isomorphic to the join-irreducible congruences via
  // foot/peak principal congruences, and its covers are generated directly.
  JirCon jc = jir_con(L);
  {
    MainLemmaReport ml = compare_lamp_poset_to_jir(L, lay, LP, jc);
    flag(ml.phi_defined && ml.phi_bijective && ml.phi_order_iso, "lamps-iso-jir-con");
    flag(ml.covers_in_rho_alg, "covers-in-rho-alg");
  }

  // Birkhoff count: |Con L| equals the number of down-sets of its
  // join-irreducible poset.
  out.con_size = con_count(L, jc);
  out.downset_size = downset_count(jc.poset);
  flag(out.con_size == out.downset_size, "birkhoff-count");

  // Trajectories.
  {
    QuotientIsoReport q = check_quotient_iso(L, lay, LP, jc);
    out.trajectory_count = q.trajectory_count;
    out.hat_count = q.hat_count;
    flag(q.block_lamp_bijection, "theta-blocks-lamps");
    flag(q.order_agrees, "trajectory-order");
    flag(q.con_top_matches, "con-top-edge");
    flag(q.iso_jir_con, "quotient-iso-jir-con");
    TrajectoryOrder T = trajectory_order(L, lay);
    size_t edge_sum = 0;
    for (const Trajectory& t : T.trajs) edge_sum += t.edges.size();
    flag(edge_sum == L.covers.size(), "trajectory-partition");
    flag(T.block_count == (int)lam.size(), "theta-block-count");
  }

  // Separatory / floor-aligned pairs must not exist; independent lamps have
  // sufficiently disjoint illuminated sets.
  {
    bool no_sep = true, no_aligned = true, indep_disjoint = true;
    for (int i = 0; i < (int)lam.size(); ++i)
      for (int j = 0; j < (int)lam.size(); ++j) {
        if (i == j) continue;
        if (separatory(lay, lam[i], lam[j])) no_sep = false;
        if (floor_aligned(lay, lam[i], lam[j])) no_aligned = false;
        if (i < j && independent(L, lam[i], lam[j]) &&
            !sufficiently_disjoint(lay, lam[i], lam[j]))
          indep_disjoint = false;
      }
    flag(no_sep, "separatory-free");
    flag(no_aligned, "floor-aligned-free");
    flag(indep_disjoint, "independent-disjoint");
  }

  // Boundary lamps: no gap, and their lower covers are pairwise independent.
  {
    bool gaps_ok = true, indep_ok = true;
    for (int z = 0; z < (int)lam.size(); ++z) {
      if (lam[z].internal()) continue;
      if (!no_gap(L, lay, lam, z)) gaps_ok = false;
      std::vector<int> lower = LP.poset.lower_covers(z);
      for (size_t a = 0; a < lower.size(); ++a)
        for (size_t b = a + 1; b < lower.size(); ++b)
          if (!independent(L, lam[lower[a]], lam[lower[b]])) indep_ok = false;
    }
    flag(gaps_ok, "no-gap");
    flag(indep_ok, "lower-covers-independent");
  }

  // Illumination: ray oracle versus region membership at every lattice
  // vertex and every Lit polygon vertex, plus the generic point-in-polygon
  // route on internal lamps.
  {
    bool agree = true;
    for (const Lamp& I : lam) {
      LampShape s = shape(lay, I);
      LampRegions R = regions(L, lay, I);
      std::vector<Pt> probes;
      for (Elem x = 0; x < L.n; ++x) probes.push_back(lay.point(x));
      for (const Pt& v : R.lit.vertices) probes.push_back(v);
      for (const Pt& p : probes) {
        Illum il = illuminated(L, lay, I, p);
        bool from_left = il == Illum::Left || il == Illum::Both;
        bool from_right = il == Illum::Right || il == Illum::Both;
        bool any = il != Illum::None;
        if (any != lit_contains(s, p, Fill::Closed)) agree = false;
        if (from_left != rightlit_contains(s, p, Fill::Closed)) agree = false;
        if (from_right != leftlit_contains(s, p, Fill::Closed)) agree = false;
        if (I.internal()) {
          bool in_poly = point_in_polygon(p, R.lit) != PointLocation::Outside;
          if (any != in_poly) agree = false;
        }
      }
    }
    flag(agree, "illumination-oracles");
  }

  // The six necessary conditions on the join-irreducible congruence poset.
  {
    PropertyReport pr = check_all(jc.poset);
    flag(pr.p2, "property-p2");
    flag(pr.bipartite_maximal, "property-bipartite-maximal");
    flag(pr.dioecious, "property-dioecious");
    flag(pr.two_cover, "property-two-cover");
    flag(pr.forbidden_marriage, "property-forbidden-marriage");
    flag(pr.two_pendant_four_crown, "property-two-pendant-four-crown");
  }

  return out;
}

// ---------------------------------------------------------------------------
// Suite driver: enumerate and check everything, one line per lattice.
// ---------------------------------------------------------------------------

struct VerifySummary {
  int lattices = 0;
  int failures = 0;
};

inline VerifySummary run_verify(const EnumBounds& bounds, std::ostream& os) {
  VerifySummary sum;
  enumerate_recipes(bounds, [&](const Recipe& r, const BuildResult& br) {
    LatticeChecks c = check_lattice(br.lattice, br.layout);
    ++sum.lattices;
    if (c.ok()) {
      os << "ok n=" << c.size << " edges=" << c.edges << " lamps=" << c.lamp_count
         << " con=" << c.con_size << " traj=" << c.trajectory_count
         << " recipe: " << recipe_to_line(r) << "\n";
    } else {
      ++sum.failures;
      os << "FAIL [";
      for (size_t i = 0; i < c.failures.size(); ++i)
        os << (i ? "," : "") << c.failures[i];
      os << "] recipe: " << recipe_to_line(r) << "\n";
    }
  });
  os << "total " << sum.lattices << " lattices, " << sum.failures << " failures\n";
  return sum;
}

}  // namespace lampkit
