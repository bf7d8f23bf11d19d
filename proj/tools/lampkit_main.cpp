// lampkit: build slim rectangular lattices from recipes, draw them, and run
// the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lampkit/lampkit.hpp"

using namespace lampkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + out_path);
  out << content;
}

std::string verdicts_line(const ValidationReport& v) {
  std::ostringstream os;
  os << "semimodular=" << (v.semimodular ? "yes" : "no")
     << " slim=" << (v.slim ? "yes" : "no") << " planar=" << (v.planar ? "yes" : "no")
     << " rectangular=" << (v.rectangular ? "yes" : "no")
     << " two-covers=" << (v.at_most_two_covers ? "yes" : "no")
     << " beta=" << (v.beta ? "yes" : "no");
  return os.str();
}

int cmd_build(const std::string& recipe_path) {
  Recipe r = parse_recipe(read_file(recipe_path));
  BuildResult br = build(r);
  std::vector<Lamp> lam = lamps(br.lattice, br.layout);
  ValidationReport v = validate_slim_rectangular(br.lattice, br.layout);
  std::cout << br.lattice.n << " elements, " << br.lattice.covers.size() << " edges, "
            << lam.size() << " lamps\n";
  std::cout << verdicts_line(v) << "\n";
  std::cout << "recipe: " << recipe_to_line(r) << "\n";
  return v.all_ok() ? 0 : 1;
}

int cmd_render(const std::string& recipe_path, const RenderOptions& opt,
               const std::string& out_path) {
  BuildResult br = build(parse_recipe(read_file(recipe_path)));
  write_output(out_path, render_svg(br.lattice, br.layout, opt));
  return 0;
}

int cmd_report(const std::string& recipe_path, const std::string& out_path) {
  Recipe r = parse_recipe(read_file(recipe_path));
  BuildResult br = build(r);
  std::ostringstream os;
  const FiniteLattice& L = br.lattice;
  const Layout& lay = br.layout;
  os << "recipe: " << recipe_to_line(r) << "\n";
  os << "elements: " << L.n << "\nedges: " << L.covers.size() << "\n";
  os << verdicts_line(validate_slim_rectangular(L, lay)) << "\n";

  LampPoset LP = lamp_poset(L, lay);
  os << "lamps: " << LP.lamps.size() << "\n";
  for (size_t i = 0; i < LP.lamps.size(); ++i) {
    const Lamp& I = LP.lamps[i];
    os << "  lamp " << i << ": "
       << (I.kind == LampKind::Internal
               ? "internal"
               : I.kind == LampKind::BoundaryLeft ? "boundary-left" : "boundary-right")
       << " foot=" << I.foot << " peak=" << I.peak << " tubes=";
    for (size_t t = 0; t < I.tubes.size(); ++t) os << (t ? "," : "") << I.tubes[t];
    os << "\n";
  }
  os << "lamp order covers:";
  for (auto [i, j] : LP.poset.cover_pairs()) os << " " << i << "<" << j;
  os << "\n";

  JirCon jc = jir_con(L);
  os << "join-irreducible congruences: " << jc.members.size() << "\n";
  os << "congruences: " << con_count(L, jc) << "\n";
  QuotientIsoReport q = check_quotient_iso(L, lay, LP, jc);
  os << "trajectories: " << q.trajectory_count << " (" << q.hat_count << " hat, "
     << (q.trajectory_count - q.hat_count) << " straight), blocks: " << q.block_count_
     << "\n";
  PropertyReport pr = check_all(jc.poset);
  os << "properties: p2=" << (pr.p2 ? "yes" : "no")
     << " bipartite-maximal=" << (pr.bipartite_maximal ? "yes" : "no")
     << " dioecious=" << (pr.dioecious ? "yes" : "no")
     << " two-cover=" << (pr.two_cover ? "yes" : "no")
     << " forbidden-marriage=" << (pr.forbidden_marriage ? "yes" : "no")
     << " two-pendant-four-crown=" << (pr.two_pendant_four_crown ? "yes" : "no") << "\n";

  LatticeChecks checks = check_lattice(L, lay);
  if (checks.ok()) {
    os << "all checks pass\n";
  } else {
    os << "FAILED checks:";
    for (const std::string& f : checks.failures) os << " " << f;
    os << "\n";
  }
  write_output(out_path, os.str());
  return checks.ok() ? 0 : 1;
}

int cmd_verify(const EnumBounds& bounds, const std::string& out_path) {
  std::ostringstream os;
  VerifySummary s = run_verify(bounds, os);
  write_output(out_path, os.str());
  return s.failures == 0 ? 0 : 1;
}

int cmd_enumerate(const EnumBounds& bounds, std::optional<uint64_t> seed, int count,
                  const std::string& out_path) {
  std::ostringstream os;
  if (seed) {
    for (int i = 0; i < count; ++i)
      os << recipe_to_line(random_recipe(*seed + (uint64_t)i, bounds)) << "\n";
  } else {
    enumerate_recipes(bounds, [&](const Recipe& r, const BuildResult&) {
      os << recipe_to_line(r) << "\n";
    });
  }
  write_output(out_path, os.str());
  return 0;
}

int cmd_check_poset(const std::string& poset_path, const std::string& out_path) {
  Poset P = parse_poset(read_file(poset_path));
  PropertyReport r = check_all(P);
  std::ostringstream os;
  os << "elements: " << P.n << "\n";
  os << "p2: " << (r.p2 ? "yes" : "no") << "\n";
  os << "bipartite-maximal: " << (r.bipartite_maximal ? "yes" : "no") << "\n";
  os << "dioecious: " << (r.dioecious ? "yes" : "no") << "\n";
  os << "two-cover: " << (r.two_cover ? "yes" : "no") << "\n";
  os << "forbidden-marriage: " << (r.forbidden_marriage ? "yes" : "no") << "\n";
  os << "two-pendant-four-crown: " << (r.two_pendant_four_crown ? "yes" : "no") << "\n";
  os << "down-set lattice size: " << downset_count(P) << "\n";
  write_output(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slim rectangular lattices: construction, lamps, and verification"};
  app.require_subcommand(1);

  std::string recipe_path, poset_path, out_path;
  RenderOptions ropt;
  EnumBounds bounds;
  std::optional<uint64_t> seed;
  int count = 1;
  std::string show_lit;

  CLI::App* build_cmd = app.add_subcommand("build", "build a recipe and print a summary");
  build_cmd->add_option("recipe", recipe_path, "recipe file")->required();

  CLI::App* render_cmd = app.add_subcommand("render", "draw a recipe as SVG");
  render_cmd->add_option("recipe", recipe_path, "recipe file")->required();
  render_cmd->add_option("--scale", ropt.scale, "pixels per diagram unit");
  render_cmd->add_option("--show-lit", show_lit,
                         "shade the illuminated set of a lamp (index, internal, "
                         "internal:K, left:K, right:K)");
  render_cmd->add_flag("!--no-feet", ropt.show_feet, "do not fill lamp feet");
  render_cmd->add_flag("!--thin-tubes", ropt.thick_tubes, "draw tubes thin");
  render_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* report_cmd = app.add_subcommand("report", "detailed analysis of one recipe");
  report_cmd->add_option("recipe", recipe_path, "recipe file")->required();
  report_cmd->add_option("-o,--output", out_path, "output file");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "enumerate lattices and run every check");
  verify_cmd->add_option("--max-size", bounds.max_size, "largest lattice size");
  verify_cmd->add_option("--max-steps", bounds.max_steps, "most extension steps");
  verify_cmd->add_option("--max-rank", bounds.max_rank, "largest extension rank");
  verify_cmd->add_option("-o,--output", out_path, "output file");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list recipes in canonical order");
  enum_cmd->add_option("--max-size", bounds.max_size, "largest lattice size");
  enum_cmd->add_option("--max-steps", bounds.max_steps, "most extension steps");
  enum_cmd->add_option("--max-rank", bounds.max_rank, "largest extension rank");
  enum_cmd->add_option("--seed", seed, "emit seeded random recipes instead");
  enum_cmd->add_option("--count", count, "how many seeded recipes");
  enum_cmd->add_option("-o,--output", out_path, "output file");

  CLI::App* poset_cmd =
      app.add_subcommand("check-poset", "run the six property checkers on a poset file");
  poset_cmd->add_option("poset", poset_path, "poset file")->required();
  poset_cmd->add_option("-o,--output", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(recipe_path);
    if (render_cmd->parsed()) {
      if (!show_lit.empty()) ropt.show_lit = show_lit;
      return cmd_render(recipe_path, ropt, out_path);
    }
    if (report_cmd->parsed()) return cmd_report(recipe_path, out_path);
    if (verify_cmd->parsed()) return cmd_verify(bounds, out_path);
    if (enum_cmd->parsed()) return cmd_enumerate(bounds, seed, count, out_path);
    if (poset_cmd->parsed()) return cmd_check_poset(poset_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::UnknownLamp:
      case ErrorCode::BoundTooLarge:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
