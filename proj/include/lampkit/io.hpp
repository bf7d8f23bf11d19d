#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lampkit/construction.hpp"
#include "lampkit/error.hpp"
#include "lampkit/poset.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Recipe text format. One directive per line: `grid A B` first, then any
// number of `fork L R N`. `#` starts a comment; `;` separates directives on
// one line, so a whole recipe can travel as a single string.
// ---------------------------------------------------------------------------

inline std::string print_recipe(const Recipe& r) {
  std::ostringstream os;
  os << "grid " << r.grid_a << " " << r.grid_b << "\n";
  for (const RecipeStep& s : r.steps)
    os << "fork " << s.cell.l << " " << s.cell.r << " " << s.rank << "\n";
  return os.str();
}

inline std::string recipe_to_line(const Recipe& r) {
  std::ostringstream os;
  os << "grid " << r.grid_a << " " << r.grid_b;
  for (const RecipeStep& s : r.steps)
    os << "; fork " << s.cell.l << " " << s.cell.r << " " << s.rank;
  return os.str();
}

inline Recipe parse_recipe(const std::string& text) {
  Recipe r;
  bool have_grid = false;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    for (char& c : line)
      if (c == ';') c = '\n';
    std::istringstream parts(line);
    std::string directive;
    while (std::getline(parts, directive)) {
      std::istringstream ts(directive);
      std::string word;
      if (!(ts >> word)) continue;
      auto want_int = [&](int& out) {
        if (!(ts >> out))
          fail(ErrorCode::ParseError,
               "line " + std::to_string(line_no) + ": expected an integer");
      };
      if (word == "grid") {
        require(!have_grid, ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": second grid directive");
        want_int(r.grid_a);
        want_int(r.grid_b);
        have_grid = true;
      } else if (word == "fork") {
        require(have_grid, ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": fork before grid");
        RecipeStep s;
        want_int(s.cell.l);
        want_int(s.cell.r);
        want_int(s.rank);
        r.steps.push_back(s);
      } else {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": unknown directive '" + word + "'");
      }
      std::string extra;
      if (ts >> extra)
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
    }
  }
  require(have_grid, ErrorCode::ParseError, "recipe has no grid directive");
  return r;
}

// ---------------------------------------------------------------------------
// Poset file format: `elem NAME` lines, then `cover A B` lines.
// ---------------------------------------------------------------------------

inline Poset parse_poset(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  auto index_of = [&](const std::string& name, int line_no) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return (int)i;
    fail(ErrorCode::ParseError,
         "line " + std::to_string(line_no) + ": unknown element '" + name + "'");
  };
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ts(line);
    std::string word;
    if (!(ts >> word)) continue;
    if (word == "elem") {
      std::string name;
      require(bool(ts >> name), ErrorCode::ParseError,
              "line " + std::to_string(line_no) + ": elem needs a name");
      for (const std::string& n : names)
        require(n != name, ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": duplicate element '" + name + "'");
      names.push_back(name);
    } else if (word == "cover") {
      std::string a, b;
      require(bool(ts >> a >> b), ErrorCode::ParseError,
              "line " + std::to_string(line_no) + ": cover needs two names");
      covers.emplace_back(index_of(a, line_no), index_of(b, line_no));
    } else {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": unknown directive '" + word + "'");
    }
  }
  require(!names.empty(), ErrorCode::ParseError, "poset file declares no elements");
  Poset P = poset_from_relations((int)names.size(), covers);
  P.labels = names;
  return P;
}

inline std::string print_poset(const Poset& P) {
  std::ostringstream os;
  auto name = [&](int x) {
    return P.labels.empty() ? "e" + std::to_string(x) : P.labels[x];
  };
  for (int x = 0; x < P.n; ++x) os << "elem " << name(x) << "\n";
  for (auto [a, b] : P.cover_pairs()) os << "cover " << name(a) << " " << name(b) << "\n";
  return os.str();
}

}  // namespace lampkit
