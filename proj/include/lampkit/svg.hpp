#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lampkit/construction.hpp"
#include "lampkit/error.hpp"
#include "lampkit/lamps.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Deterministic SVG diagrams: dots at the drawing coordinates (u, v) with v
// pointing up, thick strokes for neon tubes, black-filled lamp feet, and an
// optional grey illuminated set behind the diagram.
// ---------------------------------------------------------------------------

struct RenderOptions {
  int scale = 40;                      // pixels per diagram unit
  std::optional<std::string> show_lit; // lamp selector
  bool show_feet = true;
  bool thick_tubes = true;
};

// Selector: an index into the canonical lamp list, or one of
// `internal` / `internal:K` / `left:K` / `right:K`.
inline int select_lamp(const std::vector<Lamp>& lam, const std::string& sel) {
  auto nth_of_kind = [&](LampKind k, int want) {
    int seen = 0;
    for (int i = 0; i < (int)lam.size(); ++i)
      if (lam[i].kind == k) {
        if (seen == want) return i;
        ++seen;
      }
    fail(ErrorCode::UnknownLamp, "no such lamp: " + sel);
  };
  auto parse_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      require(used == s.size() && v >= 0, ErrorCode::UnknownLamp, "bad selector: " + sel);
      return v;
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(ErrorCode::UnknownLamp, "bad selector: " + sel);
    }
  };
  size_t colon = sel.find(':');
  std::string head = sel.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : sel.substr(colon + 1);
  if (head == "internal") {
    if (tail.empty()) {
      int only = -1, count = 0;
      for (int i = 0; i < (int)lam.size(); ++i)
        if (lam[i].internal()) { only = i; ++count; }
      require(count == 1, ErrorCode::UnknownLamp,
              "selector 'internal' needs exactly one internal lamp");
      return only;
    }
    return nth_of_kind(LampKind::Internal, parse_int(tail));
  }
  if (head == "left") return nth_of_kind(LampKind::BoundaryLeft, parse_int(tail.empty() ? "0" : tail));
  if (head == "right") return nth_of_kind(LampKind::BoundaryRight, parse_int(tail.empty() ? "0" : tail));
  int idx = parse_int(sel);
  require(idx < (int)lam.size(), ErrorCode::UnknownLamp, "lamp index out of range");
  return idx;
}

inline std::string render_svg(const FiniteLattice& L, const Layout& lay,
                              const RenderOptions& opt) {
  require(opt.scale > 0, ErrorCode::ParseError, "scale must be positive");
  int A = lay.A(), B = lay.B();
  int u_min = -(A - 1), u_max = B - 1;
  int v_max = A + B - 2;
  int margin = opt.scale;
  auto X = [&](int u) { return (u - u_min) * opt.scale + margin; };
  auto Y = [&](int v) { return (v_max - v) * opt.scale + margin; };
  auto Xp = [&](const Pt& p) {  // (l, r) -> svg x, for integer-valued points
    int l = (int)p.x.num, r = (int)p.y.num;
    return X(r - l);
  };
  auto Yp = [&](const Pt& p) {
    int l = (int)p.x.num, r = (int)p.y.num;
    return Y(r + l);
  };

  std::vector<Lamp> lam = lamps(L, lay);
  std::vector<bool> is_foot(L.n, false);
  std::vector<bool> is_tube_edge;
  {
    std::vector<bool> tube_foot(L.n, false);
    for (const Lamp& I : lam) {
      is_foot[I.foot] = true;
      for (Elem m : I.tubes) tube_foot[m] = true;
    }
    is_tube_edge.assign(L.covers.size(), false);
    for (size_t e = 0; e < L.covers.size(); ++e)
      if (tube_foot[L.covers[e].first]) is_tube_edge[e] = true;
  }

  std::ostringstream os;
  int width = (u_max - u_min) * opt.scale + 2 * margin;
  int height = v_max * opt.scale + 2 * margin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

  if (opt.show_lit) {
    int idx = select_lamp(lam, *opt.show_lit);
    LampRegions R = regions(L, lay, lam[idx]);
    os << "<polygon points=\"";
    for (size_t i = 0; i < R.lit.vertices.size(); ++i) {
      if (i) os << " ";
      os << Xp(R.lit.vertices[i]) << "," << Yp(R.lit.vertices[i]);
    }
    os << "\" fill=\"#c8c8c8\" stroke=\"none\"/>\n";
  }

  int thin = std::max(1, opt.scale / 30);
  int thick = opt.thick_tubes ? std::max(thin + 2, opt.scale / 10) : thin;
  for (size_t e = 0; e < L.covers.size(); ++e) {
    auto [p, q] = L.covers[e];
    os << "<line x1=\"" << X(lay.u(p)) << "\" y1=\"" << Y(lay.v(p)) << "\" x2=\""
       << X(lay.u(q)) << "\" y2=\"" << Y(lay.v(q)) << "\" stroke=\"black\" stroke-width=\""
       << (is_tube_edge[e] ? thick : thin) << "\"/>\n";
  }

  int radius = std::max(2, opt.scale / 10);
  for (Elem x = 0; x < L.n; ++x) {
    bool black = opt.show_feet && is_foot[x];
    os << "<circle cx=\"" << X(lay.u(x)) << "\" cy=\"" << Y(lay.v(x)) << "\" r=\"" << radius
       << "\" fill=\"" << (black ? "black" : "white") << "\" stroke=\"black\" stroke-width=\""
       << thin << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lampkit
