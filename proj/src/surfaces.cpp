#include "cc/surfaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

namespace cc {

namespace {

using Json = nlohmann::json;

std::size_t ux(int i) { return static_cast<std::size_t>(i); }

bool is_corner(const Triple& t, int k) { return t[0] == k || t[1] == k || t[2] == k; }

bool same_side(const Triple& u, const Triple& v) {
  for (int i = 0; i < 3; ++i)
    if (u[ux(i)] == 0 && v[ux(i)] == 0) return true;
  return false;
}

Fragment build_fragment(int k, int s) {
  Fragment f;
  f.k = k;
  f.s = s;
  for (int a = k; a >= 0; --a)
    for (int b = 0; b <= k - a; ++b) {
      const Triple t{a, b, k - a - b};
      if (is_corner(t, k) || b > s) continue;
      f.coord.push_back(t);
    }
  f.q = Quiver(static_cast<int>(f.coord.size()));
  static constexpr std::array<Triple, 3> kDirs{{{0, -1, 1}, {-1, 1, 0}, {1, 0, -1}}};
  for (int v = 0; v < f.q.n; ++v)
    for (const auto& d : kDirs) {
      const auto& u = f.coord[ux(v)];
      const Triple w{u[0] + d[0], u[1] + d[1], u[2] + d[2]};
      const int j = f.find(w);
      if (j < 0 || same_side(u, w)) continue;
      f.q.add_arrows(v, j);
    }
  for (int i = 0; i < 3; ++i) {
    auto& side = f.side[ux(i)];
    side.assign(ux(k - 1), -1);
    for (int j = 1; j < k; ++j) {
      Triple t{};
      t[ux(kCornerCoord[ux(i)])] = j;
      t[ux(kCornerCoord[ux((i + 1) % 3)])] = k - j;
      if (i == 2 && t[1] > s) t = {t[0], s, k - t[0] - s};
      side[ux(j - 1)] = f.find(t);
    }
  }
  return f;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(ux(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[ux(x)] == x ? x : p[ux(x)] = find(p[ux(x)]); }
  void unite(int a, int b) { p[ux(find(a))] = find(b); }
};

enum class Version { FG, Gr };

int rotate_side(int old_side, int r) { return ((old_side - r) % 3 + 3) % 3; }

Assembled assemble_impl(const TriangulationSpec& spec, int k, const std::vector<int>& svals, const std::vector<int>& rot) {
  if (k < 2) throw Error(Errc::BadParameter, "k must be at least 2");
  Assembled out;
  const int nt = static_cast<int>(spec.triangles.size());
  std::vector<int> offset(ux(nt + 1), 0);
  std::vector<std::array<SideSpec, 3>> sides(ux(nt));
  for (int t = 0; t < nt; ++t) {
    const int r = rot[ux(t)];
    const auto& tri = spec.triangles[ux(t)];
    std::array<std::string, 3> c;
    for (int i = 0; i < 3; ++i) {
      c[ux(i)] = tri.corners[ux((i + r) % 3)];
      sides[ux(t)][ux(i)] = tri.sides[ux((i + r) % 3)];
    }
    out.corners.push_back(c);
    out.fragments.push_back(build_fragment(k, svals[ux(t)]));
    offset[ux(t + 1)] = offset[ux(t)] + out.fragments.back().q.n;
  }
  UnionFind uf(offset[ux(nt)]);
  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < 3; ++i) {
      const auto& g = sides[ux(t)][ux(i)].glue;
      if (!g) continue;
      const int t2 = g->first, i2 = rotate_side(g->second, rot[ux(g->first)]);
      const auto& s1 = out.fragments[ux(t)].side[ux(i)];
      const auto& s2 = out.fragments[ux(t2)].side[ux(i2)];
      for (int j = 1; j < k; ++j) {
        const int u = s1[ux(j - 1)], v = s2[ux(k - j - 1)];
        if (u < 0 || v < 0) throw Error(Errc::NotTaut, "a pinched side cannot be glued");
        uf.unite(offset[ux(t)] + u, offset[ux(t2)] + v);
      }
    }
  std::map<int, int> id;
  out.global.resize(ux(nt));
  for (int t = 0; t < nt; ++t)
    for (int v = 0; v < out.fragments[ux(t)].q.n; ++v) {
      const int root = uf.find(offset[ux(t)] + v);
      auto it = id.find(root);
      if (it == id.end()) {
        it = id.emplace(root, static_cast<int>(id.size())).first;
        const auto& c = out.fragments[ux(t)].coord[ux(v)];
        out.names.push_back("t" + std::to_string(t) + ":" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                            std::to_string(c[2]));
      }
      out.global[ux(t)].push_back(it->second);
    }
  const int n = static_cast<int>(id.size());
  PSeed& p = out.seed;
  p.k = k;
  p.punctures = spec.punctures();
  p.q = Quiver(n);
  for (int t = 0; t < nt; ++t) {
    const auto& f = out.fragments[ux(t)];
    const auto& g = out.global[ux(t)];
    for (int u = 0; u < f.q.n; ++u)
      for (int v = 0; v < f.q.n; ++v)
        if (f.q.at(u, v) > 0) p.q.add_arrows(g[ux(u)], g[ux(v)], f.q.at(u, v));
    for (int i = 0; i < 3; ++i)
      if (sides[ux(t)][ux(i)].boundary)
        for (int v : f.side[ux(i)])
          if (v >= 0) p.q.frozen[ux(g[ux(v)])] = true;
  }
  p.q.drop_frozen_arrows();
  std::vector<bool> seen(ux(n), false);
  p.wt.assign(ux(n), std::vector<WeightVector>(p.punctures.size(), WeightVector::zero(k)));
  for (int t = 0; t < nt; ++t) {
    const auto& f = out.fragments[ux(t)];
    for (int v = 0; v < f.q.n; ++v) {
      const int gv = out.global[ux(t)][ux(v)];
      std::vector<WeightVector> w(p.punctures.size(), WeightVector::zero(k));
      for (int c = 0; c < 3; ++c) {
        const auto pos = std::find(p.punctures.begin(), p.punctures.end(), out.corners[ux(t)][ux(c)]);
        if (pos != p.punctures.end())
          w[ux(static_cast<int>(pos - p.punctures.begin()))] += WeightVector::omega(k, f.level(v, c));
      }
      if (p.q.is_frozen(gv)) continue;
      if (seen[ux(gv)] && w != p.wt[ux(gv)]) throw Error(Errc::WeightMismatch, "glued vertices disagree on weights");
      p.wt[ux(gv)] = w;
      seen[ux(gv)] = true;
    }
  }
  return out;
}

}  // namespace

int Fragment::find(const Triple& t) const {
  for (int x : t)
    if (x < 0) return -1;
  const auto it = std::find(coord.begin(), coord.end(), t);
  return it == coord.end() ? -1 : static_cast<int>(it - coord.begin());
}

Fragment q_fragment(int k) {
  if (k < 2) throw Error(Errc::BadParameter, "q_fragment needs k >= 2");
  return build_fragment(k, k - 1);
}

Fragment q_fragment_s(int k, int s) {
  if (k < 2 || s < 1 || s > k - 1) throw Error(Errc::BadParameter, "q_fragment_s needs 1 <= s <= k-1");
  return build_fragment(k, s);
}

int TriangulationSpec::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].name == name) return static_cast<int>(i);
  throw Error(Errc::Parse, "unknown marked point '" + name + "'");
}

bool TriangulationSpec::is_puncture(const std::string& name) const {
  return points[ux(point_index(name))].kind == PointKind::Puncture;
}

std::vector<std::string> TriangulationSpec::punctures() const {
  std::vector<std::string> out;
  for (const auto& p : points)
    if (p.kind == PointKind::Puncture) out.push_back(p.name);
  return out;
}

int TriangulationSpec::boundary_side_count(int t) const {
  int c = 0;
  for (const auto& s : triangles[ux(t)].sides) c += s.boundary ? 1 : 0;
  return c;
}

bool TriangulationSpec::is_taut() const {
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t)
    if (boundary_side_count(t) > 1) return false;
  return true;
}

void TriangulationSpec::validate(bool allow_open_sides) const {
  const int nt = static_cast<int>(triangles.size());
  if (nt == 0) throw Error(Errc::Parse, "triangulation has no triangles");
  for (int t = 0; t < nt; ++t) {
    const auto& tri = triangles[ux(t)];
    for (const auto& c : tri.corners) point_index(c);
    for (int i = 0; i < 3; ++i) {
      const auto& s = tri.sides[ux(i)];
      if (s.boundary && s.glue) throw Error(Errc::Parse, "a boundary side cannot be glued");
      if (s.boundary) {
        const auto& a = tri.corners[ux(i)];
        const auto& b = tri.corners[ux((i + 1) % 3)];
        if (is_puncture(a) || is_puncture(b)) throw Error(Errc::Parse, "boundary side ends at a puncture");
        continue;
      }
      if (!s.glue) {
        if (!allow_open_sides) throw Error(Errc::Parse, "side neither glued nor boundary");
        continue;
      }
      const auto [t2, i2] = *s.glue;
      if (t2 < 0 || t2 >= nt || i2 < 0 || i2 > 2) throw Error(Errc::Parse, "glue target out of range");
      if (t2 == t) throw Error(Errc::NonRegularTriangulation, "triangle " + std::to_string(t) + " is glued to itself");
      const auto& back = triangles[ux(t2)].sides[ux(i2)].glue;
      if (!back || back->first != t || back->second != i) throw Error(Errc::Parse, "gluing is not symmetric");
      // Orientation reversal: corner i meets corner i2+1, corner i+1 meets corner i2.
      if (tri.corners[ux(i)] != triangles[ux(t2)].corners[ux((i2 + 1) % 3)] ||
          tri.corners[ux((i + 1) % 3)] != triangles[ux(t2)].corners[ux(i2)])
        throw Error(Errc::Parse, "glued sides have mismatched endpoints");
    }
  }
}

TriangulationSpec parse_triangulation(const std::string& json_text) {
  TriangulationSpec t;
  try {
    const Json j = Json::parse(json_text);
    t.k = j.value("k", 0);
    for (const auto& p : j.at("points")) {
      const std::string kind = p.at("kind").get<std::string>();
      if (kind != "puncture" && kind != "boundary") throw Error(Errc::Parse, "bad point kind '" + kind + "'");
      t.points.push_back({p.at("name").get<std::string>(), kind == "puncture" ? PointKind::Puncture : PointKind::Boundary});
    }
    for (const auto& tr : j.at("triangles")) {
      TriangleSpec ts;
      const auto& c = tr.at("corners");
      const auto& s = tr.at("sides");
      if (c.size() != 3 || s.size() != 3) throw Error(Errc::Parse, "triangles need three corners and three sides");
      for (std::size_t i = 0; i < 3; ++i) {
        ts.corners[i] = c[i].get<std::string>();
        ts.sides[i].boundary = s[i].value("boundary", false);
        if (s[i].contains("glue") && !s[i]["glue"].is_null())
          ts.sides[i].glue = std::make_pair(s[i]["glue"][0].get<int>(), s[i]["glue"][1].get<int>());
      }
      t.triangles.push_back(ts);
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
  return t;
}

std::string triangulation_to_json(const TriangulationSpec& t) {
  Json j;
  j["k"] = t.k;
  j["points"] = Json::array();
  for (const auto& p : t.points)
    j["points"].push_back({{"name", p.name}, {"kind", p.kind == PointKind::Puncture ? "puncture" : "boundary"}});
  j["triangles"] = Json::array();
  for (const auto& tr : t.triangles) {
    Json sides = Json::array();
    for (const auto& s : tr.sides) {
      Json sj;
      sj["glue"] = s.glue ? Json::array({s.glue->first, s.glue->second}) : Json(nullptr);
      sj["boundary"] = s.boundary;
      sides.push_back(sj);
    }
    j["triangles"].push_back({{"corners", tr.corners}, {"sides", sides}});
  }
  return j.dump(2);
}

SurfaceData surface_data(const TriangulationSpec& t) {
  SurfaceData d;
  const int np = static_cast<int>(t.points.size());
  int glued = 0, boundary = 0;
  UnionFind uf(np);
  std::vector<bool> on_boundary(ux(np), false);
  for (const auto& tri : t.triangles)
    for (int i = 0; i < 3; ++i) {
      const auto& s = tri.sides[ux(i)];
      if (s.glue) ++glued;
      if (!s.boundary) continue;
      ++boundary;
      const int a = t.point_index(tri.corners[ux(i)]), b = t.point_index(tri.corners[ux((i + 1) % 3)]);
      on_boundary[ux(a)] = on_boundary[ux(b)] = true;
      uf.unite(a, b);
    }
  std::vector<int> roots;
  for (int p = 0; p < np; ++p) {
    if (t.points[ux(p)].kind == PointKind::Puncture) {
      ++d.punctures;
    } else {
      ++d.boundary_points;
      if (on_boundary[ux(p)]) roots.push_back(uf.find(p));
    }
  }
  std::sort(roots.begin(), roots.end());
  d.boundary_components = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
  const int euler = np - (glued / 2 + boundary) + static_cast<int>(t.triangles.size());
  d.genus = (2 - d.boundary_components - euler) / 2;
  return d;
}

std::optional<int> Assembled::vertex_at(int t, const Triple& abc) const {
  const auto& f = fragments[ux(t)];
  Triple x = abc;
  if (x[1] > f.s) {
    if (x[2] != 0 || x[0] == 0) return std::nullopt;
    x = {x[0], f.s, f.k - x[0] - f.s};
  }
  const int v = f.find(x);
  if (v < 0) return std::nullopt;
  return global[ux(t)][ux(v)];
}

Assembled assemble_fg(const TriangulationSpec& t, int k, bool allow_open_sides) {
  t.validate(allow_open_sides);
  const std::size_t nt = t.triangles.size();
  return assemble_impl(t, k, std::vector<int>(nt, k - 1), std::vector<int>(nt, 0));
}

Assembled assemble_gr(const TriangulationSpec& t, int k, bool allow_open_sides) {
  t.validate(allow_open_sides);
  if (!t.is_taut()) throw Error(Errc::NotTaut, "a triangle has more than one boundary side");
  const std::size_t nt = t.triangles.size();
  std::vector<int> s(nt, k - 1), rot(nt, 0);
  for (std::size_t i = 0; i < nt; ++i)
    for (int side = 0; side < 3; ++side)
      if (t.triangles[i].sides[ux(side)].boundary) {
        s[i] = 1;
        rot[i] = (side + 2) % 3;
      }
  return assemble_impl(t, k, s, rot);
}

Assembled glue_sigma(int k, int s, int t) {
  if (k < 2 || s < 1 || t < 1 || s > k - 1 || t > k - 1) throw Error(Errc::BadParameter, "glue_sigma needs 1 <= s,t <= k-1");
  return assemble_impl(digon(), k, {s, t}, {0, 0});
}

TriangulationSpec punctured_ngon(int n) {
  if (n < 2) throw Error(Errc::BadParameter, "punctured n-gon needs n >= 2");
  TriangulationSpec t;
  t.points.push_back({"p", PointKind::Puncture});
  for (int j = 1; j <= n; ++j) t.points.push_back({"q" + std::to_string(j), PointKind::Boundary});
  for (int j = 0; j < n; ++j) {
    TriangleSpec tr;
    tr.corners = {"p", "q" + std::to_string(j + 1), "q" + std::to_string((j + 1) % n + 1)};
    tr.sides[0].glue = std::make_pair((j + n - 1) % n, 2);
    tr.sides[1].boundary = true;
    tr.sides[2].glue = std::make_pair((j + 1) % n, 0);
    t.triangles.push_back(tr);
  }
  return t;
}

TriangulationSpec digon() { return punctured_ngon(2); }

TriangulationSpec torus_s11() {
  TriangulationSpec t;
  t.points.push_back({"p", PointKind::Puncture});
  TriangleSpec lower, upper;
  lower.corners = upper.corners = {"p", "p", "p"};
  lower.sides[0].glue = std::make_pair(1, 1);
  lower.sides[1].glue = std::make_pair(1, 2);
  lower.sides[2].glue = std::make_pair(1, 0);
  upper.sides[0].glue = std::make_pair(0, 2);
  upper.sides[1].glue = std::make_pair(0, 0);
  upper.sides[2].glue = std::make_pair(0, 1);
  t.triangles = {lower, upper};
  return t;
}

long dim_fg(int g, int b, int m_total, int m_boundary, int k) {
  return static_cast<long>(2 * g - 2 + b + m_total) * (k * k - 1) - static_cast<long>(m_boundary) * k * (k - 1) / 2;
}

long dim_gr(int g, int b, int m_punct, int m_boundary, int k) {
  return static_cast<long>(2 * g - 2 + b + m_punct) * (k * k - 1) + static_cast<long>(k) * m_boundary;
}

}  // namespace cc
