#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cc/cluster.hpp"

namespace cc {

using Triple = std::array<int, 3>;  // (a,b,c) with a+b+c == k

// Corners are ordered counterclockwise: corner 0 carries coordinate a, corner 1 carries c, corner 2 carries b.
// Side i joins corner i to corner i+1; position j on side i is the vertex whose corner-i coordinate is j.
inline constexpr Triple kCornerCoord{0, 2, 1};

// One triangle's quiver. For s < k-1 only the vertices with b <= s survive (the b-corner side is pinched).
struct Fragment {
  int k = 0;
  int s = 0;
  Quiver q;
  std::vector<Triple> coord;
  std::array<std::vector<int>, 3> side;  // side[i][j-1], or -1 when absent

  int level(int v, int corner) const {
    return coord[static_cast<std::size_t>(v)][static_cast<std::size_t>(kCornerCoord[static_cast<std::size_t>(corner)])];
  }
  int find(const Triple& t) const;  // local index or -1
};

Fragment q_fragment(int k);
Fragment q_fragment_s(int k, int s);

enum class PointKind { Puncture, Boundary };

struct MarkedPoint {
  std::string name;
  PointKind kind = PointKind::Puncture;
};

struct SideSpec {
  std::optional<std::pair<int, int>> glue;  // (triangle, side)
  bool boundary = false;                     // neither glued nor boundary means an open side (local models only)
};

struct TriangleSpec {
  std::array<std::string, 3> corners;
  std::array<SideSpec, 3> sides;
};

struct TriangulationSpec {
  int k = 0;
  std::vector<MarkedPoint> points;
  std::vector<TriangleSpec> triangles;

  int point_index(const std::string& name) const;  // throws Parse
  bool is_puncture(const std::string& name) const;
  std::vector<std::string> punctures() const;
  int boundary_side_count(int t) const;
  bool is_taut() const;
  // Checks names and gluing symmetry; throws NonRegularTriangulation on a self-glued triangle.
  void validate(bool allow_open_sides = false) const;
};

TriangulationSpec parse_triangulation(const std::string& json_text);
std::string triangulation_to_json(const TriangulationSpec& t);

// Euler data of the underlying marked surface.
struct SurfaceData {
  int genus = 0;
  int boundary_components = 0;
  int punctures = 0;
  int boundary_points = 0;
};
SurfaceData surface_data(const TriangulationSpec& t);

// Assembled P-seed plus the incidence data needed by the Weyl module.
struct Assembled {
  PSeed seed;
  std::vector<std::string> names;
  std::vector<Fragment> fragments;                   // per triangle, after corner rotation
  std::vector<std::array<std::string, 3>> corners;   // per triangle, after corner rotation
  std::vector<std::vector<int>> global;              // global[t][local], -1 never occurs

  // Global vertex of (a,b,c) in triangle t; nullopt for corners and pinched-away vertices.
  std::optional<int> vertex_at(int t, const Triple& abc) const;
};

Assembled assemble_fg(const TriangulationSpec& t, int k, bool allow_open_sides = false);
Assembled assemble_gr(const TriangulationSpec& t, int k, bool allow_open_sides = false);
// Two pinched triangles glued along both arcs: the first carries Q_k^s, the second Q_k^t.
Assembled glue_sigma(int k, int s, int t);

TriangulationSpec punctured_ngon(int n);  // boundary points q1..qn, puncture p
TriangulationSpec digon();
TriangulationSpec torus_s11();

long dim_fg(int g, int b, int m_total, int m_boundary, int k);
long dim_gr(int g, int b, int m_punct, int m_boundary, int k);

}  // namespace cc
