#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cc/weights.hpp"

namespace cc {

// Vertices are tuples of dosps (one entry per puncture); edges are index pairs (i < j), sorted.
struct DospGraph {
  std::vector<std::vector<Dosp>> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::string label(std::size_t v) const;  // coordinates joined by ","
  std::vector<std::size_t> degrees() const;
  std::size_t index_of(const std::vector<Dosp>& v) const;  // throws OutOfRange if absent
  bool has_edge(std::size_t a, std::size_t b) const;
};

std::vector<Osp> enumerate_osps(int k);
// Sorted by canonical text.
std::vector<Dosp> enumerate_dosps(int k);

// Neighbours under (L+a)^+ | R^- <-> L^+ | (a+R)^-; blocks of size <= 2 match either sign.
std::vector<Dosp> dosp_mutations(const Dosp& d);
bool are_dosp_adjacent(const Dosp& x, const Dosp& y);

DospGraph build_hdosp(int k);
DospGraph cartesian_power(const DospGraph& g, int h);
// Vertices are orbit representatives (lexicographically least label); self-loops dropped.
DospGraph quotient_by_relabeling(const DospGraph& g);

// Orbit representative of a dosp tuple under relabeling of [k] (the same permutation at every puncture
// when diagonal is true, independent permutations otherwise).
std::vector<Dosp> relabel_orbit_rep(const std::vector<Dosp>& v, bool diagonal = false);
Dosp relabel(const Dosp& d, const std::vector<int>& perm);  // element x becomes perm[x-1]

std::string to_dot(const DospGraph& g, const std::string& name = "H");
std::string to_csv(const DospGraph& g);  // "vertex,degree" rows

}  // namespace cc
