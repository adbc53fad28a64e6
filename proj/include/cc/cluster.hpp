#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cc/laurent.hpp"
#include "cc/weights.hpp"

namespace cc {

// Skew-symmetric exchange matrix; b[i][j] = #(i->j) - #(j->i). Frozen-frozen entries are kept at zero.
struct Quiver {
  int n = 0;
  std::vector<bool> frozen;
  std::vector<std::vector<int>> b;

  Quiver() = default;
  explicit Quiver(int n);

  void add_arrows(int from, int to, int mult = 1);  // accumulates; opposite arrows cancel
  bool is_frozen(int v) const { return frozen[static_cast<std::size_t>(v)]; }
  int at(int i, int j) const { return b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  std::vector<int> mutable_vertices() const;
  std::vector<int> frozen_vertices() const;
  int arrow_count() const;  // sum of positive entries
  void drop_frozen_arrows();
  bool operator==(const Quiver&) const = default;
};

// Quiver with one weight vector per puncture at each vertex.
struct PSeed {
  Quiver q;
  int k = 0;
  std::vector<std::string> punctures;
  std::vector<std::vector<WeightVector>> wt;  // wt[v][p]

  MultiWeight weight(int v) const;
  bool operator==(const PSeed&) const = default;
};

// Quiver with a Laurent polynomial at every vertex; frozen entries stay equal to their initial variable.
struct Seed {
  Quiver q;
  VarContext ctx;
  std::vector<LaurentPoly> x;

  // Vertex v carries the initial variable names[v].
  static Seed initial(const Quiver& q, std::vector<std::string> names);
  static Seed initial(const Quiver& q);  // names x0, x1, ...
};

Quiver mutate_quiver(const Quiver& q, int v);

// Sum over incoming (sign -1) or outgoing (sign +1) arrows of the weights, with multiplicity.
std::vector<WeightVector> weight_flow(const PSeed& p, int v, int sign);
bool balanced_at(const PSeed& p, int v);
bool is_balanced(const PSeed& p);  // every mutable vertex
MultiWeight kappa(const PSeed& p, int v);
PSeed mutate_pseed(const PSeed& p, int v);

// The two exchange monomials at v: product over incoming and over outgoing arrows.
std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int v);
Seed mutate_seed(const Seed& s, int v);

// Script step: mutation at a vertex, or relabeling where old vertex i becomes vertex perm[i] (0-based).
struct Mutate {
  int v;
};
struct Permute {
  std::vector<int> perm;
};
using Step = std::variant<Mutate, Permute>;
using Script = std::vector<Step>;

Script mutations(const std::vector<int>& vs);
Script concat(const Script& a, const Script& b);

Quiver permute_quiver(const Quiver& q, const std::vector<int>& perm);
PSeed permute_pseed(const PSeed& p, const std::vector<int>& perm);
Seed permute_seed(const Seed& s, const std::vector<int>& perm);

Quiver apply_sequence(const Quiver& q, const Script& s);
PSeed apply_sequence(const PSeed& p, const Script& s);
Seed apply_sequence(const Seed& x, const Script& s);

// Sorted canonical texts of the mutable cluster variables, joined by newlines.
std::string canonical_cluster_key(const Seed& s);

// Canonical labeling of a vertex-colored quiver: cell refinement plus exhaustive individualization.
// colors[v] must already encode every vertex property to be respected (frozen flag, weights, ...).
struct CanonicalForm {
  std::vector<int> order;  // order[i] = original vertex placed at position i
  std::string key;
};
CanonicalForm canonical_form(const Quiver& q, const std::vector<std::string>& colors);
std::string canonical_pseed_key(const PSeed& p);
std::string canonical_quiver_key(const Quiver& q);
bool isomorphic(const PSeed& a, const PSeed& b);
bool isomorphic(const Quiver& a, const Quiver& b);

bool symmetrical_vertices(const Quiver& q, int v, int w);

}  // namespace cc
