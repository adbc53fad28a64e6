#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cc/cluster.hpp"
#include "cc/dospgraph.hpp"
#include "cc/surfaces.hpp"

namespace cc {

enum class ExploreMode { Cluster, PSeed };

struct ExploreOptions {
  ExploreMode mode = ExploreMode::Cluster;
  std::size_t max_nodes = 200000;
  int max_depth = -1;  // negative means unbounded
  bool good_filter = false;
  int threads = 1;
};

// A P-cluster that fails basic compatibility at a puncture, or a failed property at a good node.
struct Violation {
  std::size_t node = 0;
  int vertex = -1;  // mutated vertex for pruned children, -1 otherwise
  std::string puncture;
  std::string what;
};

struct ExchangeEdge {
  std::size_t a = 0, b = 0;  // a < b
  int vertex = 0;            // vertex mutated when the edge was first found
  bool operator==(const ExchangeEdge&) const = default;
};

// Nodes are numbered in BFS order from the root; per level, children are emitted in (parent, vertex) order.
struct ExchangeGraph {
  ExploreMode mode = ExploreMode::Cluster;
  std::vector<std::string> keys;
  std::vector<PSeed> pseeds;
  std::vector<Seed> seeds;  // cluster mode only
  std::vector<int> depth;
  std::vector<ExchangeEdge> edges;  // sorted, one per node pair
  std::vector<std::optional<std::vector<Dosp>>> dosps;  // per puncture; empty when not basic somewhere
  std::vector<Violation> violations;
  bool partial = false;

  std::size_t size() const { return keys.size(); }
  // Distinct mutable cluster variables over all nodes (cluster mode).
  std::vector<std::string> cluster_variables() const;
};

// Exchange-graph BFS. Cluster mode keys nodes by the set of mutable cluster variables. P-seed mode keys them
// by the isomorphism class of the P-seed without its zero-weight frozen vertices, whose arrow multiplicities
// may grow without bound. Hitting a limit returns the partial graph flagged.
ExchangeGraph explore(const PSeed& root, const ExploreOptions& opt);

// P-cluster at a puncture: the weights of the mutable vertices.
std::vector<WeightVector> pcluster_at(const PSeed& p, std::size_t puncture);
std::optional<std::vector<Dosp>> dosps_of(const PSeed& p);
std::string dosp_tuple_text(const std::vector<Dosp>& d);  // comma separated, one per puncture

// Lexicographically least (greatest) sorted multiset over all relabelings of [k]. The greatest one has
// identity-sortable class sums, so its dosp lists blocks in increasing order.
std::vector<WeightVector> w_orbit_min(const std::vector<WeightVector>& c);
std::vector<WeightVector> w_orbit_max(const std::vector<WeightVector>& c);

struct PClusterRow {
  std::vector<WeightVector> pcluster;  // w_orbit_max representative
  Dosp dosp;                           // of the representative
  // "a*2,ab*2" style: fewer letters first, then alphabetical, "1" (zero) last.
  std::string multiplicative() const;
};

// Distinct basic P-clusters at a puncture up to W, sorted by dosp text and then by row text.
std::vector<PClusterRow> pcluster_table(const ExchangeGraph& g, std::size_t puncture = 0);

// Parses "a*2,ab,1": letters name coordinates, "1" is the zero weight, "*n" repeats.
std::vector<WeightVector> parse_multiplicative(const std::string& s, int k);

struct Report {
  bool pass = true;
  std::vector<std::string> failures;
  std::size_t checked = 0;
  void fail(std::string msg) {
    pass = false;
    if (failures.size() < 20) failures.push_back(std::move(msg));
  }
};

// Every edge joins equal or adjacent dosps and changes at most one puncture.
Report dosp_labeling_check(const ExchangeGraph& g);
// Node map to H by dosp tuple: simplicial, and onto H's vertices and edges when the graph is complete.
Report edge_contraction_check(const ExchangeGraph& g, const DospGraph& h);

// Root-conjugate vertices are swap-symmetric and agree elsewhere; kappa lies in the closed osp region;
// each coordinate pair is root-conjugate in the cluster or strictly ordered at least twice.
Report good_seed_properties(const PSeed& p);
Report good_graph_properties(const ExchangeGraph& g);

// Applies the script. The mutable part of the quiver must be restored, and the mutable weights must equal
// expected(original) when given. Frozen vertices are not compared: these are quasi-automorphisms.
Report check_script_automorphism(const PSeed& p, const Script& script,
                                 const std::function<PSeed(const PSeed&)>& expected = nullptr);

// Induced P-seed on the kept vertices, in increasing order.
PSeed induced_pseed(const PSeed& p, const std::vector<int>& keep);
// Deletes vertices whose weight vanishes at every puncture.
PSeed drop_zero_weight(const PSeed& p);

// Ladder P-seed of the Grassmannian digon: row i carries omega_i at vertices 2i-1, 2i (1-based), the two
// frozen vertices come last.
PSeed ladder_pseed(int k);

struct WalkStep {
  std::vector<int> mutations;  // applied left to right, 0-based vertices
  std::string dosp;
};
// Applies each step in turn and records the dosp after it; stops early when a P-cluster is not basic.
std::vector<WalkStep> dosp_walk(const PSeed& start, const std::vector<std::vector<int>>& steps);

// Sigma_5(Delta_2) with the vertex numbering of the drawn figure (0-based), mutable part only.
PSeed fg_digon_k5_drawn();

struct LeadstoReport : Report {
  PSeed result;
  PSeed target;
  std::vector<int> sequence;  // mutations performed, in the numbering at the time of mutation
};

// Sigma_k(Delta_2) ~> Sigma'_k(Delta_k) for k = 5 via the tabulated sequence.
LeadstoReport leadsto_fg_to_gr(int k);
// Sigma_k^s glued to Sigma_k^1 ~> Sigma_k^{s-1} glued to Sigma_k^1 by k-s columns of mutations, of lengths
// k-s down to 1. Compared after deleting zero-weight vertices; s == 1 is the empty sequence.
LeadstoReport leadsto_sigma(int k, int s);

struct Preset {
  std::string name;
  Assembled assembled;
};
Preset make_preset(const std::string& name);  // sl3-d21, sl3-d31, sl4-d21, torus-s11-k4
std::vector<std::string> preset_names();

// Mutations at labels in list order, then the relabeling where each cycle (x y ...) moves the vertex labeled
// x to the position labeled y. labels[i] is the vertex carrying label i+1.
Script labeled_script(const std::vector<int>& labels, int n, const std::vector<int>& mutation_labels,
                      const std::vector<std::vector<int>>& cycles);
// Arc-vertex labels 1..6 of sl3-d31 (A, B, rho A, ...) and sl4-d21 (A, B, C, rho C, rho B, rho A).
std::vector<int> preset_labels(const Preset& p);

struct NamedScript {
  std::string name;
  Script script;
};
// Tabulated automorphism scripts of sl3-d31 and sl4-d21, sigma first.
std::vector<NamedScript> preset_scripts(const Preset& p);

}  // namespace cc
