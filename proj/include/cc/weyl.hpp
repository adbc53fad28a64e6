#pragma once

#include <string>
#include <vector>

#include "cc/cluster.hpp"
#include "cc/surfaces.hpp"

namespace cc {

// Row edge (i,b,c)-(i,b+1,c-1) in triangle t, coordinates taken relative to the given corner.
struct RowEdge {
  int triangle = 0;
  int corner = 0;
  int b = 0;
};

struct RowSelector {
  std::string puncture;
  int row = 0;
  std::vector<int> cycle;  // arrows cycle[j] -> cycle[j+1]
};

// Multiplicity of omega_i in a weight at one puncture: l_i - l_{i+1}.
int omega_multiplicity(const WeightVector& w, int i);

// Mutable vertices whose weight at p contains omega_i.
std::vector<int> row_vertices(const Assembled& a, const std::string& puncture, int i);
std::vector<RowEdge> row_edges(const Assembled& a, const std::string& puncture, int i);

// Orders verts along an oriented cycle of the induced subquiver, starting at verts.front().
// Two vertices with no arrow between them count as a cancelled 2-cycle. Throws RowNotCycle.
std::vector<int> oriented_cycle(const Quiver& q, const std::vector<int>& verts);
RowSelector select_row(const Assembled& a, const std::string& puncture, int i);

struct Fraction {
  LaurentPoly num, den;
};

// Current seed variables at the rhombus corners; corners of the triangle contribute 1.
Fraction rhombus_monomial(const Assembled& a, const Seed& s, const std::string& puncture, int i, const RowEdge& e);
// Sum of the rhombus monomials of row i around p. Throws NotDivisible if the sum is not Laurent.
LaurentPoly script_w(const Assembled& a, const Seed& s, const std::string& puncture, int i);
// Sum over cycle edges j -> j+1 of the product of x_w over j+1 -> w -> j, divided by x_j x_{j+1}.
LaurentPoly cycle_potential(const Seed& s, const std::vector<int>& cycle);

// mu_1 ... mu_{m-1} (m-1 m) mu_{m-1} ... mu_1 with cycle[basepoint] playing vertex 1.
Script weyl_cycle_script(const std::vector<int>& cycle, int n, int basepoint = 0);

// Oriented m-cycle 0..m-1 with frozen j+ = m+2j and j- = m+2j+1 and arrows j+1 -> j± -> j.
Seed cycle_model_seed(int m);

struct WeylReport {
  std::vector<std::string> checks;  // one line per verified identity
  Script script;
  std::string w_text;  // the rescaling factor in the current seed's own variables
};

struct WeylResult {
  PSeed pseed;
  Seed seed;
  WeylReport report;
};

// Weights of p transformed by the transposition (i i+1).
PSeed reflect_weights(const PSeed& p, const std::string& puncture, int i);

// Runs the cycle script on row i around p. The rescaling identity is checked in the seed's own cluster
// variables, so the input may be any seed whose quiver equals the assembled one. Rows and exponents come
// from the assembled weights, so applying the result again inverts it. Throws VerificationFailed.
WeylResult apply_weyl(const Assembled& a, const PSeed& p, const Seed& s, const std::string& puncture, int i);
// Once-punctured closed surfaces: i > k/2 as above; i == k/2 mutates the midpoints first and last.
WeylResult apply_weyl_sg1(const Assembled& a, const PSeed& p, const Seed& s, int i);

}  // namespace cc
