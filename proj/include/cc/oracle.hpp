#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cc/coxeter.hpp"
#include "cc/error.hpp"

namespace cc {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>;  // row-major, square

QMatrix identity_matrix(int k);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVector mat_vec(const QMatrix& a, const QVector& v);
QMatrix mat_inverse(const QMatrix& a);  // throws Degenerate when singular
mpq_class mat_det(const QMatrix& a);

// Homogeneous element of the degree-d exterior power of Q^k. Basis e_S is keyed by the bitmask of S
// (bit j-1 for element j); zero coefficients are never stored.
class ExtTensor {
 public:
  using Mask = std::uint32_t;

  ExtTensor(int k, int d);
  static ExtTensor scalar(int k, const mpq_class& c);
  static ExtTensor basis(int k, const std::vector<int>& subset);  // 1-based, any order is sorted first
  static ExtTensor vector(const QVector& v);

  int k() const { return k_; }
  int degree() const { return d_; }
  const std::map<Mask, mpq_class>& terms() const { return c_; }
  mpq_class coeff(Mask m) const;
  void add_term(Mask m, const mpq_class& c);
  bool is_zero() const { return c_.empty(); }
  // The coefficient a degree-0 or degree-k tensor carries; the evaluation isomorphism to Q.
  mpq_class value() const;
  std::string to_string() const;

  ExtTensor& operator+=(const ExtTensor& o);
  ExtTensor& operator-=(const ExtTensor& o);
  ExtTensor& operator*=(const mpq_class& s);
  friend ExtTensor operator+(ExtTensor a, const ExtTensor& b) { return a += b; }
  friend ExtTensor operator-(ExtTensor a, const ExtTensor& b) { return a -= b; }
  friend ExtTensor operator*(ExtTensor a, const mpq_class& s) { return a *= s; }
  friend ExtTensor operator*(const mpq_class& s, ExtTensor a) { return a *= s; }
  friend bool operator==(const ExtTensor& a, const ExtTensor& b) { return a.k_ == b.k_ && a.d_ == b.d_ && a.c_ == b.c_; }

 private:
  void check_same(const ExtTensor& o) const;
  int k_;
  int d_;
  std::map<Mask, mpq_class> c_;
};

// Sign of e_A ^ e_B for disjoint A, B: (-1)^{#(x in A, y in B, x > y)}.
int shuffle_sign(ExtTensor::Mask a, ExtTensor::Mask b);

ExtTensor wedge(const ExtTensor& x, const ExtTensor& y);
ExtTensor wedge_vectors(const std::vector<QVector>& vs, int k);
// Induced action of a matrix on the exterior power.
ExtTensor apply(const QMatrix& m, const ExtTensor& x);
// (m - 1)^ell acting through the group algebra: sum_i C(ell,i) (-1)^(ell-i) m^i x.
ExtTensor group_binomial(const QMatrix& m, int ell, const ExtTensor& x);
// Coefficients of (X - 1)^ell, lowest power first.
std::vector<mpz_class> binomial_row(int ell);

// Meet of x (degree k-a) and y (degree k-b), degree k-a-b: sum over b-subsets J of x's factors moved
// next to y, sign of the shuffle (J, rest), times det(x_J ^ y), times the leftover factors.
ExtTensor cap(const ExtTensor& x, const ExtTensor& y);
// Same meet for x given as the wedge of explicit vectors, shuffling the vectors themselves.
ExtTensor cap_vectors(const std::vector<QVector>& xs, const ExtTensor& y);

// x == r * y; nullopt when not proportional or y == 0.
std::optional<mpq_class> ratio(const ExtTensor& x, const ExtTensor& y);

// v_1..v_k as matrix columns; F_(a) = v_1 ^ ... ^ v_a.
struct Flag {
  QMatrix v;
  int k() const { return static_cast<int>(v.size()); }
  QVector vec(int i) const;  // 1-based column
  ExtTensor step(int a) const;
  ExtTensor v_subset(const std::vector<int>& s) const;  // wedge of v_s, s ascending
};

struct Unipotent {
  QMatrix u;
};

struct FlagInstance {
  Flag flag;
  Unipotent u;
  QMatrix z;  // u in the flag basis: u(v_i) = sum_j z[j][i] v_j, upper unitriangular
};

// V random integer nonsingular, U random integer unitriangular with entries in [-3,3], u = V U V^{-1}.
// Asserts that u stabilizes every step of the flag.
FlagInstance random_instance(int k, std::mt19937_64& rng);
// Random rational coefficients on every basis element of the given degree.
ExtTensor random_tensor(int k, int d, std::mt19937_64& rng);

// W_i = F_(i-1) ^ (u v_{i+1} - v_{i+1}) / F_(i). Throws Degenerate when zero.
mpq_class flag_step_factor(const Flag& f, const Unipotent& u, int i);
// s_i . F represented by v_i -> W_i v_i, v_{i+1} -> v_{i+1} / W_i.
Flag weyl_flag_step(const Flag& f, const Unipotent& u, int i);
// Steps applied in list order; the one-line result of the same positional swaps is word_to_perm(word).
Flag act_word(const Flag& f, const Unipotent& u, const Word& word);

bool termwise_leq(const std::vector<int>& t, const std::vector<int>& s);
std::vector<std::vector<int>> subsets_of_size(int k, int a);

// Reduced word for w_S moving x_1, then x_2, ... leftwards into place; word_to_perm gives w_S.
Word grassmannian_word(const std::vector<int>& s);
mpq_class w_S_via_flag(const Flag& f, const Unipotent& u, const std::vector<int>& s);
mpq_class w_S_via_word(const QMatrix& z, const std::vector<int>& s);

struct CheckReport {
  bool pass = false;
  std::string detail;
};

// (u-1)^{l(S)} v_T against f^{lambda(S)} W_S F_(a) when T == S and 0 when T < S.
CheckReport check_killeq(const FlagInstance& inst, const std::vector<int>& s, const std::vector<int>& t);

struct FlattenReport : CheckReport {
  mpq_class lhs, rhs;
  mpz_class f;
  int ell = 0;
  std::vector<mpz_class> numerators;  // coefficients of u^0, u^-1, ... in (u^-1 - 1)^ell
};

// S = [a] u [a+b+1, a+b+c]; eta of degree k-a-b, zeta of degree k-a-c.
FlattenReport check_flattenproduct(const FlagInstance& inst, int a, int b, int c, const ExtTensor& eta,
                                   const ExtTensor& zeta);
// Positive sign: eta of degree k-a-1. Negative sign: eta of degree k-a-r+1.
FlattenReport check_flattensplit(const FlagInstance& inst, int a, int r, const ExtTensor& eta);
FlattenReport check_flattensplit_dual(const FlagInstance& inst, int a, int r, const ExtTensor& eta);

struct TrialSummary {
  int passed = 0;
  int total = 0;
  long long checks = 0;
  std::string first_failure;
  bool ok() const { return passed == total; }
};

// One trial draws a fresh (F,u) from a stream seeded by (rng_seed, trial) and checks every parameter
// tuple for the given k. Degenerate samples are redrawn up to a fixed retry count.
TrialSummary verify_flattening(int k, int trials, std::uint64_t rng_seed, int threads = 1);
TrialSummary verify_killeq(int k, int trials, std::uint64_t rng_seed, int threads = 1);
TrialSummary verify_spiral(int k, int trials, std::uint64_t rng_seed, int threads = 1);

}  // namespace cc
