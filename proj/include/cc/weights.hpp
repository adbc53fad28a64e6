#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cc/error.hpp"

namespace cc {

// Element of P = Z^k / Z(1,...,1), stored as the representative with minimum 0.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> coords);

  static WeightVector normalize(const std::vector<int>& v, int k);
  static WeightVector zero(int k);
  static WeightVector e(int k, int a);              // unit vector e_a, a in [1,k]
  static WeightVector omega(int k, int a);          // e_1 + ... + e_a; omega(k,0) == omega(k,k) == 0
  static WeightVector indicator(int k, const std::vector<int>& s);

  int k() const { return static_cast<int>(c_.size()); }
  const std::vector<int>& coords() const { return c_; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }  // 0-based
  bool is_zero() const;

  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-(const WeightVector& o) const;
  WeightVector operator-() const;
  WeightVector operator*(int s) const;
  WeightVector& operator+=(const WeightVector& o) { return *this = *this + o; }

  auto operator<=>(const WeightVector&) const = default;
  bool operator==(const WeightVector&) const = default;

  std::string to_string() const;  // "(a,b,c)"
  // Multiplicative notation over letters a,b,c,...: e1+e2 -> "ab", 0 -> "1".
  std::string to_multiplicative() const;

 private:
  std::vector<int> c_;
};

struct WeightVectorHash {
  std::size_t operator()(const WeightVector& w) const noexcept;
};

// Right permutation action: (w.l)_i = l_{w(i)}; perm is one-line, 1-based.
WeightVector w_act(const std::vector<int>& perm, const WeightVector& l);

// Ordered set partition of [k]; blocks hold sorted 1-based elements.
class Osp {
 public:
  Osp() = default;
  explicit Osp(std::vector<std::vector<int>> blocks);

  static Osp parse(const std::string& s, int k);

  int k() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  int block_of(int a) const;  // block index holding element a

  std::string to_string() const;
  auto operator<=>(const Osp&) const = default;
  bool operator==(const Osp&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int k_ = 0;
};

// Osp with a sign (+1/-1) on every block of size >= 3; signs[i] == 0 for smaller blocks.
class Dosp {
 public:
  Dosp() = default;
  Dosp(Osp osp, std::vector<int> signs);
  static Dosp undecorated(const Osp& osp);  // only valid when no block has size >= 3
  static Dosp parse(const std::string& s, int k);

  const Osp& osp() const { return osp_; }
  const std::vector<int>& signs() const { return signs_; }
  int k() const { return osp_.k(); }

  std::string to_string() const;
  auto operator<=>(const Dosp&) const = default;
  bool operator==(const Dosp&) const = default;

 private:
  Osp osp_;
  std::vector<int> signs_;
};

// Text form of a block: ascending digits for k <= 9, comma separated otherwise.
std::string block_to_string(const std::vector<int>& block, int k);

struct MultiWeight {
  std::vector<std::string> punctures;
  std::vector<WeightVector> at;  // one per puncture

  static MultiWeight zero(const std::vector<std::string>& punctures, int k);
  MultiWeight operator+(const MultiWeight& o) const;
  MultiWeight operator*(int s) const;
  MultiWeight operator-() const { return *this * -1; }
  bool operator==(const MultiWeight&) const = default;
  auto operator<=>(const MultiWeight&) const = default;
};

Osp osp_of(const WeightVector& l);

// Least upper bound in the refinement order (join of faces of the Coxeter complex).
// Throws Errc::NoUpperBound when the osps do not lie in a common chamber.
Osp join(const std::vector<Osp>& osps);
std::optional<Osp> try_join(const std::vector<Osp>& osps);

// Osp whose closed region contains the weight: every strict relation of the osp holds weakly.
bool in_closed_region(const WeightVector& l, const Osp& osp);

enum class CompatKind { Sortable, RootConjugate, Incompatible };

struct Compatibility {
  CompatKind kind = CompatKind::Incompatible;
  int a = 0, b = 0;  // RootConjugate: l - m == e_a - e_b in P
  bool operator==(const Compatibility&) const = default;
};

bool is_sortable(const WeightVector& l, const WeightVector& m);
// Returns (a,b) with l - m == e_a - e_b and (ab).l == m, if any.
std::optional<std::pair<int, int>> root_conjugacy(const WeightVector& l, const WeightVector& m);
Compatibility is_compatible(const WeightVector& l, const WeightVector& m);

enum class ClassSign { Plus, Minus, Ambiguous, None };

struct ConjugacyClass {
  std::vector<std::size_t> members;  // indices into the input multiset
  std::vector<int> ground_set;       // sorted; empty for singleton classes
  std::optional<WeightVector> nu;    // present for classes of size >= 2 (sign +1 convention when Ambiguous)
  ClassSign sign = ClassSign::None;
};

// Root-conjugacy classes of a pairwise compatible multiset, sorted by smallest member vector.
std::vector<ConjugacyClass> conjugacy_classes(const std::vector<WeightVector>& c);

WeightVector class_sum(const std::vector<WeightVector>& cls);

bool is_basic_compatible(const std::vector<WeightVector>& c);

Osp pcluster_osp(const std::vector<WeightVector>& c);
Dosp pcluster_dosp(const std::vector<WeightVector>& c);

struct RewriteMove {
  std::vector<int> s, t, meet, joined;
};

struct RewriteResult {
  std::vector<std::vector<int>> sets;  // sorted by size, then lexicographically
  std::vector<RewriteMove> trace;
};

// Applies {S,T} -> {S cap T, S cup T} until the multiset is a chain of initial intervals.
RewriteResult rewrite_to_fundamentals(const std::vector<std::vector<int>>& sets, int k);

}  // namespace cc
