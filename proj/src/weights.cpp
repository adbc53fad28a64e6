#include "cc/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Parse: return "Parse";
    case Errc::NoUpperBound: return "NoUpperBound";
    case Errc::NotPairwiseCompatible: return "NotPairwiseCompatible";
    case Errc::MalformedClass: return "MalformedClass";
    case Errc::MissingConjugacyClass: return "MissingConjugacyClass";
    case Errc::NotDominant: return "NotDominant";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FrozenVertex: return "FrozenVertex";
    case Errc::BalancingViolated: return "BalancingViolated";
    case Errc::NonRegularTriangulation: return "NonRegularTriangulation";
    case Errc::NotTaut: return "NotTaut";
    case Errc::BadParameter: return "BadParameter";
    case Errc::RowNotCycle: return "RowNotCycle";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::Degenerate: return "Degenerate";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::QuiverNotRestored: return "QuiverNotRestored";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- WeightVector

WeightVector::WeightVector(std::vector<int> coords) : c_(std::move(coords)) {
  if (c_.empty()) return;
  const int m = *std::min_element(c_.begin(), c_.end());
  for (int& x : c_) x -= m;
}

WeightVector WeightVector::normalize(const std::vector<int>& v, int k) {
  if (static_cast<int>(v.size()) != k)
    throw Error(Errc::LengthMismatch, "vector of length " + std::to_string(v.size()) + " for k=" + std::to_string(k));
  return WeightVector(v);
}

WeightVector WeightVector::zero(int k) { return WeightVector(std::vector<int>(static_cast<std::size_t>(k), 0)); }

WeightVector WeightVector::e(int k, int a) {
  if (a < 1 || a > k) throw Error(Errc::OutOfRange, "e_" + std::to_string(a));
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  v[static_cast<std::size_t>(a - 1)] = 1;
  return WeightVector(v);
}

WeightVector WeightVector::omega(int k, int a) {
  if (a < 0 || a > k) throw Error(Errc::OutOfRange, "omega_" + std::to_string(a));
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < a; ++i) v[static_cast<std::size_t>(i)] = 1;
  return WeightVector(v);
}

WeightVector WeightVector::indicator(int k, const std::vector<int>& s) {
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  for (int a : s) {
    if (a < 1 || a > k) throw Error(Errc::OutOfRange, "element " + std::to_string(a));
    v[static_cast<std::size_t>(a - 1)] += 1;
  }
  return WeightVector(v);
}

bool WeightVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  if (o.k() != k()) throw Error(Errc::LengthMismatch, "adding weights of different k");
  std::vector<int> v(c_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
  return WeightVector(v);
}

WeightVector WeightVector::operator-(const WeightVector& o) const { return *this + (-o); }

WeightVector WeightVector::operator-() const { return *this * -1; }

WeightVector WeightVector::operator*(int s) const {
  std::vector<int> v(c_);
  for (int& x : v) x *= s;
  return WeightVector(v);
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::string WeightVector::to_multiplicative() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (int r = 0; r < c_[i]; ++r) s += static_cast<char>('a' + static_cast<int>(i));
  }
  return s.empty() ? "1" : s;
}

std::size_t WeightVectorHash::operator()(const WeightVector& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : w.coords()) h = (h ^ static_cast<std::size_t>(x + 0x51)) * 0x100000001b3ULL;
  return h;
}

WeightVector w_act(const std::vector<int>& perm, const WeightVector& l) {
  if (static_cast<int>(perm.size()) != l.k()) throw Error(Errc::LengthMismatch, "permutation size");
  std::vector<int> v(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) v[i] = l[perm[i] - 1];
  return WeightVector(v);
}

// ---------------------------------------------------------------- Osp / Dosp

Osp::Osp(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(Errc::BadParameter, "empty block in osp");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  k_ = static_cast<int>(seen.size());
  for (int i = 0; i < k_; ++i)
    if (seen[static_cast<std::size_t>(i)] != i + 1) throw Error(Errc::BadParameter, "blocks do not partition [k]");
}

int Osp::block_of(int a) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), a)) return static_cast<int>(i);
  throw Error(Errc::OutOfRange, "element " + std::to_string(a) + " not in osp");
}

std::string block_to_string(const std::vector<int>& block, int k) {
  std::string s;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (k > 9 && i) s += ',';
    s += std::to_string(block[i]);
  }
  return s;
}

std::string Osp::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += '|';
    s += block_to_string(blocks_[i], k_);
  }
  return s;
}

namespace {

std::vector<int> parse_block(const std::string& t, int k) {
  std::vector<int> b;
  if (k > 9) {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) b.push_back(std::stoi(item));
  } else {
    for (char ch : t) {
      if (ch < '1' || ch > '9') throw Error(Errc::Parse, "bad block '" + t + "'");
      b.push_back(ch - '0');
    }
  }
  return b;
}

std::vector<std::string> split_bars(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '|') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Osp Osp::parse(const std::string& s, int k) {
  std::vector<std::vector<int>> blocks;
  for (const auto& t : split_bars(s)) blocks.push_back(parse_block(t, k));
  Osp o(blocks);
  if (o.k() != k) throw Error(Errc::Parse, "osp '" + s + "' is not on [" + std::to_string(k) + "]");
  return o;
}

Dosp::Dosp(Osp osp, std::vector<int> signs) : osp_(std::move(osp)), signs_(std::move(signs)) {
  if (signs_.size() != osp_.size()) throw Error(Errc::BadParameter, "sign vector size");
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    const bool big = osp_.blocks()[i].size() >= 3;
    if (big && signs_[i] != 1 && signs_[i] != -1) throw Error(Errc::BadParameter, "big block needs a sign");
    if (!big && signs_[i] != 0) throw Error(Errc::BadParameter, "small block carries a sign");
  }
}

Dosp Dosp::undecorated(const Osp& osp) { return Dosp(osp, std::vector<int>(osp.size(), 0)); }

Dosp Dosp::parse(const std::string& s, int k) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> signs;
  for (auto t : split_bars(s)) {
    int sign = 0;
    if (t.size() >= 2 && t[t.size() - 2] == '^') {
      const char c = t.back();
      if (c == '+') sign = 1;
      else if (c == '-') sign = -1;
      else throw Error(Errc::Parse, "bad sign in '" + t + "'");
      t.resize(t.size() - 2);
    }
    blocks.push_back(parse_block(t, k));
    signs.push_back(sign);
  }
  Osp o(blocks);
  if (o.k() != k) throw Error(Errc::Parse, "dosp '" + s + "' is not on [" + std::to_string(k) + "]");
  return Dosp(o, signs);
}

std::string Dosp::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < osp_.size(); ++i) {
    if (i) s += '|';
    s += block_to_string(osp_.blocks()[i], osp_.k());
    if (signs_[i] == 1) s += "^+";
    if (signs_[i] == -1) s += "^-";
  }
  return s;
}

MultiWeight MultiWeight::zero(const std::vector<std::string>& punctures, int k) {
  return MultiWeight{punctures, std::vector<WeightVector>(punctures.size(), WeightVector::zero(k))};
}

MultiWeight MultiWeight::operator+(const MultiWeight& o) const {
  if (o.at.size() != at.size()) throw Error(Errc::LengthMismatch, "multiweight puncture count");
  MultiWeight r = *this;
  for (std::size_t i = 0; i < at.size(); ++i) r.at[i] = at[i] + o.at[i];
  return r;
}

MultiWeight MultiWeight::operator*(int s) const {
  MultiWeight r = *this;
  for (auto& w : r.at) w = w * s;
  return r;
}

// ---------------------------------------------------------------- osps of weights, joins

Osp osp_of(const WeightVector& l) {
  std::map<int, std::vector<int>, std::greater<>> by_value;
  for (int i = 0; i < l.k(); ++i) by_value[l[i]].push_back(i + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& [v, b] : by_value) blocks.push_back(b);
  return Osp(blocks);
}

std::optional<Osp> try_join(const std::vector<Osp>& osps) {
  if (osps.empty()) throw Error(Errc::BadParameter, "join of an empty list");
  const int k = osps.front().k();
  // A face is determined by its flag of initial unions; the join exists iff all of them form a chain.
  std::set<std::vector<int>> flags;
  for (const auto& o : osps) {
    if (o.k() != k) throw Error(Errc::LengthMismatch, "join of osps on different [k]");
    std::vector<int> acc;
    for (std::size_t i = 0; i + 1 < o.size(); ++i) {
      acc.insert(acc.end(), o.blocks()[i].begin(), o.blocks()[i].end());
      std::sort(acc.begin(), acc.end());
      flags.insert(acc);
    }
  }
  std::vector<std::vector<int>> chain(flags.begin(), flags.end());
  std::sort(chain.begin(), chain.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].size() == chain[i + 1].size() ||
        !std::includes(chain[i + 1].begin(), chain[i + 1].end(), chain[i].begin(), chain[i].end()))
      return std::nullopt;
  }
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 1);
  chain.push_back(all);
  std::vector<std::vector<int>> blocks;
  std::vector<int> prev;
  for (const auto& s : chain) {
    std::vector<int> b;
    std::set_difference(s.begin(), s.end(), prev.begin(), prev.end(), std::back_inserter(b));
    blocks.push_back(b);
    prev = s;
  }
  return Osp(blocks);
}

Osp join(const std::vector<Osp>& osps) {
  auto r = try_join(osps);
  if (!r) throw Error(Errc::NoUpperBound, "osps have contradictory strict relations");
  return *r;
}

bool in_closed_region(const WeightVector& l, const Osp& osp) {
  for (int a = 1; a <= l.k(); ++a)
    for (int b = 1; b <= l.k(); ++b)
      if (osp.block_of(a) < osp.block_of(b) && l[a - 1] < l[b - 1]) return false;
  return true;
}

// ---------------------------------------------------------------- compatibility

bool is_sortable(const WeightVector& l, const WeightVector& m) {
  if (l.k() != m.k()) throw Error(Errc::LengthMismatch, "compatibility of different k");
  for (int a = 0; a < l.k(); ++a)
    for (int b = 0; b < l.k(); ++b)
      if (l[a] > l[b] && m[a] < m[b]) return false;
  return true;
}

std::optional<std::pair<int, int>> root_conjugacy(const WeightVector& l, const WeightVector& m) {
  if (l.k() != m.k()) throw Error(Errc::LengthMismatch, "compatibility of different k");
  const int k = l.k();
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) d[static_cast<std::size_t>(i)] = l[i] - m[i];
  // d == e_a - e_b + c(1,...,1): one entry c+1, one entry c-1, the rest c.
  const int mx = *std::max_element(d.begin(), d.end());
  const int mn = *std::min_element(d.begin(), d.end());
  if (mx - mn != 2) return std::nullopt;
  int a = -1, b = -1;
  for (int i = 0; i < k; ++i) {
    const int x = d[static_cast<std::size_t>(i)];
    if (x == mx) {
      if (a >= 0) return std::nullopt;
      a = i;
    } else if (x == mn) {
      if (b >= 0) return std::nullopt;
      b = i;
    } else if (x != mn + 1) {
      return std::nullopt;
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  if (w_act(perm, l) != m) return std::nullopt;
  return std::make_pair(a + 1, b + 1);
}

Compatibility is_compatible(const WeightVector& l, const WeightVector& m) {
  if (is_sortable(l, m)) return {CompatKind::Sortable, 0, 0};
  if (auto rc = root_conjugacy(l, m)) return {CompatKind::RootConjugate, rc->first, rc->second};
  return {CompatKind::Incompatible, 0, 0};
}

std::vector<ConjugacyClass> conjugacy_classes(const std::vector<WeightVector>& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<std::set<int>> ground(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto cp = is_compatible(c[i], c[j]);
      if (cp.kind == CompatKind::Incompatible)
        throw Error(Errc::NotPairwiseCompatible, c[i].to_string() + " vs " + c[j].to_string());
      if (cp.kind == CompatKind::RootConjugate) {
        parent[find(i)] = find(j);
        ground[i].insert({cp.a, cp.b});
      }
    }
  }
  std::map<std::size_t, ConjugacyClass> by_root;
  std::map<std::size_t, std::set<int>> gs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    by_root[r].members.push_back(i);
    gs[r].insert(ground[i].begin(), ground[i].end());
  }
  std::vector<ConjugacyClass> out;
  for (auto& [r, cls] : by_root) {
    cls.ground_set.assign(gs[r].begin(), gs[r].end());
    if (cls.members.size() >= 2) {
      std::set<WeightVector> vals;
      for (auto i : cls.members) vals.insert(c[i]);
      const int k = c[cls.members.front()].k();
      if (vals.size() != cls.members.size() || cls.ground_set.size() != cls.members.size())
        throw Error(Errc::MalformedClass, "class size does not match its ground set");
      // Find (nu, eps) with class == {nu + eps e_a : a in B} and nu constant on B.
      std::vector<std::pair<int, WeightVector>> found;
      for (int eps : {1, -1}) {
        for (int a : cls.ground_set) {
          const WeightVector nu = *vals.begin() - WeightVector::e(k, a) * eps;
          bool ok = true;
          for (int b : cls.ground_set) ok = ok && nu[b - 1] == nu[cls.ground_set.front() - 1];
          std::set<WeightVector> gen;
          for (int b : cls.ground_set) gen.insert(nu + WeightVector::e(k, b) * eps);
          if (ok && gen == vals) {
            found.emplace_back(eps, nu);
            break;
          }
        }
      }
      if (found.empty()) throw Error(Errc::MalformedClass, "no (nu, eps) presentation");
      cls.nu = found.front().second;
      if (cls.members.size() == 2) cls.sign = ClassSign::Ambiguous;
      else cls.sign = found.front().first == 1 ? ClassSign::Plus : ClassSign::Minus;
    }
    out.push_back(std::move(cls));
  }
  auto key = [&](const ConjugacyClass& x) {
    std::vector<WeightVector> v;
    for (auto i : x.members) v.push_back(c[i]);
    std::sort(v.begin(), v.end());
    return v;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return out;
}

WeightVector class_sum(const std::vector<WeightVector>& cls) {
  if (cls.empty()) throw Error(Errc::BadParameter, "empty class");
  WeightVector s = WeightVector::zero(cls.front().k());
  for (const auto& w : cls) s += w;
  return s;
}

bool is_basic_compatible(const std::vector<WeightVector>& c) {
  std::vector<bool> conj(c.size(), false);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto cp = is_compatible(c[i], c[j]);
      if (cp.kind == CompatKind::Incompatible) return false;
      if (cp.kind == CompatKind::RootConjugate) conj[i] = conj[j] = true;
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!conj[i]) continue;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != i && c[j] == c[i]) return false;
  }
  return true;
}

namespace {

std::vector<WeightVector> members_of(const ConjugacyClass& cls, const std::vector<WeightVector>& c) {
  std::vector<WeightVector> v;
  for (auto i : cls.members) v.push_back(c[i]);
  return v;
}

}  // namespace

Osp pcluster_osp(const std::vector<WeightVector>& c) {
  if (c.empty()) throw Error(Errc::BadParameter, "empty P-cluster");
  std::vector<Osp> osps;
  for (const auto& cls : conjugacy_classes(c)) osps.push_back(osp_of(class_sum(members_of(cls, c))));
  return join(osps);
}

Dosp pcluster_dosp(const std::vector<WeightVector>& c) {
  const auto classes = conjugacy_classes(c);
  std::vector<Osp> osps;
  for (const auto& cls : classes) osps.push_back(osp_of(class_sum(members_of(cls, c))));
  const Osp osp = join(osps);
  std::vector<int> signs(osp.size(), 0);
  for (std::size_t i = 0; i < osp.size(); ++i) {
    const auto& block = osp.blocks()[i];
    if (block.size() < 3) continue;
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cls) { return cls.ground_set == block; });
    if (it == classes.end())
      throw Error(Errc::MissingConjugacyClass, "no class with ground set " + block_to_string(block, osp.k()));
    signs[i] = it->sign == ClassSign::Plus ? 1 : -1;
  }
  return Dosp(osp, signs);
}

// ---------------------------------------------------------------- rewriting

RewriteResult rewrite_to_fundamentals(const std::vector<std::vector<int>>& sets, int k) {
  std::vector<std::vector<int>> cur;
  std::vector<int> total(static_cast<std::size_t>(k), 0);
  for (auto s : sets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(Errc::BadParameter, "repeated element in a set");
    for (int a : s) {
      if (a < 1 || a > k) throw Error(Errc::OutOfRange, "element " + std::to_string(a));
      ++total[static_cast<std::size_t>(a - 1)];
    }
    if (!s.empty()) cur.push_back(s);
  }
  if (!std::is_sorted(total.begin(), total.end(), std::greater<>()))
    throw Error(Errc::NotDominant, "indicator sum is not weakly decreasing");
  auto order = [](const std::vector<int>& x, const std::vector<int>& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  };
  RewriteResult res;
  for (;;) {
    std::sort(cur.begin(), cur.end(), order);
    bool moved = false;
    for (std::size_t i = 0; i < cur.size() && !moved; ++i) {
      for (std::size_t j = i + 1; j < cur.size() && !moved; ++j) {
        const auto& s = cur[i];
        const auto& t = cur[j];
        if (std::includes(t.begin(), t.end(), s.begin(), s.end()) || std::includes(s.begin(), s.end(), t.begin(), t.end()))
          continue;
        RewriteMove mv{s, t, {}, {}};
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(mv.meet));
        std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(mv.joined));
        std::vector<std::vector<int>> next;
        for (std::size_t r = 0; r < cur.size(); ++r)
          if (r != i && r != j) next.push_back(cur[r]);
        if (!mv.meet.empty()) next.push_back(mv.meet);
        next.push_back(mv.joined);
        res.trace.push_back(std::move(mv));
        cur = std::move(next);
        moved = true;
      }
    }
    if (!moved) break;
  }
  for (const auto& s : cur)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i) + 1)
        throw Error(Errc::VerificationFailed, "chain element is not an initial interval");
  res.sets = cur;
  return res;
}

}  // namespace cc
