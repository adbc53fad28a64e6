#include "cc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <sstream>

namespace cc {

namespace {

using Mask = ExtTensor::Mask;

std::size_t ux(int i) { return static_cast<std::size_t>(i); }

Mask full_mask(int k) { return k >= 32 ? ~Mask{0} : (Mask{1} << k) - 1; }

Mask mask_of(const std::vector<int>& s) {
  Mask m = 0;
  for (int x : s) m |= Mask{1} << (x - 1);
  return m;
}

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (int j = 0; m; ++j, m >>= 1)
    if (m & 1) out.push_back(j);
  return out;
}

// All submasks of m with exactly n bits, in increasing numeric order.
std::vector<Mask> submasks(Mask m, int n) {
  std::vector<Mask> out;
  for (Mask s = m;; s = (s - 1) & m) {
    if (std::popcount(s) == n) out.push_back(s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void check_k(int k) {
  if (k < 1 || k > 20) throw Error(Errc::BadParameter, "exterior algebra needs 1 <= k <= 20");
}

mpz_class binom(int n, int r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
  return out + "}";
}

QMatrix transpose(const QMatrix& a) {
  QMatrix t(a.size(), QVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// The interval [lo, hi] as a 1-based list; empty when lo > hi.
std::vector<int> interval(int lo, int hi) {
  std::vector<int> out;
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

}  // namespace

QMatrix identity_matrix(int k) {
  QMatrix m(ux(k), QVector(ux(k), 0));
  for (int i = 0; i < k; ++i) m[ux(i)][ux(i)] = 1;
  return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  QMatrix c(n, QVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
  QVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

QMatrix mat_inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix m = a, inv = identity_matrix(static_cast<int>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error(Errc::Degenerate, "singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

mpq_class mat_det(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix m = a;
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

ExtTensor::ExtTensor(int k, int d) : k_(k), d_(d) {
  check_k(k);
  if (d < 0 || d > k) throw Error(Errc::DegreeMismatch, "degree " + std::to_string(d) + " outside [0, k]");
}

ExtTensor ExtTensor::scalar(int k, const mpq_class& c) {
  ExtTensor t(k, 0);
  t.add_term(0, c);
  return t;
}

ExtTensor ExtTensor::basis(int k, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && (s.front() < 1 || s.back() > k)))
    throw Error(Errc::OutOfRange, "basis subset must consist of distinct elements of [k]");
  ExtTensor t(k, static_cast<int>(s.size()));
  t.add_term(mask_of(s), 1);
  return t;
}

ExtTensor ExtTensor::vector(const QVector& v) {
  ExtTensor t(static_cast<int>(v.size()), 1);
  for (std::size_t j = 0; j < v.size(); ++j) t.add_term(Mask{1} << j, v[j]);
  return t;
}

mpq_class ExtTensor::coeff(Mask m) const {
  const auto it = c_.find(m);
  return it == c_.end() ? mpq_class(0) : it->second;
}

void ExtTensor::add_term(Mask m, const mpq_class& c) {
  if (std::popcount(m) != d_ || (m & ~full_mask(k_))) throw Error(Errc::DegreeMismatch, "basis element of wrong degree");
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

mpq_class ExtTensor::value() const {
  if (d_ != 0 && d_ != k_) throw Error(Errc::DegreeMismatch, "only degrees 0 and k evaluate to a number");
  return coeff(d_ == 0 ? 0 : full_mask(k_));
}

std::string ExtTensor::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : c_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    if (m) {
      out << "*e";
      bool sep = false;
      for (int j : elements(m)) {
        out << (sep && k_ > 9 ? "," : "") << j + 1;
        sep = true;
      }
    }
  }
  return out.str();
}

void ExtTensor::check_same(const ExtTensor& o) const {
  if (k_ != o.k_ || d_ != o.d_) throw Error(Errc::DegreeMismatch, "tensors of different k or degree");
}

ExtTensor& ExtTensor::operator+=(const ExtTensor& o) {
  check_same(o);
  for (const auto& [m, c] : o.c_) add_term(m, c);
  return *this;
}

ExtTensor& ExtTensor::operator-=(const ExtTensor& o) {
  check_same(o);
  for (const auto& [m, c] : o.c_) add_term(m, -c);
  return *this;
}

ExtTensor& ExtTensor::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [m, c] : c_) c *= s;
  return *this;
}

int shuffle_sign(Mask a, Mask b) {
  int inv = 0;
  for (int y : elements(b)) inv += std::popcount(a >> (y + 1));
  return inv % 2 ? -1 : 1;
}

ExtTensor wedge(const ExtTensor& x, const ExtTensor& y) {
  if (x.k() != y.k()) throw Error(Errc::DegreeMismatch, "wedge of tensors over different k");
  if (x.degree() + y.degree() > x.k()) throw Error(Errc::DegreeMismatch, "wedge degree exceeds k");
  ExtTensor out(x.k(), x.degree() + y.degree());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (!(a & b)) out.add_term(a | b, shuffle_sign(a, b) * ca * cb);
  return out;
}

ExtTensor wedge_vectors(const std::vector<QVector>& vs, int k) {
  ExtTensor out = ExtTensor::scalar(k, 1);
  for (const auto& v : vs) out = wedge(out, ExtTensor::vector(v));
  return out;
}

ExtTensor apply(const QMatrix& m, const ExtTensor& x) {
  const int k = x.k();
  if (static_cast<int>(m.size()) != k) throw Error(Errc::DegreeMismatch, "matrix size differs from k");
  const QMatrix cols = transpose(m);
  ExtTensor out(k, x.degree());
  for (const auto& [s, c] : x.terms()) {
    ExtTensor img = ExtTensor::scalar(k, c);
    for (int j : elements(s)) img = wedge(img, ExtTensor::vector(cols[ux(j)]));
    out += img;
  }
  return out;
}

std::vector<mpz_class> binomial_row(int ell) {
  std::vector<mpz_class> out;
  for (int i = 0; i <= ell; ++i) out.push_back((ell - i) % 2 ? mpz_class(-binom(ell, i)) : binom(ell, i));
  return out;
}

ExtTensor group_binomial(const QMatrix& m, int ell, const ExtTensor& x) {
  const auto coeffs = binomial_row(ell);
  ExtTensor out(x.k(), x.degree());
  ExtTensor power = x;
  for (int i = 0; i <= ell; ++i) {
    out += power * mpq_class(coeffs[ux(i)]);
    if (i < ell) power = cc::apply(m, power);
  }
  return out;
}

ExtTensor cap(const ExtTensor& x, const ExtTensor& y) {
  const int k = x.k();
  if (y.k() != k) throw Error(Errc::DegreeMismatch, "cap of tensors over different k");
  const int b = k - y.degree();
  const int out_deg = x.degree() - b;
  if (out_deg < 0) throw Error(Errc::DegreeMismatch, "cap needs deg x + deg y >= k");
  ExtTensor out(k, out_deg);
  const Mask full = full_mask(k);
  for (const auto& [s, cx] : x.terms())
    for (Mask j : submasks(s, b)) {
      const mpq_class cy = y.coeff(full & ~j);
      if (cy == 0) continue;
      const Mask rest = s & ~j;
      out.add_term(rest, shuffle_sign(j, rest) * shuffle_sign(j, full & ~j) * cx * cy);
    }
  return out;
}

ExtTensor cap_vectors(const std::vector<QVector>& xs, const ExtTensor& y) {
  const int k = y.k();
  const int n = static_cast<int>(xs.size());
  const int b = k - y.degree();
  if (n - b < 0) throw Error(Errc::DegreeMismatch, "cap needs deg x + deg y >= k");
  ExtTensor out(k, n - b);
  for (Mask j : submasks(full_mask(n), b)) {
    std::vector<QVector> moved, kept;
    for (int i = 0; i < n; ++i) ((j >> i) & 1 ? moved : kept).push_back(xs[ux(i)]);
    const mpq_class det = wedge(wedge_vectors(moved, k), y).value();
    if (det == 0) continue;
    out += wedge_vectors(kept, k) * (shuffle_sign(j, full_mask(n) & ~j) * det);
  }
  return out;
}

std::optional<mpq_class> ratio(const ExtTensor& x, const ExtTensor& y) {
  if (x.k() != y.k() || x.degree() != y.degree() || y.is_zero()) return std::nullopt;
  const auto& [m, c] = *y.terms().begin();
  const mpq_class r = x.coeff(m) / c;
  if (!(x == y * r)) return std::nullopt;
  return r;
}

QVector Flag::vec(int i) const {
  QVector out;
  for (const auto& row : v) out.push_back(row[ux(i - 1)]);
  return out;
}

ExtTensor Flag::step(int a) const { return v_subset(interval(1, a)); }

ExtTensor Flag::v_subset(const std::vector<int>& s) const {
  std::vector<QVector> vs;
  for (int i : s) vs.push_back(vec(i));
  return wedge_vectors(vs, k());
}

FlagInstance random_instance(int k, std::mt19937_64& rng) {
  check_k(k);
  std::uniform_int_distribution<int> entry(-3, 3);
  QMatrix vm;
  do {
    vm.assign(ux(k), QVector(ux(k)));
    for (auto& row : vm)
      for (auto& x : row) x = entry(rng);
  } while (mat_det(vm) == 0);
  QMatrix um = identity_matrix(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) um[ux(i)][ux(j)] = entry(rng);
  FlagInstance inst{Flag{vm}, Unipotent{mat_mul(mat_mul(vm, um), mat_inverse(vm))}, um};
  for (int a = 1; a <= k; ++a)
    if (!(cc::apply(inst.u.u, inst.flag.step(a)) == inst.flag.step(a)))
      throw Error(Errc::VerificationFailed, "random unipotent does not stabilize the flag");
  return inst;
}

ExtTensor random_tensor(int k, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  ExtTensor t(k, d);
  for (Mask m : submasks(full_mask(k), d)) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    t.add_term(m, c);
  }
  return t;
}

mpq_class flag_step_factor(const Flag& f, const Unipotent& u, int i) {
  const int k = f.k();
  if (i < 1 || i >= k) throw Error(Errc::BadParameter, "flag step index must lie in [1, k-1]");
  QVector w = mat_vec(u.u, f.vec(i + 1));
  const QVector v = f.vec(i + 1);
  for (int j = 0; j < k; ++j) w[ux(j)] -= v[ux(j)];
  const ExtTensor top = wedge(f.step(i - 1), ExtTensor::vector(w));
  const auto r = ratio(top, f.step(i));
  if (!r) throw Error(Errc::Degenerate, "u does not stabilize the flag");
  if (*r == 0) throw Error(Errc::Degenerate, "u(v) - v lies in F_(i-1)");
  return *r;
}

Flag weyl_flag_step(const Flag& f, const Unipotent& u, int i) {
  const mpq_class w = flag_step_factor(f, u, i);
  Flag g = f;
  for (auto& row : g.v) {
    row[ux(i - 1)] *= w;
    row[ux(i)] /= w;
  }
  return g;
}

Flag act_word(const Flag& f, const Unipotent& u, const Word& word) {
  Flag g = f;
  for (int i : word) g = weyl_flag_step(g, u, i);
  return g;
}

bool termwise_leq(const std::vector<int>& t, const std::vector<int>& s) {
  if (t.size() != s.size()) return false;
  std::vector<int> a = t, b = s;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

std::vector<std::vector<int>> subsets_of_size(int k, int a) {
  std::vector<std::vector<int>> out;
  for (Mask m : submasks(full_mask(k), a)) {
    std::vector<int> s;
    for (int j : elements(m)) s.push_back(j + 1);
    out.push_back(s);
  }
  return out;
}

Word grassmannian_word(const std::vector<int>& s) {
  std::vector<int> x = s;
  std::sort(x.begin(), x.end());
  Word w;
  for (int j = 1; j <= static_cast<int>(x.size()); ++j)
    for (int i = x[ux(j - 1)] - 1; i >= j; --i) w.push_back(i);
  return w;
}

mpq_class w_S_via_flag(const Flag& f, const Unipotent& u, const std::vector<int>& s) {
  const int a = static_cast<int>(s.size());
  const Flag g = act_word(f, u, grassmannian_word(s));
  const auto r = ratio(g.step(a), f.step(a));
  if (!r) throw Error(Errc::VerificationFailed, "Weyl action changed the subspace F_(a)");
  return *r;
}

mpq_class w_S_via_word(const QMatrix& z, const std::vector<int>& s) {
  std::vector<int> x = s;
  std::sort(x.begin(), x.end());
  mpq_class w = 1;
  for (int j = 1; j <= static_cast<int>(x.size()); ++j)
    for (int m = j; m < x[ux(j - 1)]; ++m) w *= z[ux(m - 1)][ux(m)];
  return w;
}

CheckReport check_killeq(const FlagInstance& inst, const std::vector<int>& s, const std::vector<int>& t) {
  const int k = inst.flag.k();
  if (!termwise_leq(t, s)) throw Error(Errc::BadParameter, "killeq needs T <= S in termwise order");
  const int ell = coxeter_length(grassmannian_perm(s, k));
  const ExtTensor lhs = group_binomial(inst.u.u, ell, inst.flag.v_subset(t));
  std::vector<int> ss = s, tt = t;
  std::sort(ss.begin(), ss.end());
  std::sort(tt.begin(), tt.end());
  CheckReport rep;
  if (ss == tt) {
    const mpz_class f = f_lambda(young_diagram(s, k));
    const mpq_class w = w_S_via_word(inst.z, s);
    rep.pass = lhs == inst.flag.step(static_cast<int>(s.size())) * (mpq_class(f) * w);
    rep.detail = "S=T=" + set_text(ss) + " f=" + f.get_str() + " W_S=" + w.get_str();
  } else {
    rep.pass = lhs.is_zero();
    rep.detail = "T=" + set_text(tt) + " < S=" + set_text(ss);
  }
  if (!rep.pass) rep.detail += " lhs=" + lhs.to_string();
  return rep;
}

FlattenReport check_flattenproduct(const FlagInstance& inst, int a, int b, int c, const ExtTensor& eta,
                                   const ExtTensor& zeta) {
  const Flag& fl = inst.flag;
  const int k = fl.k();
  if (a < 0 || b < 0 || c < 0 || a + b + c > k) throw Error(Errc::BadParameter, "flattening needs a+b+c <= k");
  if (eta.degree() != k - a - b || zeta.degree() != k - a - c) throw Error(Errc::DegreeMismatch, "eta or zeta of wrong degree");
  std::vector<int> s = interval(1, a);
  for (int j = a + b + 1; j <= a + b + c; ++j) s.push_back(j);
  FlattenReport rep;
  rep.ell = coxeter_length(grassmannian_perm(s, k));
  rep.f = f_lambda(young_diagram(s, k));
  rep.numerators = binomial_row(rep.ell);
  const mpq_class ws = w_S_via_flag(fl, inst.u, s);
  rep.lhs = wedge(fl.step(a + b), eta).value() * wedge(fl.step(a + c) * ws, zeta).value();
  const QMatrix uinv = mat_inverse(inst.u.u);
  const ExtTensor lowered = group_binomial(uinv, rep.ell, zeta);
  rep.rhs = cap(cap(fl.step(a + b + c), wedge(fl.step(a), eta)), lowered).value() / mpq_class(rep.f);
  rep.pass = rep.lhs == rep.rhs;
  rep.detail = "S=" + set_text(s) + " l=" + std::to_string(rep.ell) + " f=" + rep.f.get_str() + " lhs=" + rep.lhs.get_str() +
               " rhs=" + rep.rhs.get_str();
  return rep;
}

FlattenReport check_flattensplit(const FlagInstance& inst, int a, int r, const ExtTensor& eta) {
  const Flag& fl = inst.flag;
  const int k = fl.k();
  if (a < 0 || r < 1 || a + r > k) throw Error(Errc::BadParameter, "spiral identity needs a >= 0, r >= 1, a+r <= k");
  if (eta.degree() != k - a - 1) throw Error(Errc::DegreeMismatch, "eta must have degree k-a-1");
  FlattenReport rep;
  rep.f = 1;
  rep.lhs = 1;
  for (int j = a; j <= a + r - 1; ++j) {
    Word w;  // s_{a+1} ... s_j acting on F, rightmost first
    for (int i = j; i >= a + 1; --i) w.push_back(i);
    rep.lhs *= wedge(act_word(fl, inst.u, w).step(a + 1), eta).value();
  }
  const QMatrix uinv = mat_inverse(inst.u.u);
  std::vector<ExtTensor> pow{eta};
  for (int i = 1; i < r; ++i) pow.push_back(cc::apply(uinv, pow.back()));
  ExtTensor acc = fl.step(a + r);
  for (int i = 0; i <= r - 2; ++i) acc = cap(acc, wedge(fl.step(a), pow[ux(i)]));
  rep.rhs = cap(acc, pow[ux(r - 1)]).value();
  rep.pass = rep.lhs == rep.rhs;
  rep.detail = "a=" + std::to_string(a) + " r=" + std::to_string(r) + " lhs=" + rep.lhs.get_str() + " rhs=" + rep.rhs.get_str();
  return rep;
}

FlattenReport check_flattensplit_dual(const FlagInstance& inst, int a, int r, const ExtTensor& eta) {
  const Flag& fl = inst.flag;
  const int k = fl.k();
  if (a < 0 || r < 1 || a + r > k) throw Error(Errc::BadParameter, "spiral identity needs a >= 0, r >= 1, a+r <= k");
  if (eta.degree() != k - a - r + 1) throw Error(Errc::DegreeMismatch, "eta must have degree k-a-r+1");
  FlattenReport rep;
  rep.f = 1;
  rep.lhs = 1;
  for (int j = a + 1; j <= a + r; ++j) {
    Word w;  // s_{a+r-1} ... s_{j+1} s_j acting on F, rightmost first
    for (int i = j; i <= a + r - 1; ++i) w.push_back(i);
    rep.lhs *= wedge(act_word(fl, inst.u, w).step(a + r - 1), eta).value();
  }
  const QMatrix uinv = mat_inverse(inst.u.u);
  std::vector<ExtTensor> pow{eta};
  for (int i = 1; i < r; ++i) pow.push_back(cc::apply(uinv, pow.back()));
  ExtTensor acc = fl.step(a);
  for (int i = 0; i <= r - 2; ++i) acc = wedge(acc, cap(fl.step(a + r), pow[ux(i)]));
  rep.rhs = wedge(acc, pow[ux(r - 1)]).value();
  rep.pass = rep.lhs == rep.rhs;
  rep.detail = "a=" + std::to_string(a) + " r=" + std::to_string(r) + " dual lhs=" + rep.lhs.get_str() + " rhs=" + rep.rhs.get_str();
  return rep;
}

namespace {

constexpr int kRetries = 100;

std::mt19937_64 trial_stream(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

struct TrialResult {
  bool pass = true;
  long long checks = 0;
  std::string failure;
};

// Runs body on a fresh instance, redrawing on Degenerate. body returns the number of checks or records a failure.
template <class Body>
TrialResult run_trial(int k, std::uint64_t seed, int trial, Body body) {
  std::mt19937_64 rng = trial_stream(seed, trial);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    try {
      const FlagInstance inst = random_instance(k, rng);
      TrialResult res;
      body(inst, rng, res);
      return res;
    } catch (const Error& e) {
      if (e.code() != Errc::Degenerate) return {false, 0, "trial " + std::to_string(trial) + ": " + e.what()};
    }
  }
  return {false, 0, "trial " + std::to_string(trial) + ": no nondegenerate sample"};
}

template <class Body>
TrialSummary run_trials(int k, int trials, std::uint64_t seed, int threads, Body body) {
  check_k(k);
  if (trials < 1) throw Error(Errc::BadParameter, "need at least one trial");
  threads = std::clamp(threads, 1, trials);
  std::vector<TrialResult> results(ux(trials));
  auto worker = [&](int first) {
    for (int t = first; t < trials; t += threads) results[ux(t)] = run_trial(k, seed, t, body);
  };
  std::vector<std::future<void>> pool;
  for (int w = 1; w < threads; ++w) pool.push_back(std::async(std::launch::async, worker, w));
  worker(0);
  for (auto& p : pool) p.get();
  TrialSummary sum;
  sum.total = trials;
  for (const auto& r : results) {
    sum.checks += r.checks;
    if (r.pass)
      ++sum.passed;
    else if (sum.first_failure.empty())
      sum.first_failure = r.failure;
  }
  return sum;
}

void record(TrialResult& res, const CheckReport& rep, const std::string& what) {
  ++res.checks;
  if (!rep.pass && res.pass) {
    res.pass = false;
    res.failure = what + ": " + rep.detail;
  }
}

}  // namespace

TrialSummary verify_flattening(int k, int trials, std::uint64_t rng_seed, int threads) {
  return run_trials(k, trials, rng_seed, threads, [k](const FlagInstance& inst, std::mt19937_64& rng, TrialResult& res) {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b)
        for (int c = 0; a + b + c <= k; ++c) {
          const ExtTensor eta = random_tensor(k, k - a - b, rng);
          const ExtTensor zeta = random_tensor(k, k - a - c, rng);
          record(res, check_flattenproduct(inst, a, b, c, eta, zeta), "flattenproduct");
        }
  });
}

TrialSummary verify_killeq(int k, int trials, std::uint64_t rng_seed, int threads) {
  return run_trials(k, trials, rng_seed, threads, [k](const FlagInstance& inst, std::mt19937_64&, TrialResult& res) {
    for (int a = 0; a <= k; ++a)
      for (const auto& s : subsets_of_size(k, a)) {
        CheckReport agree;
        const mpq_class wf = w_S_via_flag(inst.flag, inst.u, s), ww = w_S_via_word(inst.z, s);
        agree.pass = wf == ww;
        agree.detail = "S=" + set_text(s) + " flag " + wf.get_str() + " word " + ww.get_str();
        record(res, agree, "W_S");
        for (const auto& t : subsets_of_size(k, a))
          if (termwise_leq(t, s)) record(res, check_killeq(inst, s, t), "killeq");
      }
  });
}

TrialSummary verify_spiral(int k, int trials, std::uint64_t rng_seed, int threads) {
  return run_trials(k, trials, rng_seed, threads, [k](const FlagInstance& inst, std::mt19937_64& rng, TrialResult& res) {
    for (int a = 0; a < k; ++a)
      for (int r = 1; a + r <= k; ++r) {
        record(res, check_flattensplit(inst, a, r, random_tensor(k, k - a - 1, rng)), "flattensplit");
        record(res, check_flattensplit_dual(inst, a, r, random_tensor(k, k - a - r + 1, rng)), "flattensplit dual");
      }
  });
}

}  // namespace cc
