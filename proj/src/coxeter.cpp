#include "cc/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cc {

Permutation identity_perm(int k) {
  Permutation p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_permutation(const Permutation& w) {
  Permutation s = w;
  std::sort(s.begin(), s.end());
  return s == identity_perm(static_cast<int>(w.size()));
}

Permutation compose(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "composing permutations of different size");
  Permutation r(x.size());
  for (std::size_t i = 0; i < y.size(); ++i) r[i] = x[static_cast<std::size_t>(y[i] - 1)];
  return r;
}

Permutation inverse(const Permutation& w) {
  Permutation r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

namespace {

std::vector<int> checked_subset(const std::vector<int>& s, int k) {
  std::vector<int> t = s;
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw Error(Errc::BadParameter, "repeated element");
  for (int x : t)
    if (x < 1 || x > k) throw Error(Errc::OutOfRange, "element " + std::to_string(x) + " outside [k]");
  return t;
}

}  // namespace

Permutation grassmannian_perm(const std::vector<int>& s, int k) {
  Permutation p = checked_subset(s, k);
  for (int x = 1; x <= k; ++x)
    if (!std::binary_search(p.begin(), p.begin() + static_cast<long>(s.size()), x)) p.push_back(x);
  return p;
}

int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

YoungDiagram young_diagram(const std::vector<int>& s, int k) {
  const auto t = checked_subset(s, k);
  YoungDiagram y;
  for (std::size_t j = t.size(); j-- > 0;) {
    const int r = t[j] - static_cast<int>(j) - 1;
    if (r > 0) y.push_back(r);
  }
  return y;
}

int diagram_size(const YoungDiagram& y) { return std::accumulate(y.begin(), y.end(), 0); }

namespace {

YoungDiagram trimmed(const YoungDiagram& y) {
  YoungDiagram r;
  for (int x : y) {
    if (x < 0) throw Error(Errc::BadParameter, "negative row");
    if (x > 0) r.push_back(x);
  }
  if (!std::is_sorted(r.begin(), r.end(), std::greater<>())) throw Error(Errc::BadParameter, "rows not weakly decreasing");
  return r;
}

}  // namespace

mpz_class f_lambda(const YoungDiagram& shape) {
  const auto y = trimmed(shape);
  const int n = diagram_size(y);
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  for (std::size_t r = 0; r < y.size(); ++r) {
    for (int c = 0; c < y[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < y.size() && y[rr] > c; ++rr) ++below;
      den *= (y[r] - c - 1) + below + 1;
    }
  }
  if (num % den != 0) throw Error(Errc::VerificationFailed, "hook length quotient is not integral");
  return num / den;
}

mpz_class f_lambda_bruteforce(const YoungDiagram& shape) {
  std::map<YoungDiagram, mpz_class> memo;
  auto rec = [&](auto&& self, const YoungDiagram& y) -> mpz_class {
    if (y.empty()) return 1;
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    // The largest entry of a tableau sits in a removable corner.
    mpz_class total = 0;
    for (std::size_t r = 0; r < y.size(); ++r) {
      if (r + 1 < y.size() && y[r + 1] == y[r]) continue;
      YoungDiagram z = y;
      if (--z[r] == 0) z.pop_back();
      total += self(self, z);
    }
    memo[y] = total;
    return total;
  };
  return rec(rec, trimmed(shape));
}

std::vector<Word> reduced_words(const Permutation& w, std::size_t cap) {
  if (!is_permutation(w)) throw Error(Errc::BadParameter, "not a permutation");
  std::map<Permutation, std::vector<Word>> memo;
  auto rec = [&](auto&& self, const Permutation& p) -> const std::vector<Word>& {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::vector<Word> out;
    bool descent = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < p[i + 1]) continue;
      descent = true;
      Permutation q = p;
      std::swap(q[i], q[i + 1]);
      for (const auto& u : self(self, q)) {
        Word v = u;
        v.push_back(static_cast<int>(i) + 1);
        out.push_back(std::move(v));
        if (out.size() > cap) throw Error(Errc::CapExceeded, "more than " + std::to_string(cap) + " reduced words");
      }
    }
    if (!descent) out.push_back({});
    return memo[p] = std::move(out);
  };
  auto words = rec(rec, w);
  std::sort(words.begin(), words.end());
  return words;
}

Permutation word_to_perm(const Word& w, int k) {
  Permutation p = identity_perm(k);
  for (int i : w) {
    if (i < 1 || i >= k) throw Error(Errc::OutOfRange, "letter s_" + std::to_string(i));
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  }
  return p;
}

bool commutation_adjacent(const Word& x, const Word& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] != y[i + 1] || x[i + 1] != y[i] || std::abs(x[i] - x[i + 1]) < 2) continue;
    if (std::equal(x.begin(), x.begin() + static_cast<long>(i), y.begin()) &&
        std::equal(x.begin() + static_cast<long>(i) + 2, x.end(), y.begin() + static_cast<long>(i) + 2))
      return true;
  }
  return false;
}

}  // namespace cc
