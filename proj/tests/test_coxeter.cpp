#include <algorithm>
#include <queue>
#include <set>

#include "cc/coxeter.hpp"
#include "doctest.h"

using namespace cc;

namespace {

std::vector<std::vector<int>> all_subsets(int k) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << k); ++m) {
    std::vector<int> s;
    for (int a = 1; a <= k; ++a)
      if (m & (1 << (a - 1))) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

void partitions(int n, int max, YoungDiagram& cur, std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int r = std::min(n, max); r >= 1; --r) {
    cur.push_back(r);
    partitions(n - r, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("grassmannian permutations") {
  CHECK(grassmannian_perm({1, 2}, 4) == identity_perm(4));
  CHECK(grassmannian_perm({3}, 3) == Permutation{3, 1, 2});
  CHECK(coxeter_length(grassmannian_perm({3}, 3)) == 2);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const int k = a + b + c;
        if (k == 0) continue;
        std::vector<int> s;
        for (int i = 1; i <= a; ++i) s.push_back(i);
        for (int i = a + b + 1; i <= a + b + c; ++i) s.push_back(i);
        CHECK(coxeter_length(grassmannian_perm(s, k)) == b * c);
      }
  CHECK_THROWS_AS(grassmannian_perm({4}, 3), Error);
}

TEST_CASE("coxeter length") {
  CHECK(coxeter_length(identity_perm(5)) == 0);
  CHECK(coxeter_length({3, 1, 2}) == 2);
  CHECK(coxeter_length({3, 2, 1}) == 3);
}

TEST_CASE("young diagrams") {
  CHECK(young_diagram({1, 2}, 4).empty());
  CHECK(young_diagram({1, 4, 5}, 5) == YoungDiagram{2, 2});
  CHECK(young_diagram({3}, 3) == YoungDiagram{2});
  for (int k = 1; k <= 7; ++k)
    for (const auto& s : all_subsets(k))
      CHECK(diagram_size(young_diagram(s, k)) == coxeter_length(grassmannian_perm(s, k)));
}

TEST_CASE("standard tableaux counts") {
  CHECK(f_lambda({2, 2}) == 2);
  CHECK(f_lambda({5}) == 1);
  CHECK(f_lambda({2, 1}) == 2);
  CHECK(f_lambda({}) == 1);
  for (int n = 0; n <= 10; ++n) {
    std::vector<YoungDiagram> ps;
    YoungDiagram cur;
    partitions(n, n, cur, ps);
    for (const auto& p : ps) CHECK(f_lambda(p) == f_lambda_bruteforce(p));
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(identity_perm(3)) == std::vector<Word>{{}});
  CHECK(reduced_words(grassmannian_perm({1, 4, 5}, 5)).size() == 2);
  CHECK(reduced_words({3, 2, 1}).size() == 2);
  CHECK_THROWS_AS(reduced_words({6, 5, 4, 3, 2, 1}, 10), Error);
  for (const auto& w : reduced_words({4, 2, 3, 1}))
    CHECK(word_to_perm(w, 4) == Permutation{4, 2, 3, 1});
}

TEST_CASE("reduced word counts equal tableaux counts") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& s : all_subsets(k)) {
      const auto words = reduced_words(grassmannian_perm(s, k));
      CHECK(mpz_class(static_cast<unsigned long>(words.size())) == f_lambda(young_diagram(s, k)));
      for (const auto& w : words) CHECK(word_to_perm(w, k) == grassmannian_perm(s, k));
    }
}

TEST_CASE("commutation moves connect the reduced words of w_S") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& s : all_subsets(k)) {
      const auto words = reduced_words(grassmannian_perm(s, k));
      std::set<std::size_t> seen{0};
      std::queue<std::size_t> q;
      q.push(0);
      while (!q.empty()) {
        const auto i = q.front();
        q.pop();
        for (std::size_t j = 0; j < words.size(); ++j)
          if (!seen.count(j) && commutation_adjacent(words[i], words[j])) {
            seen.insert(j);
            q.push(j);
          }
      }
      CHECK(seen.size() == words.size());
    }
}
