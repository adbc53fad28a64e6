#include <numeric>

#include "cc/weyl.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cc;

namespace {

struct Built {
  Assembled a;
  Seed s;
};

Built build(const Assembled& a) { return {a, Seed::initial(a.seed.q)}; }

LaurentPoly var(const Seed& s, int v) { return s.x[static_cast<std::size_t>(v)]; }

// Expected W of the cycle model: sum over j of x_j^+ x_j^- / (x_j x_{j+1}).
LaurentPoly model_potential(const Seed& s, int m) {
  LaurentPoly w = LaurentPoly::constant(s.ctx, 0);
  for (int j = 0; j < m; ++j)
    w += var(s, m + 2 * j) * var(s, m + 2 * j + 1) * (var(s, j) * var(s, (j + 1) % m)).pow(-1);
  return w;
}

std::vector<int> iota_vec(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Script transposition_after(const std::vector<int>& muts, int n, int u, int v) {
  Script s = mutations(muts);
  auto perm = iota_vec(n);
  std::swap(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  s.push_back(Permute{perm});
  return s;
}

}  // namespace

TEST_CASE("cycle script instantiation") {
  const auto s = weyl_cycle_script({0, 1}, 2);
  REQUIRE(s.size() == 3);
  CHECK(std::get<Mutate>(s[0]).v == 0);
  CHECK(std::get<Permute>(s[1]).perm == std::vector<int>{1, 0});
  CHECK(std::get<Mutate>(s[2]).v == 0);
  CHECK(weyl_cycle_script({0, 1, 2, 3}, 4).size() == 7);
}

TEST_CASE("cycle model rescales by the cycle potential") {
  for (int m = 2; m <= 6; ++m) {
    const Seed s = cycle_model_seed(m);
    const auto cycle = iota_vec(m);
    CHECK(oriented_cycle(s.q, cycle) == cycle);
    const LaurentPoly w = model_potential(s, m);
    CHECK(cycle_potential(s, cycle) == w);
    const Seed r = apply_sequence(s, weyl_cycle_script(cycle, s.q.n));
    CHECK(r.q == s.q);
    for (int v = 0; v < s.q.n; ++v) CHECK(r.x[static_cast<std::size_t>(v)] == (v < m ? w * var(s, v) : var(s, v)));
    for (int base = 1; base < m; ++base) {
      const Seed b = apply_sequence(s, weyl_cycle_script(cycle, s.q.n, base));
      CHECK(b.x == r.x);
    }
    if (m <= 4) {
      const Seed twice = apply_sequence(r, weyl_cycle_script(cycle, s.q.n));
      CHECK(twice.x == s.x);
    }
  }
}

TEST_CASE("oriented cycle detection") {
  Quiver q(4);
  q.add_arrows(0, 1);
  q.add_arrows(1, 2);
  q.add_arrows(2, 0);
  CHECK(oriented_cycle(q, {1, 0, 2}) == std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(oriented_cycle(q, {0, 1}), Error);
  CHECK_THROWS_AS(oriented_cycle(q, {0, 1, 3}), Error);
  CHECK_THROWS_AS(oriented_cycle(q, {0}), Error);
  try {
    oriented_cycle(q, {0, 1, 2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RowNotCycle);
  }
}

TEST_CASE("Grassmannian digon, k=3") {
  const auto g = build(assemble_gr(digon(), 3));
  const auto edges = row_edges(g.a, "p", 1);
  CHECK(edges.size() == 2);
  for (const auto& e : edges) {
    const auto rm = rhombus_monomial(g.a, g.s, "p", 1, e);
    CHECK(rm.num.is_monomial());
    CHECK(rm.den.is_monomial());
  }
  const auto res = apply_weyl(g.a, g.a.seed, g.s, "p", 1);
  for (int v : g.a.seed.q.mutable_vertices()) {
    const auto& w = g.a.seed.wt[static_cast<std::size_t>(v)][0];
    const auto& r = res.pseed.wt[static_cast<std::size_t>(v)][0];
    if (w == WeightVector::e(3, 1))
      CHECK(r == WeightVector::e(3, 2));
    else
      CHECK(r == w);
  }
  // The row script is mutation at both row vertices followed by swapping them.
  const auto row = row_vertices(g.a, "p", 1);
  REQUIRE(row.size() == 2);
  const auto both = apply_sequence(g.s, transposition_after(row, g.s.q.n, row[0], row[1]));
  CHECK(both.x == res.seed.x);
  const auto again = apply_weyl(g.a, res.pseed, res.seed, "p", 1);
  CHECK(again.seed.x == g.s.x);
  CHECK(again.pseed == g.a.seed);
}

TEST_CASE("FG digon, k=3") {
  const auto g = build(assemble_fg(digon(), 3));
  // Row 2 consists of the two arc vertices next to p, one rhombus per triangle.
  CHECK(row_vertices(g.a, "p", 2).size() == 2);
  CHECK(script_w(g.a, g.s, "p", 2).terms().size() == 2);
  const auto res = apply_weyl(g.a, g.a.seed, g.s, "p", 2);
  CHECK(res.report.checks.size() == 4);
  CHECK(apply_weyl(g.a, res.pseed, res.seed, "p", 2).seed.x == g.s.x);
  // Row 1 lies below k/2: its rhombi use arc vertices that are not joined to the row, so no plain cycle works.
  try {
    apply_weyl(g.a, g.a.seed, g.s, "p", 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerificationFailed);
  }
}

TEST_CASE("Grassmannian once-punctured triangle, k=3, tabulated sequences") {
  const auto g = build(assemble_gr(punctured_ngon(3), 3));
  // Labels 1..6 are A, B, rho A, rho B, rho^2 A, rho^2 B.
  std::vector<int> lab(7);
  for (int j = 0; j < 3; ++j) {
    lab[static_cast<std::size_t>(2 * j + 1)] = fixtures::arc_vertex(g.a, j, 1);
    lab[static_cast<std::size_t>(2 * j + 2)] = fixtures::arc_vertex(g.a, j, 2);
  }
  const int n = g.s.q.n;
  const auto s2 = apply_sequence(g.s, transposition_after({lab[2], lab[4], lab[6], lab[2]}, n, lab[4], lab[6]));
  CHECK(s2.x == apply_weyl(g.a, g.a.seed, g.s, "p", 2).seed.x);
  const auto s1 = apply_sequence(g.s, transposition_after({lab[1], lab[3], lab[5], lab[1]}, n, lab[3], lab[5]));
  CHECK(s1.x == apply_weyl(g.a, g.a.seed, g.s, "p", 1).seed.x);
}

TEST_CASE("Weyl action on Grassmannian punctured polygons") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= 4; ++k) {
      const auto g = build(assemble_gr(punctured_ngon(n), k));
      for (int i = 1; i < k; ++i) {
        const auto res = apply_weyl(g.a, g.a.seed, g.s, "p", i);
        CHECK(res.pseed == reflect_weights(g.a.seed, "p", i));
        CHECK(row_edges(g.a, "p", i).size() == static_cast<std::size_t>(n));
        if (n * k <= 9) CHECK(apply_weyl(g.a, res.pseed, res.seed, "p", i).seed.x == g.s.x);
      }
    }
}

TEST_CASE("once-punctured torus, k=4") {
  const auto a = assemble_fg(torus_s11(), 4);
  const auto label = fixtures::torus_labels(a);
  REQUIRE(label.size() == 15);
  const Quiver left = fixtures::quiver_from_ids(15, fixtures::kTorusIdLabel, fixtures::kTorusLeftIds);
  const Quiver right = fixtures::quiver_from_ids(15, fixtures::kTorusIdLabel, fixtures::kTorusRightIds);
  CHECK(permute_quiver(a.seed.q, label) == left);
  // Work directly in drawn labels from here on.
  Assembled d = a;
  d.seed = permute_pseed(a.seed, label);
  for (auto& g : d.global)
    for (int& v : g) v = label[static_cast<std::size_t>(v)];
  std::vector<std::string> names;
  for (int v = 0; v < 15; ++v) names.push_back("x" + std::to_string(v));
  const Seed s = Seed::initial(d.seed.q, names);

  const auto row3 = row_vertices(d, "p", 3);
  CHECK(std::set<int>(row3.begin(), row3.end()) == fixtures::kTorusRow3);
  CHECK(oriented_cycle(d.seed.q, row3).size() == 6);
  const auto row2 = row_vertices(d, "p", 2);
  CHECK(std::set<int>(row2.begin(), row2.end()) == fixtures::kTorusRow2);
  CHECK_THROWS_AS(oriented_cycle(d.seed.q, row2), Error);
  CHECK_THROWS_AS(apply_weyl(d, d.seed, s, "p", 2), Error);

  CHECK(apply_sequence(d.seed.q, mutations({2, 4, 10})) == right);

  LaurentPoly twelve = LaurentPoly::constant(s.ctx, 0);
  for (const auto& [num, den] : fixtures::kTorusTwelveTerms)
    twelve += var(s, num.first) * var(s, num.second) * (var(s, den.first) * var(s, den.second)).pow(-1);
  CHECK(script_w(d, s, "p", 2) == twelve);
  CHECK(row_edges(d, "p", 2).size() == 12);
  const Seed mid = apply_sequence(s, mutations({2, 4, 10}));
  LaurentPoly six = LaurentPoly::constant(s.ctx, 0);
  for (const auto& [num, den] : fixtures::kTorusSixTerms)
    six += var(mid, num.first) * var(mid, num.second) * (var(s, den.first) * var(s, den.second)).pow(-1);
  CHECK(six == twelve);

  const auto r2 = apply_weyl_sg1(d, d.seed, s, 2);
  CHECK(r2.pseed == reflect_weights(d.seed, "p", 2));
  const auto back = apply_weyl_sg1(d, r2.pseed, r2.seed, 2);
  CHECK(back.seed.x == s.x);
  const auto r3 = apply_weyl_sg1(d, d.seed, s, 3);
  CHECK(r3.pseed == reflect_weights(d.seed, "p", 3));
  CHECK(apply_weyl_sg1(d, r3.pseed, r3.seed, 3).seed.x == s.x);
  CHECK_THROWS_AS(apply_weyl_sg1(d, d.seed, s, 1), Error);
}

TEST_CASE("rejects a seed with a different quiver") {
  const auto g = build(assemble_gr(digon(), 3));
  const Seed m = mutate_seed(g.s, g.s.q.mutable_vertices().front());
  CHECK_THROWS_AS(apply_weyl(g.a, g.a.seed, m, "p", 1), Error);
  CHECK_THROWS_AS(apply_weyl(g.a, g.a.seed, g.s, "q", 1), Error);
  CHECK_THROWS_AS(apply_weyl(g.a, g.a.seed, g.s, "p", 3), Error);
}
