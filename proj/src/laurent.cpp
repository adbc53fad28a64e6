#include "cc/laurent.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace cc {

VarContext make_context(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

LaurentPoly::LaurentPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

LaurentPoly LaurentPoly::constant(VarContext ctx, const mpz_class& c) {
  LaurentPoly p(ctx);
  p.add_term(Exponent(ctx->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::var(VarContext ctx, std::size_t i) {
  if (i >= ctx->size()) throw Error(Errc::OutOfRange, "variable index " + std::to_string(i));
  Exponent e(ctx->size(), 0);
  e[i] = 1;
  return monomial(ctx, e);
}

LaurentPoly LaurentPoly::monomial(VarContext ctx, Exponent e, const mpz_class& c) {
  if (e.size() != ctx->size()) throw Error(Errc::LengthMismatch, "exponent length");
  LaurentPoly p(ctx);
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (ctx_ == o.ctx_) return;
  if (!ctx_ || !o.ctx_ || *ctx_ != *o.ctx_) throw Error(Errc::ContextMismatch, "Laurent polynomials over different variables");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r = *this;
  if (!r.ctx_) r.ctx_ = o.ctx_;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r(ctx_ ? ctx_ : o.ctx_);
  Exponent e(nvars());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
      throw Error(Errc::NotDivisible, "negative power of a non-unit");
    Exponent x = terms_.begin()->first;
    for (int& v : x) v *= e;
    mpz_class c = terms_.begin()->second;
    return monomial(ctx_, x, (e % 2 != 0) ? c : mpz_class(1));
  }
  LaurentPoly r = constant(ctx_, 1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  check_same(o);
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& q) const {
  check_same(q);
  if (q.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  LaurentPoly quotient(ctx_ ? ctx_ : q.ctx_);
  if (is_zero()) return quotient;
  const std::size_t n = nvars();
  // Any quotient has exponents inside this box and lexicographically between these two bounds.
  Exponent lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    int pmin = INT_MAX, pmax = INT_MIN, qmin = INT_MAX, qmax = INT_MIN;
    for (const auto& [e, c] : terms_) pmin = std::min(pmin, e[i]), pmax = std::max(pmax, e[i]);
    for (const auto& [e, c] : q.terms_) qmin = std::min(qmin, e[i]), qmax = std::max(qmax, e[i]);
    lo[i] = pmin - qmin;
    hi[i] = pmax - qmax;
    if (lo[i] > hi[i]) throw Error(Errc::NotDivisible, "exponent ranges are incompatible");
  }
  Exponent lex_floor(n);
  for (std::size_t i = 0; i < n; ++i) lex_floor[i] = terms_.begin()->first[i] - q.terms_.begin()->first[i];
  const auto& [qlead_e, qlead_c] = *q.terms_.rbegin();
  LaurentPoly rem = *this;
  Exponent t(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = re[i] - qlead_e[i];
      if (t[i] < lo[i] || t[i] > hi[i]) throw Error(Errc::NotDivisible, "quotient leaves the exponent box");
    }
    if (t < lex_floor || !mpz_divisible_p(rc.get_mpz_t(), qlead_c.get_mpz_t()))
      throw Error(Errc::NotDivisible, "leading term does not divide");
    const mpz_class c = rc / qlead_c;
    quotient.add_term(t, c);
    Exponent e(n);
    for (const auto& [qe, qc] : q.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = t[i] + qe[i];
      rem.add_term(e, -c * qc);
    }
  }
  return quotient;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool need_star = false;
    if (a != 1 || !unit_monomial) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << (*ctx_)[i];
      if (e[i] != 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace cc
