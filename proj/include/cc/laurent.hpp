#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cc/error.hpp"

namespace cc {

using VarContext = std::shared_ptr<const std::vector<std::string>>;

VarContext make_context(std::vector<std::string> names);

// Laurent polynomial over Z in the variables of a context. No zero coefficient is stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, mpz_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarContext ctx);

  static LaurentPoly constant(VarContext ctx, const mpz_class& c);
  static LaurentPoly var(VarContext ctx, std::size_t i);
  static LaurentPoly monomial(VarContext ctx, Exponent e, const mpz_class& c = 1);

  const VarContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  // Integer powers; negative exponents require a monomial.
  LaurentPoly pow(int e) const;

  // r with r * q == *this; throws NotDivisible otherwise and DivisionByZero for q == 0.
  LaurentPoly exact_div(const LaurentPoly& q) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Terms in descending lexicographic exponent order: "3*x^2*y^-1 - z + 1".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const mpz_class& c);
  void check_same(const LaurentPoly& o) const;

  VarContext ctx_;
  Terms terms_;
};

}  // namespace cc
