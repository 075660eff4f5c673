#pragma once

// Exact sparse multivariate polynomials over the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exotic/error.hpp"

namespace exotic {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Ordered list of distinct variable names. Copies share storage.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  // New VarSet with `extra` appended; throws VariableNameCollision on a clash.
  VarSet extended(const std::vector<std::string>& extra) const;
  // `base` if unused, otherwise base1, base2, ...
  std::string fresh_name(std::string_view base) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

class MonomialOrder {
 public:
  enum class Kind { Lex, GradedLex, Weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::GradedLex, {}); }
  // Weighted degree, ties broken by lex (first variable largest).
  static MonomialOrder weighted(std::vector<long> weights) {
    return MonomialOrder(Kind::Weighted, std::move(weights));
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<long>& weights() const noexcept { return weights_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool is_well_order() const;

  // Comparator for containers sorted from the largest monomial down.
  struct Descending {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
  };

 private:
  MonomialOrder(Kind kind, std::vector<long> weights) : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_;
  std::vector<long> weights_;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSet vars, const Rational& c);
  static Polynomial variable(VarSet vars, std::string_view name);
  static Polynomial variable(VarSet vars, std::size_t index);
  static Polynomial monomial(VarSet vars, Monomial m, const Rational& c = 1);

  const VarSet& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  // -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  Term leading_term(const MonomialOrder& order) const;
  Monomial leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned n) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Human syntax, terms in descending graded-lex order, e.g. "3/2*x^2*y - 1".
  std::string to_string() const;

 private:
  void check_same_vars(const Polynomial& other) const;

  VarSet vars_;
  TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul, Pow };

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op, unsigned power = 0);

// Images keyed by variable name; every variable occurring in p needs an image.
using Substitution = std::map<std::string, Polynomial, std::less<>>;

Polynomial substitute(const Polynomial& p, const Substitution& images, const VarSet& target);
// Target VarSet taken from the images; they must all share one.
Polynomial substitute(const Polynomial& p, const Substitution& images);

// Re-expresses p over `target`, matching variables by name.
Polynomial embed(const Polynomial& p, const VarSet& target);

Polynomial partial_derivative(const Polynomial& p, std::string_view var);
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

// Multivariate division by a single divisor. The remainder has no monomial
// divisible by the leading monomial of d.
DivisionResult divide(const Polynomial& p, const Polynomial& d, const MonomialOrder& order,
                      std::uint64_t step_budget = kDefaultStepBudget);

class NotDivisibleError : public Error {
 public:
  explicit NotDivisibleError(Polynomial remainder);
  const Polynomial& remainder() const noexcept { return remainder_; }

 private:
  Polynomial remainder_;
};

// q with p = d*q. Throws NotDivisibleError (graded-lex remainder) or DivisionByZero.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

Polynomial jacobian_det(const std::vector<Polynomial>& fs);

Polynomial normal_form(const Polynomial& p, const Polynomial& d, const MonomialOrder& order,
                       std::uint64_t step_budget = kDefaultStepBudget);

}  // namespace exotic
