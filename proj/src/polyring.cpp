#include "exotic/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace exotic {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

// --- VarSet -------------------------------------------------------------

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::InvalidParams, "empty variable name");
    if (!seen.insert(n).second) throw Error(ErrorCode::VariableNameCollision, "duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet::VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, std::string(name));
  return *idx;
}

VarSet VarSet::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return VarSet(std::move(all));
}

std::string VarSet::fresh_name(std::string_view base) const {
  if (!contains(base)) return std::string(base);
  for (std::size_t i = 1;; ++i) {
    std::string candidate = std::string(base) + std::to_string(i);
    if (!contains(candidate)) return candidate;
  }
}

// --- Monomial -----------------------------------------------------------

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[var] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

// --- MonomialOrder ------------------------------------------------------

namespace {

int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::GradedLex: {
      auto da = a.total_degree();
      auto db = b.total_degree();
      if (da != db) return da < db ? -1 : 1;
      return lex_compare(a, b);
    }
    case Kind::Weighted: {
      long wa = 0;
      long wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        long w = i < weights_.size() ? weights_[i] : 0;
        wa += w * static_cast<long>(a[i]);
        wb += w * static_cast<long>(b[i]);
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return lex_compare(a, b);
    }
  }
  return 0;
}

bool MonomialOrder::is_well_order() const {
  if (kind_ != Kind::Weighted) return true;
  return std::all_of(weights_.begin(), weights_.end(), [](long w) { return w >= 0; });
}

// --- Polynomial ---------------------------------------------------------

Polynomial Polynomial::constant(VarSet vars, const Rational& c) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial(p.vars_.size()), c);
  return p;
}

Polynomial Polynomial::variable(VarSet vars, std::string_view name) {
  std::size_t idx = vars.require(name);
  return variable(std::move(vars), idx);
}

Polynomial Polynomial::variable(VarSet vars, std::size_t index) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial::unit(p.vars_.size(), index), 1);
  return p;
}

Polynomial Polynomial::monomial(VarSet vars, Monomial m, const Rational& c) {
  if (m.size() != vars.size()) throw Error(ErrorCode::DimensionMismatch, "monomial length differs from VarSet size");
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(vars_.size())); }

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.total_degree()));
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] > 0; });
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

Polynomial::Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return *best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();  // mpq_class(a, b) is not reduced on construction
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& other) const {
  if (!(vars_ == other.vars_)) throw Error(ErrorCode::VarSetMismatch, "operands use different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_vars(b);
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(MonomialOrder::grlex())) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << vars_.name(i);
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

// --- operations ---------------------------------------------------------

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op, unsigned power) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Pow: return a.pow(power);
  }
  return a;
}

Polynomial substitute(const Polynomial& p, const Substitution& images, const VarSet& target) {
  for (const auto& [name, img] : images) {
    if (!(img.vars() == target)) throw Error(ErrorCode::VarSetMismatch, "image of '" + name + "' uses another VarSet");
  }
  const VarSet& src = p.vars();
  std::vector<const Polynomial*> img(src.size(), nullptr);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!p.involves(i)) continue;
    auto it = images.find(src.name(i));
    if (it == images.end()) throw Error(ErrorCode::MissingImage, src.name(i));
    img[i] = &it->second;
  }
  // powers[i][e] = img[i]^e, grown lazily
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *img[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term *= power_of(i, m[i]);
    }
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Substitution& images) {
  if (images.empty()) {
    if (p.is_constant()) return p;
    throw Error(ErrorCode::MissingImage, "no images supplied");
  }
  return substitute(p, images, images.begin()->second.vars());
}

Polynomial embed(const Polynomial& p, const VarSet& target) {
  if (p.vars() == target) return p;
  const VarSet& src = p.vars();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target.index_of(src.name(i));
  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial tm(target.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw Error(ErrorCode::VarSetMismatch, "variable '" + src.name(i) + "' missing from target VarSet");
      tm[*map[i]] = m[i];
    }
    r.add_term(tm, c);
  }
  return r;
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  return partial_derivative(p, p.vars().require(var));
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.vars().size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * m[var]);
  }
  return r;
}

DivisionResult divide(const Polynomial& p, const Polynomial& d, const MonomialOrder& order, std::uint64_t step_budget) {
  if (!(p.vars() == d.vars())) throw Error(ErrorCode::VarSetMismatch, "dividend and divisor use different variable sets");
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "divisor is zero");
  const auto [lead_m, lead_c] = d.leading_term(order);
  using Work = std::map<Monomial, Rational, MonomialOrder::Descending>;
  Work work(MonomialOrder::Descending{&order});
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);

  Polynomial quotient(p.vars());
  Polynomial remainder(p.vars());
  std::uint64_t steps = 0;
  while (!work.empty()) {
    auto top = work.begin();
    if (!lead_m.divides(top->first)) {
      remainder.add_term(top->first, top->second);
      work.erase(top);
      continue;
    }
    if (++steps > step_budget) {
      throw Error(ErrorCode::NonTerminatingOrder,
                  "reduction exceeded the step budget of " + std::to_string(step_budget));
    }
    Monomial shift = top->first / lead_m;
    Rational factor = top->second / lead_c;
    quotient.add_term(shift, factor);
    for (const auto& [m, c] : d.terms()) {
      Monomial mm = m * shift;
      Rational delta = -factor * c;
      auto [it, inserted] = work.try_emplace(mm, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

NotDivisibleError::NotDivisibleError(Polynomial remainder)
    : Error(ErrorCode::NotDivisible, "nonzero remainder " + remainder.to_string()), remainder_(std::move(remainder)) {}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  auto [q, r] = divide(p, d, MonomialOrder::grlex(), UINT64_MAX);
  if (!r.is_zero()) throw NotDivisibleError(std::move(r));
  return q;
}

Polynomial jacobian_det(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw Error(ErrorCode::DimensionMismatch, "empty Jacobian");
  const VarSet& vs = fs.front().vars();
  const std::size_t n = fs.size();
  if (vs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(n) + " polynomials in " + std::to_string(vs.size()) + " variables");
  }
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(fs[i].vars() == vs)) throw Error(ErrorCode::VarSetMismatch, "Jacobian entries use different variable sets");
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(partial_derivative(fs[i], j));
  }
  // Fraction-free (Bareiss) elimination; every division below is exact.
  Polynomial prev = Polynomial::constant(vs, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(vs);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = Polynomial(vs);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial normal_form(const Polynomial& p, const Polynomial& d, const MonomialOrder& order, std::uint64_t step_budget) {
  return divide(p, d, order, step_budget).remainder;
}

}  // namespace exotic
