#include "exotic/polygcd.hpp"

#include <random>
#include <sstream>

namespace exotic {

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_term(MonomialOrder::grlex()).second;
  return p * (Rational(1) / lc);
}

Polynomial coefficient_of(const Polynomial& p, std::size_t var, std::uint32_t power) {
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != power) continue;
    Monomial mm = m;
    mm[var] = 0;
    r.add_term(mm, c);
  }
  return r;
}

// lc(B)^k * A - Q * B with deg_var below deg_var(B).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const long db = b.degree_in(var);
  const Polynomial lcb = coefficient_of(b, var, static_cast<std::uint32_t>(db));
  const std::size_t n = a.vars().size();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const long da = a.degree_in(var);
    Polynomial lca = coefficient_of(a, var, static_cast<std::uint32_t>(da));
    Polynomial shift = Polynomial::monomial(a.vars(), Monomial::unit(n, var, static_cast<std::uint32_t>(da - db)));
    a = lcb * a - lca * shift * b;
  }
  return a;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  return monic(exact_divide(p, content_in(p, var)));
}

}  // namespace

std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm[var] = 0;
    auto it = out.try_emplace(m[var], p.vars()).first;
    it->second.add_term(mm, c);
  }
  return out;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.vars());
  for (const auto& [e, coeff] : coefficients_in(p, var)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars() == b.vars())) throw Error(ErrorCode::VarSetMismatch, "gcd operands use different variable sets");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.vars(), 1);

  std::size_t var = 0;
  while (!a.involves(var) && !b.involves(var)) ++var;
  if (!a.involves(var)) return gcd(a, content_in(b, var));
  if (!b.involves(var)) return gcd(content_in(a, var), b);

  Polynomial cont = gcd(content_in(a, var), content_in(b, var));
  Polynomial f = primitive_part(a, var);
  Polynomial g = primitive_part(b, var);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  while (true) {
    Polynomial r = pseudo_remainder(f, g, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      g = Polynomial::constant(a.vars(), 1);
      break;
    }
    f = std::move(g);
    g = primitive_part(r, var);
  }
  return monic(cont * g);
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  Polynomial g = p;
  for (std::size_t v = 0; v < p.vars().size() && !g.is_constant(); ++v) {
    if (p.involves(v)) g = gcd(g, partial_derivative(p, v));
  }
  return g.is_constant();
}

namespace {

std::optional<std::vector<BigInt>> divisors(BigInt n) {
  n = abs(n);
  if (n == 0 || n > BigInt("1000000000000")) return std::nullopt;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::optional<bool> univariate_irreducible(const Polynomial& p, std::size_t var) {
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != var && m[i] != 0) throw Error(ErrorCode::InvalidParams, "polynomial is not univariate");
    }
  }
  const long d = p.degree_in(var);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d > 3) return std::nullopt;
  // integer coefficients a[0..d]
  BigInt lcm_den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> a(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    Rational scaled = c * lcm_den;
    a[m[var]] = scaled.get_num();
  }
  if (a[0] == 0) return false;
  auto num = divisors(a[0]);
  auto den = divisors(a[static_cast<std::size_t>(d)]);
  if (!num || !den) return std::nullopt;
  for (const auto& pn : *num) {
    for (const auto& qd : *den) {
      for (int sign : {1, -1}) {
        Rational root(pn * sign, qd);
        root.canonicalize();
        Rational value = 0;
        for (long k = d; k >= 0; --k) value = value * root + a[static_cast<std::size_t>(k)];
        if (value == 0) return false;
      }
    }
  }
  return true;
}

IrreducibilityVerdict certify_irreducible(const Polynomial& p) {
  if (p.is_constant()) return {false, "constants are not irreducible"};
  if (p.total_degree() == 1) return {true, "linear"};
  const VarSet& vs = p.vars();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (p.degree_in(v) != 1) continue;
    auto coeffs = coefficients_in(p, v);
    Polynomial a = coeffs.count(1) ? coeffs.at(1) : Polynomial(vs);
    Polynomial b = coeffs.count(0) ? coeffs.at(0) : Polynomial(vs);
    if (gcd(a, b).is_constant()) {
      return {true, "linear in " + vs.name(v) + " with coprime coefficients " + a.to_string() + " and " + b.to_string()};
    }
  }
  std::mt19937 rng(20240601u);
  std::uniform_int_distribution<int> pick(-7, 7);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const long d = p.degree_in(v);
    if (d < 2 || d > 3) continue;
    if (!content_in(p, v).is_constant()) continue;
    for (int attempt = 0; attempt < 40; ++attempt) {
      Substitution images;
      std::ostringstream point;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i == v) {
          images.emplace(vs.name(i), Polynomial::variable(vs, i));
          continue;
        }
        int value = pick(rng);
        images.emplace(vs.name(i), Polynomial::constant(vs, value));
        point << vs.name(i) << "=" << value << " ";
      }
      Polynomial special = substitute(p, images, vs);
      if (special.degree_in(v) != d) continue;
      auto irr = univariate_irreducible(special, v);
      if (irr && *irr) {
        return {true, "content 1 in " + vs.name(v) + "; specialization " + point.str() + "gives irreducible " +
                          special.to_string()};
      }
    }
  }
  return {false, "no irreducibility certificate found"};
}

}  // namespace exotic
