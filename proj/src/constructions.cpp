#include "exotic/constructions.hpp"

#include <numeric>

namespace exotic {

namespace {

Polynomial var(const VarSet& vs, std::string_view name) { return Polynomial::variable(vs, name); }

Polynomial divide_or_bug(const Polynomial& num, const Polynomial& den, const std::string& what) {
  try {
    return exact_divide(num, den);
  } catch (const NotDivisibleError& e) {
    throw Error(ErrorCode::DivisibilityFailure, what + ": remainder " + e.remainder().to_string());
  }
}

void require_positive(std::initializer_list<long> values, const std::string& family) {
  for (long v : values) {
    if (v < 1) throw Error(ErrorCode::InvalidParams, family + " needs positive exponents");
  }
}

std::string str(long v) { return std::to_string(v); }

// x_i -> u x_i, over the variables of p extended by u.
Substitution scale_by(const VarSet& base, const VarSet& ext, const Polynomial& u) {
  Substitution images;
  for (const auto& name : base.names()) images.emplace(name, u * var(ext, name));
  return images;
}

Polynomial positive_leading(Polynomial p) {
  if (!p.is_zero() && p.leading_term(MonomialOrder::grlex()).second < 0) p = -p;
  return p;
}

}  // namespace

Polynomial hyperbolic_modification(const Polynomial& h, const std::string& u) {
  if (h.constant_term() != 0) throw Error(ErrorCode::NonzeroConstantTerm, "h(0) = " + to_string(h.constant_term()));
  VarSet ext = h.vars().extended({u});
  Polynomial uu = var(ext, u);
  Polynomial scaled = substitute(h, scale_by(h.vars(), ext, uu), ext);
  return divide_or_bug(scaled, uu, "h(ux)/u");
}

HyperbolicIdentities hyperbolic_identities(const Polynomial& h, const std::string& u) {
  const VarSet& base = h.vars();
  Polynomial q = hyperbolic_modification(h, u);
  const VarSet& ext = q.vars();
  Polynomial uu = var(ext, u);
  Substitution at_ux = scale_by(base, ext, uu);

  HyperbolicIdentities out{true, true, true};
  Polynomial euler_rhs(ext);
  for (std::size_t i = 0; i < base.size(); ++i) {
    Polynomial dh = substitute(partial_derivative(h, i), at_ux, ext);
    euler_rhs += var(ext, base.name(i)) * dh;
    if (!(partial_derivative(q, base.name(i)) == dh)) out.partials = false;
  }
  out.euler = uu * partial_derivative(q, u) + q == euler_rhs;

  // q(l x, u / l) = l q  <=>  q(l x, u) = l q(x, l u)
  VarSet lam_vs = ext.extended({ext.fresh_name("lambda")});
  const std::string& lam_name = lam_vs.name(lam_vs.size() - 1);
  Polynomial lam = var(lam_vs, lam_name);
  Substitution lhs_img, rhs_img;
  for (const auto& name : base.names()) {
    lhs_img.emplace(name, lam * var(lam_vs, name));
    rhs_img.emplace(name, var(lam_vs, name));
  }
  lhs_img.emplace(u, var(lam_vs, u));
  rhs_img.emplace(u, lam * var(lam_vs, u));
  out.quasi_invariant = substitute(q, lhs_img, lam_vs) == lam * substitute(q, rhs_img, lam_vs);
  return out;
}

bool hyperbolic_identity_check(const Polynomial& h, const std::string& u) { return hyperbolic_identities(h, u).all(); }

VarietySystem affine_modification_equations(const Polynomial& f, const std::vector<Polynomial>& bs) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "modification with f = 0");
  VarSet vs = f.vars();
  std::vector<std::string> ys;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    std::string name = vs.fresh_name(bs.size() == 1 ? "y" : "y" + std::to_string(j + 1));
    vs = vs.extended({name});
    ys.push_back(name);
  }
  VarietySystem out{vs, {}, {"affine_modification", {{"f", f.to_string()}}, {}}};
  for (std::size_t j = 0; j < bs.size(); ++j) {
    out.provenance.params.emplace_back("b" + std::to_string(j + 1), bs[j].to_string());
    out.equations.push_back(positive_leading(embed(f, vs) * var(vs, ys[j]) - embed(bs[j], vs)));
  }
  out.provenance.notes.push_back("regularity of the generator system (f, b_1, ..., b_s) is assumed, not verified");
  out.provenance.notes.push_back("each equation f*y_j - b_j is scaled to a positive leading coefficient");
  return out;
}

VarietySystem free_ambient(const VarSet& vars) { return {vars, {}, {"free_ambient", {}, {}}}; }

VarietySystem cyclic_cover_equations(const VarietySystem& base, const std::vector<Cover>& covers) {
  VarSet vs = base.ambient;
  std::vector<std::string> names;
  for (const auto& c : covers) {
    if (c.s < 1) throw Error(ErrorCode::InvalidParams, "cover degree must be positive");
    std::string name = c.name.empty() ? vs.fresh_name("z") : c.name;
    vs = vs.extended({name});
    names.push_back(name);
  }
  VarietySystem out{vs, {}, base.provenance};
  out.provenance.factory = "cyclic_cover";
  for (const auto& e : base.equations) out.equations.push_back(embed(e, vs));
  for (std::size_t i = 0; i < covers.size(); ++i) {
    out.equations.push_back(var(vs, names[i]).pow(covers[i].s) - embed(covers[i].q, vs));
    out.provenance.params.emplace_back(names[i], "^" + std::to_string(covers[i].s) + " = " + covers[i].q.to_string());
  }
  out.provenance.notes.push_back("covers written as z_i^s_i - q_i");
  return out;
}

// --- families -----------------------------------------------------------

Hypersurface tdp(long k, long l) {
  require_positive({k, l}, "tDP");
  VarSet vs{"x", "y", "z"};
  Polynomial x = var(vs, "x"), y = var(vs, "y"), z = var(vs, "z");
  Polynomial one = Polynomial::constant(vs, 1);
  Polynomial num = (x * z + one).pow(k) - (y * z + one).pow(l) - z;
  Hypersurface out{vs, divide_or_bug(num, z, "tDP numerator by z"), {"tDP", {{"k", str(k)}, {"l", str(l)}}, {}}, {}};
  out.provenance.notes.push_back("p_kl = ((xz+1)^k - (yz+1)^l - z)/z; the surface is p_kl = 0");
  if (!(k > l && l >= 2)) out.warnings.push_back("expected k > l >= 2");
  if (std::gcd(k, l) != 1) out.warnings.push_back("expected gcd(k, l) = 1");
  return out;
}

Hypersurface tdp_general(long k, long l, long s, long m) {
  require_positive({k, l, s}, "tDP_general");
  if (m < 0 || m > s) throw Error(ErrorCode::InvalidParams, "tDP_general needs 0 <= m <= s");
  VarSet vs{"x", "y", "z"};
  Polynomial x = var(vs, "x"), y = var(vs, "y"), z = var(vs, "z");
  Polynomial one = Polynomial::constant(vs, 1);
  Polynomial zm = z.pow(m);
  Polynomial num = (x * zm + one).pow(k) - (y * zm + one).pow(l) - z.pow(s);
  Hypersurface out{vs, divide_or_bug(num, zm, "tDP_general numerator by z^m"),
                   {"tDP_general", {{"k", str(k)}, {"l", str(l)}, {"s", str(s)}, {"m", str(m)}}, {}}, {}};
  out.provenance.notes.push_back("((xz^m+1)^k - (yz^m+1)^l - z^s)/z^m = 0");
  if (std::gcd(k, l) != 1) out.warnings.push_back("expected gcd(k, l) = 1");
  return out;
}

Hypersurface koras_russell(long s1, long s2, long s3) {
  require_positive({s1, s2, s3}, "Koras-Russell");
  VarSet vs{"x", "y", "z", "t"};
  Polynomial x = var(vs, "x");
  Polynomial p = x + x * x * var(vs, "y").pow(s1) + var(vs, "z").pow(s2) + var(vs, "t").pow(s3);
  return {vs, p, {"KorasRussell", {{"s1", str(s1)}, {"s2", str(s2)}, {"s3", str(s3)}}, {}}, {}};
}

Hypersurface brieskorn(long k, long l, long s) {
  require_positive({k, l, s}, "Brieskorn");
  VarSet vs{"x", "y", "z"};
  Polynomial p = var(vs, "x").pow(k) - var(vs, "y").pow(l) - var(vs, "z").pow(s);
  return {vs, p, {"Brieskorn", {{"k", str(k)}, {"l", str(l)}, {"s", str(s)}}, {"x^k - y^l - z^s"}}, {}};
}

Hypersurface danielewski(long n) {
  require_positive({n}, "Danielewski");
  VarSet vs{"x", "y", "z"};
  Polynomial p = var(vs, "x").pow(n) * var(vs, "y") + var(vs, "z").pow(2) - Polynomial::constant(vs, 1);
  return {vs, p, {"Danielewski", {{"n", str(n)}}, {}}, {}};
}

Hypersurface ml_suspension(const Polynomial& p, const std::string& u, const std::string& v) {
  VarSet vs = p.vars().extended({u, v});
  return {vs, var(vs, u) * var(vs, v) - embed(p, vs), {"MLSuspension", {{"p", p.to_string()}}, {}}, {}};
}

Hypersurface sathaye_wright(const Polynomial& f, const Polynomial& g, long n, const std::string& z) {
  require_positive({n}, "Sathaye-Wright");
  if (!(f.vars() == g.vars())) throw Error(ErrorCode::VarSetMismatch, "f and g use different variables");
  VarSet vs = f.vars().extended({z});
  Polynomial p = embed(f, vs) * var(vs, z).pow(n) + embed(g, vs);
  return {vs, p, {"SathayeWright", {{"f", f.to_string()}, {"g", g.to_string()}, {"n", str(n)}}, {}}, {}};
}

std::optional<long> quasi_invariance_check(const Polynomial& q, const TorusWeights& w) {
  std::optional<long> d;
  for (const auto& [m, c] : q.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = w.find(q.vars().name(i));
      if (it != w.end()) s += static_cast<long>(m[i]) * it->second;
    }
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

bool morphism_into_variety_check(const Hypersurface& target, const Substitution& images) {
  if (images.empty()) throw Error(ErrorCode::MissingImage, "no images supplied");
  for (const auto& name : target.ambient.names()) {
    if (!images.count(name)) throw Error(ErrorCode::MissingImage, "no image for '" + name + "'");
  }
  return substitute(target.defining, images).is_zero();
}

bool morphism_into_variety_check(const Hypersurface& target,
                                 const std::map<std::string, Quotient, std::less<>>& images) {
  Substitution divided;
  for (const auto& [name, q] : images) {
    divided.emplace(name, divide_or_bug(q.numerator, q.denominator, "image of " + name));
  }
  return morphism_into_variety_check(target, divided);
}

VarietySystem singular_locus_system(const Hypersurface& x) {
  VarietySystem out{x.ambient, {x.defining}, {"singular_locus", {{"defining", x.defining.to_string()}}, {}}};
  for (std::size_t i = 0; i < x.ambient.size(); ++i) out.equations.push_back(partial_derivative(x.defining, i));
  out.provenance.notes.push_back("critical-point equations only; common zeros are not decided");
  return out;
}

}  // namespace exotic
