#include "exotic/grading.hpp"

#include "exotic/polygcd.hpp"

namespace exotic {

std::string to_string(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

WeightFunction::WeightFunction(VarSet v, std::vector<long> w) : vars(std::move(v)), weights(std::move(w)) {
  if (weights.size() != vars.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(weights.size()) + " weights for " + std::to_string(vars.size()) + " variables");
  }
}

long WeightFunction::weight_of(const Monomial& m) const {
  long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long>(m[i]) * weights[i];
  return s;
}

namespace {

void require_same(const Polynomial& p, const WeightFunction& w) {
  if (!(p.vars() == w.vars)) throw Error(ErrorCode::VarSetMismatch, "weight and polynomial use different variables");
}

}  // namespace

Degree weight_degree(const Polynomial& p, const WeightFunction& w) {
  require_same(p, w);
  Degree d;
  for (const auto& [m, c] : p.terms()) {
    long v = w.weight_of(m);
    if (!d || v > *d) d = v;
  }
  return d;
}

bool is_quasi_homogeneous(const Polynomial& p, const WeightFunction& w) {
  require_same(p, w);
  std::optional<long> seen;
  for (const auto& [m, c] : p.terms()) {
    long v = w.weight_of(m);
    if (seen && *seen != v) return false;
    seen = v;
  }
  return true;
}

QuasiHomogeneousDecomposition quasi_homogeneous_decompose(const Polynomial& p, const WeightFunction& w) {
  require_same(p, w);
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot decompose the zero polynomial");
  QuasiHomogeneousDecomposition out;
  for (const auto& [m, c] : p.terms()) {
    out.components.try_emplace(w.weight_of(m), p.vars()).first->second.add_term(m, c);
  }
  out.top_degree = out.components.rbegin()->first;
  out.principal = out.components.rbegin()->second;
  return out;
}

std::string_view to_string(Appropriateness a) {
  switch (a) {
    case Appropriateness::Certified: return "Certified";
    case Appropriateness::Unverified: return "Unverified";
    case Appropriateness::Failed: return "Failed";
  }
  return "?";
}

AppropriatenessReport check_appropriate(const Polynomial& p, const WeightFunction& w) {
  require_same(p, w);
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "appropriateness of the zero polynomial");
  AppropriatenessReport r;
  r.principal = quasi_homogeneous_decompose(p, w).principal;
  if (p.constant_term() != 0) {
    r.reason = "nonzero constant term";
    return r;
  }
  const Polynomial& pd = r.principal;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    bool divides = true;
    for (const auto& [m, c] : pd.terms()) divides = divides && m[i] > 0;
    if (divides) {
      r.reason = "variable " + p.vars().name(i) + " divides the principal part";
      return r;
    }
  }
  if (!is_squarefree(pd)) {
    r.reason = "principal part is not squarefree";
    return r;
  }
  auto irr = certify_irreducible(pd);
  if (irr.certified) {
    r.status = Appropriateness::Certified;
    r.reason = "principal part irreducible: " + irr.witness;
  } else {
    r.status = Appropriateness::Unverified;
    r.reason = "irreducibility of the principal part not certified (" + irr.witness + ")";
  }
  return r;
}

GradedHypersurface associated_graded_hypersurface(const Polynomial& p, const WeightFunction& w) {
  auto report = check_appropriate(p, w);
  if (report.status == Appropriateness::Failed) throw Error(ErrorCode::NotAppropriate, report.reason);
  return {p.vars(), report.principal, w, report.status, report.reason};
}

// --- quotient rings -----------------------------------------------------

QuotientRing::QuotientRing(Polynomial relation, MonomialOrder order, std::uint64_t step_budget)
    : relation_(std::move(relation)), order_(std::move(order)), budget_(step_budget) {
  if (relation_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "quotient by the zero polynomial");
  if (relation_.is_constant()) throw Error(ErrorCode::InvalidParams, "quotient by a unit");
  lead_ = relation_.leading_monomial(order_);
}

QuotientRing QuotientRing::russell(std::uint64_t step_budget) {
  return QuotientRing(russell_relation(), russell_order(), step_budget);
}

Polynomial QuotientRing::canonical(const Polynomial& f) const {
  if (!(f.vars() == vars())) throw Error(ErrorCode::VarSetMismatch, "element is not in this ring");
  return normal_form(f, relation_, order_, budget_);
}

bool QuotientRing::is_russell() const {
  return vars() == russell_vars() && relation_ == russell_relation() &&
         lead_ == Monomial(std::vector<std::uint32_t>{2, 1, 0, 0});
}

VarSet russell_vars() {
  static const VarSet vs{"x", "y", "z", "t"};
  return vs;
}

Polynomial russell_relation() {
  VarSet vs = russell_vars();
  Polynomial p(vs);
  p.add_term(Monomial(std::vector<std::uint32_t>{1, 0, 0, 0}), 1);
  p.add_term(Monomial(std::vector<std::uint32_t>{2, 1, 0, 0}), 1);
  p.add_term(Monomial(std::vector<std::uint32_t>{0, 0, 2, 0}), 1);
  p.add_term(Monomial(std::vector<std::uint32_t>{0, 0, 0, 3}), 1);
  return p;
}

MonomialOrder russell_order() { return MonomialOrder::weighted({1, 3, 0, 0}); }

WeightFunction russell_weights() { return WeightFunction(russell_vars(), {-1, 2, 0, 0}); }

// --- filtration ---------------------------------------------------------

Filtration::Filtration(QuotientRing ring, WeightFunction weight)
    : ring_(std::move(ring)), weight_(std::move(weight)) {
  report_ = check_appropriate(ring_.relation(), weight_);
  if (report_.status == Appropriateness::Failed) throw Error(ErrorCode::UncertifiedGrading, report_.reason);
}

QuotientRing Filtration::graded_ring() const {
  return QuotientRing(report_.principal, ring_.order(), ring_.step_budget());
}

Degree Filtration::degree(const Polynomial& f) const {
  Polynomial r = ring_.canonical(f);
  if (r.is_zero()) return std::nullopt;
  auto dec = quasi_homogeneous_decompose(r, weight_);
  if (normal_form(dec.principal, report_.principal, ring_.order(), ring_.step_budget()).is_zero()) {
    throw Error(ErrorCode::DegreeNotStable,
                "principal part " + dec.principal.to_string() + " of the canonical form lies in (p_d)");
  }
  return dec.top_degree;
}

Polynomial Filtration::gr(const Polynomial& f) const {
  Polynomial r = ring_.canonical(f);
  if (r.is_zero()) return r;
  auto dec = quasi_homogeneous_decompose(r, weight_);
  return normal_form(dec.principal, report_.principal, ring_.order(), ring_.step_budget());
}

Degree quotient_degree(const Polynomial& f, const QuotientRing& q, const WeightFunction& w) {
  return Filtration(q, w).degree(f);
}

Polynomial gr_of_element(const Polynomial& f, const QuotientRing& q, const WeightFunction& w) {
  return Filtration(q, w).gr(f);
}

RussellDecomposition canonical_form_decomposition(const Polynomial& f, const QuotientRing& q) {
  if (!q.is_russell()) throw Error(ErrorCode::WrongRing, "decomposition needs the Russell quotient");
  Polynomial r = q.canonical(f);
  const VarSet& vs = q.vars();
  RussellDecomposition out{Polynomial(vs), Polynomial(vs), Polynomial(vs)};
  for (const auto& [m, c] : r.terms()) {
    Monomial mm = m;
    if (m[1] == 0) {
      out.a.add_term(m, c);
    } else if (m[0] == 0) {
      mm[1] -= 1;
      out.b.add_term(mm, c);
    } else {
      // canonical forms have no x^2 y, so here x occurs exactly once
      mm[0] -= 1;
      mm[1] -= 1;
      out.c.add_term(mm, c);
    }
  }
  return out;
}

bool is_russell_graded(const GradedHypersurface& g) {
  Polynomial top = russell_relation();
  top.add_term(Monomial(std::vector<std::uint32_t>{1, 0, 0, 0}), -1);
  return g.ambient == russell_vars() && g.relation_top == top && g.weight.weights == russell_weights().weights;
}

bool graded_component_membership(const Polynomial& f, const GradedHypersurface& g, long i) {
  if (!is_russell_graded(g)) throw Error(ErrorCode::WrongRing, "membership test needs the graded Russell ring");
  Polynomial r = normal_form(f, g.relation_top, russell_order(), UINT64_MAX);
  for (const auto& [m, c] : r.terms()) {
    const std::uint32_t ex = m[0], ey = m[1];
    bool ok;
    if (i <= 0) {
      ok = ey == 0 && ex == static_cast<std::uint32_t>(-i);
    } else if (i % 2 == 0) {
      ok = ex == 0 && ey == static_cast<std::uint32_t>(i / 2);
    } else {
      ok = ex == 1 && ey == static_cast<std::uint32_t>((i + 1) / 2);
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace exotic
