#pragma once

// Weight degree functions, quasi-homogeneous parts, and the filtration a
// weight induces on a hypersurface quotient k[x]/(p).

#include <map>
#include <optional>
#include <string>

#include "exotic/polyring.hpp"

namespace exotic {

// nullopt stands for -infinity (the degree of 0).
using Degree = std::optional<long>;
std::string to_string(const Degree& d);

struct WeightFunction {
  VarSet vars;
  std::vector<long> weights;

  WeightFunction() = default;
  WeightFunction(VarSet v, std::vector<long> w);

  long weight_of(const Monomial& m) const;
};

Degree weight_degree(const Polynomial& p, const WeightFunction& w);
bool is_quasi_homogeneous(const Polynomial& p, const WeightFunction& w);

struct QuasiHomogeneousDecomposition {
  std::map<long, Polynomial> components;
  long top_degree = 0;
  Polynomial principal;  // the component of degree top_degree
};

QuasiHomogeneousDecomposition quasi_homogeneous_decompose(const Polynomial& p, const WeightFunction& w);

enum class Appropriateness { Certified, Unverified, Failed };
std::string_view to_string(Appropriateness a);

struct AppropriatenessReport {
  Appropriateness status = Appropriateness::Failed;
  std::string reason;
  Polynomial principal;
};

AppropriatenessReport check_appropriate(const Polynomial& p, const WeightFunction& w);

struct GradedHypersurface {
  VarSet ambient;
  Polynomial relation_top;
  WeightFunction weight;
  Appropriateness status = Appropriateness::Unverified;
  std::string note;
};

GradedHypersurface associated_graded_hypersurface(const Polynomial& p, const WeightFunction& w);

// k[x]/(relation) with canonical representatives given by normal_form.
class QuotientRing {
 public:
  QuotientRing(Polynomial relation, MonomialOrder order, std::uint64_t step_budget = kDefaultStepBudget);

  // C[x,y,z,t]/(x + x^2 y + z^2 + t^3), leading monomial x^2 y.
  static QuotientRing russell(std::uint64_t step_budget = kDefaultStepBudget);

  const VarSet& vars() const noexcept { return relation_.vars(); }
  const Polynomial& relation() const noexcept { return relation_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const Monomial& leading_monomial() const noexcept { return lead_; }
  std::uint64_t step_budget() const noexcept { return budget_; }

  Polynomial canonical(const Polynomial& f) const;
  bool is_canonical_monomial(const Monomial& m) const { return !lead_.divides(m); }
  bool is_russell() const;

 private:
  Polynomial relation_;
  MonomialOrder order_;
  Monomial lead_;
  std::uint64_t budget_;
};

VarSet russell_vars();
Polynomial russell_relation();
MonomialOrder russell_order();
WeightFunction russell_weights();

// The filtration F^i = {f : deg f <= i} of a quotient ring by a weight whose
// appropriateness did not fail. Caches the appropriateness report.
class Filtration {
 public:
  Filtration(QuotientRing ring, WeightFunction weight);

  const QuotientRing& ring() const noexcept { return ring_; }
  const WeightFunction& weight() const noexcept { return weight_; }
  const AppropriatenessReport& appropriateness() const noexcept { return report_; }
  const Polynomial& graded_relation() const noexcept { return report_.principal; }
  QuotientRing graded_ring() const;

  // Degree of the canonical representative. Throws DegreeNotStable when its
  // principal part lies in (p_d), where this value would be wrong.
  Degree degree(const Polynomial& f) const;
  // Principal part of the canonical form, reduced modulo p_d.
  Polynomial gr(const Polynomial& f) const;

 private:
  QuotientRing ring_;
  WeightFunction weight_;
  AppropriatenessReport report_;
};

Degree quotient_degree(const Polynomial& f, const QuotientRing& q, const WeightFunction& w);
Polynomial gr_of_element(const Polynomial& f, const QuotientRing& q, const WeightFunction& w);

// f = a(x,z,t) + y b(y,z,t) + x y c(y,z,t) on the Russell ring.
struct RussellDecomposition {
  Polynomial a, b, c;
};
RussellDecomposition canonical_form_decomposition(const Polynomial& f, const QuotientRing& q);

bool is_russell_graded(const GradedHypersurface& g);
// Whether f lies in the degree-i piece of the graded Russell ring.
bool graded_component_membership(const Polynomial& f, const GradedHypersurface& g, long i);

}  // namespace exotic
