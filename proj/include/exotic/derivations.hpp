#pragma once

// Derivations on polynomial rings and hypersurface quotients.

#include <optional>
#include <string>
#include <vector>

#include "exotic/grading.hpp"
#include "exotic/linalg.hpp"

namespace exotic {

// Either k[x1..xn] or a QuotientRing over it.
class Ring {
 public:
  explicit Ring(VarSet vars) : vars_(std::move(vars)) {}
  explicit Ring(QuotientRing q) : vars_(q.vars()), quotient_(std::move(q)) {}

  const VarSet& vars() const noexcept { return vars_; }
  bool is_quotient() const noexcept { return quotient_.has_value(); }
  const QuotientRing& quotient() const;

  Polynomial canonical(const Polynomial& f) const { return quotient_ ? quotient_->canonical(f) : f; }
  // Canonical monomials of total degree <= bound, in descending graded-lex order.
  std::vector<Monomial> canonical_monomials(unsigned bound) const;

 private:
  VarSet vars_;
  std::optional<QuotientRing> quotient_;
};

class Derivation {
 public:
  // Throws MissingImage / UnknownVariable, and NotWellDefinedOnQuotient when
  // the relation is not sent into its own ideal.
  Derivation(Ring ring, const Substitution& images);

  const Ring& ring() const noexcept { return ring_; }
  const VarSet& vars() const noexcept { return ring_.vars(); }
  const Polynomial& image(std::size_t i) const { return images_[i]; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  bool is_zero() const;

  // Leibniz extension; on a quotient the result is canonical.
  Polynomial apply(const Polynomial& f) const;

 private:
  Ring ring_;
  std::vector<Polynomial> images_;
};

// x_i -> (B x)_i.
Derivation linear_derivation(const VarSet& vars, const QMatrix& b);
// g -> det d(f_1, ..., f_{n-1}, g) / d(x_1, ..., x_n), rows in that order.
Derivation jacobian_derivation(const VarSet& vars, const std::vector<Polynomial>& fs);

struct NilpotencyCertificate {
  enum class Verdict { NilpotentOnGenerators, Inconclusive, Disproved };
  Verdict verdict = Verdict::Inconclusive;
  std::vector<unsigned> orders;  // per generator, when nilpotent
  unsigned bound = 0;
  std::string witness;   // generator name, when disproved
  std::string evidence;  // human-readable reason
};
std::string_view to_string(NilpotencyCertificate::Verdict v);

inline constexpr unsigned kDefaultNilpotencyBound = 64;

// Iterates each generator up to `bound` times. Disproved when some nonzero
// iterate falls into the span of the earlier ones, which are independent:
// the generator then has a nonzero eigen-direction mod the kernel and no
// power of the derivation kills it.
NilpotencyCertificate nilpotency_test(const Derivation& d, unsigned bound = kDefaultNilpotencyBound);

// A derivation proven locally nilpotent on generators.
class CertifiedLnd {
 public:
  explicit CertifiedLnd(Derivation d, unsigned bound = kDefaultNilpotencyBound);

  const Derivation& derivation() const noexcept { return d_; }
  const std::vector<unsigned>& orders() const noexcept { return orders_; }

 private:
  Derivation d_;
  std::vector<unsigned> orders_;
};

// deg_d f = n iff d^(n+1) f = 0 and d^n f != 0; nullopt for f = 0.
Degree partial_degree(const CertifiedLnd& d, const Polynomial& f);

struct Flow {
  VarSet vars;  // ring variables plus the parameter
  Substitution images;
};
// exp(t d) on generators.
Flow exp_flow(const CertifiedLnd& d, const std::string& parameter = "t");

struct GradedDerivation {
  std::optional<Derivation> derivation;  // on the graded ring
  long shift = 0;                        // k0
};
GradedDerivation graded_derivation(const Derivation& d, const WeightFunction& w);

// Q-basis, in reduced echelon form (descending graded-lex), of the kernel on
// canonical elements of total degree <= bound.
std::vector<Polynomial> kernel_elements(const CertifiedLnd& d, unsigned degree_bound);

struct InvariantCandidates {
  // Basis of the intersection of the truncated kernels: contains the
  // truncated ML invariant (upper bound).
  std::vector<Polynomial> ml_basis;
  // Union of kernel bases: generates a subalgebra of Dk (lower bound).
  std::vector<Polynomial> dk_generators;
  std::string semantics;
};
InvariantCandidates invariant_candidates(const std::vector<CertifiedLnd>& ds, unsigned degree_bound);

}  // namespace exotic
