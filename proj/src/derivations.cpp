#include "exotic/derivations.hpp"

#include <algorithm>
#include <map>

namespace exotic {

const QuotientRing& Ring::quotient() const {
  if (!quotient_) throw Error(ErrorCode::WrongRing, "ring has no defining relation");
  return *quotient_;
}

std::vector<Monomial> Ring::canonical_monomials(unsigned bound) const {
  const std::size_t n = vars_.size();
  std::vector<Monomial> out;
  Monomial cur(n);
  // depth-first over exponent vectors with the remaining degree budget
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      if (!quotient_ || quotient_->is_canonical_monomial(cur)) out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, bound);
  const auto order = MonomialOrder::grlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

// --- Derivation ---------------------------------------------------------

Derivation::Derivation(Ring ring, const Substitution& images) : ring_(std::move(ring)) {
  const VarSet& vs = ring_.vars();
  for (const auto& [name, img] : images) {
    if (!vs.contains(name)) throw Error(ErrorCode::UnknownVariable, "image given for unknown variable '" + name + "'");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto it = images.find(vs.name(i));
    if (it == images.end()) throw Error(ErrorCode::MissingImage, "no image for '" + vs.name(i) + "'");
    images_.push_back(ring_.canonical(embed(it->second, vs)));
  }
  if (ring_.is_quotient()) {
    Polynomial residue = apply(ring_.quotient().relation());
    if (!residue.is_zero()) {
      throw Error(ErrorCode::NotWellDefinedOnQuotient, "relation maps to " + residue.to_string());
    }
  }
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial Derivation::apply(const Polynomial& f) const {
  if (!(f.vars() == vars())) throw Error(ErrorCode::VarSetMismatch, "element is not in the derivation's ring");
  Polynomial out(vars());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero() || !f.involves(i)) continue;
    out += images_[i] * partial_derivative(f, i);
  }
  return ring_.canonical(out);
}

Derivation linear_derivation(const VarSet& vars, const QMatrix& b) {
  if (b.rows() != vars.size() || b.cols() != vars.size()) {
    throw Error(ErrorCode::DimensionMismatch, "linear derivation needs a square matrix matching the variables");
  }
  Substitution images;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Polynomial img(vars);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (b(i, j) != 0) img.add_term(Monomial::unit(vars.size(), j), b(i, j));
    }
    images.emplace(vars.name(i), std::move(img));
  }
  return Derivation(Ring(vars), images);
}

Derivation jacobian_derivation(const VarSet& vars, const std::vector<Polynomial>& fs) {
  if (fs.size() + 1 != vars.size()) {
    throw Error(ErrorCode::DimensionMismatch, "Jacobian derivation needs n-1 polynomials in n variables");
  }
  Substitution images;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::vector<Polynomial> rows;
    for (const auto& f : fs) rows.push_back(embed(f, vars));
    rows.push_back(Polynomial::variable(vars, i));
    images.emplace(vars.name(i), jacobian_det(rows));
  }
  return Derivation(Ring(vars), images);
}

// --- nilpotency ---------------------------------------------------------

std::string_view to_string(NilpotencyCertificate::Verdict v) {
  switch (v) {
    case NilpotencyCertificate::Verdict::NilpotentOnGenerators: return "NilpotentOnGenerators";
    case NilpotencyCertificate::Verdict::Inconclusive: return "Inconclusive";
    case NilpotencyCertificate::Verdict::Disproved: return "Disproved";
  }
  return "?";
}

namespace {

// Echelon basis keyed by graded-lex leading monomial; rows are monic.
class SpanTracker {
 public:
  // Reduces f against the basis; zero iff f is in the span.
  Polynomial reduce(Polynomial f) const {
    const auto order = MonomialOrder::grlex();
    while (!f.is_zero()) {
      auto [lm, lc] = f.leading_term(order);
      auto it = rows_.find(lm);
      if (it == rows_.end()) break;
      f -= it->second * lc;
    }
    return f;
  }
  void add_reduced(const Polynomial& r) {
    auto [lm, lc] = r.leading_term(MonomialOrder::grlex());
    rows_.emplace(lm, r * (Rational(1) / lc));
  }

 private:
  std::map<Monomial, Polynomial> rows_;
};

}  // namespace

NilpotencyCertificate nilpotency_test(const Derivation& d, unsigned bound) {
  using V = NilpotencyCertificate::Verdict;
  NilpotencyCertificate cert;
  cert.bound = bound;
  const VarSet& vs = d.vars();
  bool inconclusive = false;
  std::string stuck;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    Polynomial cur = d.ring().canonical(Polynomial::variable(vs, v));
    SpanTracker span;
    if (!cur.is_zero()) span.add_reduced(cur);
    std::optional<unsigned> order;
    if (cur.is_zero()) order = 0;
    for (unsigned k = 1; k <= bound && !order; ++k) {
      cur = d.apply(cur);
      if (cur.is_zero()) {
        order = k - 1;
        break;
      }
      Polynomial r = span.reduce(cur);
      if (r.is_zero()) {
        cert.verdict = V::Disproved;
        cert.witness = vs.name(v);
        cert.evidence = "d^" + std::to_string(k) + "(" + vs.name(v) + ") = " + cur.to_string() +
                        " is nonzero and lies in the span of the lower iterates";
        cert.orders.clear();
        return cert;
      }
      span.add_reduced(r);
    }
    if (!order) {
      inconclusive = true;
      if (stuck.empty()) stuck = vs.name(v);
      cert.orders.push_back(0);
    } else {
      cert.orders.push_back(*order);
    }
  }
  if (inconclusive) {
    cert.verdict = V::Inconclusive;
    cert.witness = stuck;
    cert.evidence = "generator " + stuck + " not annihilated within " + std::to_string(bound) + " iterations";
    cert.orders.clear();
  } else {
    cert.verdict = V::NilpotentOnGenerators;
    cert.evidence = "every generator annihilated";
  }
  return cert;
}

CertifiedLnd::CertifiedLnd(Derivation d, unsigned bound) : d_(std::move(d)) {
  auto cert = nilpotency_test(d_, bound);
  if (cert.verdict != NilpotencyCertificate::Verdict::NilpotentOnGenerators) {
    throw Error(ErrorCode::NotCertifiedNilpotent, std::string(to_string(cert.verdict)) + ": " + cert.evidence);
  }
  orders_ = std::move(cert.orders);
}

Degree partial_degree(const CertifiedLnd& d, const Polynomial& f) {
  const Derivation& der = d.derivation();
  Polynomial cur = der.ring().canonical(f);
  if (cur.is_zero()) return std::nullopt;
  // Leibniz bounds the order of each monomial by the weighted sum of generator orders.
  long limit = 0;
  for (const auto& [m, c] : cur.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long>(m[i]) * d.orders()[i];
    limit = std::max(limit, s);
  }
  for (long n = 0; n <= limit; ++n) {
    Polynomial next = der.apply(cur);
    if (next.is_zero()) return n;
    cur = std::move(next);
  }
  throw Error(ErrorCode::NotCertifiedNilpotent, "iterate survived past the Leibniz bound");
}

Flow exp_flow(const CertifiedLnd& d, const std::string& parameter) {
  const Derivation& der = d.derivation();
  const VarSet& vs = der.vars();
  Flow flow{vs.extended({parameter}), {}};
  const Polynomial t = Polynomial::variable(flow.vars, parameter);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    Polynomial cur = der.ring().canonical(Polynomial::variable(vs, v));
    Polynomial sum(flow.vars);
    Polynomial tpow = Polynomial::constant(flow.vars, 1);
    Rational fact = 1;
    for (unsigned i = 0; i <= d.orders()[v]; ++i) {
      if (i > 0) {
        cur = der.apply(cur);
        tpow *= t;
        fact *= i;
      }
      sum += embed(cur, flow.vars) * tpow * (Rational(1) / fact);
    }
    flow.images.emplace(vs.name(v), std::move(sum));
  }
  return flow;
}

GradedDerivation graded_derivation(const Derivation& d, const WeightFunction& w) {
  if (!d.ring().is_quotient()) throw Error(ErrorCode::WrongRing, "graded derivation needs a quotient ring");
  Filtration filt(d.ring().quotient(), w);
  QuotientRing graded = filt.graded_ring();
  const VarSet& vs = d.vars();

  std::vector<Degree> var_deg(vs.size());
  std::optional<long> k0;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    var_deg[v] = filt.degree(Polynomial::variable(vs, v));
    Degree dd = filt.degree(d.image(v));
    if (!dd || !var_deg[v]) continue;
    long k = *dd - *var_deg[v];
    if (!k0 || k > *k0) k0 = k;
  }
  GradedDerivation out;
  out.shift = k0.value_or(0);
  Substitution images;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    Polynomial img(vs);
    const Polynomial& dv = d.image(v);
    if (k0 && var_deg[v] && !dv.is_zero()) {
      auto dec = quasi_homogeneous_decompose(dv, w);
      auto it = dec.components.find(*var_deg[v] + *k0);
      if (it != dec.components.end()) img = it->second;
    }
    images.emplace(vs.name(v), std::move(img));
  }
  try {
    out.derivation.emplace(Ring(graded), images);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotWellDefinedOnQuotient) throw;
    throw Error(ErrorCode::GradedNotWellDefined, e.detail());
  }
  return out;
}

// --- kernels ------------------------------------------------------------

namespace {

// Appends the rows of "d applied to each column monomial" to m, using a
// fresh row index map per derivation.
void append_kernel_rows(const Derivation& d, const std::vector<Monomial>& cols, std::vector<std::vector<Rational>>& rows) {
  std::map<Monomial, std::size_t> row_of;
  std::vector<std::vector<Rational>> local;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Polynomial img = d.apply(Polynomial::monomial(d.vars(), cols[j]));
    for (const auto& [m, c] : img.terms()) {
      auto [it, inserted] = row_of.try_emplace(m, local.size());
      if (inserted) local.emplace_back(cols.size(), Rational(0));
      local[it->second][j] = c;
    }
  }
  for (auto& r : local) rows.push_back(std::move(r));
}

std::vector<Polynomial> echelon_kernel(const VarSet& vs, const std::vector<Monomial>& cols,
                                       const std::vector<std::vector<Rational>>& rows) {
  QMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = rows[i][j];
  QMatrix ns = nullspace(m);
  QMatrix basis = ns.transposed();
  auto pivots = rref(basis);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Polynomial p(vs);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (basis(i, j) != 0) p.add_term(cols[j], basis(i, j));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> kernel_elements(const CertifiedLnd& d, unsigned degree_bound) {
  const Derivation& der = d.derivation();
  auto cols = der.ring().canonical_monomials(degree_bound);
  std::vector<std::vector<Rational>> rows;
  append_kernel_rows(der, cols, rows);
  return echelon_kernel(der.vars(), cols, rows);
}

InvariantCandidates invariant_candidates(const std::vector<CertifiedLnd>& ds, unsigned degree_bound) {
  if (ds.empty()) throw Error(ErrorCode::InvalidParams, "no derivations supplied");
  const Ring& ring = ds.front().derivation().ring();
  for (const auto& d : ds) {
    if (!(d.derivation().vars() == ring.vars())) throw Error(ErrorCode::VarSetMismatch, "derivations live on different rings");
  }
  auto cols = ring.canonical_monomials(degree_bound);
  std::vector<std::vector<Rational>> stacked;
  InvariantCandidates out;
  for (const auto& d : ds) {
    append_kernel_rows(d.derivation(), cols, stacked);
    for (auto& k : kernel_elements(d, degree_bound)) {
      if (std::find(out.dk_generators.begin(), out.dk_generators.end(), k) == out.dk_generators.end()) {
        out.dk_generators.push_back(std::move(k));
      }
    }
  }
  out.ml_basis = echelon_kernel(ring.vars(), cols, stacked);
  out.semantics =
      "ml_basis spans the common kernel in total degree <= " + std::to_string(degree_bound) +
      " of the supplied derivations only: an upper bound for the truncated ML invariant. dk_generators is the union"
      " of their kernel bases: a lower bound for generators of the truncated Dk invariant.";
  return out;
}

}  // namespace exotic
