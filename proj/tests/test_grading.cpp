#include <doctest.h>

#include <algorithm>
#include <random>

#include "exotic/grading.hpp"
#include "exotic/polyparse.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {
Polynomial R(const char* s) { return parse_polynomial(s, russell_vars()); }

// Maximum of w over the support, computed directly.
Degree max_weight(const Polynomial& p, const std::vector<long>& w) {
  Degree best;
  for (const auto& [m, c] : p.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * static_cast<long>(m[i]);
    if (!best || d > *best) best = d;
  }
  return best;
}
}  // namespace

TEST_CASE("weight degree matches a direct maximum and satisfies the degree axioms") {
  std::mt19937_64 rng(17);
  const std::vector<long> wv{-1, 2, 0, 0};
  const WeightFunction w(russell_vars(), wv);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = oracle::random_poly(rng, russell_vars(), 4, 4), g = oracle::random_poly(rng, russell_vars(), 4, 4);
    const Degree df = weight_degree(f, w), dg = weight_degree(g, w);
    CHECK(df == max_weight(f, wv));
    if (df && dg) {
      CHECK(weight_degree(f * g, w) == Degree(*df + *dg));
      auto sum = weight_degree(f + g, w);
      if (sum) CHECK(*sum <= std::max(*df, *dg));
    } else {
      CHECK_FALSE(weight_degree(f * g, w));
    }
  }
  CHECK_FALSE(weight_degree(Polynomial(russell_vars()), w));
}

TEST_CASE("quasi-homogeneous decomposition sums back and each piece is homogeneous") {
  std::mt19937_64 rng(19);
  const WeightFunction w(russell_vars(), {-1, 2, 0, 0});
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracle::random_poly(rng, russell_vars(), 4, 6);
    if (f.is_zero()) continue;
    auto d = quasi_homogeneous_decompose(f, w);
    Polynomial sum(russell_vars());
    for (const auto& [deg, part] : d.components) {
      CHECK(is_quasi_homogeneous(part, w));
      CHECK(weight_degree(part, w) == Degree(deg));
      sum += part;
    }
    CHECK(sum == f);
    CHECK(d.principal == d.components.at(d.top_degree));
  }
  auto russell = quasi_homogeneous_decompose(russell_relation(), w);
  CHECK(russell.top_degree == 0);
  CHECK(russell.principal == R("x^2*y + z^2 + t^3"));
}

TEST_CASE("Russell weights give a certified graded hypersurface") {
  auto g = associated_graded_hypersurface(russell_relation(), russell_weights());
  CHECK(g.status == Appropriateness::Certified);
  CHECK(g.relation_top == R("x^2*y + z^2 + t^3"));
  CHECK(is_russell_graded(g));
  // A principal part that factors is not certified.
  const VarSet xy{"x", "y"};
  auto bad = check_appropriate(parse_polynomial("x^2 - y^2 + x", xy), WeightFunction(xy, {1, 1}));
  CHECK(bad.status != Appropriateness::Certified);
}

TEST_CASE("canonical forms in the Russell ring") {
  const auto q = QuotientRing::russell();
  CHECK(q.canonical(R("x^2*y")) == R("-x - z^2 - t^3"));
  CHECK(q.canonical(russell_relation()).is_zero());
  auto d = canonical_form_decomposition(R("x^2*y"), q);
  CHECK(d.a == R("-x - z^2 - t^3"));
  CHECK(d.b.is_zero());
  CHECK(d.c.is_zero());
  auto e = canonical_form_decomposition(R("y^2*z + x*y*t + x^3"), q);
  CHECK(e.a + R("y") * e.b + R("x*y") * e.c == q.canonical(R("y^2*z + x*y*t + x^3")));
}

TEST_CASE("quotient degree: filtration axioms on canonical elements") {
  std::mt19937_64 rng(23);
  const auto q = QuotientRing::russell();
  const auto w = russell_weights();
  for (int trial = 0; trial < 80; ++trial) {
    auto f = q.canonical(oracle::random_poly(rng, russell_vars(), 3, 3));
    auto g = q.canonical(oracle::random_poly(rng, russell_vars(), 3, 3));
    const Degree df = quotient_degree(f, q, w), dg = quotient_degree(g, q, w);
    if (!df || !dg) continue;
    CHECK(quotient_degree(q.canonical(f * g), q, w) == Degree(*df + *dg));
    auto s = quotient_degree(q.canonical(f + g), q, w);
    if (s) CHECK(*s <= std::max(*df, *dg));
  }
  // x = -(x^2 y + z^2 + t^3) in A0, but its canonical form keeps degree -1.
  CHECK(quotient_degree(R("x"), q, w) == Degree(-1));
  CHECK(quotient_degree(R("y"), q, w) == Degree(2));
  CHECK(quotient_degree(R("x*y"), q, w) == Degree(1));
}
