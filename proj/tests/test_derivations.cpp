#include <doctest.h>

#include <random>

#include "exotic/derivations.hpp"
#include "exotic/polyparse.hpp"
#include "oracles.hpp"

using namespace exotic;
using Verdict = NilpotencyCertificate::Verdict;

namespace {
const VarSet kXYZ{"x", "y", "z"};
Polynomial P(const char* s) { return parse_polynomial(s, kXYZ); }
Polynomial R(const char* s) { return parse_polynomial(s, russell_vars()); }
Ring A0() { return Ring(QuotientRing::russell()); }
Derivation delta1() { return Derivation(A0(), {{"x", R("0")}, {"y", R("-2*z")}, {"z", R("x^2")}, {"t", R("0")}}); }
Derivation delta2() { return Derivation(A0(), {{"x", R("0")}, {"y", R("-3*t^2")}, {"z", R("0")}, {"t", R("x^2")}}); }
Derivation nagata() {
  return Derivation(Ring(kXYZ), {{"x", P("z*(x^2 - y*z)")}, {"y", P("2*x*(x^2 - y*z)")}, {"z", P("0")}});
}
}  // namespace

TEST_CASE("Russell derivations: nilpotency orders per generator") {
  auto c1 = nilpotency_test(delta1());
  REQUIRE(c1.verdict == Verdict::NilpotentOnGenerators);
  CHECK(c1.orders == std::vector<unsigned>{0, 2, 1, 0});  // x, y, z, t
  auto c2 = nilpotency_test(delta2());
  REQUIRE(c2.verdict == Verdict::NilpotentOnGenerators);
  CHECK(c2.orders == std::vector<unsigned>{0, 3, 0, 1});
}

TEST_CASE("a derivation that does not preserve the relation is rejected") {
  CHECK_THROWS_AS(Derivation(A0(), {{"x", R("1")}, {"y", R("0")}, {"z", R("0")}, {"t", R("0")}}), Error);
  CHECK_THROWS_AS(Derivation(A0(), {{"x", R("0")}, {"y", R("0")}}), Error);
}

TEST_CASE("Leibniz rule on the polynomial ring") {
  std::mt19937_64 rng(29);
  const Derivation d = nagata();
  for (int trial = 0; trial < 60; ++trial) {
    auto f = oracle::random_poly(rng, kXYZ, 3, 3), g = oracle::random_poly(rng, kXYZ, 3, 3);
    CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
    CHECK(d.apply(f + g) == d.apply(f) + d.apply(g));
  }
}

TEST_CASE("Leibniz rule modulo the Russell relation") {
  std::mt19937_64 rng(31);
  const Derivation d = delta1();
  const auto q = QuotientRing::russell();
  for (int trial = 0; trial < 40; ++trial) {
    auto f = q.canonical(oracle::random_poly(rng, russell_vars(), 3, 3));
    auto g = q.canonical(oracle::random_poly(rng, russell_vars(), 3, 3));
    CHECK(d.apply(f * g) == q.canonical(d.apply(f) * g + f * d.apply(g)));
  }
}

TEST_CASE("degree function of a certified LND is additive") {
  std::mt19937_64 rng(37);
  const CertifiedLnd d(nagata());
  for (int trial = 0; trial < 30; ++trial) {
    auto f = oracle::random_poly(rng, kXYZ, 2, 2), g = oracle::random_poly(rng, kXYZ, 2, 2);
    const Degree df = partial_degree(d, f), dg = partial_degree(d, g);
    if (!df || !dg) continue;
    CHECK(partial_degree(d, f * g) == Degree(*df + *dg));
  }
  CHECK(partial_degree(d, P("x^2 - y*z")) == Degree(0));
  CHECK(partial_degree(d, P("x")) == Degree(1));
  CHECK(partial_degree(d, P("y")) == Degree(2));
  CHECK_FALSE(partial_degree(d, P("0")));
}

TEST_CASE("nilpotency is disproved for a linear semisimple derivation") {
  const VarSet xy{"x", "y"};
  Derivation scale(Ring(xy), {{"x", parse_polynomial("x", xy)}, {"y", parse_polynomial("0", xy)}});
  auto c = nilpotency_test(scale);
  CHECK(c.verdict == Verdict::Disproved);
  CHECK(c.witness == "x");
  CHECK_THROWS_AS(CertifiedLnd{scale}, Error);
}

TEST_CASE("Nagata flow at t = 1 and the group law") {
  const CertifiedLnd d(nagata());
  auto flow = exp_flow(d, "s");
  const VarSet& fv = flow.vars;
  auto at = [&](const Polynomial& img, const char* value) {
    Substitution sub;
    for (const auto& n : kXYZ.names()) sub.emplace(n, Polynomial::variable(kXYZ, n));
    sub.emplace("s", parse_polynomial(value, kXYZ));
    return substitute(img, sub, kXYZ);
  };
  CHECK(at(flow.images.at("x"), "1") == P("x + z*(x^2 - y*z)"));
  CHECK(at(flow.images.at("y"), "1") == P("y + 2*x*(x^2 - y*z) + z*(x^2 - y*z)^2"));
  CHECK(at(flow.images.at("z"), "1") == P("z"));

  // phi_s(phi_t(v)) = phi_{s+t}(v) over k[x,y,z,s,t].
  const VarSet st = fv.extended({"t"});
  Substitution phi_t, phi_sum;
  for (const auto& n : kXYZ.names()) phi_t.emplace(n, embed(flow.images.at(n), st));
  Substitution rename_t;  // phi_t images use t for the parameter
  for (const auto& n : kXYZ.names()) rename_t.emplace(n, Polynomial::variable(st, n));
  rename_t.emplace("s", Polynomial::variable(st, "t"));
  for (auto& [n, img] : phi_t) img = substitute(flow.images.at(n), rename_t, st);
  Substitution outer;  // phi_s applied after phi_t
  for (const auto& n : kXYZ.names()) outer.emplace(n, phi_t.at(n));
  outer.emplace("s", Polynomial::variable(st, "s"));
  Substitution shifted;
  for (const auto& n : kXYZ.names()) shifted.emplace(n, Polynomial::variable(st, n));
  shifted.emplace("s", Polynomial::variable(st, "s") + Polynomial::variable(st, "t"));
  for (const auto& n : kXYZ.names())
    CHECK(substitute(flow.images.at(n), outer, st) == substitute(flow.images.at(n), shifted, st));
}

TEST_CASE("kernel elements are killed and lie in F^0") {
  const CertifiedLnd d(delta1());
  const auto q = QuotientRing::russell();
  auto ker = kernel_elements(d, 3);
  CHECK_FALSE(ker.empty());
  for (const auto& k : ker) {
    CHECK(d.derivation().apply(k).is_zero());
    auto deg = quotient_degree(k, q, russell_weights());
    REQUIRE(deg);
    CHECK(*deg <= 0);
  }
}

TEST_CASE("invariant candidates for the two Russell derivations") {
  std::vector<CertifiedLnd> ds{CertifiedLnd(delta1()), CertifiedLnd(delta2())};
  auto inv = invariant_candidates(ds, 2);
  std::vector<Polynomial> expect{R("x^2"), R("x"), R("1")};
  CHECK(inv.ml_basis == expect);
  const std::size_t y = russell_vars().require("y");
  for (const auto& g : inv.dk_generators) CHECK_FALSE(g.involves(y));
  for (const char* v : {"x", "z", "t"})
    CHECK(std::find(inv.dk_generators.begin(), inv.dk_generators.end(), R(v)) != inv.dk_generators.end());
}

TEST_CASE("graded derivation of delta1 under the Russell weights") {
  auto g = graded_derivation(delta1(), russell_weights());
  REQUIRE(g.derivation);
  CHECK(g.shift == -2);
  CHECK(g.derivation->ring().quotient().relation() == R("x^2*y + z^2 + t^3"));
}

TEST_CASE("jacobian and linear derivations") {
  auto j = jacobian_derivation(kXYZ, {P("x"), P("x*z - y^2")});
  // d g = det(d(x, xz - y^2, g)) kills both f's.
  CHECK(j.apply(P("x")).is_zero());
  CHECK(j.apply(P("x*z - y^2")).is_zero());
  QMatrix n(3, 3);
  n(1, 0) = 1;
  n(2, 1) = 1;
  auto lin = linear_derivation(kXYZ, n);
  CHECK(lin.apply(P("x")) == P("0"));
  CHECK(lin.apply(P("y")) == P("x"));
  CHECK(nilpotency_test(lin).verdict == Verdict::NilpotentOnGenerators);
}
