#include <doctest.h>

#include <random>

#include "exotic/constructions.hpp"
#include "exotic/grading.hpp"
#include "exotic/polyparse.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {
const VarSet kXYZ{"x", "y", "z"};
Polynomial P(const char* s) { return parse_polynomial(s, kXYZ); }
}  // namespace

TEST_CASE("tDP polynomials satisfy z p + z = (xz+1)^k - (yz+1)^l") {
  for (long k = 3; k <= 9; ++k)
    for (long l = 2; l < k; ++l) {
      if (std::gcd(k, l) != 1) continue;
      auto h = tdp(k, l);
      const Polynomial& p = h.defining;
      const Polynomial z = Polynomial::variable(p.vars(), "z"), one = Polynomial::constant(p.vars(), 1);
      const Polynomial xz1 = Polynomial::variable(p.vars(), "x") * z + one, yz1 = Polynomial::variable(p.vars(), "y") * z + one;
      CHECK(z * p + z == xz1.pow(static_cast<unsigned>(k)) - yz1.pow(static_cast<unsigned>(l)));
    }
  CHECK(tdp(3, 2).defining == P("x^3*z^2 + 3*x^2*z - y^2*z + 3*x - 2*y - 1"));
  CHECK(tdp(3, 2).warnings.empty());
  auto shared = tdp(4, 2);  // gcd 2: still defined, but flagged
  CHECK_FALSE(shared.warnings.empty());
}

TEST_CASE("hyperbolic identities on random h with h(0) = 0") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = oracle::random_poly(rng, kXYZ, 5, 5, true);
    if (h.is_zero()) continue;
    CHECK(hyperbolic_identity_check(h));
    // q(x, u) u = h(u x), checked at a random point.
    auto q = hyperbolic_modification(h);
    auto pt = oracle::random_point(rng, 4);
    std::vector<Rational> scaled{pt[3] * pt[0], pt[3] * pt[1], pt[3] * pt[2]};
    CHECK(oracle::eval(q, pt) * pt[3] == oracle::eval(h, scaled));
  }
}

TEST_CASE("named families") {
  auto kr = koras_russell(1, 2, 3);
  CHECK(kr.defining == parse_polynomial("x + x^2*y + z^2 + t^3", kr.defining.vars()));
  auto b = brieskorn(2, 3, 5);
  CHECK(b.defining == P("x^2 - y^3 - z^5"));
  auto d = danielewski(2);
  CHECK(d.defining == P("x^2*y + z^2 - 1"));
  CHECK(d.provenance.factory == "Danielewski");
}

TEST_CASE("quasi-invariance") {
  TorusWeights w{{"x", 1}, {"y", 2}};
  CHECK(quasi_invariance_check(P("x^2 + y"), w) == std::optional<long>(2));
  CHECK_FALSE(quasi_invariance_check(P("x + y"), w));
  CHECK_FALSE(quasi_invariance_check(P("0"), w));
  CHECK(quasi_invariance_check(P("z^3"), w) == std::optional<long>(0));  // missing weight counts as 0
}

TEST_CASE("cyclic and multicyclic covers add z_i^s_i - q_i") {
  auto base = free_ambient(VarSet{"x", "y"});
  auto sys = cyclic_cover_equations(base, {{parse_polynomial("x*y", base.ambient), 3, "w"}});
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0] == parse_polynomial("w^3 - x*y", sys.ambient));
}

TEST_CASE("affine modification equations") {
  const VarSet xy{"x", "y"};
  auto sys = affine_modification_equations(parse_polynomial("x", xy), {parse_polynomial("y", xy)});
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0] == parse_polynomial("x*y1 - y", sys.ambient));
}

TEST_CASE("morphism into a variety") {
  auto b = brieskorn(2, 3, 5);
  const VarSet st{"s", "t"};
  // (s^15, s^10, 0) lies on x^2 - y^3 - z^5 = 0.
  Substitution on{{"x", parse_polynomial("s^15", st)}, {"y", parse_polynomial("s^10", st)}, {"z", parse_polynomial("0", st)}};
  CHECK(morphism_into_variety_check(b, on));
  Substitution off{{"x", parse_polynomial("s", st)}, {"y", parse_polynomial("t", st)}, {"z", parse_polynomial("0", st)}};
  CHECK_FALSE(morphism_into_variety_check(b, off));
}

TEST_CASE("singular locus system of the Brieskorn surface") {
  auto sys = singular_locus_system(brieskorn(2, 3, 5));
  CHECK(sys.equations.size() == 4);  // f and its three partials
}
