#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "exotic/fpgroups.hpp"
#include "oracles.hpp"

using namespace exotic;

namespace {

ZMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> e(-6, 6);
  ZMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

// Gcd of all k x k minors; d1 d2 ... dk of the Smith form equals it.
BigInt minor_gcd(const ZMatrix& m, std::size_t k) {
  BigInt g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
    if (depth == k) return pick_cols(0, 0);
    for (std::size_t i = start; i < m.rows(); ++i) {
      rows[depth] = i;
      pick_rows(i + 1, depth + 1);
    }
  };
  pick_cols = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      ZMatrix sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
      BigInt d = oracle::det_expand(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = start; j < m.cols(); ++j) {
      cols[depth] = j;
      pick_cols(j + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace

TEST_CASE("Smith normal form: U M V = S, unimodular transforms, divisibility chain, minor gcds") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    ZMatrix m = random_matrix(rng, r, c);
    auto f = smith_normal_form(m);
    CHECK(multiply(multiply(f.u, m), f.v) == f.s);
    CHECK(abs(oracle::det_expand(f.u)) == 1);
    CHECK(abs(oracle::det_expand(f.v)) == 1);
    BigInt running = 1;
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      for (std::size_t j = 0; j < c; ++j)
        if (j != i) CHECK(f.s(i, j) == 0);
      if (i < f.rank) {
        CHECK(f.s(i, i) > 0);
        if (i > 0) CHECK(f.s(i, i) % f.s(i - 1, i - 1) == 0);
        running *= f.s(i, i);
        CHECK(running == minor_gcd(m, i + 1));
      } else {
        CHECK(f.s(i, i) == 0);
      }
    }
  }
}

TEST_CASE("abelianizations of named groups") {
  CHECK(abelianization(gkls(2, 3, 5)).trivial());
  CHECK(abelianization(braid_group_b3()) == AbelianGroup{1, {}});
  CHECK(abelianization(free_group(3)) == AbelianGroup{3, {}});
  CHECK(abelianization(bkl(2, 3)) == AbelianGroup{1, {}});
  CHECK(abelianization(b3quot(4)).to_string() == abelianization(bkls(2, 3, 4)).to_string());
  CHECK(AbelianGroup{2, {BigInt(3)}}.to_string() == "Z^2 + Z/3");
  CHECK(AbelianGroup{}.to_string() == "0");
}

TEST_CASE("H1(G_kls) has order |kls - kl - ks - ls|") {
  // Relation matrix rows (k-1,-1,-1), (-1,l-1,-1), (-1,-1,s-1); its determinant is the order.
  for (long k = 2; k <= 9; ++k)
    for (long l = k + 1; l <= 9; ++l)
      for (long s = l + 1; s <= 9; ++s) {
        const long n = std::labs(k * l * s - k * l - k * s - l * s);
        CHECK(abelianization(gkls(k, l, s)).order() == n);
      }
}

TEST_CASE("homology sphere check is pairwise coprimality") {
  CHECK(homology_sphere_check(2, 3, 5));
  CHECK(homology_sphere_check(2, 5, 7));
  CHECK_FALSE(homology_sphere_check(2, 4, 5));
}

TEST_CASE("triangle classification") {
  CHECK(triangle_classification(2, 3, 5) == TriangleType::Finite);
  CHECK(triangle_classification(2, 3, 6) == TriangleType::Nilpotent);
  CHECK(triangle_classification(2, 4, 4) == TriangleType::Nilpotent);
  CHECK(triangle_classification(3, 3, 3) == TriangleType::Nilpotent);
  CHECK(triangle_classification(2, 3, 7) == TriangleType::ContainsF2);
  CHECK(triangle_classification(2, 2, 100) == TriangleType::Finite);
  CHECK_THROWS_AS(triangle_classification(1, 3, 5), Error);
}

TEST_CASE("X_T exponent equals |det T| on random shape-valid matrices") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> e(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    XtParams t = XtParams::from_list({e(rng), e(rng), e(rng), e(rng), e(rng), e(rng), e(rng), e(rng)});
    CHECK(abs(xt_exponent(t)) == abs(oracle::det_expand(t.to_matrix())));
  }
  CHECK(xt_exponent(XtParams::from_list({1, 1, 1, 1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("Bezout word") {
  for (long k = 2; k <= 9; ++k)
    for (long l = 2; l <= 9; ++l) {
      if (std::gcd(k, l) != 1) continue;
      auto b = bezout_alpha(k, l);
      CHECK(k * b.p + l * b.q == 1);
    }
  CHECK_THROWS_AS(bezout_alpha(4, 6), Error);
}

TEST_CASE("presentation validation and words") {
  Presentation bad{{"a"}, {{2}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK(inverse({1, 2, -1}) == Word{1, -2, -1});
  CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
  Presentation p{{"a", "b"}, {}};
  CHECK(p.word_to_string(concat({power(1, 2), power(2, -3)})) == "a^2*b^-3");
}
