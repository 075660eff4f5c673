#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// back into the code under test beyond reading polynomial terms.

#include <random>
#include <vector>

#include "exotic/linalg.hpp"
#include "exotic/polyring.hpp"

namespace oracle {

using exotic::BigInt;
using exotic::Polynomial;
using exotic::Rational;

// Term-by-term evaluation.
inline Rational eval(const Polynomial& p, const std::vector<Rational>& at) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= at[i];
    sum += term;
  }
  return sum;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

// Random polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const exotic::VarSet& vars, unsigned max_deg, unsigned terms,
                              bool zero_constant = false) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  Polynomial p(vars);
  for (unsigned t = 0; t < terms; ++t) {
    exotic::Monomial m(vars.size());
    unsigned budget = deg(rng);
    for (std::size_t i = 0; i < vars.size() && budget > 0; ++i) {
      std::uniform_int_distribution<unsigned> e(0, budget);
      m[i] = e(rng);
      budget -= m[i];
    }
    if (zero_constant && m.is_one()) continue;
    p.add_term(m, coef(rng));
  }
  return p;
}

// Cofactor expansion; exponential, fine up to 8x8.
inline BigInt det_expand(const exotic::ZMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    exotic::ZMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    BigInt term = m(0, c) * det_expand(minor);
    sum += (c % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

// Rank over Q by Gaussian elimination on a copy.
inline std::size_t rank_q(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Rank over Z/p.
inline std::size_t rank_mod(std::vector<std::vector<long>> rows, long p) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  auto inv = [p](long a) {
    long res = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) res = res * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return res;
  };
  for (auto& row : rows)
    for (auto& v : row) v = ((v % p) + p) % p;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const long ip = inv(rows[r][c]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const long f = rows[i][c] * ip % p;
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
