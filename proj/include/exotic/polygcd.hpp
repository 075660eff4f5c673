#pragma once

// GCD, squarefreeness and a sound-but-incomplete irreducibility test over Q.

#include <map>
#include <optional>
#include <string>

#include "exotic/polyring.hpp"

namespace exotic {

// Coefficients of p as a polynomial in `var`: exponent -> coefficient (free of var).
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

// Monic (graded-lex leading coefficient 1) greatest common divisor; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in var.
Polynomial content_in(const Polynomial& p, std::size_t var);

bool is_squarefree(const Polynomial& p);

// Univariate irreducibility over Q by rational-root search, for degree <= 3.
// nullopt when the degree is outside that range or coefficients are too large.
std::optional<bool> univariate_irreducible(const Polynomial& p, std::size_t var);

struct IrreducibilityVerdict {
  bool certified = false;
  std::string witness;  // how the certificate was obtained, or why not
};

// Certified only when one of the following proves irreducibility:
//  - total degree 1;
//  - p = a*v + b with a, b free of v and gcd(a, b) = 1;
//  - content in v is 1 and an integer specialization of the other variables
//    keeps the v-degree and gives an irreducible univariate of degree <= 3.
IrreducibilityVerdict certify_irreducible(const Polynomial& p);

}  // namespace exotic
