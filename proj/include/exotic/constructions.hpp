#pragma once

// Polynomial families and the identities that define them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exotic/polyring.hpp"

namespace exotic {

struct Provenance {
  std::string factory;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> notes;
};

struct Hypersurface {
  VarSet ambient;
  Polynomial defining;
  Provenance provenance;
  std::vector<std::string> warnings;
};

struct VarietySystem {
  VarSet ambient;
  std::vector<Polynomial> equations;
  Provenance provenance;
};

using TorusWeights = std::map<std::string, long, std::less<>>;

// q(x, u) = h(u x) / u over the variables of h plus `u`.
Polynomial hyperbolic_modification(const Polynomial& h, const std::string& u = "u");

struct HyperbolicIdentities {
  bool euler;          // u dq/du + q = sum x_i (dh/dx_i)(u x)
  bool partials;       // dq/dx_i = (dh/dx_i)(u x)
  bool quasi_invariant;  // q(l x, u/l) = l q
  bool all() const { return euler && partials && quasi_invariant; }
};
HyperbolicIdentities hyperbolic_identities(const Polynomial& h, const std::string& u = "u");
bool hyperbolic_identity_check(const Polynomial& h, const std::string& u = "u");

// f y_j - b_j for fresh y_j, each normalized to a positive leading coefficient.
VarietySystem affine_modification_equations(const Polynomial& f, const std::vector<Polynomial>& bs);

struct Cover {
  Polynomial q;
  unsigned s = 1;
  std::string name;  // empty: pick a fresh one
};
VarietySystem free_ambient(const VarSet& vars);
// Adds z_i^{s_i} - q_i with new variables z_i.
VarietySystem cyclic_cover_equations(const VarietySystem& base, const std::vector<Cover>& covers);

// Families. Variables: x, y, z (and t for Koras-Russell).
Hypersurface tdp(long k, long l);
Hypersurface tdp_general(long k, long l, long s, long m);
Hypersurface koras_russell(long s1, long s2, long s3);
Hypersurface brieskorn(long k, long l, long s);
Hypersurface danielewski(long n);
Hypersurface ml_suspension(const Polynomial& p, const std::string& u = "u", const std::string& v = "v");
Hypersurface sathaye_wright(const Polynomial& f, const Polynomial& g, long n, const std::string& z = "z");

// d with q(l^w x) = l^d q(x), or nullopt (also for q = 0). Missing weights are 0.
std::optional<long> quasi_invariance_check(const Polynomial& q, const TorusWeights& w);

bool morphism_into_variety_check(const Hypersurface& target, const Substitution& images);

// An image given as numerator / denominator; the division must be exact.
struct Quotient {
  Polynomial numerator;
  Polynomial denominator;
};
// Divides every quotient exactly first (DivisibilityFailure otherwise).
bool morphism_into_variety_check(const Hypersurface& target, const std::map<std::string, Quotient, std::less<>>& images);

VarietySystem singular_locus_system(const Hypersurface& x);

}  // namespace exotic
