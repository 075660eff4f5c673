#pragma once

// Finite simplicial complexes with a cyclic simplicial action: homology,
// the operators sigma and tau, orbit complexes, the transfer and the Smith
// exact sequences, all over Z or Z/p with explicit matrices.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exotic/fpgroups.hpp"
#include "exotic/linalg.hpp"

namespace exotic {

class SimplicialComplex {
 public:
  using Simplex = std::vector<std::size_t>;  // sorted vertex indices

  // Downward closure of the given simplices. Vertices are indexed in
  // natural order of their names, which fixes every orientation.
  static SimplicialComplex generated_by(const std::vector<std::vector<std::string>>& simplices);

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  std::size_t vertex_index(const std::string& name) const;
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(std::size_t k) const { return k < cells_.size() ? cells_[k].size() : 0; }
  const std::vector<Simplex>& simplices(std::size_t k) const { return cells_.at(k); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::vector<std::string> names_of(const Simplex& s) const;

  // C_k -> C_{k-1}; for k = 0 a 0 x n_0 matrix.
  ZMatrix boundary(std::size_t k) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Simplex>> cells_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

class CyclicAction {
 public:
  // Vertices missing from perm are fixed. Throws InvalidParams unless perm is
  // a simplicial bijection whose order divides `order`.
  CyclicAction(const SimplicialComplex& k, unsigned order, const std::map<std::string, std::string>& perm);
  static CyclicAction trivial(const SimplicialComplex& k, unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t image(std::size_t v, unsigned power = 1) const;
  // g^power on the i-th k-simplex: its image index and the orientation sign.
  std::pair<std::size_t, int> apply(const SimplicialComplex& k, std::size_t dim, std::size_t i, unsigned power = 1) const;
  ZMatrix chain_map(const SimplicialComplex& k, std::size_t dim, unsigned power = 1) const;
  // Simplices fixed pointwise by the generator.
  bool fixes_pointwise(const SimplicialComplex::Simplex& s, unsigned power = 1) const;

 private:
  CyclicAction(unsigned order, std::vector<std::size_t> perm) : order_(order), perm_(std::move(perm)) {}
  unsigned order_;
  std::vector<std::size_t> perm_;
};

// Why the action is not regular, or nullopt: every simplex stabilized by a
// nontrivial power is fixed pointwise, and all those powers share one fixed set.
std::optional<std::string> regularity_violation(const SimplicialComplex& k, const CyclicAction& g);

struct IntegerChainComplex {
  std::vector<ZMatrix> d;  // d[k] : C_k -> C_{k-1}
  std::size_t rank(std::size_t k) const { return k < d.size() ? d[k].cols() : 0; }
  void validate() const;   // NotAComplex if some d[k-1] d[k] != 0
};

struct ModChainComplex {
  std::int64_t p = 2;
  std::vector<ModMatrix> d;
  std::size_t rank(std::size_t k) const { return k < d.size() ? d[k].cols() : 0; }
  void validate() const;
};

IntegerChainComplex chain_complex(const SimplicialComplex& k);
ModChainComplex reduce_mod(const IntegerChainComplex& c, std::int64_t p);

std::vector<AbelianGroup> homology(const IntegerChainComplex& c);
std::vector<std::size_t> homology(const ModChainComplex& c);

struct Subdivision {
  SimplicialComplex complex;
  CyclicAction action;
};
// Barycenters of higher simplices are named "(a,b,...)".
Subdivision barycentric_subdivide(const SimplicialComplex& k, const CyclicAction& g);

struct SmithOperators {
  std::int64_t p = 2;
  std::vector<ModMatrix> t, sigma, tau;  // per dimension
  bool sigma_tau_zero = false;            // sigma tau = tau sigma = 0
  bool sigma_is_tau_power = false;        // sigma = tau^(p-1)
};
// Throws NotPrime unless the order is prime, NotRegular on irregular actions.
SmithOperators smith_operators(const SimplicialComplex& k, const CyclicAction& g);

// Homology dimensions of the image complex tau^i C(Y; Z/p); i = p-1 is sigma.
std::vector<std::size_t> special_smith_homology(const SimplicialComplex& k, const CyclicAction& g, unsigned tau_power);

// Cells are orbits of simplices, oriented by their smallest member; the
// result is a Delta-complex and need not be simplicial.
struct OrbitComplex {
  std::vector<std::vector<std::size_t>> reps;      // per dim: representative simplex of each cell
  std::vector<std::vector<std::size_t>> cell_of;   // per dim: cell of each simplex
  std::vector<std::vector<bool>> fixed;            // per dim: cell comes from the fixed set
  IntegerChainComplex chains;
  std::vector<ZMatrix> projection;                 // pi_k : C_k(Y) -> C_k(X)
  std::vector<ZMatrix> transfer;                   // mu_k : C_k(X) -> C_k(Y), mu(cell) = sigma(rep)
};
OrbitComplex orbit_complex(const SimplicialComplex& k, const CyclicAction& g);

// Homology of C(X) / C(X^fixed) over Z/p.
std::vector<std::size_t> relative_to_fixed_homology(const OrbitComplex& x, std::int64_t p);

struct TransferReport {
  std::int64_t q = 2;
  bool pi_mu_is_order = false;     // pi mu = s on C(X)
  bool mu_pi_is_sigma = false;     // mu pi = sigma on C(Y)
  bool homologically_trivial = false;
  bool pi_iso = false;             // pi_* : H(Y; Z/q) -> H(X; Z/q) bijective
  std::vector<std::size_t> h_y, h_x;
};
TransferReport transfer_check(const SimplicialComplex& k, const CyclicAction& g, std::int64_t q);

// A subcomplex of C(Y; Z/p), one basis matrix (columns = chains) per dimension.
struct SubComplex {
  std::vector<ModMatrix> basis;
};

struct NodeCheck {
  std::string label;
  std::size_t dim = 0;
  bool exact = false;
};

struct LongExactSequenceReport {
  std::string name;
  bool short_exact = false;
  std::vector<NodeCheck> nodes;
  bool exact() const;
};

// 0 -> A -> B -> C -> 0 with A -> B the inclusion and B -> C the ambient chain
// map j; checks the induced long sequence in homology node by node.
LongExactSequenceReport check_long_exact_sequence(const std::string& name, const ModChainComplex& ambient,
                                                  const SubComplex& a, const SubComplex& b, const SubComplex& c,
                                                  const std::vector<ModMatrix>& j);

struct SmithSequencesReport {
  std::int64_t p = 2;
  std::vector<LongExactSequenceReport> sequences;
  std::vector<std::size_t> h_sigma, h_relative;
  bool sigma_matches_relative = false;
  bool fixed_acyclic = false, orbit_acyclic = false, total_acyclic = false;
  bool premises() const { return fixed_acyclic && orbit_acyclic; }
  bool implication_holds() const { return !premises() || total_acyclic; }
  bool all_exact() const;
};
SmithSequencesReport verify_smith_sequences(const SimplicialComplex& k, const CyclicAction& g);

// Sample spaces with a Z/p rotation.
struct ActionExample {
  std::string name;
  SimplicialComplex complex;
  CyclicAction action;
};
ActionExample disc_example(unsigned p);          // cone on a p-gon, centre fixed
ActionExample sphere_example(unsigned p);        // suspension of a p-gon, poles fixed
ActionExample free_circle_example(unsigned p);   // 2p-gon rotated two steps
ActionExample filled_triangle_example();         // rotation of a 2-simplex, not regular

}  // namespace exotic
