#pragma once

// Weighted dual graphs of boundary divisors: blow-ups, contractions and the
// numerical criteria built on the intersection matrix.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exotic/linalg.hpp"
#include "exotic/xt.hpp"

namespace exotic {

// Orders "v2" before "v10": digit runs compare numerically.
struct NaturalLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

class WeightedGraph {
 public:
  using Edge = std::pair<std::string, std::string>;  // stored with first < second

  void add_vertex(const std::string& id, long weight);
  void add_edge(const std::string& a, const std::string& b);
  void remove_edge(const std::string& a, const std::string& b);
  void remove_vertex(const std::string& id);
  void set_weight(const std::string& id, long weight);

  bool has_vertex(const std::string& id) const { return weights_.count(id) > 0; }
  bool has_edge(const std::string& a, const std::string& b) const;
  long weight(const std::string& id) const;
  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }
  std::vector<std::string> ids() const;  // natural order
  std::vector<std::string> neighbors(const std::string& id) const;
  std::size_t valence(const std::string& id) const { return neighbors(id).size(); }
  const std::set<Edge, std::less<>>& edges() const noexcept { return edges_; }
  std::string fresh_id() const;

  bool is_connected() const;
  bool is_forest() const;
  bool is_linear_chain() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

 private:
  static Edge key(const std::string& a, const std::string& b);
  std::map<std::string, long, NaturalLess> weights_;
  std::set<Edge, std::less<>> edges_;
};

// A vertex (outer blow-up) or an edge (inner blow-up).
struct Site {
  std::string a;
  std::optional<std::string> b;
};

struct BlowUpResult {
  WeightedGraph graph;
  std::string new_vertex;
};
BlowUpResult blow_up(const WeightedGraph& g, const Site& site);
WeightedGraph contract(const WeightedGraph& g, const std::string& v);
// Reason a vertex cannot be contracted, or nullopt if it can.
std::optional<std::string> contraction_obstruction(const WeightedGraph& g, const std::string& v);

struct MinimalizeResult {
  WeightedGraph graph;
  std::vector<std::string> log;  // contracted vertex ids, in order
};
MinimalizeResult minimalize(const WeightedGraph& g);

enum class RamanujamVerdict { IsomorphicToC2, NotC2, NotATree };
std::string_view to_string(RamanujamVerdict v);
RamanujamVerdict ramanujam_verdict(const WeightedGraph& g);

struct ResolutionChain {
  WeightedGraph graph;
  std::vector<std::string> chain;  // vertex ids from one end to the other
  std::map<std::string, std::pair<long, long>> multiplicities;  // (ord x, ord y) per vertex
  BigInt det;
};
ResolutionChain resolution_chain(long m, long n);

struct IntersectionMatrix {
  std::vector<std::string> basis;
  ZMatrix entries;
  BigInt det;
};
IntersectionMatrix intersection_matrix(const WeightedGraph& g);

struct XtCertificate {
  bool acyclic;
  BigInt det;
};
XtCertificate xt_certificate(const ZMatrix& t);

bool tdp_contractibility(long m1, long n1, long m2, long n2);

// Greedy augmentation seeded from the positive part of h. nullopt means Infeasible.
std::optional<std::vector<BigInt>> ample_support_divisor(const ZMatrix& q, const std::vector<BigInt>& h);

std::string to_dot(const WeightedGraph& g);

// Two named graphs used throughout the tests.
WeightedGraph hirzebruch_graph(long n);
WeightedGraph ramanujam_graph();

}  // namespace exotic
