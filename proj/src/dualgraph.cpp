#include "exotic/dualgraph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace exotic {

bool NaturalLess::operator()(const std::string& a, const std::string& b) const {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      int c = a.compare(is, ie - is, b, js, je - js);
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

// --- WeightedGraph ------------------------------------------------------

WeightedGraph::Edge WeightedGraph::key(const std::string& a, const std::string& b) {
  return NaturalLess{}(a, b) ? Edge{a, b} : Edge{b, a};
}

void WeightedGraph::add_vertex(const std::string& id, long weight) {
  if (id.empty()) throw Error(ErrorCode::InvalidFormat, "empty vertex id");
  if (!weights_.emplace(id, weight).second) throw Error(ErrorCode::InvalidFormat, "duplicate vertex id '" + id + "'");
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b) {
  if (!has_vertex(a) || !has_vertex(b)) throw Error(ErrorCode::UnknownSite, "edge " + a + "-" + b + " has a missing endpoint");
  if (a == b) throw Error(ErrorCode::InvalidFormat, "loop at '" + a + "'");
  if (!edges_.insert(key(a, b)).second) throw Error(ErrorCode::InvalidFormat, "multi-edge " + a + "-" + b);
}

void WeightedGraph::remove_edge(const std::string& a, const std::string& b) {
  if (edges_.erase(key(a, b)) == 0) throw Error(ErrorCode::UnknownSite, "no edge " + a + "-" + b);
}

void WeightedGraph::remove_vertex(const std::string& id) {
  if (weights_.erase(id) == 0) throw Error(ErrorCode::UnknownSite, "no vertex '" + id + "'");
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->first == id || it->second == id) it = edges_.erase(it);
    else ++it;
  }
}

void WeightedGraph::set_weight(const std::string& id, long weight) {
  auto it = weights_.find(id);
  if (it == weights_.end()) throw Error(ErrorCode::UnknownSite, "no vertex '" + id + "'");
  it->second = weight;
}

bool WeightedGraph::has_edge(const std::string& a, const std::string& b) const { return edges_.count(key(a, b)) > 0; }

long WeightedGraph::weight(const std::string& id) const {
  auto it = weights_.find(id);
  if (it == weights_.end()) throw Error(ErrorCode::UnknownSite, "no vertex '" + id + "'");
  return it->second;
}

std::vector<std::string> WeightedGraph::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, w] : weights_) out.push_back(id);
  return out;
}

std::vector<std::string> WeightedGraph::neighbors(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [a, b] : edges_) {
    if (a == id) out.push_back(b);
    if (b == id) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), NaturalLess{});
  return out;
}

std::string WeightedGraph::fresh_id() const {
  for (std::size_t k = 1;; ++k) {
    std::string id = "E" + std::to_string(k);
    if (!has_vertex(id)) return id;
  }
}

bool WeightedGraph::is_connected() const {
  if (weights_.empty()) return false;
  std::set<std::string> seen;
  std::vector<std::string> stack{weights_.begin()->first};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (auto& n : neighbors(v)) stack.push_back(n);
  }
  return seen.size() == weights_.size();
}

bool WeightedGraph::is_forest() const {
  std::map<std::string, std::string> parent;
  for (const auto& [id, w] : weights_) parent[id] = id;
  std::function<std::string(const std::string&)> find = [&](const std::string& v) {
    std::string r = v;
    while (parent[r] != r) r = parent[r];
    return r;
  };
  for (const auto& [a, b] : edges_) {
    auto ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool WeightedGraph::is_linear_chain() const {
  if (!is_connected() || !is_forest()) return false;
  for (const auto& [id, w] : weights_)
    if (valence(id) > 2) return false;
  return true;
}

// --- blow-ups and contractions -------------------------------------------

BlowUpResult blow_up(const WeightedGraph& g, const Site& site) {
  BlowUpResult out{g, g.fresh_id()};
  if (!site.b) {
    if (!g.has_vertex(site.a)) throw Error(ErrorCode::UnknownSite, "no vertex '" + site.a + "'");
    out.graph.add_vertex(out.new_vertex, -1);
    out.graph.set_weight(site.a, g.weight(site.a) - 1);
    out.graph.add_edge(site.a, out.new_vertex);
    return out;
  }
  const std::string& a = site.a;
  const std::string& b = *site.b;
  if (!g.has_vertex(a) || !g.has_vertex(b) || !g.has_edge(a, b)) {
    throw Error(ErrorCode::UnknownSite, "no edge " + a + "-" + b);
  }
  out.graph.remove_edge(a, b);
  out.graph.add_vertex(out.new_vertex, -1);
  out.graph.set_weight(a, g.weight(a) - 1);
  out.graph.set_weight(b, g.weight(b) - 1);
  out.graph.add_edge(a, out.new_vertex);
  out.graph.add_edge(out.new_vertex, b);
  return out;
}

std::optional<std::string> contraction_obstruction(const WeightedGraph& g, const std::string& v) {
  if (g.weight(v) != -1) return "weight";
  auto nb = g.neighbors(v);
  if (nb.size() > 2) return "valence";
  if (nb.size() == 2 && g.has_edge(nb[0], nb[1])) return "multi-edge";
  return std::nullopt;
}

WeightedGraph contract(const WeightedGraph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownSite, "no vertex '" + v + "'");
  if (auto why = contraction_obstruction(g, v)) throw Error(ErrorCode::NotContractible, *why);
  auto nb = g.neighbors(v);
  WeightedGraph out = g;
  out.remove_vertex(v);
  for (const auto& n : nb) out.set_weight(n, g.weight(n) + 1);
  if (nb.size() == 2) out.add_edge(nb[0], nb[1]);
  return out;
}

MinimalizeResult minimalize(const WeightedGraph& g) {
  MinimalizeResult out{g, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& id : out.graph.ids()) {
      if (contraction_obstruction(out.graph, id)) continue;
      out.graph = contract(out.graph, id);
      out.log.push_back(id);
      changed = true;
      break;
    }
  }
  return out;
}

std::string_view to_string(RamanujamVerdict v) {
  switch (v) {
    case RamanujamVerdict::IsomorphicToC2: return "IsomorphicToC2";
    case RamanujamVerdict::NotC2: return "NotC2";
    case RamanujamVerdict::NotATree: return "NotATree";
  }
  return "?";
}

RamanujamVerdict ramanujam_verdict(const WeightedGraph& g) {
  auto m = minimalize(g).graph;
  if (!m.is_forest()) return RamanujamVerdict::NotATree;
  return m.is_linear_chain() ? RamanujamVerdict::IsomorphicToC2 : RamanujamVerdict::NotC2;
}

// --- resolution of x^m / y^n --------------------------------------------

ResolutionChain resolution_chain(long m, long n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidParams, "resolution_chain needs m, n >= 1");
  ResolutionChain out;
  // Curves through the current indeterminacy point; nullopt is an original axis.
  std::optional<std::string> lx, ly;
  std::pair<long, long> label_x{1, 0}, label_y{0, 1};
  long a = m, b = n;
  for (int k = 1;; ++k) {
    std::string e = "E" + std::to_string(k);
    out.graph.add_vertex(e, -1);
    for (const auto& c : {lx, ly}) {
      if (!c) continue;
      out.graph.set_weight(*c, out.graph.weight(*c) - 1);
      out.graph.add_edge(*c, e);
    }
    if (lx && ly) out.graph.remove_edge(*lx, *ly);
    std::pair<long, long> label{label_x.first + label_y.first, label_x.second + label_y.second};
    out.multiplicities[e] = label;
    if (a == b) break;
    if (a > b) {
      a -= b;
      lx = e;
      label_x = label;
    } else {
      b -= a;
      ly = e;
      label_y = label;
    }
  }
  // walk the chain from its smallest end
  std::string start;
  for (const auto& id : out.graph.ids()) {
    if (out.graph.valence(id) <= 1) {
      start = id;
      break;
    }
  }
  std::string prev;
  for (std::string cur = start; !cur.empty();) {
    out.chain.push_back(cur);
    std::string next;
    for (const auto& nb : out.graph.neighbors(cur))
      if (nb != prev) next = nb;
    prev = cur;
    cur = next;
  }
  out.det = intersection_matrix(out.graph).det;
  return out;
}

IntersectionMatrix intersection_matrix(const WeightedGraph& g) {
  IntersectionMatrix out{g.ids(), ZMatrix(g.size(), g.size()), 1};
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    index[out.basis[i]] = i;
    out.entries(i, i) = g.weight(out.basis[i]);
  }
  for (const auto& [a, b] : g.edges()) {
    out.entries(index[a], index[b]) = 1;
    out.entries(index[b], index[a]) = 1;
  }
  out.det = determinant(out.entries);
  return out;
}

// --- X_T and numerical criteria -----------------------------------------

XtParams XtParams::from_matrix(const ZMatrix& t) {
  if (t.rows() != 4 || t.cols() != 4) throw Error(ErrorCode::WrongShape, "T must be 4x4");
  static const int pattern[4][4] = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (t(i, j) < 0) throw Error(ErrorCode::WrongShape, "negative entry in T");
      if (!pattern[i][j] && t(i, j) != 0) throw Error(ErrorCode::WrongShape, "T violates the sparsity pattern");
      if (!t(i, j).fits_slong_p()) throw Error(ErrorCode::WrongShape, "entry too large");
    }
  XtParams p;
  p.m00 = t(0, 0).get_si();
  p.n00 = t(0, 2).get_si();
  p.m10 = t(1, 0).get_si();
  p.n10 = t(1, 3).get_si();
  p.m01 = t(2, 1).get_si();
  p.n01 = t(2, 2).get_si();
  p.m11 = t(3, 1).get_si();
  p.n11 = t(3, 3).get_si();
  return p;
}

XtParams XtParams::from_list(const std::vector<long>& v) {
  if (v.size() != 8) throw Error(ErrorCode::WrongShape, "T needs 8 parameters");
  for (long x : v)
    if (x < 0) throw Error(ErrorCode::WrongShape, "negative entry in T");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

ZMatrix XtParams::to_matrix() const {
  ZMatrix t(4, 4);
  t(0, 0) = m00;
  t(0, 2) = n00;
  t(1, 0) = m10;
  t(1, 3) = n10;
  t(2, 1) = m01;
  t(2, 2) = n01;
  t(3, 1) = m11;
  t(3, 3) = n11;
  return t;
}

XtCertificate xt_certificate(const ZMatrix& t) {
  XtParams::from_matrix(t);
  BigInt det = determinant(t);
  return {abs(det) == 1, det};
}

bool tdp_contractibility(long m1, long n1, long m2, long n2) {
  long d = m1 * n2 + m2 * n1 - m1 * m2;
  return (d == 1 || d == -1) && m1 > n1 && m2 > n2;
}

std::optional<std::vector<BigInt>> ample_support_divisor(const ZMatrix& q, const std::vector<BigInt>& h) {
  const std::size_t n = q.rows();
  if (q.cols() != n || h.size() != n) throw Error(ErrorCode::DimensionMismatch, "Q must be square and match h");
  if (!(q == q.transposed())) throw Error(ErrorCode::DimensionMismatch, "Q must be symmetric");
  if (n == 0) return std::nullopt;
  {
    WeightedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (q(i, j) != 0) g.add_edge(std::to_string(i), std::to_string(j));
    if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "the support graph of Q is disconnected");
  }
  std::vector<BigInt> a(n, 0);
  std::vector<bool> in(n, false);
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i] > 0) {
      a[i] = h[i];
      in[i] = any = true;
    }
  }
  if (!any) return std::nullopt;

  auto qa_of = [&](const std::vector<BigInt>& v) {
    std::vector<BigInt> r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i] += q(i, j) * v[j];
    return r;
  };

  while (true) {
    auto qa = qa_of(a);
    if (std::all_of(in.begin(), in.end(), [](bool b) { return b; })) {
      if (std::all_of(qa.begin(), qa.end(), [](const BigInt& v) { return v > 0; })) return a;
      return std::nullopt;
    }
    bool grown = false;
    for (std::size_t j = 0; j < n && !grown; ++j) {
      if (in[j] || qa[j] <= 0) continue;
      // minimal m >= 1 with m (QA)_i + Q_ij > 0 on the new support
      BigInt m = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if ((!in[i] && i != j) || qa[i] <= 0) continue;
        BigInt bound;
        BigInt neg = -q(i, j);
        mpz_fdiv_q(bound.get_mpz_t(), neg.get_mpz_t(), qa[i].get_mpz_t());
        bound += 1;
        if (bound > m) m = bound;
      }
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (!in[i] && i != j) continue;
        ok = m * qa[i] + q(i, j) > 0;
      }
      if (!ok) continue;
      for (auto& v : a) v *= m;
      a[j] += 1;
      in[j] = true;
      grown = true;
    }
    if (!grown) return std::nullopt;
  }
}

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& id : g.ids()) os << "  \"" << id << "\" [label=\"" << id << "\\n" << g.weight(id) << "\"];\n";
  for (const auto& [a, b] : g.edges()) os << "  \"" << a << "\" -- \"" << b << "\";\n";
  os << "}\n";
  return os.str();
}

WeightedGraph hirzebruch_graph(long n) {
  WeightedGraph g;
  g.add_vertex("E", -n);
  g.add_vertex("F", 0);
  g.add_edge("E", "F");
  return g;
}

WeightedGraph ramanujam_graph() {
  WeightedGraph g;
  const long chain[] = {-3, -1, -3, -1, -2, -2, -2, -2};
  for (int i = 0; i < 8; ++i) g.add_vertex(std::to_string(i + 1), chain[i]);
  for (int i = 1; i < 8; ++i) g.add_edge(std::to_string(i), std::to_string(i + 1));
  g.add_vertex("9", -2);
  g.add_vertex("10", -2);
  g.add_edge("2", "9");
  g.add_edge("4", "10");
  return g;
}

}  // namespace exotic
