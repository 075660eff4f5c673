#include "exotic/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "exotic/polyparse.hpp"

namespace exotic {

namespace {

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidFormat, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidFormat, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::InvalidFormat, std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<long> long_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidFormat, std::string(what) + " must be an array");
  std::vector<long> out;
  for (const auto& e : j) out.push_back(json_long(e));
  return out;
}

Json to_json(const MonomialOrder& o) {
  switch (o.kind()) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GradedLex: return "grlex";
    case MonomialOrder::Kind::Weighted: {
      Json w = Json::array();
      for (long v : o.weights()) w.push_back(num(v));
      return Json{{"weights", w}};
    }
  }
  return nullptr;
}

MonomialOrder order_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "lex") return MonomialOrder::lex();
    if (j == "grlex") return MonomialOrder::grlex();
  } else if (j.is_object() && j.contains("weights")) {
    return MonomialOrder::weighted(long_list(j.at("weights"), "weights"));
  }
  throw Error(ErrorCode::InvalidFormat, "order must be \"lex\", \"grlex\" or {\"weights\": [...]}");
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidFormat, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidFormat, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return parse_json_text(buf.str());
}

long json_long(const Json& j) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == s.size() && used > 0) return v;
  }
  throw Error(ErrorCode::InvalidFormat, "expected an integer, got " + j.dump());
}

Json num(long v) { return std::to_string(v); }
Json num(const BigInt& v) { return v.get_str(); }
Json num(const Rational& v) { return v.get_str(); }

Json to_json(const Degree& d) { return to_string(d); }

Json to_json(const ZMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(num(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ZMatrix zmatrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidFormat, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  ZMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorCode::InvalidFormat, "matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_long(j[r][c]);
  }
  return m;
}

// --- polynomials --------------------------------------------------------

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.sorted_terms(MonomialOrder::grlex())) {
    Json e = Json::array();
    for (auto x : m.exponents()) e.push_back(std::to_string(x));
    terms.push_back({{"c", to_string(c)}, {"e", e}});
  }
  return {{"vars", p.vars().names()}, {"terms", terms}, {"text", p.to_string()}};
}

Polynomial polynomial_from_json(const Json& j, const VarSet* vars) {
  if (j.is_string()) return vars ? parse_polynomial(j.get<std::string>(), *vars) : parse_polynomial(j.get<std::string>());
  VarSet own(string_list(require_key(j, "vars"), "vars"));
  Polynomial p(own);
  for (const auto& t : require_key(j, "terms")) {
    const auto& e = require_key(t, "e");
    if (!e.is_array() || e.size() != own.size())
      throw Error(ErrorCode::InvalidFormat, "exponent vector length must equal the number of variables");
    std::vector<std::uint32_t> exps;
    for (const auto& x : e) {
      long v = json_long(x);
      if (v < 0) throw Error(ErrorCode::InvalidFormat, "negative exponent");
      exps.push_back(static_cast<std::uint32_t>(v));
    }
    const auto& c = require_key(t, "c");
    p.add_term(Monomial(std::move(exps)), c.is_string() ? parse_rational(c.get<std::string>()) : Rational(json_long(c)));
  }
  return vars ? embed(p, *vars) : p;
}

Json to_json(const WeightFunction& w) {
  Json ws = Json::array();
  for (long v : w.weights) ws.push_back(num(v));
  return {{"vars", w.vars.names()}, {"weights", ws}};
}

WeightFunction weight_from_json(const Json& j) {
  return WeightFunction(VarSet(string_list(require_key(j, "vars"), "vars")), long_list(require_key(j, "weights"), "weights"));
}

// --- rings and derivations ----------------------------------------------

Ring ring_from_json(const Json& j, std::uint64_t step_budget) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "A0" || s == "russell") return Ring(QuotientRing::russell(step_budget));
    if (s.size() >= 2 && s[0] == 'C') {
      long n = json_long(Json(s.substr(1)));
      if (n < 1) throw Error(ErrorCode::InvalidFormat, "bad ring '" + s + "'");
      std::vector<std::string> names;
      if (n <= 4) {
        const char* base[] = {"x", "y", "z", "t"};
        names.assign(base, base + n);
      } else {
        for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
      }
      return Ring(VarSet(names));
    }
    throw Error(ErrorCode::InvalidFormat, "unknown ring '" + s + "'");
  }
  VarSet vars(string_list(require_key(j, "vars"), "vars"));
  if (!j.contains("relation")) return Ring(vars);
  auto rel = polynomial_from_json(j.at("relation"), &vars);
  auto order = j.contains("order") ? order_from_json(j.at("order")) : MonomialOrder::grlex();
  return Ring(QuotientRing(rel, order, step_budget));
}

Json to_json(const Ring& r) {
  Json j{{"vars", r.vars().names()}};
  if (r.is_quotient()) {
    j["relation"] = r.quotient().relation().to_string();
    j["order"] = to_json(r.quotient().order());
  }
  return j;
}

Derivation derivation_from_json(const Json& j, const std::optional<Ring>& ring, std::uint64_t step_budget) {
  std::optional<Ring> r = ring;
  const Json* images = &j;
  if (j.is_object() && j.contains("images")) {
    images = &j.at("images");
    if (!r && j.contains("ring")) r = ring_from_json(j.at("ring"), step_budget);
  }
  if (!r) throw Error(ErrorCode::InvalidFormat, "derivation needs a ring");
  if (!images->is_object()) throw Error(ErrorCode::InvalidFormat, "images must be an object");
  Substitution subs;
  for (const auto& [name, img] : images->items()) subs.emplace(name, polynomial_from_json(img, &r->vars()));
  return Derivation(*r, subs);
}

Json to_json(const Derivation& d) {
  Json images = Json::object();
  for (std::size_t i = 0; i < d.vars().size(); ++i) images[d.vars().name(i)] = d.image(i).to_string();
  return {{"ring", to_json(d.ring())}, {"images", images}};
}

Json to_json(const NilpotencyCertificate& c, const VarSet& vars) {
  Json j{{"verdict", std::string(to_string(c.verdict))}, {"bound", num(static_cast<long>(c.bound))}};
  if (!c.orders.empty()) {
    Json orders = Json::object();
    for (std::size_t i = 0; i < c.orders.size() && i < vars.size(); ++i)
      orders[vars.name(i)] = num(static_cast<long>(c.orders[i]));
    j["orders"] = orders;
  }
  if (!c.witness.empty()) j["witness"] = c.witness;
  j["evidence"] = c.evidence;
  return j;
}

// --- constructions ------------------------------------------------------

Json to_json(const Provenance& p) {
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  return {{"factory", p.factory}, {"params", params}, {"notes", p.notes}};
}

Json to_json(const Hypersurface& h) {
  return {{"ambient", h.ambient.names()},
          {"defining", to_json(h.defining)},
          {"provenance", to_json(h.provenance)},
          {"warnings", h.warnings}};
}

Json to_json(const VarietySystem& s) {
  Json eqs = Json::array();
  for (const auto& e : s.equations) eqs.push_back(to_json(e));
  return {{"ambient", s.ambient.names()}, {"equations", eqs}, {"provenance", to_json(s.provenance)}};
}

// --- graphs and groups --------------------------------------------------

Json to_json(const WeightedGraph& g) {
  Json vs = Json::array();
  for (const auto& id : g.ids()) vs.push_back({{"id", id}, {"w", num(g.weight(id))}});
  Json es = Json::array();
  for (const auto& [a, b] : g.edges()) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

WeightedGraph graph_from_json(const Json& j) {
  WeightedGraph g;
  for (const auto& v : require_key(j, "vertices")) {
    const auto& id = require_key(v, "id");
    if (!id.is_string()) throw Error(ErrorCode::InvalidFormat, "vertex id must be a string");
    g.add_vertex(id.get<std::string>(), json_long(require_key(v, "w")));
  }
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      auto ends = string_list(e, "edge");
      if (ends.size() != 2) throw Error(ErrorCode::InvalidFormat, "an edge has two ends");
      g.add_edge(ends[0], ends[1]);
    }
  return g;
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  Json text = Json::array();
  for (const auto& w : p.relators) {
    Json r = Json::array();
    for (int g : w) r.push_back(num(static_cast<long>(g)));
    rels.push_back(std::move(r));
    text.push_back(p.word_to_string(w));
  }
  return {{"gens", p.generators}, {"rels", rels}, {"text", text}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.generators = string_list(require_key(j, "gens"), "gens");
  for (const auto& r : require_key(j, "rels")) {
    Word w;
    for (long g : long_list(r, "relator")) w.push_back(static_cast<int>(g));
    p.relators.push_back(std::move(w));
  }
  p.validate();
  return p;
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(num(d));
  return {{"free_rank", num(static_cast<long>(g.free_rank))},
          {"torsion", torsion},
          {"order", g.free_rank > 0 ? Json("infinite") : num(g.order())},
          {"text", g.to_string()}};
}

// --- Smith theory -------------------------------------------------------

Json to_json(const SimplicialComplex& k) {
  Json simplices = Json::array();
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(static_cast<std::size_t>(d))) simplices.push_back(k.names_of(s));
  return {{"simplices", simplices}};
}

SimplicialComplex complex_from_json(const Json& j) {
  std::vector<std::vector<std::string>> simplices;
  for (const auto& s : require_key(j, "simplices")) simplices.push_back(string_list(s, "simplex"));
  return SimplicialComplex::generated_by(simplices);
}

Json to_json(const CyclicAction& g, const SimplicialComplex& k) {
  Json perm = Json::object();
  for (std::size_t v = 0; v < k.vertex_names().size(); ++v)
    if (g.image(v) != v) perm[k.vertex_names()[v]] = k.vertex_names()[g.image(v)];
  return {{"order", num(static_cast<long>(g.order()))}, {"perm", perm}};
}

CyclicAction action_from_json(const Json& j, const SimplicialComplex& k) {
  long order = json_long(require_key(j, "order"));
  if (order < 1) throw Error(ErrorCode::InvalidParams, "order must be positive");
  std::map<std::string, std::string> perm;
  if (j.contains("perm"))
    for (const auto& [from, to] : j.at("perm").items()) {
      if (!to.is_string()) throw Error(ErrorCode::InvalidFormat, "perm values must be vertex names");
      perm[from] = to.get<std::string>();
    }
  return CyclicAction(k, static_cast<unsigned>(order), perm);
}

Json to_json(const OrbitComplex& x, const SimplicialComplex& k) {
  Json cells = Json::array();
  for (std::size_t d = 0; d < x.reps.size(); ++d) {
    Json level = Json::array();
    for (std::size_t c = 0; c < x.reps[d].size(); ++c)
      level.push_back({{"rep", k.names_of(k.simplices(d)[x.reps[d][c]])}, {"fixed", static_cast<bool>(x.fixed[d][c])}});
    cells.push_back(std::move(level));
  }
  Json hom = Json::array();
  for (const auto& h : homology(x.chains)) hom.push_back(to_json(h));
  Json bd = Json::array();
  for (const auto& d : x.chains.d) bd.push_back(to_json(d));
  return {{"cells", cells}, {"boundaries", bd}, {"homology", hom}};
}

namespace {

Json dims_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto d : v) out.push_back(num(static_cast<long>(d)));
  return out;
}

}  // namespace

Json to_json(const TransferReport& r) {
  return {{"q", num(static_cast<long>(r.q))},
          {"pi_mu_is_order", r.pi_mu_is_order},
          {"mu_pi_is_sigma", r.mu_pi_is_sigma},
          {"homologically_trivial", r.homologically_trivial},
          {"pi_iso", r.pi_iso},
          {"h_y", dims_json(r.h_y)},
          {"h_x", dims_json(r.h_x)}};
}

Json to_json(const SmithSequencesReport& r) {
  Json seqs = Json::array();
  for (const auto& s : r.sequences) {
    Json nodes = Json::array();
    for (const auto& n : s.nodes) nodes.push_back({{"node", n.label}, {"dim", num(static_cast<long>(n.dim))}, {"exact", n.exact}});
    seqs.push_back({{"name", s.name}, {"short_exact", s.short_exact}, {"exact", s.exact()}, {"nodes", nodes}});
  }
  return {{"p", num(static_cast<long>(r.p))},
          {"all_exact", r.all_exact()},
          {"sequences", seqs},
          {"h_sigma", dims_json(r.h_sigma)},
          {"h_relative_fixed", dims_json(r.h_relative)},
          {"sigma_matches_relative", r.sigma_matches_relative},
          {"acyclicity",
           {{"fixed_set", r.fixed_acyclic},
            {"orbit_space", r.orbit_acyclic},
            {"total_space", r.total_acyclic},
            {"premises", r.premises()},
            {"implication_holds", r.implication_holds()}}}};
}

}  // namespace exotic
