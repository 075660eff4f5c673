// exotic: command-line front end. JSON on stdout (DOT with --dot), exit 0 on
// success, 1 on a domain error, 2 on a usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "exotic/json_io.hpp"
#include "exotic/polygcd.hpp"
#include "exotic/polyparse.hpp"
#include "exotic/scenarios.hpp"

using namespace exotic;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool verbose = false, dot = false, record = false;
  std::string json_in, json_out;
  std::uint64_t budget = kDefaultStepBudget;
};

std::uint64_t budget_from_env() {
  const char* env = std::getenv("EXOTIC_STEP_BUDGET");
  if (!env || !*env) return kDefaultStepBudget;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw Usage(std::string("EXOTIC_STEP_BUDGET must be a positive integer, got '") + env + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

long to_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Usage(std::string(what) + ": expected an integer, got '" + s + "'");
}

std::vector<long> longs(const std::string& s, const char* what) {
  std::vector<long> out;
  for (const auto& p : split(s, ',')) out.push_back(to_long(p, what));
  return out;
}

// "2..5" or "2,3,7" or "4".
std::vector<long> value_range(const std::string& s, const char* what) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return longs(s, what);
  long lo = to_long(s.substr(0, dots), what), hi = to_long(s.substr(dots + 2), what);
  if (hi < lo || hi - lo > 10000) throw Usage(std::string(what) + ": bad range '" + s + "'");
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

long require_long(const std::string& s, const char* what) {
  if (s.empty()) throw Usage(std::string("missing --") + what);
  return to_long(s, what);
}

// A file path, or inline JSON when the text starts with '{' or '['.
Json load(const std::string& source, const Options& o, const char* what) {
  std::string src = source.empty() ? o.json_in : source;
  if (src.empty()) throw Usage(std::string("missing input: ") + what);
  if (src[0] == '{' || src[0] == '[' || src[0] == '"') return parse_json_text(src);
  return read_json_file(src);
}

MonomialOrder order_from_text(const std::string& s) {
  if (s.empty() || s == "grlex") return MonomialOrder::grlex();
  if (s == "lex") return MonomialOrder::lex();
  if (s.rfind("weights:", 0) == 0) return MonomialOrder::weighted(longs(s.substr(8), "order"));
  throw Usage("order must be grlex, lex or weights:w1,w2,...");
}

// One variable set for every expression: --vars, else names in order of appearance.
VarSet common_vars(const std::vector<std::string>& exprs, const std::string& vars) {
  if (!vars.empty()) return VarSet(split(vars, ','));
  std::vector<std::string> names;
  for (const auto& e : exprs) {
    const Polynomial p = parse_polynomial(e);
    for (const auto& n : p.vars().names())
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  return VarSet(names);
}

Substitution parse_map(const std::string& text, const VarSet& vars) {
  Substitution out;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Usage("map entries look like name=expression");
    out.emplace(split(item.substr(0, eq), ',')[0], parse_polynomial(item.substr(eq + 1), vars));
  }
  return out;
}

Json dims(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto d : v) out.push_back(num(static_cast<long>(d)));
  return out;
}

// --- poly ---------------------------------------------------------------

struct PolyArgs {
  std::string verb, vars, op, var, order, map, file;
  std::vector<std::string> exprs;
  long n = 2;
};

Json run_poly(const PolyArgs& a, const Options& o) {
  std::vector<std::string> exprs = a.exprs;
  if (!a.file.empty() || (exprs.empty() && !o.json_in.empty())) {
    Json j = load(a.file, o, "polynomial");
    for (const auto& p : j.is_array() ? j : Json::array({j})) exprs.push_back(polynomial_from_json(p).to_string());
  }
  auto need = [&](std::size_t k) {
    if (exprs.size() < k) throw Usage(a.verb + " needs " + std::to_string(k) + " expression(s) (-e)");
  };
  need(1);
  const VarSet vs = common_vars(exprs, a.vars);
  std::vector<Polynomial> ps;
  for (const auto& e : exprs) ps.push_back(parse_polynomial(e, vs));

  if (a.verb == "parse") return to_json(ps[0]);
  if (a.verb == "arith") {
    if (a.op == "pow") {
      if (a.n < 0) throw Usage("--n must be non-negative");
      return to_json(arith(ps[0], ps[0], ArithOp::Pow, static_cast<unsigned>(a.n)));
    }
    need(2);
    if (a.op == "add") return to_json(arith(ps[0], ps[1], ArithOp::Add));
    if (a.op == "sub") return to_json(arith(ps[0], ps[1], ArithOp::Sub));
    if (a.op == "mul") return to_json(arith(ps[0], ps[1], ArithOp::Mul));
    throw Usage("--op must be add, sub, mul or pow");
  }
  if (a.verb == "divide" || a.verb == "normal-form") {
    need(2);
    auto r = divide(ps[0], ps[1], order_from_text(a.order), o.budget);
    if (a.verb == "normal-form") return {{"normal_form", to_json(r.remainder)}};
    return {{"quotient", to_json(r.quotient)}, {"remainder", to_json(r.remainder)}};
  }
  if (a.verb == "diff") {
    if (a.var.empty()) throw Usage("diff needs --var");
    return to_json(partial_derivative(ps[0], a.var));
  }
  if (a.verb == "gcd") {
    need(2);
    return to_json(gcd(ps[0], ps[1]));
  }
  if (a.verb == "jacobian") return to_json(jacobian_det(ps));
  if (a.verb == "subst") {
    if (a.map.empty()) throw Usage("subst needs --map name=expr;...");
    std::vector<std::string> rhs;
    for (const auto& item : split(a.map, ';'))
      if (auto eq = item.find('='); eq != std::string::npos) rhs.push_back(item.substr(eq + 1));
    VarSet target = common_vars(rhs, "");
    auto images = parse_map(a.map, target);
    for (const auto& name : vs.names())
      if (!images.count(name)) images.emplace(name, target.contains(name) ? Polynomial::variable(target, name) : Polynomial(target));
    for (const auto& name : vs.names())
      if (!target.contains(name) && images.at(name).is_zero() && ps[0].involves(vs.require(name)))
        throw Error(ErrorCode::MissingImage, "no image for '" + name + "'");
    return to_json(substitute(ps[0], images, target));
  }
  throw Usage("unknown poly verb");
}

// --- grade --------------------------------------------------------------

struct GradeArgs {
  std::string verb, expr, vars, weights, file, ring;
};

Json degree_json(const Degree& d) { return to_json(d); }

Json run_grade(const GradeArgs& a, const Options& o) {
  std::optional<Ring> ring;
  if (!a.ring.empty()) ring = ring_from_json(a.ring.find('{') == 0 || a.ring.find(".json") != std::string::npos
                                                 ? load(a.ring, o, "ring")
                                                 : Json(a.ring),
                                             o.budget);
  WeightFunction w;
  if (!a.file.empty()) {
    w = weight_from_json(load(a.file, o, "weights"));
  } else if (!a.weights.empty()) {
    VarSet vs = !a.vars.empty() ? VarSet(split(a.vars, ','))
                : ring          ? ring->vars()
                                : common_vars({a.expr}, "");
    w = WeightFunction(vs, longs(a.weights, "weights"));
  } else if (ring && ring->is_quotient() && ring->quotient().is_russell()) {
    w = russell_weights();
  } else if (a.verb != "canonical") {
    throw Usage("grade needs --weights (or --file weights.json)");
  }
  auto poly = [&]() {
    if (a.expr.empty()) throw Usage("grade " + a.verb + " needs -e");
    return parse_polynomial(a.expr, ring ? ring->vars() : w.vars);
  };

  if (a.verb == "degree") {
    Polynomial f = poly();
    if (ring && ring->is_quotient()) {
      Filtration filt(ring->quotient(), w);
      return {{"degree", degree_json(filt.degree(f))}, {"canonical", to_json(ring->canonical(f))}, {"gr", to_json(filt.gr(f))}};
    }
    return {{"degree", degree_json(weight_degree(f, w))}};
  }
  if (a.verb == "decompose") {
    auto d = quasi_homogeneous_decompose(poly(), w);
    Json comps = Json::object();
    for (auto it = d.components.rbegin(); it != d.components.rend(); ++it) comps[std::to_string(it->first)] = it->second.to_string();
    return {{"components", comps}, {"top_degree", num(d.top_degree)}, {"principal", to_json(d.principal)}};
  }
  if (a.verb == "appropriate") {
    Polynomial p = a.expr.empty() && ring && ring->is_quotient() ? ring->quotient().relation() : poly();
    auto r = check_appropriate(p, w);
    return {{"status", std::string(to_string(r.status))}, {"reason", r.reason}, {"principal", to_json(r.principal)}};
  }
  if (a.verb == "graded") {
    Polynomial p = a.expr.empty() && ring && ring->is_quotient() ? ring->quotient().relation() : poly();
    auto g = associated_graded_hypersurface(p, w);
    return {{"relation", to_json(g.relation_top)}, {"weights", to_json(g.weight)}, {"status", std::string(to_string(g.status))},
            {"note", g.note}};
  }
  if (a.verb == "canonical") {
    if (!ring) ring = Ring(QuotientRing::russell(o.budget));
    if (!ring->is_quotient()) throw Usage("canonical needs a quotient ring (--ring A0)");
    Polynomial f = parse_polynomial(a.expr.empty() ? throw Usage("grade canonical needs -e") : a.expr, ring->vars());
    Json out{{"canonical", to_json(ring->canonical(f))}};
    if (ring->quotient().is_russell()) {
      auto d = canonical_form_decomposition(f, ring->quotient());
      out["decomposition"] = {{"a", d.a.to_string()}, {"b", d.b.to_string()}, {"c", d.c.to_string()}};
    }
    return out;
  }
  throw Usage("unknown grade verb");
}

// --- lnd ----------------------------------------------------------------

struct LndArgs {
  std::string verb, ring, map, expr, t, weights;
  std::vector<std::string> images;
  long bound = kDefaultNilpotencyBound, degree_bound = 3;
};

Ring ring_arg(const std::string& r, const Options& o) {
  if (r.empty()) throw Usage("missing --ring");
  const bool file = r[0] == '{' || r.find(".json") != std::string::npos;
  return ring_from_json(file ? load(r, o, "ring") : Json(r), o.budget);
}

std::vector<Derivation> derivations(const LndArgs& a, const Options& o) {
  std::optional<Ring> ring;
  if (!a.ring.empty()) ring = ring_arg(a.ring, o);
  std::vector<Derivation> out;
  if (!a.map.empty()) {
    if (!ring) throw Usage("--map needs --ring");
    out.emplace_back(*ring, parse_map(a.map, ring->vars()));
  }
  for (const auto& src : a.images) out.push_back(derivation_from_json(load(src, o, "images"), ring, o.budget));
  if (out.empty() && !o.json_in.empty()) out.push_back(derivation_from_json(load("", o, "images"), ring, o.budget));
  if (out.empty()) throw Usage("lnd needs --images or --map");
  return out;
}

Json run_lnd(const LndArgs& a, const Options& o) {
  auto ds = derivations(a, o);
  const auto bound = static_cast<unsigned>(std::max(1L, a.bound));
  const Derivation& d = ds[0];
  if (a.verb == "check") {
    auto c = nilpotency_test(d, bound);
    return {{"derivation", to_json(d)}, {"well_defined", true}, {"certificate", to_json(c, d.vars())}};
  }
  if (a.verb == "degree") {
    if (a.expr.empty()) throw Usage("lnd degree needs -e");
    CertifiedLnd c(d, bound);
    return {{"degree", to_json(partial_degree(c, parse_polynomial(a.expr, d.vars())))}};
  }
  if (a.verb == "flow") {
    CertifiedLnd c(d, bound);
    auto flow = exp_flow(c, d.vars().fresh_name("t"));
    const std::string param = flow.vars.names().back();
    Json images = Json::object();
    for (const auto& name : d.vars().names()) {
      Polynomial img = flow.images.at(name);
      if (!a.t.empty()) {
        Substitution at;
        for (const auto& n : d.vars().names()) at.emplace(n, Polynomial::variable(d.vars(), n));
        at.emplace(param, parse_polynomial(a.t, d.vars()));
        img = d.ring().canonical(substitute(img, at, d.vars()));
      }
      images[name] = to_json(img);
    }
    return {{"parameter", a.t.empty() ? Json(param) : Json(a.t)}, {"images", images}};
  }
  if (a.verb == "kernel") {
    CertifiedLnd c(d, bound);
    Json ker = Json::array();
    for (const auto& k : kernel_elements(c, static_cast<unsigned>(a.degree_bound))) ker.push_back(k.to_string());
    return {{"degree_bound", num(a.degree_bound)}, {"kernel", ker}};
  }
  if (a.verb == "graded") {
    WeightFunction w = a.weights.empty() ? russell_weights() : WeightFunction(d.vars(), longs(a.weights, "weights"));
    auto g = graded_derivation(d, w);
    Json out{{"shift", num(g.shift)}};
    out["graded"] = g.derivation ? to_json(*g.derivation) : Json(nullptr);
    return out;
  }
  if (a.verb == "invariants") {
    std::vector<CertifiedLnd> cs;
    for (const auto& x : ds) cs.emplace_back(x, bound);
    auto inv = invariant_candidates(cs, static_cast<unsigned>(a.degree_bound));
    Json ml = Json::array(), dk = Json::array();
    for (const auto& p : inv.ml_basis) ml.push_back(p.to_string());
    for (const auto& p : inv.dk_generators) dk.push_back(p.to_string());
    return {{"degree_bound", num(a.degree_bound)}, {"ml_basis", ml}, {"dk_generators", dk}, {"semantics", inv.semantics}};
  }
  throw Usage("unknown lnd verb");
}

// --- family -------------------------------------------------------------

struct FamilyArgs {
  std::string name, k, l, s, m, n, s1, s2, s3, expr, f, g;
  bool sweep = false;
};

using Params = std::vector<std::pair<std::string, long>>;

Json build_family(const FamilyArgs& a, const Params& p) {
  auto get = [&](const char* key) {
    for (const auto& [k, v] : p)
      if (k == key) return v;
    throw Usage(std::string("missing --") + key);
  };
  if (a.name == "tdp") return to_json(tdp(get("k"), get("l")));
  if (a.name == "tdp-general") return to_json(tdp_general(get("k"), get("l"), get("s"), get("m")));
  if (a.name == "koras-russell") return to_json(koras_russell(get("s1"), get("s2"), get("s3")));
  if (a.name == "brieskorn") return to_json(brieskorn(get("k"), get("l"), get("s")));
  if (a.name == "danielewski") return to_json(danielewski(get("n")));
  if (a.name == "ml-suspension") {
    if (a.expr.empty()) throw Usage("ml-suspension needs -e");
    return to_json(ml_suspension(parse_polynomial(a.expr)));
  }
  if (a.name == "sathaye-wright") {
    if (a.f.empty() || a.g.empty()) throw Usage("sathaye-wright needs --f and --g");
    VarSet vs = common_vars({a.f, a.g}, "");
    return to_json(sathaye_wright(parse_polynomial(a.f, vs), parse_polynomial(a.g, vs), get("n")));
  }
  if (a.name == "hyperbolic") {
    if (a.expr.empty()) throw Usage("hyperbolic needs -e");
    Polynomial h = parse_polynomial(a.expr);
    auto ids = hyperbolic_identities(h);
    return {{"h", to_json(h)},
            {"q", to_json(hyperbolic_modification(h))},
            {"identities", {{"euler", ids.euler}, {"partials", ids.partials}, {"quasi_invariant", ids.quasi_invariant}}}};
  }
  throw Usage("unknown family '" + a.name + "'");
}

Json run_family(const FamilyArgs& a) {
  std::vector<std::pair<std::string, std::string>> raw{{"k", a.k}, {"l", a.l}, {"s", a.s}, {"m", a.m}, {"n", a.n},
                                                       {"s1", a.s1}, {"s2", a.s2}, {"s3", a.s3}};
  // koras-russell --s 1,2,3 names the whole triple
  if (a.name == "koras-russell" && !a.s.empty() && !a.sweep) {
    auto t = longs(a.s, "s");
    if (t.size() != 3) throw Usage("--s takes s1,s2,s3");
    raw = {{"s1", std::to_string(t[0])}, {"s2", std::to_string(t[1])}, {"s3", std::to_string(t[2])}};
  }
  std::vector<Params> grid{{}};
  for (const auto& [key, text] : raw) {
    if (text.empty()) continue;
    std::vector<long> values = a.sweep ? value_range(text, key.c_str()) : std::vector<long>{to_long(text, key.c_str())};
    std::vector<Params> next;
    for (const auto& base : grid)
      for (long v : values) {
        Params p = base;
        p.emplace_back(key, v);
        next.push_back(std::move(p));
      }
    grid = std::move(next);
  }
  if (!a.sweep) return build_family(a, grid[0]);

  std::vector<std::future<Json>> jobs;
  for (const auto& p : grid)
    jobs.push_back(std::async(std::launch::async, [&a, p]() -> Json {
      Json params = Json::object();
      for (const auto& [k, v] : p) params[k] = num(v);
      try {
        return {{"params", params}, {"result", build_family(a, p)}};
      } catch (const Error& e) {
        return {{"params", params}, {"error", {{"code", std::string(to_string(e.code()))}, {"detail", e.detail()}}}};
      }
    }));
  Json out = Json::array();
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// --- graph --------------------------------------------------------------

struct GraphArgs {
  std::string verb, file, vertex, edge, params, h, m, n, m1, n1, m2, n2;
};

Json graph_or_dot(const WeightedGraph& g, const Options& o, Json extra = Json::object()) {
  if (o.dot) return Json(to_dot(g));
  Json out{{"graph", to_json(g)}};
  for (auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

Json run_graph(const GraphArgs& a, const Options& o) {
  auto graph = [&]() { return graph_from_json(load(a.file, o, "graph (--file)")); };
  if (a.verb == "blowup") {
    Site site;
    if (!a.edge.empty()) {
      auto ends = split(a.edge, ',');
      if (ends.size() != 2) throw Usage("--edge takes a,b");
      site = {ends[0], ends[1]};
    } else if (!a.vertex.empty()) {
      site = {a.vertex, std::nullopt};
    } else {
      throw Usage("blowup needs --vertex or --edge");
    }
    auto r = blow_up(graph(), site);
    return graph_or_dot(r.graph, o, {{"new_vertex", r.new_vertex}});
  }
  if (a.verb == "contract") {
    if (a.vertex.empty()) throw Usage("contract needs --vertex");
    return graph_or_dot(contract(graph(), a.vertex), o);
  }
  if (a.verb == "minimal") {
    auto r = minimalize(graph());
    return graph_or_dot(r.graph, o, {{"contracted", r.log}});
  }
  if (a.verb == "ramanujam") return {{"verdict", std::string(to_string(ramanujam_verdict(graph())))}};
  if (a.verb == "chain") {
    auto r = resolution_chain(require_long(a.m, "m"), require_long(a.n, "n"));
    Json mult = Json::object();
    for (const auto& id : r.chain) mult[id] = {num(r.multiplicities.at(id).first), num(r.multiplicities.at(id).second)};
    return graph_or_dot(r.graph, o, {{"chain", r.chain}, {"multiplicities", mult}, {"det", num(r.det)}});
  }
  if (a.verb == "det") {
    auto m = intersection_matrix(graph());
    return {{"basis", m.basis}, {"matrix", to_json(m.entries)}, {"det", num(m.det)}};
  }
  if (a.verb == "xt") {
    ZMatrix t = !a.params.empty() ? XtParams::from_list(longs(a.params, "params")).to_matrix() : zmatrix_from_json(load(a.file, o, "matrix"));
    auto c = xt_certificate(t);
    return {{"matrix", to_json(t)}, {"det", num(c.det)}, {"acyclic", c.acyclic}};
  }
  if (a.verb == "tdp") {
    return {{"contractible", tdp_contractibility(require_long(a.m1, "m1"), require_long(a.n1, "n1"), require_long(a.m2, "m2"),
                                                 require_long(a.n2, "n2"))}};
  }
  if (a.verb == "ample") {
    Json j = load(a.file, o, "matrix or graph");
    ZMatrix q = j.is_object() ? intersection_matrix(graph_from_json(j)).entries : zmatrix_from_json(j);
    if (a.h.empty()) throw Usage("ample needs --seed-vector");
    std::vector<BigInt> h;
    for (long v : longs(a.h, "h")) h.emplace_back(v);
    auto r = ample_support_divisor(q, h);
    if (!r) return {{"result", "Infeasible"}};
    Json v = Json::array();
    for (const auto& x : *r) v.push_back(num(x));
    return {{"result", "Feasible"}, {"divisor", v}};
  }
  if (a.verb == "dot") return Json(to_dot(graph()));
  throw Usage("unknown graph verb");
}

// --- group --------------------------------------------------------------

struct GroupArgs {
  std::string verb, file, name, k, l, s, n, params;
};

Json run_group(const GroupArgs& a, const Options& o) {
  if (a.verb == "abel") {
    auto p = presentation_from_json(load(a.file, o, "presentation (--file)"));
    return {{"presentation", to_json(p)}, {"abelianization", to_json(abelianization(p))}};
  }
  if (a.verb == "snf") {
    ZMatrix m = zmatrix_from_json(load(a.file, o, "matrix (--file)"));
    auto f = smith_normal_form(m);
    return {{"u", to_json(f.u)}, {"s", to_json(f.s)}, {"v", to_json(f.v)}, {"rank", num(static_cast<long>(f.rank))},
            {"cokernel", to_json(cokernel(m))}};
  }
  if (a.verb == "named") {
    Presentation p;
    const auto& n = a.name;
    if (n == "free") p = free_group(static_cast<std::size_t>(require_long(a.n, "n")));
    else if (n == "b3") p = braid_group_b3();
    else if (n == "bkl") p = bkl(require_long(a.k, "k"), require_long(a.l, "l"));
    else if (n == "bkls") p = bkls(require_long(a.k, "k"), require_long(a.l, "l"), require_long(a.s, "s"));
    else if (n == "gkls") p = gkls(require_long(a.k, "k"), require_long(a.l, "l"), require_long(a.s, "s"));
    else if (n == "tkls") p = tkls(require_long(a.k, "k"), require_long(a.l, "l"), require_long(a.s, "s"));
    else if (n == "b3quot") p = b3quot(require_long(a.s, "s"));
    else if (n == "xt") {
      if (a.params.empty()) throw Usage("named xt needs --params");
      p = xt_quot(XtParams::from_list(longs(a.params, "params")));
    } else {
      throw Usage("--name must be one of free, b3, bkl, bkls, gkls, tkls, b3quot, xt");
    }
    return {{"presentation", to_json(p)}, {"abelianization", to_json(abelianization(p))}};
  }
  if (a.verb == "triangle")
    return Json(std::string(to_string(triangle_classification(require_long(a.k, "k"), require_long(a.l, "l"), require_long(a.s, "s")))));
  if (a.verb == "sphere")
    return {{"homology_sphere", homology_sphere_check(require_long(a.k, "k"), require_long(a.l, "l"), require_long(a.s, "s"))}};
  if (a.verb == "xt") {
    if (a.params.empty()) throw Usage("xt needs --params m00,n00,m10,n10,m01,n01,m11,n11");
    auto t = XtParams::from_list(longs(a.params, "params"));
    return {{"exponent", num(xt_exponent(t))}, {"det", num(determinant(t.to_matrix()))}};
  }
  if (a.verb == "bezout") {
    auto b = bezout_alpha(require_long(a.k, "k"), require_long(a.l, "l"));
    Presentation ab{{"a", "b"}, {}};
    return {{"p", num(b.p)}, {"q", num(b.q)}, {"alpha", ab.word_to_string(b.alpha)}};
  }
  throw Usage("unknown group verb");
}

// --- smith --------------------------------------------------------------

struct SmithArgs {
  std::string verb, complex, action, example;
  long p = 3, q = 2, coeff = 0, times = 1;
};

struct Instance {
  SimplicialComplex k;
  std::optional<CyclicAction> g;
};

Instance smith_instance(const SmithArgs& a, const Options& o, bool need_action) {
  if (!a.example.empty()) {
    const auto p = static_cast<unsigned>(a.p);
    ActionExample ex = a.example == "disc"       ? disc_example(p)
                       : a.example == "sphere"   ? sphere_example(p)
                       : a.example == "circle"   ? free_circle_example(p)
                       : a.example == "triangle" ? filled_triangle_example()
                                                 : throw Usage("--example must be disc, sphere, circle or triangle");
    return {ex.complex, ex.action};
  }
  Json cj = load(a.complex, o, "complex (--complex)");
  Instance in{complex_from_json(cj), std::nullopt};
  if (!a.action.empty()) in.g = action_from_json(load(a.action, o, "action"), in.k);
  else if (cj.contains("action")) in.g = action_from_json(cj.at("action"), in.k);
  if (need_action && !in.g) throw Usage("smith " + a.verb + " needs --action");
  return in;
}

Json run_smith(const SmithArgs& a, const Options& o) {
  if (a.verb == "homology") {
    auto in = smith_instance(a, o, false);
    auto c = chain_complex(in.k);
    Json out{{"complex", to_json(in.k)}};
    if (a.coeff == 0) {
      Json hs = Json::array();
      for (const auto& h : homology(c)) hs.push_back(to_json(h));
      out["coefficients"] = "Z";
      out["homology"] = hs;
    } else {
      if (!is_prime(a.coeff)) throw Error(ErrorCode::NotPrime, std::to_string(a.coeff) + " is not prime");
      out["coefficients"] = "Z/" + std::to_string(a.coeff);
      out["homology"] = dims(homology(reduce_mod(c, a.coeff)));
    }
    return out;
  }
  auto in = smith_instance(a, o, true);
  const CyclicAction& g = *in.g;
  if (a.verb == "orbit") return to_json(orbit_complex(in.k, g), in.k);
  if (a.verb == "transfer") return to_json(transfer_check(in.k, g, a.q));
  if (a.verb == "sequences") return to_json(verify_smith_sequences(in.k, g));
  if (a.verb == "subdivide") {
    SimplicialComplex k = in.k;
    CyclicAction act = g;
    for (long i = 0; i < a.times; ++i) {
      auto s = barycentric_subdivide(k, act);
      k = std::move(s.complex);
      act = std::move(s.action);
    }
    auto why = regularity_violation(k, act);
    Json out{{"complex", to_json(k)}, {"action", to_json(act, k)}, {"regular", !why.has_value()}};
    if (why) out["violation"] = *why;
    return out;
  }
  throw Usage("unknown smith verb");
}

// --- repro --------------------------------------------------------------

Json scenario_json(const Scenario& s, const ScenarioResult& r) {
  Json j{{"id", num(static_cast<long>(s.id))}, {"name", s.name}, {"title", s.title}, {"passed", r.passed}, {"checks", r.checks}};
  if (!s.known_issue.empty()) j["known_issue"] = s.known_issue;
  return j;
}

Json run_repro(const std::string& name, std::uint64_t seed, const Options& o) {
  if (name == "list") {
    Json out = Json::array();
    for (const auto& s : scenarios()) out.push_back({{"id", num(static_cast<long>(s.id))}, {"name", s.name}, {"title", s.title}});
    return out;
  }
  std::vector<const Scenario*> chosen;
  if (name == "all") {
    for (const auto& s : scenarios()) chosen.push_back(&s);
  } else if (const Scenario* s = find_scenario(name)) {
    chosen.push_back(s);
  } else {
    throw Usage("unknown scenario '" + name + "' (try `repro list`)");
  }
  std::vector<std::future<ScenarioResult>> jobs;
  for (const Scenario* s : chosen) jobs.push_back(std::async(std::launch::async, [s, seed] { return run_scenario(*s, seed); }));
  Json out = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    auto r = jobs[i].get();
    all = all && r.passed;
    if (o.verbose) std::cerr << "scenario " << r.id << " " << r.name << ": " << r.millis << " ms\n";
    out.push_back(scenario_json(*chosen[i], r));
  }
  if (chosen.size() == 1) return out[0];
  return {{"seed", std::to_string(seed)}, {"all_passed", all}, {"scenarios", out}};
}

// DOT text is written verbatim, everything else as indented JSON.
void emit(const Json& out, const Options& o, bool raw) {
  const std::string text = raw ? out.get<std::string>() : out.dump(2) + "\n";
  if (o.json_out.empty() || o.json_out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.json_out);
  if (!f) throw Error(ErrorCode::InvalidFormat, "cannot write '" + o.json_out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exotic: exact computations around exotic affine spaces"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("-v,--verbose", o.verbose, "timing and run details on stderr");
  app.add_flag("--dot", o.dot, "emit DOT instead of JSON for graph results");
  app.add_flag("--record", o.record, "wrap the output in a run record");
  app.add_option("--json-in", o.json_in, "default input document (file, inline JSON, or - for stdin)");
  app.add_option("--json-out", o.json_out, "write the output here instead of stdout");

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "polynomial arithmetic");
  poly->add_option("verb", pa.verb)->required()->check(CLI::IsMember({"parse", "arith", "divide", "normal-form", "diff", "gcd", "jacobian", "subst"}));
  poly->add_option("-e,--expr", pa.exprs, "polynomial in human syntax (repeatable)");
  poly->add_option("--vars", pa.vars, "comma-separated variable order");
  poly->add_option("--op", pa.op, "add, sub, mul or pow");
  poly->add_option("--n", pa.n, "exponent for pow");
  poly->add_option("--var", pa.var, "variable for diff");
  poly->add_option("--order", pa.order, "grlex, lex or weights:w1,w2,...");
  poly->add_option("--map", pa.map, "images for subst: x=expr;y=expr");
  poly->add_option("--file", pa.file, "JSON polynomial or list of them");

  GradeArgs ga;
  auto* grade = app.add_subcommand("grade", "weight degrees and graded rings");
  grade->add_option("verb", ga.verb)->required()->check(CLI::IsMember({"degree", "decompose", "appropriate", "graded", "canonical"}));
  grade->add_option("-e,--expr", ga.expr, "polynomial");
  grade->add_option("--vars", ga.vars, "comma-separated variables for --weights");
  grade->add_option("--weights", ga.weights, "comma-separated integer weights");
  grade->add_option("--file", ga.file, "weight function JSON");
  grade->add_option("--ring", ga.ring, "A0, C<n> or a ring JSON file");

  LndArgs la;
  auto* lnd = app.add_subcommand("lnd", "locally nilpotent derivations");
  lnd->add_option("verb", la.verb)->required()->check(CLI::IsMember({"check", "degree", "flow", "kernel", "graded", "invariants"}));
  lnd->add_option("--ring", la.ring, "A0, C<n> or a ring JSON file");
  lnd->add_option("--images", la.images, "derivation JSON file or inline JSON (repeatable)");
  lnd->add_option("--map", la.map, "inline images: x=expr;y=expr");
  lnd->add_option("-e,--expr", la.expr, "element for degree");
  lnd->add_option("--t", la.t, "evaluate the flow at this parameter value");
  lnd->add_option("--bound", la.bound, "iteration bound for nilpotency");
  lnd->add_option("--degree-bound", la.degree_bound, "total-degree truncation for kernels");
  lnd->add_option("--weights", la.weights, "weights for graded (default: Russell weights)");

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "polynomial families");
  family->add_option("name", fa.name)->required()->check(CLI::IsMember(
      {"tdp", "tdp-general", "koras-russell", "brieskorn", "danielewski", "ml-suspension", "sathaye-wright", "hyperbolic"}));
  for (auto [flag, dest] : std::vector<std::pair<const char*, std::string*>>{
           {"--k", &fa.k}, {"--l", &fa.l}, {"--s", &fa.s}, {"--m", &fa.m}, {"--n", &fa.n}, {"--s1", &fa.s1}, {"--s2", &fa.s2}, {"--s3", &fa.s3}})
    family->add_option(flag, *dest, "integer parameter (a..b or a,b,c with --sweep)");
  family->add_option("-e,--expr", fa.expr, "polynomial argument");
  family->add_option("--f", fa.f, "f for sathaye-wright");
  family->add_option("--g", fa.g, "g for sathaye-wright");
  family->add_flag("--sweep", fa.sweep, "expand ranges into a parameter grid, built concurrently");

  GraphArgs gra;
  auto* graph = app.add_subcommand("graph", "weighted dual graphs");
  graph->add_option("verb", gra.verb)->required()->check(CLI::IsMember({"blowup", "contract", "minimal", "ramanujam", "chain", "det", "xt", "tdp", "ample", "dot"}));
  graph->add_option("--file", gra.file, "graph JSON (matrix JSON for xt/ample)");
  graph->add_option("--vertex", gra.vertex, "vertex id");
  graph->add_option("--edge", gra.edge, "edge a,b");
  graph->add_option("--params", gra.params, "m00,n00,m10,n10,m01,n01,m11,n11");
  graph->add_option("--seed-vector", gra.h, "seed vector h for ample");
  for (auto [flag, dest] : std::vector<std::pair<const char*, std::string*>>{
           {"--m", &gra.m}, {"--n", &gra.n}, {"--m1", &gra.m1}, {"--n1", &gra.n1}, {"--m2", &gra.m2}, {"--n2", &gra.n2}})
    graph->add_option(flag, *dest, "integer parameter");

  GroupArgs gpa;
  auto* group = app.add_subcommand("group", "finitely presented groups");
  group->add_option("verb", gpa.verb)->required()->check(CLI::IsMember({"abel", "snf", "named", "triangle", "sphere", "xt", "bezout"}));
  group->add_option("--file", gpa.file, "presentation or matrix JSON");
  group->add_option("--name", gpa.name, "free, b3, bkl, bkls, gkls, tkls, b3quot, xt");
  group->add_option("--params", gpa.params, "m00,n00,m10,n10,m01,n01,m11,n11");
  for (auto [flag, dest] : std::vector<std::pair<const char*, std::string*>>{{"--k", &gpa.k}, {"--l", &gpa.l}, {"--s", &gpa.s}, {"--n", &gpa.n}})
    group->add_option(flag, *dest, "integer parameter");

  SmithArgs sa;
  auto* smith = app.add_subcommand("smith", "simplicial complexes with cyclic actions");
  smith->add_option("verb", sa.verb)->required()->check(CLI::IsMember({"homology", "orbit", "transfer", "sequences", "subdivide"}));
  smith->add_option("--complex", sa.complex, "complex JSON");
  smith->add_option("--action", sa.action, "action JSON");
  smith->add_option("--example", sa.example, "disc, sphere, circle or triangle");
  smith->add_option("--p", sa.p, "order for --example");
  smith->add_option("--q", sa.q, "prime for transfer");
  smith->add_option("--coeff", sa.coeff, "0 for Z, else a prime");
  smith->add_option("--times", sa.times, "number of subdivisions");

  std::string scenario;
  std::uint64_t seed = kDefaultSeed;
  auto* repro = app.add_subcommand("repro", "run acceptance scenarios");
  repro->add_option("name", scenario, "scenario name or number, all, or list")->required();
  repro->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  try {
    o.budget = budget_from_env();
    Json out;
    if (poly->parsed()) command = "poly " + pa.verb, out = run_poly(pa, o);
    else if (grade->parsed()) command = "grade " + ga.verb, out = run_grade(ga, o);
    else if (lnd->parsed()) command = "lnd " + la.verb, out = run_lnd(la, o);
    else if (family->parsed()) command = "family " + fa.name, out = run_family(fa);
    else if (graph->parsed()) command = "graph " + gra.verb, out = run_graph(gra, o);
    else if (group->parsed()) command = "group " + gpa.verb, out = run_group(gpa, o);
    else if (smith->parsed()) command = "smith " + sa.verb, out = run_smith(sa, o);
    else command = "repro " + scenario, out = run_repro(scenario, seed, o);

    const bool raw = out.is_string() && (o.dot || (graph->parsed() && gra.verb == "dot"));
    if (o.record && !raw) {
      std::vector<std::string> args(argv + 1, argv + argc);
      out = Json{{"command", command}, {"parameters", args}, {"outputs", out}, {"notes", Json::array()}};
    }
    emit(out, o, raw);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run with --help for the grammar\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}}.dump() << "\n";
    return 1;
  }
  if (o.verbose) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cerr << command << ": " << ms << " ms\n";
  }
  return 0;
}
