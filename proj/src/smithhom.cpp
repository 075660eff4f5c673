#include "exotic/smithhom.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "exotic/dualgraph.hpp"

namespace exotic {

// --- complexes ----------------------------------------------------------

SimplicialComplex SimplicialComplex::generated_by(const std::vector<std::vector<std::string>>& simplices) {
  SimplicialComplex k;
  std::set<std::string, NaturalLess> names;
  for (const auto& s : simplices) {
    if (s.empty()) throw Error(ErrorCode::InvalidFormat, "empty simplex");
    names.insert(s.begin(), s.end());
  }
  k.names_.assign(names.begin(), names.end());

  std::vector<std::set<Simplex>> cells;
  for (const auto& s : simplices) {
    Simplex idx;
    for (const auto& n : s) idx.push_back(k.vertex_index(n));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw Error(ErrorCode::InvalidFormat, "repeated vertex in a simplex");
    if (idx.size() > 24) throw Error(ErrorCode::InvalidParams, "simplex dimension too large");
    if (cells.size() < idx.size()) cells.resize(idx.size());
    for (std::uint32_t mask = 1; mask < (1u << idx.size()); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (mask & (1u << i)) face.push_back(idx[i]);
      cells[face.size() - 1].insert(face);
    }
  }
  for (const auto& level : cells) {
    k.cells_.emplace_back(level.begin(), level.end());
    auto& index = k.index_.emplace_back();
    for (std::size_t i = 0; i < k.cells_.back().size(); ++i) index.emplace(k.cells_.back()[i], i);
  }
  return k;
}

std::size_t SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name, NaturalLess{});
  if (it == names_.end() || *it != name) throw Error(ErrorCode::InvalidParams, "unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  auto it = index_[s.size() - 1].find(s);
  if (it == index_[s.size() - 1].end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> SimplicialComplex::names_of(const Simplex& s) const {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(names_.at(v));
  return out;
}

ZMatrix SimplicialComplex::boundary(std::size_t k) const {
  if (k == 0) return ZMatrix(0, count(0));
  ZMatrix d(count(k - 1), count(k));
  for (std::size_t j = 0; j < count(k); ++j) {
    const auto& s = cells_[k][j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      d(*index_of(face), j) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

// --- actions ------------------------------------------------------------

namespace {

std::string simplex_string(const SimplicialComplex& k, const SimplicialComplex::Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + k.vertex_names()[s[i]];
  return out + "}";
}

// Parity of the permutation sorting w.
int sort_sign(const std::vector<std::size_t>& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) sign = -sign;
  return sign;
}

}  // namespace

CyclicAction::CyclicAction(const SimplicialComplex& k, unsigned order, const std::map<std::string, std::string>& perm)
    : order_(order) {
  if (order == 0) throw Error(ErrorCode::InvalidParams, "action order must be positive");
  const std::size_t n = k.vertex_names().size();
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  for (const auto& [from, to] : perm) perm_[k.vertex_index(from)] = k.vertex_index(to);

  std::vector<bool> hit(n, false);
  for (auto v : perm_) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw Error(ErrorCode::InvalidParams, "vertex map is not a bijection");
  for (std::size_t v = 0; v < n; ++v)
    if (image(v, order) != v) throw Error(ErrorCode::InvalidParams, "generator^order is not the identity");
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(static_cast<std::size_t>(d))) {
      SimplicialComplex::Simplex w;
      for (auto v : s) w.push_back(perm_[v]);
      std::sort(w.begin(), w.end());
      if (!k.index_of(w)) throw Error(ErrorCode::InvalidParams, "map is not simplicial at " + simplex_string(k, s));
    }
}

CyclicAction CyclicAction::trivial(const SimplicialComplex& k, unsigned order) { return CyclicAction(k, order, {}); }

std::size_t CyclicAction::image(std::size_t v, unsigned power) const {
  for (unsigned i = 0; i < power % order_; ++i) v = perm_.at(v);
  return v;
}

std::pair<std::size_t, int> CyclicAction::apply(const SimplicialComplex& k, std::size_t dim, std::size_t i,
                                                unsigned power) const {
  std::vector<std::size_t> w;
  for (auto v : k.simplices(dim).at(i)) w.push_back(image(v, power));
  int sign = sort_sign(w);
  std::sort(w.begin(), w.end());
  return {*k.index_of(w), sign};
}

ZMatrix CyclicAction::chain_map(const SimplicialComplex& k, std::size_t dim, unsigned power) const {
  ZMatrix m(k.count(dim), k.count(dim));
  for (std::size_t i = 0; i < k.count(dim); ++i) {
    auto [j, sign] = apply(k, dim, i, power);
    m(j, i) = sign;
  }
  return m;
}

bool CyclicAction::fixes_pointwise(const SimplicialComplex::Simplex& s, unsigned power) const {
  return std::all_of(s.begin(), s.end(), [&](std::size_t v) { return image(v, power) == v; });
}

std::optional<std::string> regularity_violation(const SimplicialComplex& k, const CyclicAction& g) {
  for (unsigned p = 1; p < g.order(); ++p) {
    for (int d = 0; d <= k.dimension(); ++d)
      for (std::size_t i = 0; i < k.count(static_cast<std::size_t>(d)); ++i) {
        const auto& s = k.simplices(static_cast<std::size_t>(d))[i];
        if (g.apply(k, static_cast<std::size_t>(d), i, p).first == i && !g.fixes_pointwise(s, p))
          return "simplex " + simplex_string(k, s) + " is stabilized by g^" + std::to_string(p) +
                 " without being fixed pointwise";
      }
    for (std::size_t v = 0; v < k.vertex_names().size(); ++v)
      if ((g.image(v, p) == v) != (g.image(v, 1) == v))
        return "fixed set of g^" + std::to_string(p) + " differs from that of g at " + k.vertex_names()[v];
  }
  return std::nullopt;
}

namespace {

void require_regular(const SimplicialComplex& k, const CyclicAction& g) {
  if (auto why = regularity_violation(k, g)) throw Error(ErrorCode::NotRegular, *why);
}

}  // namespace

// --- chain complexes and homology ---------------------------------------

void IntegerChainComplex::validate() const {
  for (std::size_t k = 1; k < d.size(); ++k) {
    auto dd = multiply(d[k - 1], d[k]);
    for (std::size_t r = 0; r < dd.rows(); ++r)
      for (std::size_t c = 0; c < dd.cols(); ++c)
        if (dd(r, c) != 0) throw Error(ErrorCode::NotAComplex, "boundary squared is nonzero in degree " + std::to_string(k));
  }
}

void ModChainComplex::validate() const {
  for (std::size_t k = 1; k < d.size(); ++k)
    if (!(d[k - 1] * d[k]).is_zero())
      throw Error(ErrorCode::NotAComplex, "boundary squared is nonzero in degree " + std::to_string(k));
}

IntegerChainComplex chain_complex(const SimplicialComplex& k) {
  IntegerChainComplex c;
  for (int d = 0; d <= k.dimension(); ++d) c.d.push_back(k.boundary(static_cast<std::size_t>(d)));
  c.validate();
  return c;
}

ModChainComplex reduce_mod(const IntegerChainComplex& c, std::int64_t p) {
  ModChainComplex m;
  m.p = p;
  for (const auto& d : c.d) m.d.push_back(ModMatrix::from_integers(d, p));
  return m;
}

std::vector<AbelianGroup> homology(const IntegerChainComplex& c) {
  c.validate();
  std::vector<SmithForm> snf;
  for (const auto& d : c.d) snf.push_back(smith_normal_form(d));
  std::vector<AbelianGroup> out;
  for (std::size_t k = 0; k < c.d.size(); ++k) {
    AbelianGroup h;
    std::size_t next_rank = k + 1 < c.d.size() ? snf[k + 1].rank : 0;
    h.free_rank = c.rank(k) - snf[k].rank - next_rank;
    if (k + 1 < c.d.size())
      for (std::size_t i = 0; i < next_rank; ++i)
        if (snf[k + 1].s(i, i) > 1) h.torsion.push_back(snf[k + 1].s(i, i));
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::size_t> homology(const ModChainComplex& c) {
  c.validate();
  std::vector<std::size_t> ranks;
  for (const auto& d : c.d) ranks.push_back(d.rank());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.d.size(); ++k)
    out.push_back(c.rank(k) - ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0));
  return out;
}

// --- subdivision --------------------------------------------------------

namespace {

std::string barycenter_name(const SimplicialComplex& k, const SimplicialComplex::Simplex& s) {
  if (s.size() == 1) return k.vertex_names()[s[0]];
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + k.vertex_names()[s[i]];
  return out + ")";
}

}  // namespace

Subdivision barycentric_subdivide(const SimplicialComplex& k, const CyclicAction& g) {
  std::vector<std::vector<std::string>> chains;
  std::function<void(std::vector<std::string>&, const SimplicialComplex::Simplex&)> descend =
      [&](std::vector<std::string>& chain, const SimplicialComplex::Simplex& top) {
        chains.push_back(chain);
        const std::size_t n = top.size();
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
          SimplicialComplex::Simplex face;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(top[i]);
          chain.push_back(barycenter_name(k, face));
          descend(chain, face);
          chain.pop_back();
        }
      };
  // Chains starting at a maximal simplex suffice; the closure adds the rest.
  for (int d = k.dimension(); d >= 0; --d)
    for (const auto& s : k.simplices(static_cast<std::size_t>(d))) {
      bool maximal = true;
      if (d < k.dimension())
        for (const auto& t : k.simplices(static_cast<std::size_t>(d + 1)))
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
      if (!maximal) continue;
      std::vector<std::string> chain{barycenter_name(k, s)};
      descend(chain, s);
    }
  auto sub = SimplicialComplex::generated_by(chains);

  std::map<std::string, std::string> perm;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(static_cast<std::size_t>(d)); ++i) {
      auto j = g.apply(k, static_cast<std::size_t>(d), i).first;
      perm[barycenter_name(k, k.simplices(static_cast<std::size_t>(d))[i])] =
          barycenter_name(k, k.simplices(static_cast<std::size_t>(d))[j]);
    }
  CyclicAction action(sub, g.order(), perm);
  return {std::move(sub), std::move(action)};
}

// --- sigma, tau and special homology ------------------------------------

namespace {

ModMatrix power_of(const ModMatrix& m, unsigned e) {
  ModMatrix out = ModMatrix::identity(m.rows(), m.modulus());
  for (unsigned i = 0; i < e; ++i) out = out * m;
  return out;
}

std::vector<ModMatrix> unit_columns(std::size_t n, const std::vector<std::size_t>& which, std::int64_t p) {
  ModMatrix m(n, which.size(), p);
  for (std::size_t c = 0; c < which.size(); ++c) m.set(which[c], c, 1);
  return {m};
}

// Homology of a subcomplex of an ambient complex, with representatives.
struct SubHomology {
  std::int64_t p = 2;
  std::vector<ModMatrix> reps, bounds;
  std::vector<std::size_t> dims;

  // Coordinates of cycles (columns of v) in the basis reps[k].
  ModMatrix coords(std::size_t k, const ModMatrix& v) const {
    ModMatrix out(dims[k], v.cols(), p);
    if (dims[k] == 0) return out;
    ModMatrix x = ModMatrix::hstack(reps[k], bounds[k]).solve(v);
    for (std::size_t r = 0; r < dims[k]; ++r)
      for (std::size_t c = 0; c < v.cols(); ++c) out.set(r, c, x(r, c));
    return out;
  }
};

SubHomology sub_homology(const ModChainComplex& amb, const SubComplex& s) {
  SubHomology h;
  h.p = amb.p;
  const std::size_t top = amb.d.size();
  for (std::size_t k = 0; k < top; ++k) {
    const ModMatrix& b = s.basis[k];
    ModMatrix cycles = b * (amb.d[k] * b).nullspace();
    ModMatrix bd = k + 1 < top ? (amb.d[k + 1] * s.basis[k + 1]).column_basis() : ModMatrix(b.rows(), 0, amb.p);
    ModMatrix both = ModMatrix::hstack(bd, cycles);
    auto pivots = both.rref_in_place();
    ModMatrix reps(b.rows(), 0, amb.p);
    for (auto c : pivots)
      if (c >= bd.cols()) reps = ModMatrix::hstack(reps, cycles.columns(c - bd.cols(), c - bd.cols() + 1));
    h.dims.push_back(reps.cols());
    h.reps.push_back(std::move(reps));
    h.bounds.push_back(std::move(bd));
  }
  return h;
}

SubComplex full_subcomplex(const ModChainComplex& amb) {
  SubComplex s;
  for (std::size_t k = 0; k < amb.d.size(); ++k) s.basis.push_back(ModMatrix::identity(amb.rank(k), amb.p));
  return s;
}

SubComplex image_subcomplex(const std::vector<ModMatrix>& maps) {
  SubComplex s;
  for (const auto& m : maps) s.basis.push_back(m.column_basis());
  return s;
}

SubComplex fixed_subcomplex(const SimplicialComplex& k, const CyclicAction& g, std::int64_t p) {
  SubComplex s;
  for (int d = 0; d <= k.dimension(); ++d) {
    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < k.count(static_cast<std::size_t>(d)); ++i)
      if (g.fixes_pointwise(k.simplices(static_cast<std::size_t>(d))[i])) fixed.push_back(i);
    s.basis.push_back(unit_columns(k.count(static_cast<std::size_t>(d)), fixed, p)[0]);
  }
  return s;
}

bool reduced_acyclic(const std::vector<std::size_t>& dims) {
  if (dims.empty() || dims[0] != 1) return false;  // the empty space is not acyclic
  return std::all_of(dims.begin() + 1, dims.end(), [](std::size_t d) { return d == 0; });
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

SmithOperators smith_operators(const SimplicialComplex& k, const CyclicAction& g) {
  const auto p = static_cast<std::int64_t>(g.order());
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "action order " + std::to_string(p) + " is not prime");
  require_regular(k, g);
  SmithOperators ops;
  ops.p = p;
  ops.sigma_tau_zero = ops.sigma_is_tau_power = true;
  for (int d = 0; d <= k.dimension(); ++d) {
    ModMatrix t = ModMatrix::from_integers(g.chain_map(k, static_cast<std::size_t>(d)), p);
    const std::size_t n = t.rows();
    ModMatrix sigma(n, n, p), ti = ModMatrix::identity(n, p);
    for (std::int64_t i = 0; i < p; ++i) {
      sigma = sigma + ti;
      ti = ti * t;
    }
    ModMatrix tau = ModMatrix::identity(n, p) - t;
    if (!(sigma * tau).is_zero() || !(tau * sigma).is_zero()) ops.sigma_tau_zero = false;
    if (!(power_of(tau, static_cast<unsigned>(p - 1)) == sigma)) ops.sigma_is_tau_power = false;
    ops.t.push_back(std::move(t));
    ops.sigma.push_back(std::move(sigma));
    ops.tau.push_back(std::move(tau));
  }
  return ops;
}

std::vector<std::size_t> special_smith_homology(const SimplicialComplex& k, const CyclicAction& g, unsigned tau_power) {
  auto ops = smith_operators(k, g);
  auto amb = reduce_mod(chain_complex(k), ops.p);
  std::vector<ModMatrix> rho;
  for (const auto& tau : ops.tau) rho.push_back(power_of(tau, tau_power));
  return sub_homology(amb, image_subcomplex(rho)).dims;
}

// --- orbit complex and transfer -----------------------------------------

OrbitComplex orbit_complex(const SimplicialComplex& k, const CyclicAction& g) {
  require_regular(k, g);
  OrbitComplex x;
  std::vector<std::vector<int>> sign;
  for (int di = 0; di <= k.dimension(); ++di) {
    const auto d = static_cast<std::size_t>(di);
    const std::size_t n = k.count(d);
    const std::size_t unset = n;
    auto& reps = x.reps.emplace_back();
    auto& cell = x.cell_of.emplace_back(n, unset);
    auto& sg = sign.emplace_back(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (cell[i] != unset) continue;
      const std::size_t c = reps.size();
      reps.push_back(i);
      for (unsigned pw = 0; pw < g.order(); ++pw) {
        auto [j, s] = g.apply(k, d, i, pw);
        if (cell[j] != unset && sg[j] != s)
          throw Error(ErrorCode::NotRegular, "orientation reversed along orbit of " + simplex_string(k, k.simplices(d)[i]));
        cell[j] = c;
        sg[j] = s;
      }
    }
    auto& fixed = x.fixed.emplace_back();
    for (auto r : reps) fixed.push_back(g.fixes_pointwise(k.simplices(d)[r]));

    ZMatrix pi(reps.size(), n);
    for (std::size_t j = 0; j < n; ++j) pi(cell[j], j) = sg[j];
    ZMatrix sigma(n, n);
    for (unsigned pw = 0; pw < g.order(); ++pw) {
      auto t = g.chain_map(k, d, pw);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) sigma(r, c) += t(r, c);
    }
    ZMatrix mu(n, reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) mu(r, c) = sigma(r, reps[c]);

    ZMatrix dy = k.boundary(d);
    ZMatrix dx(d == 0 ? 0 : x.reps[d - 1].size(), reps.size());
    if (d > 0) {
      ZMatrix cols(dy.rows(), reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c)
        for (std::size_t r = 0; r < dy.rows(); ++r) cols(r, c) = dy(r, reps[c]);
      dx = multiply(x.projection[d - 1], cols);
    }
    x.chains.d.push_back(std::move(dx));
    x.projection.push_back(std::move(pi));
    x.transfer.push_back(std::move(mu));
  }
  x.chains.validate();
  return x;
}

std::vector<std::size_t> relative_to_fixed_homology(const OrbitComplex& x, std::int64_t p) {
  ModChainComplex rel;
  rel.p = p;
  std::vector<std::vector<std::size_t>> keep;
  for (const auto& f : x.fixed) {
    auto& kk = keep.emplace_back();
    for (std::size_t c = 0; c < f.size(); ++c)
      if (!f[c]) kk.push_back(c);
  }
  for (std::size_t d = 0; d < x.chains.d.size(); ++d) {
    const std::size_t rows = d == 0 ? 0 : keep[d - 1].size();
    ModMatrix m(rows, keep[d].size(), p);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < keep[d].size(); ++c) {
        BigInt v = x.chains.d[d](keep[d - 1][r], keep[d][c]) % p;
        m.set(r, c, v.get_si());
      }
    rel.d.push_back(std::move(m));
  }
  return homology(rel);
}

TransferReport transfer_check(const SimplicialComplex& k, const CyclicAction& g, std::int64_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  if (static_cast<std::int64_t>(g.order()) % q == 0)
    throw Error(ErrorCode::BadPrime, std::to_string(q) + " divides the order " + std::to_string(g.order()));
  auto x = orbit_complex(k, g);
  const BigInt s = g.order();

  TransferReport rep;
  rep.q = q;
  rep.pi_mu_is_order = rep.mu_pi_is_sigma = true;
  for (std::size_t d = 0; d < x.projection.size(); ++d) {
    auto pm = multiply(x.projection[d], x.transfer[d]);
    for (std::size_t r = 0; r < pm.rows(); ++r)
      for (std::size_t c = 0; c < pm.cols(); ++c)
        if (pm(r, c) != (r == c ? s : BigInt(0))) rep.pi_mu_is_order = false;
    auto mp = multiply(x.transfer[d], x.projection[d]);
    ZMatrix sigma(mp.rows(), mp.cols());
    for (unsigned pw = 0; pw < g.order(); ++pw) {
      auto t = g.chain_map(k, d, pw);
      for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c) sigma(r, c) += t(r, c);
    }
    if (!(mp == sigma)) rep.mu_pi_is_sigma = false;
  }

  auto cy = reduce_mod(chain_complex(k), q);
  auto cx = reduce_mod(x.chains, q);
  auto hy = sub_homology(cy, full_subcomplex(cy));
  auto hx = sub_homology(cx, full_subcomplex(cx));
  rep.h_y = hy.dims;
  rep.h_x = hx.dims;
  rep.homologically_trivial = true;
  rep.pi_iso = hy.dims.size() == hx.dims.size();
  for (std::size_t d = 0; d < hy.dims.size(); ++d) {
    auto t = ModMatrix::from_integers(g.chain_map(k, d), q);
    auto pi = ModMatrix::from_integers(x.projection[d], q);
    auto mu = ModMatrix::from_integers(x.transfer[d], q);
    if (!(hy.coords(d, t * hy.reps[d]) == hy.coords(d, hy.reps[d]))) rep.homologically_trivial = false;
    // the identities again, now on homology representatives
    if (!(hx.coords(d, pi * (mu * hx.reps[d])) == hx.coords(d, hx.reps[d]).scaled(static_cast<std::int64_t>(g.order()))))
      rep.pi_mu_is_order = false;
    if (d < hx.dims.size()) {
      auto pistar = hx.coords(d, pi * hy.reps[d]);
      if (pistar.rows() != pistar.cols() || pistar.rank() != pistar.rows()) rep.pi_iso = false;
    }
  }
  return rep;
}

// --- long exact sequences -----------------------------------------------

bool LongExactSequenceReport::exact() const {
  return short_exact && std::all_of(nodes.begin(), nodes.end(), [](const NodeCheck& n) { return n.exact; });
}

bool SmithSequencesReport::all_exact() const {
  return std::all_of(sequences.begin(), sequences.end(), [](const auto& s) { return s.exact(); });
}

LongExactSequenceReport check_long_exact_sequence(const std::string& name, const ModChainComplex& ambient,
                                                  const SubComplex& a, const SubComplex& b, const SubComplex& c,
                                                  const std::vector<ModMatrix>& j) {
  const std::size_t top = ambient.d.size();
  if (a.basis.size() != top || b.basis.size() != top || c.basis.size() != top || j.size() != top)
    throw Error(ErrorCode::DimensionMismatch, "sequence data does not match the ambient complex");
  const std::int64_t p = ambient.p;
  LongExactSequenceReport rep;
  rep.name = name;
  rep.short_exact = true;
  for (std::size_t k = 0; k < top; ++k) {
    const auto ra = a.basis[k].rank(), rb = b.basis[k].rank(), rc = c.basis[k].rank();
    const auto jb = j[k] * b.basis[k];
    if (ModMatrix::hstack(b.basis[k], a.basis[k]).rank() != rb || !(j[k] * a.basis[k]).is_zero() ||
        jb.rank() != rc || ModMatrix::hstack(c.basis[k], jb).rank() != rc || ra + rc != rb)
      rep.short_exact = false;
  }
  if (!rep.short_exact) return rep;

  auto ha = sub_homology(ambient, a), hb = sub_homology(ambient, b), hc = sub_homology(ambient, c);
  std::vector<ModMatrix> istar, jstar, dstar;
  for (std::size_t k = 0; k < top; ++k) {
    istar.push_back(hb.coords(k, ha.reps[k]));
    jstar.push_back(hc.coords(k, j[k] * hb.reps[k]));
    if (k == 0) {
      dstar.emplace_back(0, hc.dims[0], p);
      continue;
    }
    ModMatrix d(ha.dims[k - 1], hc.dims[k], p);
    if (hc.dims[k] > 0) {
      // lift through j, apply the boundary, read off the class in A
      ModMatrix lift = b.basis[k] * (j[k] * b.basis[k]).solve(hc.reps[k]);
      d = ha.coords(k - 1, ambient.d[k] * lift);
    }
    dstar.push_back(std::move(d));
  }

  auto check = [&](const std::string& label, std::size_t dim, const ModMatrix& in, const ModMatrix& out) {
    bool ok = (out * in).is_zero() && in.rank() + out.rank() == dim;
    rep.nodes.push_back({label, dim, ok});
  };
  for (std::size_t kk = top; kk-- > 0;) {
    const std::string deg = std::to_string(kk);
    ModMatrix into_a = kk + 1 < top ? dstar[kk + 1] : ModMatrix(ha.dims[kk], 0, p);
    check("H" + deg + "(A)", ha.dims[kk], into_a, istar[kk]);
    check("H" + deg + "(B)", hb.dims[kk], istar[kk], jstar[kk]);
    check("H" + deg + "(C)", hc.dims[kk], jstar[kk], dstar[kk]);
  }
  return rep;
}

SmithSequencesReport verify_smith_sequences(const SimplicialComplex& k, const CyclicAction& g) {
  auto ops = smith_operators(k, g);
  const std::int64_t p = ops.p;
  const auto up = static_cast<unsigned>(p);
  auto amb = reduce_mod(chain_complex(k), p);
  const std::size_t top = amb.d.size();
  auto fixed = fixed_subcomplex(k, g, p);
  auto tau_power = [&](unsigned e) {
    std::vector<ModMatrix> out;
    for (const auto& t : ops.tau) out.push_back(power_of(t, e));
    return out;
  };
  auto rho_name = [&](unsigned e) { return e == up - 1 ? std::string("sigma") : "tau^" + std::to_string(e); };

  SmithSequencesReport rep;
  rep.p = p;
  auto whole = full_subcomplex(amb);
  for (unsigned i = 1; i < up; ++i) {
    auto rho = tau_power(i);
    auto rho_bar_c = image_subcomplex(tau_power(up - i));
    SubComplex a;
    bool direct = true;
    for (std::size_t d = 0; d < top; ++d) {
      a.basis.push_back(ModMatrix::hstack(rho_bar_c.basis[d], fixed.basis[d]).column_basis());
      if (a.basis[d].cols() != rho_bar_c.basis[d].cols() + fixed.basis[d].cols()) direct = false;
    }
    auto r = check_long_exact_sequence("b: rho=" + rho_name(i) + ", rho_bar=" + rho_name(up - i), amb, a, whole,
                                       image_subcomplex(rho), rho);
    r.short_exact = r.short_exact && direct;
    rep.sequences.push_back(std::move(r));
  }
  for (unsigned i = 1; i + 1 < up; ++i) {
    auto r = check_long_exact_sequence("c: sigma -> tau^" + std::to_string(i) + " -> tau^" + std::to_string(i + 1), amb,
                                       image_subcomplex(ops.sigma), image_subcomplex(tau_power(i)),
                                       image_subcomplex(tau_power(i + 1)), ops.tau);
    rep.sequences.push_back(std::move(r));
  }

  auto x = orbit_complex(k, g);
  rep.h_sigma = sub_homology(amb, image_subcomplex(ops.sigma)).dims;
  rep.h_relative = relative_to_fixed_homology(x, p);
  rep.sigma_matches_relative = trimmed(rep.h_sigma) == trimmed(rep.h_relative);
  rep.fixed_acyclic = reduced_acyclic(sub_homology(amb, fixed).dims);
  rep.orbit_acyclic = reduced_acyclic(homology(reduce_mod(x.chains, p)));
  rep.total_acyclic = reduced_acyclic(homology(amb));
  return rep;
}

// --- sample spaces ------------------------------------------------------

namespace {

std::string ring_vertex(unsigned i) { return "v" + std::to_string(i); }

std::map<std::string, std::string> rotation(unsigned n, unsigned step) {
  std::map<std::string, std::string> perm;
  for (unsigned i = 0; i < n; ++i) perm[ring_vertex(i)] = ring_vertex((i + step) % n);
  return perm;
}

void require_polygon(unsigned p) {
  if (p < 3) throw Error(ErrorCode::InvalidParams, "polygon needs at least 3 vertices");
}

}  // namespace

ActionExample disc_example(unsigned p) {
  require_polygon(p);
  std::vector<std::vector<std::string>> s;
  for (unsigned i = 0; i < p; ++i) s.push_back({"c", ring_vertex(i), ring_vertex((i + 1) % p)});
  auto k = SimplicialComplex::generated_by(s);
  CyclicAction g(k, p, rotation(p, 1));
  return {"disc+Z" + std::to_string(p), std::move(k), std::move(g)};
}

ActionExample sphere_example(unsigned p) {
  require_polygon(p);
  std::vector<std::vector<std::string>> s;
  for (unsigned i = 0; i < p; ++i)
    for (const char* pole : {"N", "S"}) s.push_back({pole, ring_vertex(i), ring_vertex((i + 1) % p)});
  auto k = SimplicialComplex::generated_by(s);
  CyclicAction g(k, p, rotation(p, 1));
  return {"sphere+Z" + std::to_string(p), std::move(k), std::move(g)};
}

ActionExample free_circle_example(unsigned p) {
  if (p < 2) throw Error(ErrorCode::InvalidParams, "order must be at least 2");
  const unsigned n = 2 * p;
  std::vector<std::vector<std::string>> s;
  for (unsigned i = 0; i < n; ++i) s.push_back({ring_vertex(i), ring_vertex((i + 1) % n)});
  auto k = SimplicialComplex::generated_by(s);
  CyclicAction g(k, p, rotation(n, 2));
  return {"circle" + std::to_string(n) + "+free Z" + std::to_string(p), std::move(k), std::move(g)};
}

ActionExample filled_triangle_example() {
  auto k = SimplicialComplex::generated_by({{"a", "b", "c"}});
  CyclicAction g(k, 3, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  return {"filled triangle+Z3", std::move(k), std::move(g)};
}

}  // namespace exotic
