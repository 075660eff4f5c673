#include "exotic/fpgroups.hpp"

#include <numeric>
#include <sstream>

namespace exotic {

void Presentation::validate() const {
  const int n = static_cast<int>(generators.size());
  for (const auto& w : relators)
    for (int g : w)
      if (g == 0 || g > n || g < -n) throw Error(ErrorCode::InvalidFormat, "relator letter out of range");
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int g = w[i];
    long e = static_cast<long>(j - i) * (g > 0 ? 1 : -1);
    if (i > 0) os << "*";
    os << generators[static_cast<std::size_t>(std::abs(g) - 1)];
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

BigInt AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
  return s;
}

// --- Smith normal form --------------------------------------------------

namespace {

void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
// row a += k * row b
void add_row(ZMatrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) += k * m(b, c);
}
void add_col(ZMatrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, a) += k * m(r, b);
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{ZMatrix::identity(rows), m, ZMatrix::identity(cols), 0};
  ZMatrix& s = f.s;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s(i, j) != 0 && (pi == rows || abs(s(i, j)) < abs(s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(s, t, pi);
    swap_rows(f.u, t, pi);
    swap_cols(s, t, pj);
    swap_cols(f.v, t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row(s, i, t, -q);
        add_row(f.u, i, t, -q);
        if (s(i, t) != 0) {
          swap_rows(s, t, i);
          swap_rows(f.u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_col(s, j, t, -q);
        add_col(f.v, j, t, -q);
        if (s(t, j) != 0) {
          swap_cols(s, t, j);
          swap_cols(f.v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce s(t,t) | every trailing entry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row(s, t, i, 1);
            add_row(f.u, t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) s(t, c) = -s(t, c);
      for (std::size_t c = 0; c < rows; ++c) f.u(t, c) = -f.u(t, c);
    }
    ++f.rank;
  }
  return f;
}

ZMatrix relator_matrix(const Presentation& p) {
  p.validate();
  ZMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int g : p.relators[r]) m(r, static_cast<std::size_t>(std::abs(g) - 1)) += g > 0 ? 1 : -1;
  return m;
}

AbelianGroup cokernel(const ZMatrix& m) {
  auto f = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = m.cols() - f.rank;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s(i, i) > 1) g.torsion.push_back(f.s(i, i));
  return g;
}

AbelianGroup abelianization(const Presentation& p) { return cokernel(relator_matrix(p)); }

// --- words and presentations --------------------------------------------

Word power(int gen, long e) {
  Word w;
  for (long i = 0; i < std::abs(e); ++i) w.push_back(e > 0 ? gen : -gen);
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& g : r) g = -g;
  return r;
}

Word commutator(const Word& a, const Word& b) { return concat({a, b, inverse(a), inverse(b)}); }

namespace {

void require_at_least(std::initializer_list<long> vs, long lo, const char* what) {
  for (long v : vs)
    if (v < lo) throw Error(ErrorCode::InvalidParams, std::string(what) + " parameters must be >= " + std::to_string(lo));
}

}  // namespace

Presentation free_group(std::size_t n) {
  Presentation p;
  for (std::size_t i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
  return p;
}

Presentation braid_group_b3() {
  return {{"s1", "s2"}, {Word{1, 2, 1, -2, -1, -2}}};
}

Presentation bkl(long k, long l) {
  require_at_least({k, l}, 1, "B_kl");
  return {{"a", "b"}, {concat({power(1, k), power(2, -l)})}};
}

Presentation bkls(long k, long l, long s) {
  require_at_least({k, l, s}, 1, "B_kls");
  auto bz = bezout_alpha(k, l);
  Word alpha_s;
  for (long i = 0; i < s; ++i) alpha_s = concat({alpha_s, bz.alpha});
  return {{"a", "b"}, {concat({power(1, k), power(2, -l)}), alpha_s}};
}

Presentation gkls(long k, long l, long s) {
  require_at_least({k, l, s}, 1, "G_kls");
  const Word prod_inv{-3, -2, -1};
  return {{"g1", "g2", "g3"},
          {concat({power(1, k), prod_inv}), concat({power(2, l), prod_inv}), concat({power(3, s), prod_inv})}};
}

Presentation tkls(long k, long l, long s) {
  require_at_least({k, l, s}, 1, "T_kls");
  auto rep = [](Word w, long e) {
    Word out;
    for (long i = 0; i < e; ++i) out = concat({out, w});
    return out;
  };
  return {{"b1", "b2", "b3"},
          {power(1, 2), power(2, 2), power(3, 2), rep({1, 2}, k), rep({2, 3}, l), rep({3, 1}, s)}};
}

Presentation b3quot(long s) {
  require_at_least({s}, 1, "B3 quotient");
  Presentation p = braid_group_b3();
  p.relators.push_back(power(1, s));
  p.relators.push_back(power(2, s));
  return p;
}

Presentation xt_quot(const XtParams& t) {
  // generators a0, a1, b0, b1; power relators follow the rows of T
  Presentation p{{"a0", "a1", "b0", "b1"}, {}};
  for (int a : {1, 2})
    for (int b : {3, 4}) p.relators.push_back(commutator({a}, {b}));
  p.relators.push_back(concat({power(1, t.m00), power(3, t.n00)}));
  p.relators.push_back(concat({power(1, t.m10), power(4, t.n10)}));
  p.relators.push_back(concat({power(2, t.m01), power(3, t.n01)}));
  p.relators.push_back(concat({power(2, t.m11), power(4, t.n11)}));
  return p;
}

std::string_view to_string(TriangleType t) {
  switch (t) {
    case TriangleType::Finite: return "Finite";
    case TriangleType::Nilpotent: return "Nilpotent";
    case TriangleType::ContainsF2: return "ContainsF2";
  }
  return "?";
}

TriangleType triangle_classification(long k, long l, long s) {
  require_at_least({k, l, s}, 2, "triangle group");
  Rational sum = Rational(1, k) + Rational(1, l) + Rational(1, s);
  if (sum > 1) return TriangleType::Finite;
  if (sum == 1) return TriangleType::Nilpotent;
  return TriangleType::ContainsF2;
}

bool homology_sphere_check(long k, long l, long s) {
  require_at_least({k, l, s}, 2, "Pham-Brieskorn");
  return std::gcd(k, l) == 1 && std::gcd(k, s) == 1 && std::gcd(l, s) == 1;
}

BigInt xt_exponent(const XtParams& t) {
  return BigInt(t.m00) * t.n10 * t.m11 * t.n01 - BigInt(t.m01) * t.n11 * t.m10 * t.n00;
}

BezoutAlpha bezout_alpha(long k, long l) {
  require_at_least({k, l}, 1, "Bezout");
  if (std::gcd(k, l) != 1) throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(k) + ", " + std::to_string(l) + ") != 1");
  long p = 0;
  if (l > 1) {
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), BigInt(k).get_mpz_t(), BigInt(l).get_mpz_t());
    long p0 = inv.get_si();
    long p1 = p0 - l;
    p = std::abs(p1) < std::abs(p0) ? p1 : p0;
  }
  long q = (1 - k * p) / l;
  return {p, q, concat({power(1, q), power(2, p)})};
}

}  // namespace exotic
