#pragma once

// Finitely presented groups at desk scale: Smith normal form, abelian
// invariants and a few named presentations.

#include <string>
#include <vector>

#include "exotic/linalg.hpp"
#include "exotic/xt.hpp"

namespace exotic {

// Signed 1-based generator indices; -i is the inverse of generator i.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  void validate() const;
  std::string word_to_string(const Word& w) const;
};

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // d1 | d2 | ..., each > 1

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  // Order, or 0 when infinite.
  BigInt order() const;
  std::string to_string() const;  // "Z^2 + Z/3", "0"
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct SmithForm {
  ZMatrix u, s, v;  // u * m * v = s
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const ZMatrix& m);

// Rows are relators, columns generators.
ZMatrix relator_matrix(const Presentation& p);
// Cokernel of the row space of m inside Z^cols.
AbelianGroup cokernel(const ZMatrix& m);
AbelianGroup abelianization(const Presentation& p);

Word power(int gen, long e);
Word concat(std::initializer_list<Word> parts);
Word inverse(const Word& w);
Word commutator(const Word& a, const Word& b);

Presentation free_group(std::size_t n);
Presentation braid_group_b3();
Presentation bkl(long k, long l);
Presentation bkls(long k, long l, long s);
Presentation gkls(long k, long l, long s);
Presentation tkls(long k, long l, long s);
Presentation b3quot(long s);
Presentation xt_quot(const XtParams& t);

enum class TriangleType { Finite, Nilpotent, ContainsF2 };
std::string_view to_string(TriangleType t);
TriangleType triangle_classification(long k, long l, long s);

// Pairwise coprimality.
bool homology_sphere_check(long k, long l, long s);

BigInt xt_exponent(const XtParams& t);

struct BezoutAlpha {
  long p, q;
  Word alpha;  // a^q b^p
};
BezoutAlpha bezout_alpha(long k, long l);

}  // namespace exotic
