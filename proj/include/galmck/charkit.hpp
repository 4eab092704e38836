#pragma once

#include <optional>

#include "galmck/smallgroup.hpp"

namespace galmck::charkit {

using cyclo::Cyclotomic;
using cyclo::Rational;
using smallgroup::ExplicitGroup;

// class function on an ExplicitGroup, one value per class in canonical order
struct ClassFunction {
  const ExplicitGroup* G = nullptr;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(int c) const { return values[c]; }
  const Cyclotomic& at_element(int e) const { return values[G->class_of(e)]; }
  Cyclotomic degree() const { return values[G->class_of(0)]; }
  bool operator==(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  ClassFunction operator+(const ClassFunction& o) const;
};

struct CharTable {
  const ExplicitGroup* G;
  std::vector<ClassFunction> irreducibles;  // sorted by (degree, values)
};

// character of a subgroup given by its sorted element list in G
struct SubChar {
  std::vector<int> elems;
  std::vector<Cyclotomic> values;
  const Cyclotomic& at(int gelem) const;
  bool defined_at(int gelem) const;
};

// all linear characters of the abelian group Z/d1 x ... x Z/dk, as exponent
// vectors; value of character a at group element x is prod zeta_{d_i}^{a_i x_i}
std::vector<std::vector<long>> linear_chars(const std::vector<long>& invariants);
Cyclotomic eval_linear(const std::vector<long>& invariants,
                       const std::vector<long>& chr, const std::vector<long>& x);

// exact character table by the Dixon-Schneider method
CharTable dixon_table(const ExplicitGroup& G);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction induce(const ExplicitGroup& G, const SubChar& psi);
SubChar restrict_to(const ClassFunction& chi, const std::vector<int>& elems);

// determinant (linear) character of a character, via eigenvalue multisets
ClassFunction det_character(const ClassFunction& chi);

// canonical extension of theta in Irr(R) to K, where R is normal of 2-power
// index: the unique extension whose determinant extends det(theta) with
// value 1 on the chosen complement generators. Returns nullopt when theta
// does not extend or no canonical choice exists.
std::optional<ClassFunction> det_canonical_extension(
    const ExplicitGroup& K, const std::vector<int>& relems, const SubChar& theta,
    const std::vector<int>& complement_gens);

ClassFunction act_classfunction(const cyclo::GaloisElt& sigma, const ClassFunction& chi);
bool rationality(const ClassFunction& chi);

// portable text cache of a table
std::string serialize_table(const CharTable& t);

}  // namespace galmck::charkit
