#pragma once

#include <vector>

#include "relcat/axioms.hpp"
#include "relcat/lr.hpp"
#include "relcat/ternary.hpp"

namespace relcat {

/// Checks R^0_{0x} and R^0_{x0} for every x.
Verdict<Witness> check_relational_zero(const TernaryStructure& s, Element zero);

/// A structure together with a designated relational zero whose
/// definedness relation is total.
class ZeroedStructure {
 public:
  /// Validates the zero law and totality of D.
  ZeroedStructure(TernaryStructure structure, Element zero);

  const TernaryStructure& structure() const { return structure_; }
  Element zero() const { return zero_; }
  std::size_t size() const { return structure_.size(); }

  bool operator==(const ZeroedStructure&) const = default;

 private:
  TernaryStructure structure_;
  Element zero_ = 0;
};

/// Adds a fresh element 0 at index size(S), the triple (0, x, y) for each
/// undefined pair and (0, 0, x), (0, x, 0), (0, 0, 0).
ZeroedStructure adjoin_zero(const TernaryStructure& s);

/// Weak units as defined on an arbitrary relation: e is weakly left unital if
/// R^x_{ex} for some x and, for all x, R^x_{ex} or not D^e_x.
UnitSets weak_units(const TernaryStructure& s);

/// Weak units of a zeroed structure, where "not defined" is read as "composes
/// to zero": for all x, R^x_{ex} or R^0_{ex}. The designated zero itself is
/// never reported.
UnitSets weak_units(const ZeroedStructure& z);

/// Relationally associative, and every x has weak units e, e' with R^x_{ex}
/// and R^x_{xe'}.
Verdict<Witness> is_weak_rel_monoid_with_zero(const ZeroedStructure& z);

/// Weak relational monoid with zero that is weakly functional and coherent
/// relative to nonzero definedness: for v != 0, R^v_{xy} and y . z != 0 imply
/// v . z != 0.
Verdict<Witness> is_weak_object_free_category(const ZeroedStructure& z);

/// Removes the designated zero and every triple mentioning it. Throws
/// NotWeakCoherentPartialMonoid unless z is a weak object-free category.
TernaryStructure extract_subalgebra(const ZeroedStructure& z);

/// Total semigroup with zero and source/target maps (Schweizer and Sklar).
struct CategoricalSemigroup {
  std::size_t size = 0;
  /// `table[x * size + y]` is x . y.
  std::vector<Element> table;
  Element zero = 0;
  ElementMap ell;
  ElementMap rr;

  Element compose(Element x, Element y) const { return table[x * size + y]; }

  bool operator==(const CategoricalSemigroup&) const = default;
};

/// Laws: associativity, item-1, item-2, r-zero, nonzero-product.
/// Shape problems throw invalid_argument.
LawReport check_categorical_semigroup(const CategoricalSemigroup& c);

/// Adjoins 0 at index size(L) with l 0 = r 0 = 0 and x . y = 0 unless
/// r x = l y. Throws LrAxiomViolation.
CategoricalSemigroup to_categorical_semigroup(const LrStructure& l);
/// Drops 0, renumbering the remaining elements in order. Throws
/// CategoricalSemigroupAxiomViolation.
LrStructure from_categorical_semigroup(const CategoricalSemigroup& c);

/// Ternary form of the total operation.
TernaryStructure categorical_relation(const CategoricalSemigroup& c);

struct CollapseReport {
  ElementSet units_before;
  ElementSet units_after;
  ElementSet weak_units_after;
  bool total_after = false;
  bool units_survive_as_weak_units = false;

  bool collapsed() const { return units_after.empty(); }
};

/// Facts about what zero adjunction does to the units of a relational monoid.
/// Throws NotRelationalMonoid.
CollapseReport unit_collapse_demo(const TernaryStructure& s);

}  // namespace relcat
