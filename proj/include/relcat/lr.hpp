#pragma once

#include <optional>
#include <vector>

#include "relcat/axioms.hpp"
#include "relcat/partial_algebra.hpp"
#include "relcat/ternary.hpp"

namespace relcat {

/// Source and target maps of a relational monoid.
struct SourceTarget {
  ElementMap ell;
  ElementMap rr;

  bool operator==(const SourceTarget&) const = default;
};

/// ell x is the unique unit e with R^x_{ex}, rr x the unique unit e with R^x_{xe}.
/// Throws NotRelationalMonoid if S fails the monoid check or a unit is not unique.
SourceTarget derive_ell_r(const TernaryStructure& s);

/// Items (1)-(6) of the source/target lemma for relational monoids, in relational form.
LawReport verify_props3(const TernaryStructure& s);

/// For all x, y and e in E: D^x_e and D^e_y imply D^x_y.
Verdict<Witness> coherent_via_units(const TernaryStructure& s);
/// For all x, y: r x = l y implies D^x_y. Requires a relational monoid.
Verdict<Witness> coherent_via_source_target(const TernaryStructure& s);
/// For all x, y: D^x_y implies r x = l y. Requires a relational monoid.
Verdict<Witness> definedness_forces_matching(const TernaryStructure& s);

/// Mac Lane style presentation: total source/target maps and a composition
/// defined exactly when rr x = ell y.
struct LrStructure {
  std::size_t size = 0;
  ElementMap ell;
  ElementMap rr;
  /// `table[x * size + y]`, present exactly when rr[x] == ell[y].
  std::vector<std::optional<Element>> table;

  bool defined(Element x, Element y) const { return rr[x] == ell[y]; }
  Element compose(Element x, Element y) const { return *table[x * size + y]; }

  bool operator==(const LrStructure&) const = default;
};

/// Throws invalid_argument when maps or entries are out of range, and
/// LrAxiomViolation when the table domain differs from {rr x = ell y}.
void validate(const LrStructure& l);

/// The reduced axiom list: r-of-l, l-of-r, left-identity, right-identity,
/// source-of-product, target-of-product, associativity.
LawReport check_lr_reduced_laws(const LrStructure& l);

/// Relational l r-semigroup axioms stated on (S, ell, rr): associativity,
/// items (1), (2), (4), D^x_y iff r x = l y and the two unit-absorption laws.
/// With `partial` the relation must also be weakly functional (l r-category).
LawReport check_lr_semigroup_definition(const TernaryStructure& s, const SourceTarget& maps,
                                        bool partial);

/// Throws NotObjectFreeCategory if S is not a coherent partial monoid.
LrStructure to_lr(const TernaryStructure& s);
/// Throws LrAxiomViolation naming the failed law.
TernaryStructure from_lr(const LrStructure& l);
/// Ternary form of the table with no axiom checks; used for diagnostics.
TernaryStructure lr_relation(const LrStructure& l);

/// Relational morphism between the ternary forms that also commutes with
/// ell and rr.
Verdict<Witness> check_lr_morphism(const LrStructure& src, const LrStructure& dst,
                                   const ElementMap& f, bool bounded);

/// f maps every unit of src to a unit of dst.
bool preserves_units(const TernaryStructure& src, const TernaryStructure& dst, const ElementMap& f);

}  // namespace relcat
