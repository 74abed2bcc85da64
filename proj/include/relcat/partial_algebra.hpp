#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relcat/axioms.hpp"
#include "relcat/ternary.hpp"

namespace relcat {

/// Algebraic presentation (S, ., D, E): a partial composition table over
/// operand pairs plus a designated unit set.
struct PartialAlgebra {
  std::size_t size = 0;
  /// `table[x * size + y]` is x . y, empty exactly when D^x_y fails.
  std::vector<std::optional<Element>> table;
  ElementSet units;

  bool defined(Element x, Element y) const { return table[x * size + y].has_value(); }
  Element compose(Element x, Element y) const { return *table[x * size + y]; }
  std::vector<std::pair<Element, Element>> defined_pairs() const;

  bool operator==(const PartialAlgebra&) const = default;
};

/// Throws invalid_argument if the table shape, entries or units are out of range.
void validate(const PartialAlgebra& p);

/// Algebraic units: e is a left unit iff D^e_x for some x and e . x = x
/// whenever D^e_x; dually on the right.
ElementSet algebraic_units(const PartialAlgebra& p);

/// x . y is the unique z with R^z_{xy}.
PartialAlgebra to_partial_algebra(const TernaryStructure& s);
/// R^x_{yz} iff D^y_z and x = y . z.
TernaryStructure from_partial_algebra(const PartialAlgebra& p);

/// The five derived laws of object-free categories in algebraic form:
/// definedness-associativity, associativity, left-units, right-units, coherence.
LawReport verify_ahs_laws(const PartialAlgebra& p);

/// D^x_y implies D'^{fx}_{fy} and f (x . y) = f x .' f y.
Verdict<Witness> check_algebraic_morphism(const PartialAlgebra& src, const PartialAlgebra& dst,
                                          const ElementMap& f);
/// Additionally D'^u_v and f x = u .' v imply some y, z with f y = u, f z = v,
/// D^y_z and x = y . z.
Verdict<Witness> check_algebraic_bounded_morphism(const PartialAlgebra& src,
                                                  const PartialAlgebra& dst, const ElementMap& f);

}  // namespace relcat
