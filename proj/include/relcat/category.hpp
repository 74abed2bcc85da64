#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relcat/lr.hpp"

namespace relcat {

using ObjectId = std::uint32_t;

/// Objects-and-arrows presentation. Composition is diagrammatic: x ; y is
/// defined when cod x = dom y, and is stored at `table[x * morphism_count + y]`.
struct SmallCategory {
  std::vector<ObjectId> objects;
  std::size_t morphism_count = 0;
  std::vector<ObjectId> dom;
  std::vector<ObjectId> cod;
  /// `identity[i]` is the identity arrow of `objects[i]`.
  std::vector<Element> identity;
  std::vector<std::optional<Element>> table;

  std::optional<std::size_t> object_index(ObjectId a) const;
  Element id(ObjectId a) const { return identity[*object_index(a)]; }
  bool composable(Element x, Element y) const { return cod[x] == dom[y]; }
  Element compose(Element x, Element y) const { return *table[x * morphism_count + y]; }

  bool operator==(const SmallCategory&) const = default;
};

/// Shape checks plus the four category axioms; laws are named
/// "axiom-1" ... "axiom-4". Shape problems throw invalid_argument.
LawReport check_category_axioms(const SmallCategory& c);

/// Objects are the fixed points of ell, each named by its own element index.
SmallCategory to_category(const LrStructure& l);
/// ell = id . dom, rr = id . cod. Throws CategoryAxiomViolation.
LrStructure from_category(const SmallCategory& c);

}  // namespace relcat
