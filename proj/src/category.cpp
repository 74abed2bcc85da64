#include "relcat/category.hpp"

#include <algorithm>
#include <string>

namespace relcat {

std::optional<std::size_t> SmallCategory::object_index(ObjectId a) const {
  const auto it = std::find(objects.begin(), objects.end(), a);
  if (it == objects.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects.begin());
}

namespace {

void check_shape(const SmallCategory& c) {
  const auto m = c.morphism_count;
  if (m > kMaxCarrier) throw Error(ErrorKind::carrier_too_large, "too many morphisms");
  if (c.dom.size() != m || c.cod.size() != m || c.table.size() != m * m ||
      c.identity.size() != c.objects.size()) {
    throw Error(ErrorKind::invalid_argument, "category arrays do not match declared sizes");
  }
  auto sorted = c.objects;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::invalid_argument, "duplicate object");
  }
  for (Element x = 0; x < m; ++x) {
    if (!c.object_index(c.dom[x]) || !c.object_index(c.cod[x])) {
      throw Error(ErrorKind::invalid_argument,
                  "dom or cod of morphism " + std::to_string(x) + " is not an object");
    }
  }
  for (Element i : c.identity) {
    if (i >= m) throw Error(ErrorKind::invalid_argument, "identity morphism out of range");
  }
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      const auto& entry = c.table[x * m + y];
      if (entry && *entry >= m) throw Error(ErrorKind::invalid_argument, "composite out of range");
      if (entry.has_value() != c.composable(x, y)) {
        throw Error(ErrorKind::invalid_argument,
                    "composite of (" + std::to_string(x) + "," + std::to_string(y) +
                        ") must exist exactly when cod x = dom y");
      }
    }
  }
}

}  // namespace

LawReport check_category_axioms(const SmallCategory& c) {
  check_shape(c);
  const auto m = static_cast<Element>(c.morphism_count);
  std::optional<Witness> a1, a2, a3, a4;

  for (std::size_t i = 0; i < c.objects.size() && !a1; ++i) {
    const Element idm = c.identity[i];
    if (c.dom[idm] != c.objects[i] || c.cod[idm] != c.objects[i]) {
      a1 = Witness{"axiom-1", {c.objects[i]}, "dom(id A) = A = cod(id A) fails"};
    }
  }
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      if (!c.composable(x, y)) continue;
      const Element xy = c.compose(x, y);
      if (!a2 && (c.dom[xy] != c.dom[x] || c.cod[xy] != c.cod[y])) {
        a2 = Witness{"axiom-2", {x, y}, "dom/cod of a composite are wrong"};
      }
      for (Element z = 0; z < m && !a3; ++z) {
        if (!c.composable(y, z)) continue;
        const Element yz = c.compose(y, z);
        if (!c.composable(xy, z) || !c.composable(x, yz) || c.compose(xy, z) != c.compose(x, yz)) {
          a3 = Witness{"axiom-3", {x, y, z}, "(x y) z != x (y z)"};
        }
      }
    }
    if (!a4) {
      const Element left = c.id(c.dom[x]);
      const Element right = c.id(c.cod[x]);
      if (!c.composable(left, x) || c.compose(left, x) != x || !c.composable(x, right) ||
          c.compose(x, right) != x) {
        a4 = Witness{"axiom-4", {x}, "identities do not absorb x"};
      }
    }
  }

  LawReport report;
  report.add("axiom-1", a1);
  report.add("axiom-2", a2);
  report.add("axiom-3", a3);
  report.add("axiom-4", a4);
  return report;
}

SmallCategory to_category(const LrStructure& l) {
  (void)from_lr(l);
  SmallCategory c;
  c.morphism_count = l.size;
  for (Element x = 0; x < l.size; ++x) {
    if (l.ell[x] == x) {
      c.objects.push_back(x);
      c.identity.push_back(x);
    }
  }
  c.dom = l.ell;
  c.cod = l.rr;
  c.table = l.table;
  return c;
}

LrStructure from_category(const SmallCategory& c) {
  const LawReport laws = check_category_axioms(c);
  if (const LawResult* bad = laws.first_failure()) {
    throw Error(ErrorKind::category_axiom_violation, bad->law + " fails", bad->counterexample);
  }
  LrStructure l;
  l.size = c.morphism_count;
  l.ell.resize(l.size);
  l.rr.resize(l.size);
  for (Element x = 0; x < l.size; ++x) {
    l.ell[x] = c.id(c.dom[x]);
    l.rr[x] = c.id(c.cod[x]);
  }
  l.table = c.table;
  validate(l);
  return l;
}

}  // namespace relcat
