#include "relcat/zero.hpp"

#include <string>

namespace relcat {

namespace {

std::string str(Element x) { return std::to_string(x); }

}  // namespace

Verdict<Witness> check_relational_zero(const TernaryStructure& s, Element zero) {
  if (zero >= s.size()) throw Error(ErrorKind::invalid_argument, "zero outside carrier");
  for (Element x = 0; x < s.size(); ++x) {
    if (!s.contains(zero, zero, x)) {
      return Verdict<Witness>::fail({"relational-zero", {x}, "R^0_{0," + str(x) + "} missing"});
    }
    if (!s.contains(zero, x, zero)) {
      return Verdict<Witness>::fail({"relational-zero", {x}, "R^0_{" + str(x) + ",0} missing"});
    }
  }
  return {};
}

ZeroedStructure::ZeroedStructure(TernaryStructure structure, Element zero)
    : structure_(std::move(structure)), zero_(zero) {
  if (auto z = check_relational_zero(structure_, zero_); !z) {
    throw Error(ErrorKind::invalid_argument, "designated element is not a relational zero",
                z.counterexample);
  }
#ifndef RELCAT_MUTANT_CRIPPLE_ADJUNCTION
  if (!structure_.definedness().total()) {
    throw Error(ErrorKind::invalid_argument, "definedness of a zeroed structure must be total");
  }
#endif
}

ZeroedStructure adjoin_zero(const TernaryStructure& s) {
  const auto n = s.size();
  if (n + 1 > kMaxCarrier) {
    throw Error(ErrorKind::carrier_too_large, "no room to adjoin a zero");
  }
  const auto zero = static_cast<Element>(n);
  const auto m = n + 1;
  std::vector<Mask> cells(m * m, 0);
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      Mask r = s.results(y, z);
      // The mutation-testing build leaves undefined pairs undefined.
#ifndef RELCAT_MUTANT_CRIPPLE_ADJUNCTION
      if (r == 0) r = bit(zero);
#endif
      cells[y * m + z] = r;
    }
  }
  for (Element x = 0; x < m; ++x) {
    cells[zero * m + x] |= bit(zero);
    cells[x * m + zero] |= bit(zero);
  }
  return ZeroedStructure(TernaryStructure::from_cells(m, std::move(cells)), zero);
}

UnitSets weak_units(const TernaryStructure& s) {
  const auto n = s.size();
  UnitSets u;
  for (Element e = 0; e < n; ++e) {
    bool left_exists = false;
    bool left_ok = true;
    bool right_exists = false;
    bool right_ok = true;
    for (Element x = 0; x < n; ++x) {
      const bool ex = s.contains(x, e, x);
      const bool xe = s.contains(x, x, e);
      left_exists = left_exists || ex;
      right_exists = right_exists || xe;
      left_ok = left_ok && (ex || !s.defined(e, x));
      right_ok = right_ok && (xe || !s.defined(x, e));
    }
    if (left_exists && left_ok) u.left |= bit(e);
    if (right_exists && right_ok) u.right |= bit(e);
  }
  return u;
}

UnitSets weak_units(const ZeroedStructure& z) {
  const auto& s = z.structure();
  const Element zero = z.zero();
  const auto n = s.size();
  UnitSets u;
  for (Element e = 0; e < n; ++e) {
    if (e == zero) continue;
    bool left_exists = false;
    bool left_ok = true;
    bool right_exists = false;
    bool right_ok = true;
    for (Element x = 0; x < n; ++x) {
      const bool ex = s.contains(x, e, x);
      const bool xe = s.contains(x, x, e);
      left_exists = left_exists || ex;
      right_exists = right_exists || xe;
      left_ok = left_ok && (ex || s.contains(zero, e, x));
      right_ok = right_ok && (xe || s.contains(zero, x, e));
    }
    if (left_exists && left_ok) u.left |= bit(e);
    if (right_exists && right_ok) u.right |= bit(e);
  }
  return u;
}

Verdict<Witness> is_weak_rel_monoid_with_zero(const ZeroedStructure& z) {
  const auto& s = z.structure();
  if (auto a = is_rel_associative(s); !a) return Verdict<Witness>::fail(to_witness(*a.counterexample));
  const Mask weak = weak_units(z).all();
  for (Element x = 0; x < s.size(); ++x) {
    bool left = false;
    bool right = false;
    for_each_bit(weak, [&](Element e) {
      left = left || s.contains(x, e, x);
      right = right || s.contains(x, x, e);
    });
    if (!left || !right) {
      return Verdict<Witness>::fail({"weak-unit-cover", {x},
                                     "element " + str(x) + " lacks a weak " +
                                         (left ? "right" : "left") + " unit"});
    }
  }
  return {};
}

Verdict<Witness> is_weak_object_free_category(const ZeroedStructure& z) {
  if (auto m = is_weak_rel_monoid_with_zero(z); !m) return m;
  const auto& s = z.structure();
  if (auto wf = is_weakly_functional(s); !wf) {
    return Verdict<Witness>::fail(to_witness(*wf.counterexample, false));
  }
  const Element zero = z.zero();
  const Mask nonzero = s.carrier() & ~bit(zero);
  const auto n = s.size();
  auto nonzero_defined = [&](Element a, Element b) { return (s.results(a, b) & nonzero) != 0; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Mask vs = s.results(x, y) & nonzero;
      if (vs == 0) continue;
      const auto v = static_cast<Element>(std::countr_zero(vs));
      for (Element w = 0; w < n; ++w) {
        if (nonzero_defined(y, w) && !nonzero_defined(v, w)) {
          return Verdict<Witness>::fail({"weak-coherence", {v, x, y, w},
                                         "R^v_{xy} and y.z != 0 but v.z = 0"});
        }
      }
    }
  }
  return {};
}

TernaryStructure extract_subalgebra(const ZeroedStructure& z) {
  if (auto ok = is_weak_object_free_category(z); !ok) {
    throw Error(ErrorKind::not_weak_coherent_partial_monoid, ok.counterexample->description,
                ok.counterexample);
  }
  const auto& s = z.structure();
  const Element zero = z.zero();
  const auto n = s.size();
  auto shrink = [&](Element x) { return x < zero ? x : x - 1; };
  std::vector<Triple> triples;
  for (const auto& t : s.triples()) {
    if (t.result == zero || t.left == zero || t.right == zero) continue;
    triples.push_back({shrink(t.result), shrink(t.left), shrink(t.right)});
  }
  TernaryStructure out(n - 1, triples);
  if (!classify(out).object_free_category) {
    throw Error(ErrorKind::not_weak_coherent_partial_monoid,
                "subalgebra without zero is not an object-free category");
  }
  return out;
}

LawReport check_categorical_semigroup(const CategoricalSemigroup& c) {
  const auto n = static_cast<Element>(c.size);
  if (c.size > kMaxCarrier) throw Error(ErrorKind::carrier_too_large, "semigroup too large");
  if (c.table.size() != c.size * c.size || c.ell.size() != c.size || c.rr.size() != c.size ||
      c.zero >= c.size) {
    throw Error(ErrorKind::invalid_argument, "categorical semigroup arrays do not match its size");
  }
  for (Element x = 0; x < n; ++x) {
    if (c.ell[x] >= n || c.rr[x] >= n) throw Error(ErrorKind::invalid_argument, "map out of range");
  }
  for (Element v : c.table) {
    if (v >= n) throw Error(ErrorKind::invalid_argument, "product out of range");
  }

  std::optional<Witness> assoc, i1, i2, rzero, nonzero;
  const Element o = c.zero;
  for (Element x = 0; x < n; ++x) {
    if (!i1 && (c.rr[c.ell[x]] != c.ell[x] || c.ell[c.rr[x]] != c.rr[x])) {
      i1 = Witness{"item-1", {x}, "r(l x) != l x or l(r x) != r x"};
    }
    if (!i2 && (c.compose(c.ell[x], x) != x || c.compose(x, c.rr[x]) != x)) {
      i2 = Witness{"item-2", {x}, "l x . x != x or x . r x != x"};
    }
    for (Element y = 0; y < n; ++y) {
      const bool product_nonzero = c.compose(x, y) != o;
      const bool matching = x != o && y != o && c.rr[x] == c.ell[y];
      if (!nonzero && product_nonzero != matching) {
        nonzero = Witness{"nonzero-product", {x, y},
                          "x . y != 0 <=> x != 0, y != 0, r x = l y fails for (" + str(x) + "," +
                              str(y) + ")"};
      }
      for (Element z = 0; z < n && !assoc; ++z) {
        if (c.compose(c.compose(x, y), z) != c.compose(x, c.compose(y, z))) {
          assoc = Witness{"associativity", {x, y, z}, "(x y) z != x (y z)"};
        }
      }
    }
  }
  if (c.rr[o] != o) rzero = Witness{"r-zero", {o}, "r 0 != 0"};

  LawReport report;
  report.add("associativity", assoc);
  report.add("item-1", i1);
  report.add("item-2", i2);
  report.add("r-zero", rzero);
  report.add("nonzero-product", nonzero);
  return report;
}

CategoricalSemigroup to_categorical_semigroup(const LrStructure& l) {
  (void)from_lr(l);
  CategoricalSemigroup c;
  c.size = l.size + 1;
  c.zero = static_cast<Element>(l.size);
  c.table.assign(c.size * c.size, c.zero);
  c.ell = l.ell;
  c.rr = l.rr;
  c.ell.push_back(c.zero);
  c.rr.push_back(c.zero);
  for (Element x = 0; x < l.size; ++x) {
    for (Element y = 0; y < l.size; ++y) {
      if (l.defined(x, y)) c.table[x * c.size + y] = l.compose(x, y);
    }
  }
  const LawReport laws = check_categorical_semigroup(c);
  if (const LawResult* bad = laws.first_failure()) {
    throw Error(ErrorKind::categorical_semigroup_axiom_violation,
                "totalisation violates " + bad->law, bad->counterexample);
  }
  return c;
}

LrStructure from_categorical_semigroup(const CategoricalSemigroup& c) {
  const LawReport laws = check_categorical_semigroup(c);
  if (const LawResult* bad = laws.first_failure()) {
    throw Error(ErrorKind::categorical_semigroup_axiom_violation, "law " + bad->law + " fails",
                bad->counterexample);
  }
  const Element o = c.zero;
  auto shrink = [&](Element x) { return x < o ? x : x - 1; };
  LrStructure l;
  l.size = c.size - 1;
  l.ell.resize(l.size);
  l.rr.resize(l.size);
  l.table.resize(l.size * l.size);
  for (Element x = 0; x < c.size; ++x) {
    if (x == o) continue;
    l.ell[shrink(x)] = shrink(c.ell[x]);
    l.rr[shrink(x)] = shrink(c.rr[x]);
    for (Element y = 0; y < c.size; ++y) {
      if (y == o || c.rr[x] != c.ell[y]) continue;
      l.table[shrink(x) * l.size + shrink(y)] = shrink(c.compose(x, y));
    }
  }
  validate(l);
  return l;
}

TernaryStructure categorical_relation(const CategoricalSemigroup& c) {
  std::vector<Triple> triples;
  for (Element x = 0; x < c.size; ++x) {
    for (Element y = 0; y < c.size; ++y) triples.push_back({c.compose(x, y), x, y});
  }
  return TernaryStructure(c.size, triples);
}

CollapseReport unit_collapse_demo(const TernaryStructure& s) {
  if (auto m = check_relational_monoid(s); !m) {
    throw Error(ErrorKind::not_relational_monoid, m.counterexample->description, m.counterexample);
  }
  const ZeroedStructure z = adjoin_zero(s);
  CollapseReport r;
  const Mask before = units(s).all();
  const Mask weak = weak_units(z).all();
  r.units_before = to_set(before);
  r.units_after = to_set(units(z.structure()).all());
  r.weak_units_after = to_set(weak);
  r.total_after = z.structure().definedness().total();
  r.units_survive_as_weak_units = (before & ~weak) == 0;
  return r;
}

}  // namespace relcat
