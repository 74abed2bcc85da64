#include "relcat/axioms.hpp"

#include <algorithm>
#include <array>

namespace relcat {

namespace {

std::string str(Element x) { return std::to_string(x); }

void validate_map(const TernaryStructure& src, const TernaryStructure& dst, const ElementMap& f) {
  if (f.size() != src.size()) {
    throw Error(ErrorKind::invalid_argument,
                "map covers " + std::to_string(f.size()) + " elements, source carrier has " +
                    std::to_string(src.size()));
  }
  for (Element image : f) {
    if (image >= dst.size()) {
      throw Error(ErrorKind::invalid_argument, "map image " + str(image) + " outside target");
    }
  }
}

}  // namespace

Witness to_witness(const FunctionalityFailure& f, bool totality) {
  auto results = to_set(f.results);
  std::string desc = "pair (" + str(f.left) + "," + str(f.right) + ") has " +
                     std::to_string(results.size()) + " results";
  std::vector<Element> elems{f.left, f.right};
  elems.insert(elems.end(), results.begin(), results.end());
  return {totality ? "functionality" : "weak-functionality", std::move(elems), std::move(desc)};
}

Witness to_witness(const AssociativityFailure& f) {
  std::string where = f.left_bracketing ? "(x y) z but not x (y z)" : "x (y z) but not (x y) z";
  return {"associativity",
          {f.result, f.x, f.y, f.z},
          str(f.result) + " in " + where + " for x=" + str(f.x) + " y=" + str(f.y) +
              " z=" + str(f.z)};
}

Witness to_witness(const CoherenceFailure& f) {
  return {"coherence",
          {f.v, f.x, f.y, f.z},
          "R^" + str(f.v) + "_{" + str(f.x) + "," + str(f.y) + "} and D^" + str(f.y) + "_" +
              str(f.z) + " but not D^" + str(f.v) + "_" + str(f.z)};
}

Witness to_witness(const MorphismFailure& f) {
  if (f.kind == MorphismFailure::Kind::not_preserved) {
    return {"morphism",
            {f.triple.result, f.triple.left, f.triple.right},
            "image of " + to_string(f.triple) + " missing"};
  }
  return {"bounded-morphism",
          {f.source, f.triple.result, f.triple.left, f.triple.right},
          to_string(f.triple) + " in target has no preimage decomposition of " + str(f.source)};
}

Verdict<FunctionalityFailure> is_weakly_functional(const TernaryStructure& s) {
  const auto n = s.size();
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      const Mask r = s.results(y, z);
      if ((r & (r - 1)) != 0) return Verdict<FunctionalityFailure>::fail({y, z, r});
    }
  }
  return {};
}

Verdict<FunctionalityFailure> is_functional(const TernaryStructure& s) {
  const auto n = s.size();
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      const Mask r = s.results(y, z);
      if (std::popcount(r) != 1) return Verdict<FunctionalityFailure>::fail({y, z, r});
    }
  }
  return {};
}

Verdict<AssociativityFailure> is_rel_associative(const TernaryStructure& s) {
  const auto n = s.size();
  const auto cells = s.cells();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Mask xy = cells[x * n + y];
      for (Element z = 0; z < n; ++z) {
        Mask lhs = 0;
        for_each_bit(xy, [&](Element v) { lhs |= cells[v * n + z]; });
        Mask rhs = 0;
        for_each_bit(cells[y * n + z], [&](Element v) { rhs |= cells[x * n + v]; });
        if (lhs != rhs) {
          const Mask diff = lhs ^ rhs;
          const auto u = static_cast<Element>(std::countr_zero(diff));
          return Verdict<AssociativityFailure>::fail({u, x, y, z, ((lhs >> u) & 1U) != 0});
        }
      }
    }
  }
  return {};
}

namespace {

Verdict<CoherenceFailure> find_incoherence(const TernaryStructure& s) {
  const auto n = s.size();
  const DefinednessRelation d(s);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Mask vs = s.results(x, y);
      while (vs != 0) {
        const auto v = static_cast<Element>(std::countr_zero(vs));
        vs &= vs - 1;
        const Mask missing = d.row(y) & ~d.row(v);
        if (missing != 0) {
          return Verdict<CoherenceFailure>::fail(
              {v, x, y, static_cast<Element>(std::countr_zero(missing))});
        }
      }
    }
  }
  return {};
}

}  // namespace

Verdict<CoherenceFailure> is_coherent(const TernaryStructure& s) {
#ifdef RELCAT_MUTANT_INVERT_COHERENCE
  // Mutation-testing build: the verdict is deliberately inverted.
  if (find_incoherence(s)) return Verdict<CoherenceFailure>::fail({0, 0, 0, 0});
  return {};
#else
  return find_incoherence(s);
#endif
}

UnitSets units(const TernaryStructure& s) {
  const auto n = s.size();
  UnitSets u;
  for (Element e = 0; e < n; ++e) {
    bool left_exists = false;
    bool left_ok = true;
    bool right_exists = false;
    bool right_ok = true;
    for (Element x = 0; x < n; ++x) {
      const Mask ex = s.results(e, x);
      if ((ex >> x) & 1U) left_exists = true;
      if ((ex & ~bit(x)) != 0) left_ok = false;
      const Mask xe = s.results(x, e);
      if ((xe >> x) & 1U) right_exists = true;
      if ((xe & ~bit(x)) != 0) right_ok = false;
    }
    if (left_exists && left_ok) u.left |= bit(e);
    if (right_exists && right_ok) u.right |= bit(e);
  }
  return u;
}

namespace {

std::optional<Witness> unit_cover_failure(const TernaryStructure& s, Mask e) {
  const auto n = s.size();
  for (Element x = 0; x < n; ++x) {
    bool has_left = false;
    bool has_right = false;
    for_each_bit(e, [&](Element u) {
      has_left = has_left || s.contains(x, u, x);
      has_right = has_right || s.contains(x, x, u);
    });
    if (!has_left) {
      return Witness{"unit-cover", {x}, "no unit e with R^" + str(x) + "_{e," + str(x) + "}"};
    }
    if (!has_right) {
      return Witness{"unit-cover", {x}, "no unit e with R^" + str(x) + "_{" + str(x) + ",e}"};
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict<Witness> check_relational_monoid(const TernaryStructure& s) {
  if (auto a = is_rel_associative(s); !a) return Verdict<Witness>::fail(to_witness(*a.counterexample));
  if (auto w = unit_cover_failure(s, units(s).all())) return Verdict<Witness>::fail(*w);
  return {};
}

bool satisfies_literal_unit_cover(const TernaryStructure& s) {
  const Mask e = units(s).all();
  const DefinednessRelation d(s);
  const auto n = s.size();
  for (Element x = 0; x < n; ++x) {
    bool left = false;
    bool right = false;
    for_each_bit(e, [&](Element u) {
      left = left || d.contains(u, x);
      right = right || d.contains(x, u);
    });
    if (!left || !right) return false;
  }
  return true;
}

namespace {

constexpr std::array<std::pair<StructureClass, std::string_view>, 9> kClassNames{{
    {StructureClass::any, "any"},
    {StructureClass::relational_semigroup, "relational-semigroup"},
    {StructureClass::relational_monoid, "relational-monoid"},
    {StructureClass::coherent_relational_monoid, "coherent-relational-monoid"},
    {StructureClass::partial_semigroup, "partial-semigroup"},
    {StructureClass::partial_monoid, "partial-monoid"},
    {StructureClass::object_free_category, "object-free-category"},
    {StructureClass::semigroup, "semigroup"},
    {StructureClass::monoid, "monoid"},
}};

}  // namespace

std::string_view to_string(StructureClass c) {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "?";
}

std::optional<StructureClass> parse_structure_class(std::string_view name) {
  for (const auto& [cls, n] : kClassNames) {
    if (n == name) return cls;
  }
  return std::nullopt;
}

const std::vector<StructureClass>& all_structure_classes() {
  static const std::vector<StructureClass> all = [] {
    std::vector<StructureClass> v;
    for (const auto& entry : kClassNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

bool implies_weakly_functional(StructureClass c) {
  switch (c) {
    case StructureClass::partial_semigroup:
    case StructureClass::partial_monoid:
    case StructureClass::object_free_category:
    case StructureClass::semigroup:
    case StructureClass::monoid:
      return true;
    default:
      return false;
  }
}

bool Classification::is(StructureClass c) const {
  switch (c) {
    case StructureClass::any: return true;
    case StructureClass::relational_semigroup: return relational_semigroup;
    case StructureClass::relational_monoid: return relational_monoid;
    case StructureClass::coherent_relational_monoid: return coherent_relational_monoid;
    case StructureClass::partial_semigroup: return partial_semigroup;
    case StructureClass::partial_monoid: return partial_monoid;
    case StructureClass::object_free_category: return object_free_category;
    case StructureClass::semigroup: return semigroup;
    case StructureClass::monoid: return monoid;
  }
  return false;
}

const Witness* Classification::failure(std::string_view axiom) const {
  for (const auto& w : failures) {
    if (w.axiom == axiom) return &w;
  }
  return nullptr;
}

Classification classify(const TernaryStructure& s) {
  Classification c;
  c.unit_sets = units(s);

  if (auto wf = is_weakly_functional(s)) {
    c.weakly_functional = true;
  } else {
    c.failures.push_back(to_witness(*wf.counterexample, false));
  }
  if (auto f = is_functional(s)) {
    c.functional = true;
  } else {
    c.failures.push_back(to_witness(*f.counterexample, true));
  }
  const DefinednessRelation d(s);
  c.total = d.total();
  if (!c.total) {
    for (Element y = 0; y < s.size() && c.failure("totality") == nullptr; ++y) {
      const Mask missing = ~d.row(y) & s.carrier();
      if (missing != 0) {
        const auto z = static_cast<Element>(std::countr_zero(missing));
        c.failures.push_back(
            {"totality", {y, z}, "D^" + str(y) + "_" + str(z) + " fails"});
      }
    }
  }
  if (auto a = is_rel_associative(s)) {
    c.rel_associative = true;
  } else {
    c.failures.push_back(to_witness(*a.counterexample));
  }
  if (auto co = is_coherent(s)) {
    c.coherent = true;
  } else {
    c.failures.push_back(to_witness(*co.counterexample));
  }
  if (auto w = unit_cover_failure(s, c.unit_sets.all())) {
    c.failures.push_back(*w);
  } else {
    c.unit_cover = true;
  }

  c.relational_semigroup = c.rel_associative;
  c.relational_monoid = c.rel_associative && c.unit_cover;
  c.coherent_relational_monoid = c.relational_monoid && c.coherent;
  c.partial_semigroup = c.rel_associative && c.weakly_functional;
  c.partial_monoid = c.relational_monoid && c.weakly_functional;
  c.object_free_category = c.partial_monoid && c.coherent;
  c.semigroup = c.rel_associative && c.functional;
  c.monoid = c.relational_monoid && c.functional;
  return c;
}

bool belongs_to(const TernaryStructure& s, StructureClass c) {
  if (c == StructureClass::any) return true;
  if (!is_rel_associative(s)) return false;
  if (c == StructureClass::relational_semigroup) return true;
  const bool needs_wf = implies_weakly_functional(c);
  if (needs_wf && !is_weakly_functional(s)) return false;
  if ((c == StructureClass::semigroup || c == StructureClass::monoid) && !is_functional(s)) {
    return false;
  }
  if (c == StructureClass::partial_semigroup || c == StructureClass::semigroup) return true;
  const Mask e = units(s).all();
  for (Element x = 0; x < s.size(); ++x) {
    bool left = false;
    bool right = false;
    for_each_bit(e, [&](Element u) {
      left = left || s.contains(x, u, x);
      right = right || s.contains(x, x, u);
    });
    if (!left || !right) return false;
  }
  if (c == StructureClass::coherent_relational_monoid || c == StructureClass::object_free_category) {
    return static_cast<bool>(is_coherent(s));
  }
  return true;
}

Verdict<MorphismFailure> check_morphism(const TernaryStructure& src, const TernaryStructure& dst,
                                        const ElementMap& f) {
  validate_map(src, dst, f);
  const auto n = src.size();
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      const Mask image_results = dst.results(f[y], f[z]);
      Mask rs = src.results(y, z);
      while (rs != 0) {
        const auto x = static_cast<Element>(std::countr_zero(rs));
        rs &= rs - 1;
        if (((image_results >> f[x]) & 1U) == 0) {
          return Verdict<MorphismFailure>::fail(
              {MorphismFailure::Kind::not_preserved, Triple{x, y, z}, 0});
        }
      }
    }
  }
  return {};
}

Verdict<MorphismFailure> check_bounded_morphism(const TernaryStructure& src,
                                                const TernaryStructure& dst, const ElementMap& f) {
  if (auto m = check_morphism(src, dst, f); !m) return m;
  const auto n = src.size();
  const auto m = dst.size();
  std::vector<Mask> preimage(m, 0);
  for (Element x = 0; x < n; ++x) preimage[f[x]] |= bit(x);
  for (Element x = 0; x < n; ++x) {
    for (Element v = 0; v < m; ++v) {
      for (Element w = 0; w < m; ++w) {
        if (!dst.contains(f[x], v, w)) continue;
        bool found = false;
        for_each_bit(preimage[v], [&](Element y) {
          for_each_bit(preimage[w], [&](Element z) { found = found || src.contains(x, y, z); });
        });
        if (!found) {
          return Verdict<MorphismFailure>::fail(
              {MorphismFailure::Kind::not_reflected, Triple{f[x], v, w}, x});
        }
      }
    }
  }
  return {};
}

Verdict<MorphismFailure> check(const TernaryStructure& src, const TernaryStructure& dst,
                               const MorphismWitness& w) {
  return w.bounded ? check_bounded_morphism(src, dst, w.map) : check_morphism(src, dst, w.map);
}

ElementMap compose(const ElementMap& first, const ElementMap& second) {
  ElementMap out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second.at(first[i]);
  return out;
}

}  // namespace relcat
