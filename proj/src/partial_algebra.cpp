#include "relcat/partial_algebra.hpp"

#include <algorithm>
#include <string>

namespace relcat {

namespace {

std::string str(Element x) { return std::to_string(x); }

void validate_map(std::size_t src, std::size_t dst, const ElementMap& f) {
  if (f.size() != src) throw Error(ErrorKind::invalid_argument, "map does not cover the source");
  for (Element y : f) {
    if (y >= dst) throw Error(ErrorKind::invalid_argument, "map image outside target");
  }
}

}  // namespace

std::vector<std::pair<Element, Element>> PartialAlgebra::defined_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      if (defined(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

void validate(const PartialAlgebra& p) {
  if (p.size > kMaxCarrier) throw Error(ErrorKind::carrier_too_large, "partial algebra too large");
  if (p.table.size() != p.size * p.size) {
    throw Error(ErrorKind::invalid_argument, "composition table must have size^2 entries");
  }
  for (const auto& entry : p.table) {
    if (entry && *entry >= p.size) {
      throw Error(ErrorKind::invalid_argument, "composition result " + str(*entry) + " out of range");
    }
  }
  if (!std::is_sorted(p.units.begin(), p.units.end()) ||
      std::adjacent_find(p.units.begin(), p.units.end()) != p.units.end()) {
    throw Error(ErrorKind::invalid_argument, "unit set must be ascending and duplicate free");
  }
  for (Element e : p.units) {
    if (e >= p.size) throw Error(ErrorKind::invalid_argument, "unit " + str(e) + " out of range");
  }
}

ElementSet algebraic_units(const PartialAlgebra& p) {
  ElementSet out;
  for (Element e = 0; e < p.size; ++e) {
    bool left_exists = false;
    bool left_ok = true;
    bool right_exists = false;
    bool right_ok = true;
    for (Element x = 0; x < p.size; ++x) {
      if (p.defined(e, x)) {
        left_exists = true;
        left_ok = left_ok && p.compose(e, x) == x;
      }
      if (p.defined(x, e)) {
        right_exists = true;
        right_ok = right_ok && p.compose(x, e) == x;
      }
    }
    if ((left_exists && left_ok) || (right_exists && right_ok)) out.push_back(e);
  }
  return out;
}

PartialAlgebra to_partial_algebra(const TernaryStructure& s) {
  if (auto wf = is_weakly_functional(s); !wf) {
    throw Error(ErrorKind::not_weakly_functional, "some pair has several composition results",
                to_witness(*wf.counterexample, false));
  }
  PartialAlgebra p;
  p.size = s.size();
  p.table.resize(p.size * p.size);
  for (Element x = 0; x < p.size; ++x) {
    for (Element y = 0; y < p.size; ++y) {
      const Mask r = s.results(x, y);
      if (r != 0) p.table[x * p.size + y] = static_cast<Element>(std::countr_zero(r));
    }
  }
  p.units = to_set(units(s).all());
  return p;
}

TernaryStructure from_partial_algebra(const PartialAlgebra& p) {
  validate(p);
  std::vector<Triple> triples;
  for (auto [y, z] : p.defined_pairs()) triples.push_back({p.compose(y, z), y, z});
  return TernaryStructure(p.size, triples);
}

LawReport verify_ahs_laws(const PartialAlgebra& p) {
  validate(p);
  const auto n = static_cast<Element>(p.size);
  LawReport report;

  std::optional<Witness> def_assoc;
  std::optional<Witness> assoc;
  std::optional<Witness> coherence;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const bool left = p.defined(x, y) && p.defined(p.compose(x, y), z);
        const bool right = p.defined(y, z) && p.defined(x, p.compose(y, z));
        if (left != right && !def_assoc) {
          def_assoc = Witness{"definedness-associativity",
                              {x, y, z},
                              std::string(left ? "(x.y).z" : "x.(y.z)") + " defined but not " +
                                  (left ? "x.(y.z)" : "(x.y).z") + " for x=" + str(x) +
                                  " y=" + str(y) + " z=" + str(z)};
        }
        if (left && right && !assoc &&
            p.compose(p.compose(x, y), z) != p.compose(x, p.compose(y, z))) {
          assoc = Witness{"associativity", {x, y, z},
                          "(x.y).z != x.(y.z) for x=" + str(x) + " y=" + str(y) + " z=" + str(z)};
        }
        if (p.defined(x, y) && p.defined(y, z) && !p.defined(p.compose(x, y), z) && !coherence) {
          coherence = Witness{"coherence", {x, y, z},
                              "D^" + str(x) + "_" + str(y) + " and D^" + str(y) + "_" + str(z) +
                                  " but not D^{x.y}_" + str(z)};
        }
      }
    }
  }

  std::optional<Witness> left_units;
  std::optional<Witness> right_units;
  for (Element x = 0; x < n; ++x) {
    const bool l = std::any_of(p.units.begin(), p.units.end(),
                               [&](Element e) { return p.defined(e, x); });
    const bool r = std::any_of(p.units.begin(), p.units.end(),
                               [&](Element e) { return p.defined(x, e); });
    if (!l && !left_units) {
      left_units = Witness{"left-units", {x}, "no unit e with D^e_" + str(x)};
    }
    if (!r && !right_units) {
      right_units = Witness{"right-units", {x}, "no unit e with D^" + str(x) + "_e"};
    }
  }

  report.add("definedness-associativity", def_assoc);
  report.add("associativity", assoc);
  report.add("left-units", left_units);
  report.add("right-units", right_units);
  report.add("coherence", coherence);
  return report;
}

Verdict<Witness> check_algebraic_morphism(const PartialAlgebra& src, const PartialAlgebra& dst,
                                          const ElementMap& f) {
  validate_map(src.size, dst.size, f);
  for (auto [x, y] : src.defined_pairs()) {
    if (!dst.defined(f[x], f[y])) {
      return Verdict<Witness>::fail({"morphism-definedness", {x, y},
                                     "D^" + str(x) + "_" + str(y) + " not preserved"});
    }
    if (f[src.compose(x, y)] != dst.compose(f[x], f[y])) {
      return Verdict<Witness>::fail({"morphism-composition", {x, y},
                                     "f(" + str(x) + "." + str(y) + ") != f x . f y"});
    }
  }
  return {};
}

Verdict<Witness> check_algebraic_bounded_morphism(const PartialAlgebra& src,
                                                  const PartialAlgebra& dst, const ElementMap& f) {
  if (auto m = check_algebraic_morphism(src, dst, f); !m) return m;
  for (Element x = 0; x < src.size; ++x) {
    for (auto [u, v] : dst.defined_pairs()) {
      if (dst.compose(u, v) != f[x]) continue;
      bool found = false;
      for (auto [y, z] : src.defined_pairs()) {
        if (f[y] == u && f[z] == v && src.compose(y, z) == x) {
          found = true;
          break;
        }
      }
      if (!found) {
        return Verdict<Witness>::fail({"bounded-morphism", {x, u, v},
                                       "f " + str(x) + " = " + str(u) + " . " + str(v) +
                                           " has no preimage decomposition"});
      }
    }
  }
  return {};
}

}  // namespace relcat
