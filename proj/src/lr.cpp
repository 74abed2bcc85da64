#include "relcat/lr.hpp"

#include <string>

namespace relcat {

namespace {

std::string str(Element x) { return std::to_string(x); }

std::optional<Element> unique_bit(Mask m) {
  if (m == 0 || (m & (m - 1)) != 0) return std::nullopt;
  return static_cast<Element>(std::countr_zero(m));
}

}  // namespace

SourceTarget derive_ell_r(const TernaryStructure& s) {
  if (auto m = check_relational_monoid(s); !m) {
    throw Error(ErrorKind::not_relational_monoid, m.counterexample->description,
                m.counterexample);
  }
  const Mask e = units(s).all();
  const auto n = s.size();
  SourceTarget st{ElementMap(n), ElementMap(n)};
  for (Element x = 0; x < n; ++x) {
    Mask lefts = 0;
    Mask rights = 0;
    for_each_bit(e, [&](Element u) {
      if (s.contains(x, u, x)) lefts |= bit(u);
      if (s.contains(x, x, u)) rights |= bit(u);
    });
    const auto l = unique_bit(lefts);
    const auto r = unique_bit(rights);
    if (!l || !r) {
      throw Error(ErrorKind::not_relational_monoid,
                  "element " + str(x) + " has no unique " + (l ? "right" : "left") + " unit",
                  Witness{"unique-units", {x}, "units are not unique for " + str(x)});
    }
    st.ell[x] = *l;
    st.rr[x] = *r;
  }
  return st;
}

LawReport verify_props3(const TernaryStructure& s) {
  const SourceTarget st = derive_ell_r(s);
  const auto& l = st.ell;
  const auto& r = st.rr;
  const auto n = static_cast<Element>(s.size());
  std::optional<Witness> w1, w2, w3, w4, w5, w6;

  for (Element x = 0; x < n; ++x) {
    if (!w1 && (r[l[x]] != l[x] || l[r[x]] != r[x])) {
      w1 = Witness{"item-1", {x}, "r(l x) != l x or l(r x) != r x for x=" + str(x)};
    }
    if (!w2 && (!s.contains(x, l[x], x) || !s.contains(x, x, r[x]))) {
      w2 = Witness{"item-2", {x}, "l x . x or x . r x differs from x for x=" + str(x)};
    }
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Mask xy = s.results(x, y);
      for_each_bit(xy, [&](Element v) {
        if (!w3) {
          for_each_bit(s.results(x, l[y]), [&](Element w) {
            if (!w3 && l[v] != l[w]) {
              w3 = Witness{"item-3", {v, x, y, w},
                           "R^v_{xy}, R^w_{x(l y)} but l v != l w, v=" + str(v) + " w=" + str(w)};
            }
          });
          for_each_bit(s.results(r[x], y), [&](Element w) {
            if (!w3 && r[v] != r[w]) {
              w3 = Witness{"item-3", {v, x, y, w},
                           "R^v_{xy}, R^w_{(r x)y} but r v != r w, v=" + str(v) + " w=" + str(w)};
            }
          });
        }
        if (!w4 && (l[v] != l[x] || r[v] != r[y])) {
          w4 = Witness{"item-4", {v, x, y}, "R^v_{xy} but l v != l x or r v != r y"};
        }
        if (!w6 && s.results(r[x], y) != s.results(y, r[v])) {
          w6 = Witness{"item-6", {v, x, y},
                       "R^u_{xy} but (r x) y and y (r u) differ, u=" + str(v)};
        }
      });
      if (xy != 0 && !w5 && s.results(r[x], l[y]) != s.results(l[y], r[x])) {
        w5 = Witness{"item-5", {x, y}, "D^x_y but (r x)(l y) and (l y)(r x) differ"};
      }
    }
  }

  LawReport report;
  report.add("item-1", w1);
  report.add("item-2", w2);
  report.add("item-3", w3);
  report.add("item-4", w4);
  report.add("item-5", w5);
  report.add("item-6", w6);
  return report;
}

Verdict<Witness> coherent_via_units(const TernaryStructure& s) {
  const Mask e = units(s).all();
  const DefinednessRelation d(s);
  const auto n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (d.contains(x, y)) continue;
      Mask via = d.row(x) & e;
      while (via != 0) {
        const auto u = static_cast<Element>(std::countr_zero(via));
        via &= via - 1;
        if (d.contains(u, y)) {
          return Verdict<Witness>::fail({"coherence-via-units", {x, u, y},
                                         "D^x_e and D^e_y but not D^x_y"});
        }
      }
    }
  }
  return {};
}

Verdict<Witness> coherent_via_source_target(const TernaryStructure& s) {
  const SourceTarget st = derive_ell_r(s);
  const auto n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (st.rr[x] == st.ell[y] && !s.defined(x, y)) {
        return Verdict<Witness>::fail({"coherence-via-source-target", {x, y},
                                       "r x = l y but not D^x_y"});
      }
    }
  }
  return {};
}

Verdict<Witness> definedness_forces_matching(const TernaryStructure& s) {
  const SourceTarget st = derive_ell_r(s);
  const auto n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s.defined(x, y) && st.rr[x] != st.ell[y]) {
        return Verdict<Witness>::fail({"definedness-matching", {x, y}, "D^x_y but r x != l y"});
      }
    }
  }
  return {};
}

void validate(const LrStructure& l) {
  if (l.size > kMaxCarrier) throw Error(ErrorKind::carrier_too_large, "l r-structure too large");
  if (l.ell.size() != l.size || l.rr.size() != l.size || l.table.size() != l.size * l.size) {
    throw Error(ErrorKind::invalid_argument, "l r-structure arrays do not match its size");
  }
  for (Element x = 0; x < l.size; ++x) {
    if (l.ell[x] >= l.size || l.rr[x] >= l.size) {
      throw Error(ErrorKind::invalid_argument, "source or target out of range");
    }
  }
  for (Element x = 0; x < l.size; ++x) {
    for (Element y = 0; y < l.size; ++y) {
      const auto& entry = l.table[x * l.size + y];
      if (entry && *entry >= l.size) {
        throw Error(ErrorKind::invalid_argument, "composition result out of range");
      }
      if (entry.has_value() != l.defined(x, y)) {
        throw Error(ErrorKind::lr_axiom_violation,
                    "composition must be defined exactly when r x = l y",
                    Witness{"definedness", {x, y},
                            "pair (" + str(x) + "," + str(y) + ") violates D^x_y <=> r x = l y"});
      }
    }
  }
}

LawReport check_lr_reduced_laws(const LrStructure& l) {
  validate(l);
  const auto n = static_cast<Element>(l.size);
  const auto& ell = l.ell;
  const auto& rr = l.rr;
  std::optional<Witness> rl, lr, left_id, right_id, src, tgt, assoc;

  for (Element x = 0; x < n; ++x) {
    if (!rl && rr[ell[x]] != ell[x]) rl = Witness{"r-of-l", {x}, "r(l x) != l x"};
    if (!lr && ell[rr[x]] != rr[x]) lr = Witness{"l-of-r", {x}, "l(r x) != r x"};
    if (!left_id && (!l.defined(ell[x], x) || l.compose(ell[x], x) != x)) {
      left_id = Witness{"left-identity", {x}, "l x . x != x"};
    }
    if (!right_id && (!l.defined(x, rr[x]) || l.compose(x, rr[x]) != x)) {
      right_id = Witness{"right-identity", {x}, "x . r x != x"};
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!l.defined(x, y)) continue;
      const Element xy = l.compose(x, y);
      if (!src && ell[xy] != ell[x]) src = Witness{"source-of-product", {x, y}, "l(x.y) != l x"};
      if (!tgt && rr[xy] != rr[y]) tgt = Witness{"target-of-product", {x, y}, "r(x.y) != r y"};
      for (Element z = 0; z < n && !assoc; ++z) {
        if (!l.defined(y, z)) continue;
        const Element yz = l.compose(y, z);
        if (!l.defined(xy, z) || !l.defined(x, yz) ||
            l.compose(xy, z) != l.compose(x, yz)) {
          assoc = Witness{"associativity", {x, y, z}, "(x.y).z != x.(y.z)"};
        }
      }
    }
  }

  LawReport report;
  report.add("r-of-l", rl);
  report.add("l-of-r", lr);
  report.add("left-identity", left_id);
  report.add("right-identity", right_id);
  report.add("source-of-product", src);
  report.add("target-of-product", tgt);
  report.add("associativity", assoc);
  return report;
}

LawReport check_lr_semigroup_definition(const TernaryStructure& s, const SourceTarget& maps,
                                        bool partial) {
  const auto n = static_cast<Element>(s.size());
  if (maps.ell.size() != n || maps.rr.size() != n) {
    throw Error(ErrorKind::invalid_argument, "source/target maps do not match the carrier");
  }
  const auto& l = maps.ell;
  const auto& r = maps.rr;
  LawReport report;

  auto a = is_rel_associative(s);
  report.add("relational-associativity",
             a ? std::nullopt : std::optional<Witness>(to_witness(*a.counterexample)));

  std::optional<Witness> w1, w2, w4, wd, wl, wr;
  for (Element x = 0; x < n; ++x) {
    if (!w1 && (r[l[x]] != l[x] || l[r[x]] != r[x])) w1 = Witness{"item-1", {x}, "item (1) fails"};
    if (!w2 && (!s.contains(x, l[x], x) || !s.contains(x, x, r[x]))) {
      w2 = Witness{"item-2", {x}, "item (2) fails"};
    }
    if (!wl && (s.results(l[x], x) & ~bit(x)) != 0) {
      wl = Witness{"left-absorption", {x}, "R^y_{(l x)x} with y != x"};
    }
    if (!wr && (s.results(x, r[x]) & ~bit(x)) != 0) {
      wr = Witness{"right-absorption", {x}, "R^y_{x(r x)} with y != x"};
    }
    for (Element y = 0; y < n; ++y) {
      if (!wd && s.defined(x, y) != (r[x] == l[y])) {
        wd = Witness{"definedness", {x, y}, "D^x_y <=> r x = l y fails"};
      }
      for_each_bit(s.results(x, y), [&](Element v) {
        if (!w4 && (l[v] != l[x] || r[v] != r[y])) {
          w4 = Witness{"item-4", {v, x, y}, "item (4) fails"};
        }
      });
    }
  }
  report.add("item-1", w1);
  report.add("item-2", w2);
  report.add("item-4", w4);
  report.add("definedness", wd);
  report.add("left-absorption", wl);
  report.add("right-absorption", wr);
  if (partial) {
    auto wf = is_weakly_functional(s);
    report.add("weak-functionality", wf ? std::nullopt
                                        : std::optional<Witness>(
                                              to_witness(*wf.counterexample, false)));
  }
  return report;
}

LrStructure to_lr(const TernaryStructure& s) {
  const Classification c = classify(s);
  if (!c.object_free_category) {
    const Witness* w = nullptr;
    for (const char* axiom : {"associativity", "unit-cover", "weak-functionality", "coherence"}) {
      if ((w = c.failure(axiom)) != nullptr) break;
    }
    throw Error(ErrorKind::not_object_free_category,
                "not a coherent partial monoid" + (w ? " (" + w->axiom + ")" : std::string()),
                w ? std::optional<Witness>(*w) : std::nullopt);
  }
  const SourceTarget st = derive_ell_r(s);
  const PartialAlgebra p = to_partial_algebra(s);
  LrStructure l{s.size(), st.ell, st.rr, p.table};
  validate(l);
  return l;
}

TernaryStructure lr_relation(const LrStructure& l) {
  std::vector<Triple> triples;
  for (Element x = 0; x < l.size; ++x) {
    for (Element y = 0; y < l.size; ++y) {
      if (const auto& e = l.table[x * l.size + y]) triples.push_back({*e, x, y});
    }
  }
  return TernaryStructure(l.size, triples);
}

TernaryStructure from_lr(const LrStructure& l) {
  const LawReport laws = check_lr_reduced_laws(l);
  if (const LawResult* bad = laws.first_failure()) {
    throw Error(ErrorKind::lr_axiom_violation, "law " + bad->law + " fails", bad->counterexample);
  }
  return lr_relation(l);
}

Verdict<Witness> check_lr_morphism(const LrStructure& src, const LrStructure& dst,
                                   const ElementMap& f, bool bounded) {
  const TernaryStructure a = lr_relation(src);
  const TernaryStructure b = lr_relation(dst);
  const auto m = bounded ? check_bounded_morphism(a, b, f) : check_morphism(a, b, f);
  if (!m) return Verdict<Witness>::fail(to_witness(*m.counterexample));
  for (Element x = 0; x < src.size; ++x) {
    if (f[src.ell[x]] != dst.ell[f[x]]) {
      return Verdict<Witness>::fail({"preserves-source", {x}, "f(l x) != l'(f x)"});
    }
    if (f[src.rr[x]] != dst.rr[f[x]]) {
      return Verdict<Witness>::fail({"preserves-target", {x}, "f(r x) != r'(f x)"});
    }
  }
  return {};
}

bool preserves_units(const TernaryStructure& src, const TernaryStructure& dst, const ElementMap& f) {
  const Mask target_units = units(dst).all();
  bool ok = true;
  for_each_bit(units(src).all(), [&](Element e) { ok = ok && ((target_units >> f[e]) & 1U); });
  return ok;
}

}  // namespace relcat
