#include "relcat/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "relcat/axioms.hpp"
#include "relcat/canonical.hpp"
#include "relcat/category.hpp"
#include "relcat/enumerate.hpp"
#include "relcat/examples.hpp"
#include "relcat/lr.hpp"
#include "relcat/partial_algebra.hpp"
#include "relcat/quantale.hpp"
#include "relcat/zero.hpp"

namespace relcat {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const TernaryStructure& s) {
  std::string out = "n=" + std::to_string(s.size()) + " {";
  bool first = true;
  for (const auto& t : s.triples()) {
    out += (first ? "" : " ") + to_string(t);
    first = false;
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<TernaryStructure> representatives(std::size_t size, StructureClass c, Strategy strategy,
                                              std::vector<std::string> require = {}) {
  EnumerationSpec spec;
  spec.size = size;
  spec.target_class = c;
  spec.strategy = strategy;
  spec.require = std::move(require);
  std::vector<TernaryStructure> out;
  for (auto& f : enumerate(spec).forms) out.push_back(std::move(f.structure));
  return out;
}

bool contains_isomorphic(const std::vector<TernaryStructure>& family, const TernaryStructure& s) {
  const Encoding target = canonicalize(s).encoding;
  return std::any_of(family.begin(), family.end(), [&](const TernaryStructure& t) {
    return t.size() == s.size() && canonicalize(t).encoding == target;
  });
}

bool two_sided_units(const TernaryStructure& s) {
  const UnitSets u = units(s);
  return u.left == u.right;
}

bool is_incoherence(const TernaryStructure& s, const CoherenceFailure& f) {
  return s.contains(f.v, f.x, f.y) && s.defined(f.y, f.z) && !s.defined(f.v, f.z);
}

// --- individual criteria -------------------------------------------------

std::vector<SuiteLine> impartial(const SuiteOptions&) {
  const TernaryStructure s = shuffle_bounded(2, 2);
  const auto words = shuffle_words(2, 2);
  auto index = [&](const std::string& w) {
    return static_cast<Element>(std::find(words.begin(), words.end(), w) - words.begin());
  };
  const bool monoid = check_relational_monoid(s).holds();
  const auto wf = is_weakly_functional(s);
  const bool witness = !wf && wf.counterexample->left == index("a") &&
                       wf.counterexample->right == index("b") &&
                       wf.counterexample->results == (bit(index("ab")) | bit(index("ba")));
  const bool unit = units(s).all() == bit(index(""));
  SuiteLine line;
  line.passed = monoid && witness && unit;
  line.detail = "relational monoid: " + yes_no(monoid) +
                "; weak functionality fails at (a,b) with results {ab,ba}: " + yes_no(witness) +
                "; unit set exactly {ε}: " + yes_no(unit);
  return {line};
}

std::vector<SuiteLine> multiple_units(const SuiteOptions&) {
  const TernaryStructure s = two_unit_monoid();
  const Classification c = classify(s);
  const bool ofc = c.object_free_category;
  const bool two = std::popcount(c.unit_sets.all()) == 2;
  const auto found = representatives(2, StructureClass::relational_monoid, Strategy::automatic,
                                     {"multiple-units"});
  const bool includes = contains_isomorphic(found, s);
  SuiteLine line;
  line.passed = ofc && two && !found.empty() && includes;
  line.detail = "object-free category: " + yes_no(ofc) + "; two units: " + yes_no(two) +
                "; enumeration at size 2 found " + std::to_string(found.size()) +
                " relational monoid(s) with several units, two-unit structure among them: " +
                yes_no(includes);
  return {line};
}

std::vector<SuiteLine> incoherent(const SuiteOptions&) {
  const TernaryStructure s = incoherent_monoid();
  const Element e = 0;
  const Element a = 1;
  const bool monoid = check_relational_monoid(s).holds();
  const auto coherence = is_coherent(s);
  bool pattern = false;
  if (!coherence) {
    const auto& f = *coherence.counterexample;
    pattern = is_incoherence(s, f) && f.y == e && f.z == a && f.v == a;
  }
  const auto found = representatives(2, StructureClass::relational_monoid, Strategy::automatic,
                                     {"not-coherent"});
  const bool rediscovered = contains_isomorphic(found, s);
  SuiteLine line;
  line.passed = monoid && !coherence && pattern && rediscovered;
  line.detail = "relational monoid: " + yes_no(monoid) + "; coherent: " + yes_no(coherence.holds()) +
                "; witness D^e_a and not D^a_a: " + yes_no(pattern) +
                "; rediscovered by enumeration at size 2: " + yes_no(rediscovered);
  return {line};
}

std::vector<SuiteLine> incoherent_partial(const SuiteOptions&) {
  SuiteLine line;
  line.passed = true;
  for (const auto& [name, algebra] :
       {std::pair{std::string("a1-partial-monoid"), a1_partial_monoid()},
        std::pair{std::string("disjoint-partial-functions-2"), disjoint_partial_functions(2)}}) {
    const TernaryStructure s = from_partial_algebra(algebra);
    const Classification c = classify(s);
    const auto coherence = is_coherent(s);
    const bool witness = !coherence && is_incoherence(s, *coherence.counterexample);
    const LawReport laws = verify_ahs_laws(algebra);
    const LawResult* law = laws.find("coherence");
    const bool algebraic = law != nullptr && !law->holds();
    const bool ok = c.partial_monoid && !c.object_free_category && witness && algebraic;
    line.passed = line.passed && ok;
    line.detail += (line.detail.empty() ? "" : "; ") + name + ": partial monoid " +
                   yes_no(c.partial_monoid) + ", object-free category " +
                   yes_no(c.object_free_category) + ", coherence witness " + yes_no(witness);
    if (witness) {
      const auto& f = *coherence.counterexample;
      line.detail += " (v,x,y,z)=(" + std::to_string(f.v) + "," + std::to_string(f.x) + "," +
                     std::to_string(f.y) + "," + std::to_string(f.z) + ")";
    }
  }
  return {line};
}

std::vector<SuiteLine> weak_unit_demo(const SuiteOptions&) {
  const TernaryStructure base = two_unit_monoid();
  const ZeroedStructure z = adjoin_zero(base);
  const auto& s = z.structure();
  const Element e = 0;
  const Element f = 1;
  const Element o = z.zero();
  const bool no_units = units(s).all() == 0;
  const bool weak = weak_units(z).all() == (bit(e) | bit(f));
  const bool total = s.definedness().total();
  std::vector<Triple> expected{{e, e, e}, {f, f, f}, {o, e, o}, {o, o, e}, {o, f, o},
                               {o, o, f}, {o, o, o}, {o, e, f}, {o, f, e}};
  std::sort(expected.begin(), expected.end());
  const bool triples = s.triples() == expected;
  SuiteLine line;
  line.passed = no_units && weak && total && triples;
  line.detail = "units after adjunction empty: " + yes_no(no_units) + "; weak units {e,e'}: " +
                yes_no(weak) + "; D total: " + yes_no(total) +
                "; triples equal the forced list plus base: " + yes_no(triples) + " (" +
                std::to_string(s.triple_count()) + " triples)";
  return {line};
}

std::vector<SuiteLine> no_collapse(const SuiteOptions&) {
  const CategoricalSemigroup c = no_collapse_semigroup();
  const Element x = 0;
  const Element o = c.zero;
  const bool laws = check_categorical_semigroup(c).all_hold();
  const bool distinct = c.ell[o] != c.ell[x] && c.rr[o] != c.rr[x];
  bool back = false;
  std::string why;
  try {
    const LrStructure l = from_categorical_semigroup(c);
    (void)from_lr(l);
    back = l.size == 1;
  } catch (const Error& err) {
    why = std::string(" (") + err.what() + ")";
  }
  SuiteLine line;
  line.passed = laws && distinct && back;
  line.detail = "categorical semigroup laws: " + yes_no(laws) + "; l 0 != l x and r 0 != r x: " +
                yes_no(distinct) + "; back to a valid 1-element l r-category: " + yes_no(back) +
                why;
  return {line};
}

std::vector<SuiteLine> unit_lemmas(const SuiteOptions& o) {
  LemmaTally relational;
  LemmaTally relational_two_sided;
  auto start = Clock::now();
  for (std::size_t n = 1; n <= o.relational_bound; ++n) {
    for (const auto& s : representatives(n, StructureClass::relational_monoid, Strategy::relational)) {
      const auto v = unit_lemma_violations(s);
      relational.add(s, v);
      if (two_sided_units(s)) relational_two_sided.add(s, v);
    }
  }
  const double relational_seconds = since(start);

  LemmaTally functional;
  LemmaTally functional_two_sided;
  start = Clock::now();
  for (std::size_t n = 1; n <= o.functional_bound; ++n) {
    for (const auto& s : representatives(n, StructureClass::partial_monoid, Strategy::functional)) {
      const auto v = unit_lemma_violations(s);
      functional.add(s, v);
      if (two_sided_units(s)) functional_two_sided.add(s, v);
    }
  }
  const double functional_seconds = since(start);

  const bool in_time = relational_seconds < 300 && functional_seconds < 60;
  SuiteLine line;
  line.passed = relational.violating == 0 && functional.violating == 0 && in_time;
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << "relational monoids up to size " << o.relational_bound << ": "
    << relational.summary() << " [" << relational_seconds << " s, limit 300]; partial monoids up to size "
    << o.functional_bound << ": " << functional.summary() << " [" << functional_seconds
    << " s, limit 60]";
  line.detail = d.str();

  SuiteLine info;
  info.id = "unit-lemmas-two-sided";
  info.claim = "same sweep restricted to structures whose units are all two-sided";
  info.informational = true;
  info.passed = relational_two_sided.violating == 0 && functional_two_sided.violating == 0;
  info.detail = "relational: " + relational_two_sided.summary() +
                "; functional: " + functional_two_sided.summary();
  return {line, info};
}

std::vector<SuiteLine> round_trips(const SuiteOptions& o) {
  std::uint64_t structures = 0;
  std::uint64_t failures = 0;
  std::string first;
  auto fail = [&](const TernaryStructure& s, const std::string& why) {
    ++failures;
    if (first.empty()) first = why + " on " + describe(s);
  };
  for (std::size_t n = 1; n <= o.round_trip_bound; ++n) {
    for (const auto& s :
         representatives(n, StructureClass::object_free_category, Strategy::automatic)) {
      ++structures;
      try {
        if (from_partial_algebra(to_partial_algebra(s)) != s) {
          fail(s, "partial algebra round trip");
          continue;
        }
        const LrStructure l = to_lr(s);
        if (from_lr(l) != s) {
          fail(s, "l r round trip");
          continue;
        }
        const SmallCategory c = to_category(l);
        if (!check_category_axioms(c).all_hold() || from_category(c) != l) {
          fail(s, "category round trip");
          continue;
        }
        const CategoricalSemigroup cs = to_categorical_semigroup(l);
        if (!check_categorical_semigroup(cs).all_hold() || from_categorical_semigroup(cs) != l) {
          fail(s, "categorical semigroup round trip");
        }
      } catch (const Error& e) {
        fail(s, e.what());
      }
    }
  }

  // Morphisms between every pair of small object-free categories that convert.
  struct Converted {
    TernaryStructure s;
    PartialAlgebra p;
    LrStructure l;
  };
  std::vector<Converted> small;
  for (std::size_t n = 1; n <= o.morphism_bound; ++n) {
    for (const auto& s :
         representatives(n, StructureClass::object_free_category, Strategy::automatic)) {
      try {
        small.push_back({s, to_partial_algebra(s), to_lr(s)});
      } catch (const Error&) {
        // Already counted as a round-trip failure above.
      }
    }
  }
  std::uint64_t maps = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;
  for (const auto& a : small) {
    for (const auto& b : small) {
      const auto n = a.s.size();
      const auto m = b.s.size();
      ElementMap f(n, 0);
      while (true) {
        ++maps;
        const bool tm = check_morphism(a.s, b.s, f).holds();
        const bool tb = check_bounded_morphism(a.s, b.s, f).holds();
        const bool am = check_algebraic_morphism(a.p, b.p, f).holds();
        const bool ab = check_algebraic_bounded_morphism(a.p, b.p, f).holds();
        const bool lm = check_lr_morphism(a.l, b.l, f, false).holds();
        const bool lb = check_lr_morphism(a.l, b.l, f, true).holds();
        const bool pu = preserves_units(a.s, b.s, f);
        std::string what;
        if (tm != am) what = "morphism vs algebraic morphism";
        else if (tb != ab) what = "bounded morphism vs algebraic bounded morphism";
        else if (tb != lb) what = "bounded morphism vs bounded l r morphism";
        else if (lm != (tm && pu)) what = "l r morphism vs unit-preserving morphism";
        else if (tb && !pu) what = "bounded morphism not preserving units";
        if (!what.empty()) {
          ++mismatches;
          if (first_mismatch.empty()) first_mismatch = what + " between " + describe(a.s) + " and " + describe(b.s);
        }
        std::size_t i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) break;
      }
    }
  }

  SuiteLine line;
  line.passed = failures == 0 && mismatches == 0;
  line.detail = std::to_string(structures) + " object-free categories up to size " +
                std::to_string(o.round_trip_bound) + ", " + std::to_string(failures) +
                " round-trip failure(s)" + (first.empty() ? "" : " (first: " + first + ")") +
                "; " + std::to_string(maps) + " maps between " + std::to_string(small.size()) +
                " convertible structures up to size " + std::to_string(o.morphism_bound) + ", " +
                std::to_string(mismatches) + " preservation mismatch(es)" +
                (first_mismatch.empty() ? "" : " (first: " + first_mismatch + ")");
  return {line};
}

std::vector<SuiteLine> powerset_lift(const SuiteOptions& o) {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 1; n <= o.lift_bound; ++n) {
    const LiftSweep sweep = sweep_lifts(n);
    ok = ok && sweep.holds();
    d << "size " << n << ": " << sweep.structures << " structures, eta failures "
      << sweep.eta_failures << ", associative " << sweep.associative << " vs lift-associative "
      << sweep.lift_associative << " (mismatches " << sweep.associativity_mismatches
      << "), partial monoids " << sweep.partial_monoids << " (zero subsemigroup failures "
      << sweep.zero_subsemigroup_failures << ")";
    if (sweep.first_failure) d << " first failure " << describe(*sweep.first_failure);
    d << "; ";
  }
  const TernaryStructure shuffle = shuffle_bounded(2, 2);
  const auto words = shuffle_words(2, 2);
  auto index = [&](const std::string& w) {
    return static_cast<Element>(std::find(words.begin(), words.end(), w) - words.begin());
  };
  const PowersetAlgebra p = lift(shuffle);
  const bool ab = p.product(bit(index("a")), bit(index("b"))) == (bit(index("ab")) | bit(index("ba")));
  const bool eta = check_eta_iso(shuffle).holds();
  const bool two_unit = unit_set_is_identity(lift(two_unit_monoid())).holds();
  ok = ok && ab && eta && two_unit;
  d << "shuffle {a}.{b} = {ab,ba}: " << yes_no(ab) << ", shuffle eta: " << yes_no(eta)
    << ", two-unit lift has unit E: " << yes_no(two_unit);
  SuiteLine line;
  line.passed = ok;
  line.detail = d.str();
  return {line};
}

std::vector<SuiteLine> zero_adjunction(const SuiteOptions& o) {
  std::uint64_t semigroups = 0;
  std::uint64_t assoc_failures = 0;
  std::uint64_t coherence_failures = 0;
  std::uint64_t partial = 0;
  std::uint64_t partial_failures = 0;
  std::uint64_t categories = 0;
  std::uint64_t extract_failures = 0;
  std::string first;
  for (std::size_t n = 1; n <= o.adjunction_bound; ++n) {
    for_each_associative(n, false, [&](const TernaryStructure& s) {
      ++semigroups;
      const ZeroedStructure z = adjoin_zero(s);
      const bool wf = is_weakly_functional(s).holds();
      partial += wf;
      if (!is_rel_associative(z.structure())) {
        ++assoc_failures;
        partial_failures += wf;
        if (first.empty()) first = "associativity lost for " + describe(s);
      }
      if (is_coherent(s) && !is_coherent(z.structure())) {
        ++coherence_failures;
        if (first.empty()) first = "coherence lost for " + describe(s);
      }
      if (belongs_to(s, StructureClass::object_free_category)) {
        ++categories;
        bool back = false;
        try {
          back = extract_subalgebra(z) == s;
        } catch (const Error&) {
        }
        if (!back) {
          ++extract_failures;
          if (first.empty()) first = "extraction differs for " + describe(s);
        }
      }
    });
  }
  SuiteLine line;
  line.passed = assoc_failures == 0 && coherence_failures == 0 && extract_failures == 0;
  line.detail = std::to_string(semigroups) + " relational semigroups up to size " +
                std::to_string(o.adjunction_bound) + " (all labellings): associativity lost in " +
                std::to_string(assoc_failures) + ", coherence lost in " +
                std::to_string(coherence_failures) + "; " + std::to_string(categories) +
                " object-free categories, extraction differs in " +
                std::to_string(extract_failures) + (first.empty() ? "" : "; first: " + first);
  SuiteLine info;
  info.id = "zero-adjunction-partial";
  info.claim = "the same preservation restricted to partial semigroups";
  info.informational = true;
  info.passed = partial_failures == 0;
  info.detail = std::to_string(partial) + " partial semigroups, associativity lost in " +
                std::to_string(partial_failures);
  return {line, info};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const SuiteLine& l) { return l.informational || l.passed; });
}

const SuiteLine* SuiteReport::find(std::string_view id) const {
  for (const auto& l : lines) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

SuiteOptions SuiteOptions::quick() {
  SuiteOptions o;
  o.relational_bound = 2;
  o.functional_bound = 3;
  o.lift_bound = 2;
  o.adjunction_bound = 2;
  o.round_trip_bound = 2;
  o.morphism_bound = 2;
  o.lemma_bound = 2;
  return o;
}

void LemmaTally::add(const TernaryStructure& s, const std::vector<std::string>& violated) {
  ++structures;
  if (violated.empty()) return;
  ++violating;
  for (const auto& law : violated) ++by_law[law];
  if (!first) {
    first = s;
    first_law = violated.front();
  }
}

std::string LemmaTally::summary() const {
  std::string out = std::to_string(structures) + " checked, " + std::to_string(violating) +
                    " violating";
  if (violating == 0) return out;
  out += " (";
  bool sep = false;
  for (const auto& [law, count] : by_law) {
    out += (sep ? ", " : "") + law + " " + std::to_string(count);
    sep = true;
  }
  out += "; first " + first_law + " on " + describe(*first) + ")";
  return out;
}

std::vector<std::string> unit_lemma_violations(const TernaryStructure& s) {
  std::vector<std::string> violated;
  try {
    (void)derive_ell_r(s);
  } catch (const Error&) {
    violated.emplace_back("unique-units");
    return violated;
  }
  for (const auto& r : verify_props3(s).results) {
    if (!r.holds()) violated.push_back(r.law);
  }
  const bool coherent = is_coherent(s).holds();
  if (coherent_via_units(s).holds() != coherent ||
      coherent_via_source_target(s).holds() != coherent) {
    violated.emplace_back("coherence-equivalence");
  }
  if (!definedness_forces_matching(s)) violated.emplace_back("definedness-matching");
  if (belongs_to(s, StructureClass::object_free_category)) {
    for (const auto& r : verify_ahs_laws(to_partial_algebra(s)).results) {
      if (!r.holds()) violated.push_back("category-" + r.law);
    }
  }
  return violated;
}

SuiteReport verify_lemma_suite(std::size_t size_bound) {
  if (size_bound > 4) {
    throw Error(ErrorKind::size_limit_exceeded, "lemma suite is limited to size 4");
  }
  std::vector<TernaryStructure> monoids;
  for (std::size_t n = 1; n <= std::min<std::size_t>(size_bound, 3); ++n) {
    auto reps = representatives(n, StructureClass::relational_monoid, Strategy::relational);
    monoids.insert(monoids.end(), reps.begin(), reps.end());
  }
  if (size_bound == 4) {
    auto reps = representatives(4, StructureClass::partial_monoid, Strategy::functional);
    monoids.insert(monoids.end(), reps.begin(), reps.end());
  }

  std::map<std::string, LemmaTally> tallies;
  const std::vector<std::pair<std::string, std::string>> laws{
      {"unique-units", "every element has exactly one left and one right unit"},
      {"item-1", "r (l x) = l x and l (r x) = r x"},
      {"item-2", "R^x_{(l x) x} and R^x_{x (r x)}"},
      {"item-3", "sources and targets of products agree with those of unit products"},
      {"item-4", "R^v_{xy} gives l v = l x and r v = r y"},
      {"item-5", "D^x_y gives (r x)(l y) = (l y)(r x)"},
      {"item-6", "R^u_{xy} gives (r x) y = y (r u)"},
      {"coherence-equivalence", "coherence, coherence via units and r x = l y => D^x_y agree"},
      {"definedness-matching", "D^x_y gives r x = l y"}};
  SuiteReport report;
  for (const auto& s : monoids) {
    const auto v = unit_lemma_violations(s);
    for (const auto& [law, claim] : laws) {
      tallies[law].add(s, std::find(v.begin(), v.end(), law) != v.end() ? std::vector{law}
                                                                          : std::vector<std::string>{});
    }
    std::vector<std::string> category;
    for (const auto& law : v) {
      if (law.starts_with("category-")) category.push_back(law);
    }
    if (belongs_to(s, StructureClass::object_free_category)) tallies["category-laws"].add(s, category);
  }
  for (const auto& [law, claim] : laws) {
    report.lines.push_back({law, claim, tallies[law].violating == 0, false, tallies[law].summary()});
  }
  report.lines.push_back({"category-laws", "algebraic category laws in every object-free category",
                          tallies["category-laws"].violating == 0, false,
                          tallies["category-laws"].summary()});

  auto separation = [&](const std::string& id, const std::string& claim, auto pred) {
    const auto it = std::find_if(monoids.begin(), monoids.end(), pred);
    SuiteLine line{id, claim, it != monoids.end(), false, ""};
    line.detail = it == monoids.end() ? "no witness up to size " + std::to_string(size_bound)
                                      : "witness " + describe(*it);
    report.lines.push_back(line);
  };
  separation("separation-multiple-units", "a relational monoid with several units",
             [](const TernaryStructure& s) { return std::popcount(units(s).all()) >= 2; });
  separation("separation-incoherent-monoid", "a relational monoid that is not coherent",
             [](const TernaryStructure& s) { return !is_coherent(s); });
  separation("separation-incoherent-partial-monoid", "a partial monoid that is not coherent",
             [](const TernaryStructure& s) {
               return is_weakly_functional(s).holds() && !is_coherent(s);
             });
  separation("separation-multioperation", "a relational monoid that is not weakly functional",
             [](const TernaryStructure& s) { return !is_weakly_functional(s); });
  return report;
}

const std::vector<Criterion>& paper_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "impartial", "bounded shuffle is a relational monoid, not weakly functional, unit ε", 1,
       impartial},
      {2, "multiple-units", "relational monoids may have several units", 1, multiple_units},
      {3, "incoherent-monoid", "a relational monoid need not be coherent", 5, incoherent},
      {4, "incoherent-partial-monoid", "a partial monoid need not be coherent", 5,
       incoherent_partial},
      {5, "weak-units", "adjoining a zero turns units into weak units", 1, weak_unit_demo},
      {6, "no-collapse", "a categorical semigroup keeps distinct sources", 1, no_collapse},
      {7, "unit-lemmas", "source/target and coherence lemmas hold on every small relational monoid",
       360, unit_lemmas},
      {8, "round-trips", "conversions are identities and preserve and reflect morphisms", 120,
       round_trips},
      {9, "powerset-lift", "the complex product lift embeds every small structure", 60,
       powerset_lift},
      {10, "zero-adjunction", "adjoining a zero preserves associativity and coherence", 120,
       zero_adjunction},
  };
  return criteria;
}

SuiteReport run_paper_suite(const SuiteOptions& options, const std::vector<std::string>& only) {
  SuiteReport report;
  for (const auto& c : paper_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = Clock::now();
    std::vector<SuiteLine> lines;
    try {
      lines = c.run(options);
    } catch (const Error& e) {
      lines = {SuiteLine{}};
      lines.front().detail = std::string("error: ") + e.what();
    }
    const double seconds = since(start);
    auto& main = lines.front();
    main.id = c.id;
    main.claim = c.claim;
    main.seconds = seconds;
    if (seconds > c.budget) {
      main.passed = false;
      main.detail += "; over time budget of " + std::to_string(c.budget) + " s";
    }
    for (auto& l : lines) report.lines.push_back(std::move(l));
  }
  auto wanted = [&](const std::string& id) {
    return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
  };
  if (wanted("lemma")) {
    const auto start = Clock::now();
    SuiteReport lemmas = verify_lemma_suite(options.lemma_bound);
    const double seconds = since(start);
    for (auto& l : lemmas.lines) {
      l.id = "lemma:" + l.id;
      l.seconds = seconds;
      report.lines.push_back(std::move(l));
    }
  }
  if (wanted("example")) {
    for (const auto& e : named_examples()) {
      const auto start = Clock::now();
      SuiteLine line{"example:" + e.name, e.description, false, false, ""};
      try {
        const auto bad = expectation_mismatches(e);
        line.passed = bad.empty();
        line.detail = std::to_string(e.expected.size()) + " expectations";
        for (const auto& b : bad) line.detail += "; mismatch " + b;
      } catch (const Error& err) {
        line.detail = std::string("error: ") + err.what();
      }
      line.seconds = since(start);
      report.lines.push_back(std::move(line));
    }
  }
  return report;
}

}  // namespace relcat
