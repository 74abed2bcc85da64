#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "relcat/canonical.hpp"
#include "relcat/enumerate.hpp"
#include "relcat/examples.hpp"
#include "relcat/suite.hpp"

using namespace relcat;

namespace {

EnumerationSpec spec_for(std::size_t n, StructureClass c, std::vector<std::string> require = {},
                         Strategy strategy = Strategy::automatic) {
  EnumerationSpec spec;
  spec.size = n;
  spec.target_class = c;
  spec.require = std::move(require);
  spec.strategy = strategy;
  return spec;
}

std::vector<TernaryStructure> structures(const EnumerationSpec& spec) {
  std::vector<TernaryStructure> out;
  for (const auto& f : enumerate(spec).forms) out.push_back(f.structure);
  return out;
}

std::vector<TernaryStructure> all_relations_of_size_2() {
  std::vector<TernaryStructure> out;
  for (std::uint64_t code = 0; code < 256; ++code) out.push_back(oracle::from_code(2, code));
  return out;
}

bool includes_isomorph(const std::vector<TernaryStructure>& family, const TernaryStructure& s) {
  return std::any_of(family.begin(), family.end(),
                     [&](const TernaryStructure& t) { return oracle::isomorphic(t, s); });
}

}  // namespace

TEST_SUITE("canonical form") {
  TEST_CASE("permuted copies share one canonical form with a valid certificate") {
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::uniform_int_distribution<std::uint64_t> pick(
          0, n * n * n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n * n)) - 1);
      for (int probe = 0; probe < 20; ++probe) {
        const TernaryStructure s = oracle::from_code(n, pick(rng));
        const CanonicalForm c = canonicalize(s);
        CHECK(relabel(s, c.certificate) == c.structure);
        CHECK(c.encoding == encode(c.structure));
        CHECK(is_canonical(c.structure));
        const TernaryStructure t = relabel(s, oracle::random_permutation(n, rng));
        CHECK(canonicalize(t).encoding == c.encoding);
        CHECK(isomorphic(s, t));
      }
    }
  }

  TEST_CASE("two-unit structure has a stable canonical form") {
    const CanonicalForm a = canonicalize(two_unit_monoid());
    const CanonicalForm b = canonicalize(relabel(two_unit_monoid(), std::vector<Element>{1, 0}));
    CHECK(a.structure == b.structure);
    CHECK(a.encoding == b.encoding);
    CHECK(automorphism_count(two_unit_monoid()) == 2);
  }

  TEST_CASE("encoding order is result, left, right with the first triple most significant") {
    const Encoding e = encode(TernaryStructure(2, {{0, 0, 0}}));
    CHECK(e[0] == (std::uint64_t{1} << 63));
    const Encoding last = encode(TernaryStructure(2, {{1, 1, 1}}));
    CHECK(last[0] == (std::uint64_t{1} << (63 - 7)));
    CHECK(last < e);
  }

  TEST_CASE("the 256 relations on two elements split into 136 classes") {
    const auto all = all_relations_of_size_2();
    const auto reps = oracle::classes(all);
    CHECK(reps.size() == 136);

    std::map<Encoding, std::size_t> orbit;
    for (const auto& s : all) ++orbit[canonicalize(s).encoding];
    CHECK(orbit.size() == reps.size());
    std::size_t total = 0;
    for (const auto& [enc, size] : orbit) total += size;
    CHECK(total == 256);

    // Orbit size is n! over the number of automorphisms.
    for (const auto& r : reps) {
      CHECK(orbit[canonicalize(r).encoding] == 2 / automorphism_count(r));
    }
  }

  TEST_CASE("isomorphism test agrees with pair testing on size 2") {
    const auto all = all_relations_of_size_2();
    for (std::size_t i = 0; i < all.size(); i += 5) {
      for (std::size_t j = 0; j < all.size(); j += 3) {
        CHECK(isomorphic(all[i], all[j]) == oracle::isomorphic(all[i], all[j]));
      }
    }
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS((void)canonicalize(TernaryStructure(kMaxCanonicalCarrier + 1)), Error);
    CHECK_NOTHROW((void)canonicalize(TernaryStructure(kMaxCanonicalCarrier)));
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("every class at size 2 matches the naive filter") {
    const auto all = all_relations_of_size_2();
    for (StructureClass c : all_structure_classes()) {
      std::vector<TernaryStructure> members;
      for (const auto& s : all) {
        if (classify(s).is(c)) members.push_back(s);
      }
      const auto expected = oracle::classes(members);
      CAPTURE(to_string(c));
      const auto relational = structures(spec_for(2, c, {}, Strategy::relational));
      CHECK(relational.size() == expected.size());
      for (const auto& s : expected) CHECK(includes_isomorph(relational, s));
      CHECK(count_classes(2, c) == expected.size());
      if (implies_weakly_functional(c)) {
        CHECK(structures(spec_for(2, c, {}, Strategy::functional)).size() == expected.size());
      }
    }
  }

  TEST_CASE("small counts") {
    CHECK(count_classes(1, StructureClass::object_free_category) == 1);
    CHECK(count_classes(2, StructureClass::object_free_category) == 5);
    CHECK(count_classes(2, StructureClass::relational_semigroup) == 28);
    CHECK(count_classes(2, StructureClass::any) == 136);
    CHECK(count_classes(3, StructureClass::relational_monoid) == 368);
    CHECK(count_classes(3, StructureClass::coherent_relational_monoid) == 318);
    CHECK(count_classes(3, StructureClass::partial_monoid) == 29);
    CHECK(count_classes(3, StructureClass::object_free_category) == 18);
    CHECK(count_classes(3, StructureClass::semigroup) == 24);
    CHECK(count_classes(3, StructureClass::monoid) == 11);
    CHECK(count_classes(4, StructureClass::semigroup) == 188);
    CHECK(count_classes(4, StructureClass::monoid) == 53);
    CHECK(count_classes(4, StructureClass::partial_monoid) == 220);
    CHECK(count_classes(4, StructureClass::object_free_category) == 99);
  }

  TEST_CASE("strategies agree on weakly functional classes at size 3") {
    for (StructureClass c : {StructureClass::partial_semigroup, StructureClass::partial_monoid,
                             StructureClass::object_free_category, StructureClass::monoid}) {
      const auto f = structures(spec_for(3, c, {}, Strategy::functional));
      const auto r = structures(spec_for(3, c, {}, Strategy::relational));
      CHECK(f == r);
    }
  }

  TEST_CASE("relational semigroups at size 3: pruned search equals the labelled filter") {
    std::map<Encoding, TernaryStructure> filtered;
    std::size_t labelled = 0;
    for_each_associative(3, false, [&](const TernaryStructure& s) {
      ++labelled;
      CHECK(oracle::associative(s));
      const CanonicalForm c = canonicalize(s);
      filtered.emplace(c.encoding, c.structure);
    });
    CHECK(labelled == 31425);
    const auto found = enumerate(spec_for(3, StructureClass::relational_semigroup));
    REQUIRE(found.forms.size() == filtered.size());
    std::size_t i = 0;
    for (const auto& [enc, s] : filtered) {
      CHECK(found.forms[i].encoding == enc);
      CHECK(found.forms[i].structure == s);
      ++i;
    }
    CHECK(found.forms.size() == 5457);
  }

  TEST_CASE("labelled associative relations at size 2 match the direct filter") {
    std::size_t direct = 0;
    for (const auto& s : all_relations_of_size_2()) direct += oracle::associative(s);
    std::size_t visited = 0;
    for_each_associative(2, false, [&](const TernaryStructure&) { ++visited; });
    CHECK(visited == direct);
    CHECK(direct == 50);
  }

  TEST_CASE("functional mode orbit sizes sum to the number of partial tables") {
    const auto forms = enumerate(spec_for(2, StructureClass::any, {"weakly-functional"}, Strategy::functional)).forms;
    std::size_t total = 0;
    for (const auto& f : forms) total += 2 / automorphism_count(f.structure);
    CHECK(total == 81);
  }

  TEST_CASE("no two representatives are isomorphic and output is sorted") {
    const auto forms = enumerate(spec_for(3, StructureClass::relational_monoid)).forms;
    for (std::size_t i = 1; i < forms.size(); ++i) CHECK(forms[i - 1].encoding < forms[i].encoding);
    const auto reps = structures(spec_for(2, StructureClass::any));
    CHECK(oracle::classes(reps).size() == reps.size());
  }

  TEST_CASE("enumeration is deterministic") {
    const auto a = enumerate(spec_for(3, StructureClass::partial_monoid)).forms;
    const auto b = enumerate(spec_for(3, StructureClass::partial_monoid)).forms;
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].structure == b[i].structure);
  }

  TEST_CASE("separating witnesses are found blind at size 2") {
    const auto multi = structures(spec_for(2, StructureClass::relational_monoid, {"multiple-units"}));
    CHECK(includes_isomorph(multi, two_unit_monoid()));
    const auto incoherent = structures(spec_for(2, StructureClass::relational_monoid, {"not-coherent"}));
    CHECK(includes_isomorph(incoherent, incoherent_monoid()));
    const auto pm = structures(spec_for(2, StructureClass::partial_monoid, {"not-coherent"}));
    CHECK(includes_isomorph(pm, from_partial_algebra(a1_partial_monoid())));
  }

  TEST_CASE("requirements") {
    CHECK(satisfies_requirement(two_unit_monoid(), "multiple-units"));
    CHECK(satisfies_requirement(two_unit_monoid(), "not-single-unit"));
    CHECK(satisfies_requirement(incoherent_monoid(), "not-coherent"));
    CHECK(satisfies_requirement(two_unit_monoid(), "object-free-category"));
    CHECK_THROWS_AS((void)satisfies_requirement(two_unit_monoid(), "no-such-thing"), Error);
    EnumerationSpec bad = spec_for(2, StructureClass::any, {"no-such-thing"});
    CHECK_THROWS_AS((void)enumerate(bad), Error);
  }

  TEST_CASE("count and witness modes") {
    EnumerationSpec spec = spec_for(3, StructureClass::partial_monoid);
    spec.mode = EnumerationMode::count;
    const auto counted = enumerate(spec);
    CHECK(counted.count == 29);
    CHECK(counted.forms.empty());
    spec.mode = EnumerationMode::witnesses;
    spec.witness_limit = 3;
    const auto witnesses = enumerate(spec);
    CHECK(witnesses.forms.size() == 3);
    std::size_t visited = 0;
    enumerate(spec_for(3, StructureClass::partial_monoid), [&](const CanonicalForm&) { return ++visited < 5; });
    CHECK(visited == 5);
  }

  TEST_CASE("size guards") {
    auto kind = [](const EnumerationSpec& s) {
      try {
        (void)enumerate(s);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::invalid_argument;
    };
    CHECK(kind(spec_for(7, StructureClass::relational_semigroup)) == ErrorKind::size_limit_exceeded);
    CHECK(kind(spec_for(6, StructureClass::partial_monoid, {}, Strategy::functional)) ==
          ErrorKind::size_limit_exceeded);
  }
}

TEST_SUITE("lemma suite") {
  TEST_CASE("size bound 2 finds every separating witness") {
    const SuiteReport r = verify_lemma_suite(2);
    for (const char* id : {"separation-multiple-units", "separation-incoherent-monoid",
                           "separation-incoherent-partial-monoid", "separation-multioperation"}) {
      REQUIRE(r.find(id) != nullptr);
      CHECK(r.find(id)->passed);
    }
    REQUIRE(r.find("coherence-equivalence") != nullptr);
    CHECK(r.find("coherence-equivalence")->passed);
    CHECK(r.find("category-laws")->passed);
  }

  TEST_CASE("one-sided units are reported, not hidden") {
    const SuiteReport r = verify_lemma_suite(2);
    CHECK_FALSE(r.find("unique-units")->passed);
    CHECK_FALSE(r.find("item-6")->passed);
    CHECK(unit_lemma_violations(two_unit_monoid()).empty());
    const TernaryStructure band(2, {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    CHECK(unit_lemma_violations(band) == std::vector<std::string>{"unique-units"});
  }

  TEST_CASE("size guard") { CHECK_THROWS_AS((void)verify_lemma_suite(5), Error); }
}
