#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "relcat/axioms.hpp"
#include "relcat/enumerate.hpp"
#include "relcat/examples.hpp"
#include "relcat/zero.hpp"

using namespace relcat;

TEST_SUITE("ternary") {
  TEST_CASE("triples are stored with set semantics in result-left-right order") {
    const TernaryStructure s(3, {{2, 0, 1}, {0, 0, 0}, {2, 0, 1}});
    CHECK(s.triple_count() == 2);
    CHECK(s.contains(2, 0, 1));
    CHECK_FALSE(s.contains(2, 1, 0));
    const std::vector<Triple> expected{{0, 0, 0}, {2, 0, 1}};
    CHECK(s.triples() == expected);
    CHECK(s.results(0, 1) == bit(2));
  }

  TEST_CASE("out-of-range components and oversized carriers are rejected") {
    CHECK_THROWS_AS(TernaryStructure(2, {{0, 0, 2}}), Error);
    CHECK_THROWS_AS(TernaryStructure(kMaxCarrier + 1), Error);
    try {
      (void)TernaryStructure(kMaxCarrier + 1);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::carrier_too_large);
    }
  }

  TEST_CASE("definedness recomputed from triples matches the stored relation") {
    for (std::uint64_t code = 0; code < 256; ++code) {
      const TernaryStructure s = oracle::from_code(2, code);
      const auto r = oracle::triple_set(s);
      const DefinednessRelation d = s.definedness();
      for (Element y = 0; y < 2; ++y) {
        for (Element z = 0; z < 2; ++z) CHECK(d.contains(y, z) == oracle::defined(r, 2, y, z));
      }
    }
  }

  TEST_CASE("relabel applies the permutation to every component") {
    const TernaryStructure s(3, {{2, 0, 1}});
    const std::vector<Element> p{1, 2, 0};
    CHECK(relabel(s, p) == TernaryStructure(3, {{0, 1, 2}}));
  }

  TEST_CASE("with and without toggle single triples") {
    const TernaryStructure s(2);
    CHECK(s.with({1, 0, 1}).contains(1, 0, 1));
    CHECK(s.with({1, 0, 1}).without({1, 0, 1}) == s);
  }
}

TEST_SUITE("axioms") {
  TEST_CASE("weak functionality") {
    CHECK(is_weakly_functional(two_unit_monoid()));
    CHECK(is_weakly_functional(TernaryStructure(2)));
    const auto shuffle = is_weakly_functional(shuffle_bounded(2, 2));
    REQUIRE_FALSE(shuffle);
    CHECK(std::popcount(shuffle.counterexample->results) == 2);
  }

  TEST_CASE("functionality") {
    CHECK(is_functional(TernaryStructure(1, {{0, 0, 0}})));
    const auto two = is_functional(two_unit_monoid());
    REQUIRE_FALSE(two);
    CHECK(two.counterexample->results == 0);
    CHECK(is_functional(categorical_relation(no_collapse_semigroup())));
  }

  TEST_CASE("relational associativity") {
    CHECK(is_rel_associative(incoherent_monoid()));
    CHECK(is_rel_associative(TernaryStructure(3)));
    const TernaryStructure s(2, {{0, 0, 1}});
    const auto v = is_rel_associative(s);
    REQUIRE_FALSE(v);
    CHECK_FALSE(oracle::associative(s));
    const auto& w = *v.counterexample;
    const auto r = oracle::triple_set(s);
    bool right = false;
    bool left = false;
    for (Element t = 0; t < 2; ++t) {
      right = right || (oracle::has(r, w.result, w.x, t) && oracle::has(r, t, w.y, w.z));
      left = left || (oracle::has(r, w.result, t, w.z) && oracle::has(r, t, w.x, w.y));
    }
    CHECK(left != right);
    CHECK(w.left_bracketing == left);
  }

  TEST_CASE("coherence") {
    const TernaryStructure s = incoherent_monoid();
    const auto v = is_coherent(s);
    REQUIRE_FALSE(v);
    const auto& f = *v.counterexample;
    CHECK(s.contains(f.v, f.x, f.y));
    CHECK(s.defined(f.y, f.z));
    CHECK_FALSE(s.defined(f.v, f.z));
    CHECK(f.y == 0);
    CHECK(f.v == 1);
    CHECK(f.z == 1);
    CHECK(is_coherent(categorical_relation(no_collapse_semigroup())));
    CHECK(is_coherent(two_unit_monoid()));
  }

  TEST_CASE("units") {
    CHECK(units(two_unit_monoid()) == UnitSets{0b11, 0b11});
    CHECK(units(TernaryStructure(2)) == UnitSets{});
    CHECK(units(adjoin_zero(two_unit_monoid()).structure()) == UnitSets{});
    CHECK(units(incoherent_monoid()).all() == bit(0));
  }

  TEST_CASE("predicates agree with the direct readings on every relation of size 2") {
    for (std::uint64_t code = 0; code < 256; ++code) {
      const TernaryStructure s = oracle::from_code(2, code);
      CAPTURE(code);
      CHECK(is_weakly_functional(s).holds() == oracle::weakly_functional(s));
      CHECK(is_rel_associative(s).holds() == oracle::associative(s));
      CHECK(is_coherent(s).holds() == oracle::coherent(s));
      const UnitSets u = units(s);
      for (Element e = 0; e < 2; ++e) {
        CHECK(((u.left >> e) & 1U) == oracle::left_unit(s, e));
        CHECK(((u.right >> e) & 1U) == oracle::right_unit(s, e));
      }
      if (is_functional(s)) CHECK(is_weakly_functional(s));
    }
  }

  TEST_CASE("functional implies weakly functional on every associative structure of size 3") {
    std::size_t seen = 0;
    for_each_associative(3, false, [&](const TernaryStructure& s) {
      ++seen;
      if (is_functional(s)) CHECK(is_weakly_functional(s));
    });
    CHECK(seen == 31425);
  }

  TEST_CASE("classification of the named structures") {
    const Classification two = classify(two_unit_monoid());
    CHECK(two.relational_monoid);
    CHECK(two.coherent);
    CHECK(two.partial_monoid);
    CHECK(two.object_free_category);
    CHECK_FALSE(two.total);
    REQUIRE(two.failure("totality") != nullptr);

    const Classification shuffle = classify(shuffle_bounded(2, 2));
    CHECK(shuffle.relational_monoid);
    CHECK_FALSE(shuffle.partial_monoid);
    CHECK(shuffle.failure("weak-functionality") != nullptr);

    const Classification a1 = classify(from_partial_algebra(a1_partial_monoid()));
    CHECK(a1.partial_monoid);
    CHECK_FALSE(a1.object_free_category);
    CHECK(a1.failure("coherence") != nullptr);
  }

  TEST_CASE("class membership shortcut agrees with the full classification") {
    for (std::uint64_t code = 0; code < 256; ++code) {
      const TernaryStructure s = oracle::from_code(2, code);
      const Classification c = classify(s);
      for (StructureClass cls : all_structure_classes()) CHECK(belongs_to(s, cls) == c.is(cls));
    }
  }

  TEST_CASE("classification is invariant under relabelling") {
    std::mt19937 rng(20261015);
    for (std::size_t n = 2; n <= 4; ++n) {
      std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (n * n * n)) - 1);
      for (int probe = 0; probe < 100; ++probe) {
        const TernaryStructure s = oracle::from_code(n, pick(rng));
        const auto p = oracle::random_permutation(n, rng);
        const Classification a = classify(s);
        const Classification b = classify(relabel(s, p));
        for (StructureClass cls : all_structure_classes()) CHECK(a.is(cls) == b.is(cls));
        CHECK(std::popcount(a.unit_sets.all()) == std::popcount(b.unit_sets.all()));
      }
    }
  }
}

TEST_SUITE("morphisms") {
  TEST_CASE("identity maps are bounded morphisms") {
    for (const auto& s : {two_unit_monoid(), incoherent_monoid(), shuffle_bounded(2, 2)}) {
      ElementMap id(s.size());
      std::iota(id.begin(), id.end(), 0);
      CHECK(check_morphism(s, s, id));
      CHECK(check_bounded_morphism(s, s, id));
    }
  }

  TEST_CASE("inclusion into the zero adjunction") {
    const TernaryStructure s = two_unit_monoid();
    const ZeroedStructure z = adjoin_zero(s);
    const ElementMap inclusion{0, 1};
    CHECK(check_morphism(s, z.structure(), inclusion));
    // Every target triple (x, v, w) with x from the base has v, w in the base.
    CHECK(check_bounded_morphism(s, z.structure(), inclusion));
  }

  TEST_CASE("constant map to a non-idempotent element") {
    const TernaryStructure src(1, {{0, 0, 0}});
    const TernaryStructure dst(2, {{0, 1, 1}});
    const auto v = check_morphism(src, dst, ElementMap{1});
    REQUIRE_FALSE(v);
    CHECK(v.counterexample->kind == MorphismFailure::Kind::not_preserved);
    CHECK(v.counterexample->triple == Triple{0, 0, 0});
  }

  TEST_CASE("maps must fit the carriers") {
    const TernaryStructure s(2);
    CHECK_THROWS_AS((void)check_morphism(s, s, ElementMap{0}), Error);
    CHECK_THROWS_AS((void)check_morphism(s, s, ElementMap{0, 2}), Error);
  }

  TEST_CASE("composites of (bounded) morphisms are (bounded) morphisms") {
    std::vector<TernaryStructure> small;
    for (std::size_t n = 1; n <= 2; ++n) {
      EnumerationSpec spec;
      spec.size = n;
      spec.target_class = StructureClass::relational_semigroup;
      spec.strategy = Strategy::relational;
      for (const auto& f : enumerate(spec).forms) small.push_back(f.structure);
    }
    auto maps = [](std::size_t from, std::size_t to) {
      std::vector<ElementMap> out;
      ElementMap f(from, 0);
      while (true) {
        out.push_back(f);
        std::size_t i = 0;
        while (i < from && ++f[i] == to) f[i++] = 0;
        if (i == from) break;
      }
      return out;
    };
    std::size_t composites = 0;
    for (std::size_t a = 0; a < small.size(); a += 3) {
      for (std::size_t b = 0; b < small.size(); b += 2) {
        for (std::size_t c = 0; c < small.size(); c += 5) {
          const auto &A = small[a], &B = small[b], &C = small[c];
          for (const auto& f : maps(A.size(), B.size())) {
            const bool fm = check_morphism(A, B, f).holds();
            const bool fb = check_bounded_morphism(A, B, f).holds();
            if (!fm) continue;
            for (const auto& g : maps(B.size(), C.size())) {
              const bool gm = check_morphism(B, C, g).holds();
              if (!gm) continue;
              ++composites;
              const ElementMap h = compose(f, g);
              CHECK(check_morphism(A, C, h));
              if (fb && check_bounded_morphism(B, C, g)) CHECK(check_bounded_morphism(A, C, h));
            }
          }
        }
      }
    }
    CHECK(composites > 0);
  }
}
