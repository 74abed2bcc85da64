#include "doctest.h"
#include "json.hpp"
#include "relcat/category.hpp"
#include "relcat/document.hpp"
#include "relcat/enumerate.hpp"
#include "relcat/examples.hpp"

using namespace relcat;

namespace {

ErrorKind load_error(std::string_view text) {
  try {
    (void)load(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return ErrorKind::invalid_argument;
}

StructureDocument document_of(const NamedExample& e) {
  StructureDocument doc;
  std::visit([&](const auto& p) { doc.payload = p; }, e.payload);
  doc.name = e.name;
  doc.labels = e.labels;
  doc.expected = e.expected;
  return doc;
}

}  // namespace

TEST_SUITE("documents") {
  TEST_CASE("every kind survives emit and load") {
    const LrStructure l = to_lr(single_arrow_category());
    const std::vector<DocumentPayload> payloads{
        two_unit_monoid(), a1_partial_monoid(), l, to_category(l), no_collapse_semigroup(),
        to_categorical_semigroup(l), disjoint_partial_functions(2), shuffle_bounded(2, 3)};
    for (const auto& p : payloads) {
      StructureDocument doc{p, "x", {}, {{"coherent", true}}};
      CHECK(load(emit(doc)) == doc);
      CHECK(load(emit(doc, true)) == doc);
      CHECK(relation_of(load(emit(doc))) == relation_of(doc));
    }
  }

  TEST_CASE("every corpus entry survives emit and load") {
    for (const auto& e : named_examples()) {
      const StructureDocument doc = document_of(e);
      CAPTURE(e.name);
      CHECK(load(emit(doc)) == doc);
      CHECK(relation_of(doc) == ternary_form(e.payload));
    }
  }

  TEST_CASE("enumerated structures survive emit and load") {
    std::size_t seen = 0;
    for (std::size_t n = 1; n <= 3 && seen < 50; ++n) {
      EnumerationSpec spec;
      spec.size = n;
      spec.target_class = StructureClass::relational_semigroup;
      enumerate(spec, [&](const CanonicalForm& f) {
        const StructureDocument doc{f.structure, "", {}, {}};
        CHECK(load(emit(doc)) == doc);
        return ++seen < 50;
      });
    }
    CHECK(seen == 50);
  }

  TEST_CASE("ternary layout") {
    const auto j = nlohmann::json::parse(emit({incoherent_monoid(), "inc", {"e", "a"}, {}}));
    CHECK(j["kind"] == "ternary");
    CHECK(j["size"] == 2);
    CHECK(j["triples"] == nlohmann::json::parse("[[0,0,0],[1,0,1],[1,1,0]]"));
    CHECK(j["labels"] == nlohmann::json::parse(R"(["e","a"])"));
    CHECK(load(R"({"kind":"ternary","size":2,"triples":[[1,1,1],[0,0,0]]})").payload ==
          DocumentPayload(two_unit_monoid()));
  }

  TEST_CASE("malformed documents") {
    CHECK(load_error("not json") == ErrorKind::parse_error);
    CHECK(load_error("[]") == ErrorKind::parse_error);
    CHECK(load_error(R"({"size":2,"triples":[]})") == ErrorKind::parse_error);
    CHECK(load_error(R"({"kind":"heap","size":2})") == ErrorKind::parse_error);
    CHECK(load_error(R"({"kind":"ternary","size":2})") == ErrorKind::parse_error);
    CHECK(load_error(R"({"kind":"ternary","size":2,"triples":[[0,0]]})") == ErrorKind::parse_error);
    CHECK(load_error(R"({"kind":"ternary","size":"two","triples":[]})") == ErrorKind::parse_error);
    CHECK(load_error(R"({"kind":"ternary","size":2,"triples":[[0,0,2]]})") == ErrorKind::invalid_argument);
    CHECK(load_error(R"({"kind":"ternary","size":65,"triples":[]})") == ErrorKind::carrier_too_large);
    CHECK(load_error(R"({"kind":"partial-algebra","size":1,"table":[[0,0,0],[0,0,0]],"units":[0]})") ==
          ErrorKind::invalid_argument);
    CHECK(load_error(R"({"kind":"partial-algebra","size":1,"table":[],"defined":[[0,0]],"units":[0]})") ==
          ErrorKind::invalid_argument);
    CHECK(load_error(R"({"kind":"categorical-semigroup","size":1,"zero":0,"ell":[0],"rr":[0],"table":[]})") ==
          ErrorKind::invalid_argument);
    CHECK(load_error(R"({"kind":"ternary","size":1,"triples":[],"labels":["a","b"]})") ==
          ErrorKind::parse_error);
    CHECK_THROWS_AS((void)load_file("/nonexistent/structure.json"), Error);
  }

  TEST_CASE("kind names") {
    for (DocumentKind k : {DocumentKind::ternary, DocumentKind::partial_algebra, DocumentKind::lr,
                           DocumentKind::category, DocumentKind::categorical_semigroup}) {
      CHECK(parse_document_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_document_kind("group"));
  }
}

TEST_SUITE("conversion") {
  TEST_CASE("object-free category to every kind and back") {
    for (const auto& s : {two_unit_monoid(), single_arrow_category(), discrete_units(3)}) {
      for (DocumentKind k : {DocumentKind::partial_algebra, DocumentKind::lr, DocumentKind::category,
                             DocumentKind::categorical_semigroup}) {
        CAPTURE(to_string(k));
        const DocumentPayload there = convert(s, k);
        CHECK(std::get<TernaryStructure>(convert(there, DocumentKind::ternary)) == s);
      }
    }
  }

  TEST_CASE("an incoherent structure cannot become an lr structure") {
    try {
      (void)convert(from_partial_algebra(a1_partial_monoid()), DocumentKind::lr);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_object_free_category);
      CHECK(e.witness().has_value());
    }
  }

  TEST_CASE("partial algebra and ternary convert directly") {
    const PartialAlgebra p = a1_partial_monoid();
    const auto t = convert(p, DocumentKind::ternary);
    CHECK(std::get<PartialAlgebra>(convert(t, DocumentKind::partial_algebra)) == p);
    CHECK(std::get<TernaryStructure>(convert(no_collapse_semigroup(), DocumentKind::ternary)).size() == 1);
  }
}
