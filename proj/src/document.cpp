#include "relcat/document.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace relcat {

namespace {

// Insertion order keeps expectations and field layout stable across a round trip.
using json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 5> kKindNames{"ternary", "partial-algebra", "lr", "category",
                                                     "categorical-semigroup"};

[[noreturn]] void shape(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) shape(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t read_index(const json& j, const char* what) {
  if (!j.is_number_unsigned()) shape(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Element read_element(const json& j, std::size_t bound, const char* what) {
  const std::size_t v = read_index(j, what);
  if (v >= bound) {
    throw Error(ErrorKind::invalid_argument,
                std::string(what) + " " + std::to_string(v) + " out of range");
  }
  return static_cast<Element>(v);
}

std::size_t read_size(const json& j) {
  const std::size_t n = read_index(field(j, "size"), "size");
  if (n > kMaxCarrier) {
    throw Error(ErrorKind::carrier_too_large, "carrier limited to " + std::to_string(kMaxCarrier));
  }
  return n;
}

std::vector<Element> read_elements(const json& j, std::size_t bound, const char* what) {
  if (!j.is_array()) shape(std::string(what) + " must be an array");
  std::vector<Element> out;
  for (const auto& v : j) out.push_back(read_element(v, bound, what));
  return out;
}

std::vector<Triple> read_triples(const json& j, std::size_t bound, const char* what) {
  if (!j.is_array()) shape(std::string(what) + " must be an array");
  std::vector<Triple> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) shape(std::string(what) + " entries are [result, left, right]");
    out.push_back({read_element(t[0], bound, what), read_element(t[1], bound, what),
                   read_element(t[2], bound, what)});
  }
  return out;
}

// A table given as [result, left, right] entries, at most one per pair.
std::vector<std::optional<Element>> read_table(const json& j, std::size_t n, const char* what) {
  std::vector<std::optional<Element>> table(n * n);
  for (const auto& t : read_triples(j, n, what)) {
    auto& cell = table[t.left * n + t.right];
    if (cell) {
      throw Error(ErrorKind::invalid_argument, std::string(what) + " has two entries for (" +
                                                   std::to_string(t.left) + "," +
                                                   std::to_string(t.right) + ")");
    }
    cell = t.result;
  }
  return table;
}

json write_table(const std::vector<std::optional<Element>>& table, std::size_t n) {
  json out = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x * n + y]) out.push_back({*table[x * n + y], x, y});
    }
  }
  return out;
}

json payload_json(const TernaryStructure& s) {
  json triples = json::array();
  for (const auto& t : s.triples()) triples.push_back({t.result, t.left, t.right});
  return {{"size", s.size()}, {"triples", triples}};
}

json payload_json(const PartialAlgebra& p) {
  json defined = json::array();
  for (auto [x, y] : p.defined_pairs()) defined.push_back({x, y});
  return {{"size", p.size}, {"table", write_table(p.table, p.size)}, {"defined", defined},
          {"units", p.units}};
}

json payload_json(const LrStructure& l) {
  return {{"size", l.size}, {"ell", l.ell}, {"rr", l.rr}, {"table", write_table(l.table, l.size)}};
}

json payload_json(const SmallCategory& c) {
  return {{"size", c.morphism_count}, {"objects", c.objects}, {"dom", c.dom},
          {"cod", c.cod},            {"identity", c.identity}, {"table", write_table(c.table, c.morphism_count)}};
}

json payload_json(const CategoricalSemigroup& c) {
  json table = json::array();
  for (std::size_t x = 0; x < c.size; ++x) {
    for (std::size_t y = 0; y < c.size; ++y) table.push_back({c.table[x * c.size + y], x, y});
  }
  return {{"size", c.size}, {"zero", c.zero}, {"ell", c.ell}, {"rr", c.rr}, {"table", table}};
}

TernaryStructure load_ternary(const json& j) {
  const std::size_t n = read_size(j);
  return TernaryStructure(n, read_triples(field(j, "triples"), n, "triple"));
}

PartialAlgebra load_partial_algebra(const json& j) {
  PartialAlgebra p;
  p.size = read_size(j);
  p.table = read_table(field(j, "table"), p.size, "table entry");
  p.units = read_elements(field(j, "units"), p.size, "unit");
  std::sort(p.units.begin(), p.units.end());
  p.units.erase(std::unique(p.units.begin(), p.units.end()), p.units.end());
  if (const auto it = j.find("defined"); it != j.end()) {
    if (!it->is_array()) shape("defined must be an array");
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& d : *it) {
      if (!d.is_array() || d.size() != 2) shape("defined entries are [left, right]");
      pairs.emplace_back(read_element(d[0], p.size, "defined"), read_element(d[1], p.size, "defined"));
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs != p.defined_pairs()) {
      throw Error(ErrorKind::invalid_argument, "defined pairs disagree with the table");
    }
  }
  validate(p);
  return p;
}

LrStructure load_lr(const json& j) {
  LrStructure l;
  l.size = read_size(j);
  l.ell = read_elements(field(j, "ell"), l.size, "ell");
  l.rr = read_elements(field(j, "rr"), l.size, "rr");
  if (l.ell.size() != l.size || l.rr.size() != l.size) shape("ell and rr need one entry per element");
  l.table = read_table(field(j, "table"), l.size, "table entry");
  validate(l);
  return l;
}

SmallCategory load_category(const json& j) {
  SmallCategory c;
  c.morphism_count = read_size(j);
  const auto& objects = field(j, "objects");
  if (!objects.is_array()) shape("objects must be an array");
  for (const auto& o : objects) {
    const std::size_t id = read_index(o, "object");
    if (id > 0xffffffffU) throw Error(ErrorKind::invalid_argument, "object id out of range");
    c.objects.push_back(static_cast<ObjectId>(id));
  }
  auto object_list = [&](const char* key) {
    const auto& a = field(j, key);
    if (!a.is_array() || a.size() != c.morphism_count) {
      shape(std::string(key) + " needs one entry per morphism");
    }
    std::vector<ObjectId> out;
    for (const auto& o : a) {
      const std::size_t id = read_index(o, key);
      if (std::find(c.objects.begin(), c.objects.end(), id) == c.objects.end()) {
        throw Error(ErrorKind::invalid_argument, std::string(key) + " names an unknown object");
      }
      out.push_back(static_cast<ObjectId>(id));
    }
    return out;
  };
  c.dom = object_list("dom");
  c.cod = object_list("cod");
  c.identity = read_elements(field(j, "identity"), c.morphism_count, "identity");
  c.table = read_table(field(j, "table"), c.morphism_count, "table entry");
  (void)check_category_axioms(c);
  return c;
}

CategoricalSemigroup load_categorical_semigroup(const json& j) {
  CategoricalSemigroup c;
  c.size = read_size(j);
  c.zero = read_element(field(j, "zero"), std::max<std::size_t>(c.size, 1), "zero");
  c.ell = read_elements(field(j, "ell"), c.size, "ell");
  c.rr = read_elements(field(j, "rr"), c.size, "rr");
  if (c.ell.size() != c.size || c.rr.size() != c.size) shape("ell and rr need one entry per element");
  const auto table = read_table(field(j, "table"), c.size, "table entry");
  for (const auto& v : table) {
    if (!v) throw Error(ErrorKind::invalid_argument, "categorical semigroup table must be total");
    c.table.push_back(*v);
  }
  (void)check_categorical_semigroup(c);
  return c;
}

}  // namespace

std::string_view to_string(DocumentKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<DocumentKind> parse_document_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<DocumentKind>(i);
  }
  return std::nullopt;
}

std::size_t StructureDocument::size() const {
  struct {
    std::size_t operator()(const TernaryStructure& s) const { return s.size(); }
    std::size_t operator()(const PartialAlgebra& p) const { return p.size; }
    std::size_t operator()(const LrStructure& l) const { return l.size; }
    std::size_t operator()(const SmallCategory& c) const { return c.morphism_count; }
    std::size_t operator()(const CategoricalSemigroup& c) const { return c.size; }
  } visitor;
  return std::visit(visitor, payload);
}

std::string emit(const StructureDocument& doc, bool pretty) {
  json j = {{"kind", std::string(to_string(doc.kind()))}};
  j.update(std::visit([](const auto& p) { return payload_json(p); }, doc.payload));
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  if (!doc.expected.empty()) {
    json expected = json::object();
    for (const auto& [k, v] : doc.expected) expected[k] = v;
    j["expected"] = expected;
  }
  return j.dump(pretty ? 2 : -1);
}

StructureDocument load(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
  if (!j.is_object()) shape("document must be a JSON object");
  const auto& kind_field = field(j, "kind");
  if (!kind_field.is_string()) shape("kind must be a string");
  const auto kind = parse_document_kind(kind_field.get<std::string>());
  if (!kind) shape("unknown kind \"" + kind_field.get<std::string>() + "\"");

  StructureDocument doc;
  switch (*kind) {
    case DocumentKind::ternary: doc.payload = load_ternary(j); break;
    case DocumentKind::partial_algebra: doc.payload = load_partial_algebra(j); break;
    case DocumentKind::lr: doc.payload = load_lr(j); break;
    case DocumentKind::category: doc.payload = load_category(j); break;
    case DocumentKind::categorical_semigroup: doc.payload = load_categorical_semigroup(j); break;
  }
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) shape("name must be a string");
    doc.name = it->get<std::string>();
  }
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array() || it->size() != doc.size()) shape("labels need one string per element");
    for (const auto& l : *it) {
      if (!l.is_string()) shape("labels must be strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  if (const auto it = j.find("expected"); it != j.end()) {
    if (!it->is_object()) shape("expected must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_boolean()) shape("expected values must be booleans");
      doc.expected.emplace_back(k, v.get<bool>());
    }
  }
  return doc;
}

StructureDocument load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load(buffer.str());
}

TernaryStructure relation_of(const StructureDocument& doc) {
  struct {
    TernaryStructure operator()(const TernaryStructure& s) const { return s; }
    TernaryStructure operator()(const PartialAlgebra& p) const { return from_partial_algebra(p); }
    TernaryStructure operator()(const LrStructure& l) const { return lr_relation(l); }
    TernaryStructure operator()(const SmallCategory& c) const {
      std::vector<Triple> triples;
      for (Element x = 0; x < c.morphism_count; ++x) {
        for (Element y = 0; y < c.morphism_count; ++y) {
          if (c.table[x * c.morphism_count + y]) triples.push_back({c.compose(x, y), x, y});
        }
      }
      return TernaryStructure(c.morphism_count, triples);
    }
    TernaryStructure operator()(const CategoricalSemigroup& c) const {
      return categorical_relation(c);
    }
  } visitor;
  return std::visit(visitor, doc.payload);
}

DocumentPayload convert(const DocumentPayload& payload, DocumentKind to) {
  const auto from = static_cast<DocumentKind>(payload.index());
  if (from == to) return payload;
  if (from == DocumentKind::ternary && to == DocumentKind::partial_algebra) {
    return to_partial_algebra(std::get<TernaryStructure>(payload));
  }
  if (from == DocumentKind::partial_algebra && to == DocumentKind::ternary) {
    return from_partial_algebra(std::get<PartialAlgebra>(payload));
  }
  LrStructure hub;
  switch (from) {
    case DocumentKind::ternary: hub = to_lr(std::get<TernaryStructure>(payload)); break;
    case DocumentKind::partial_algebra:
      hub = to_lr(from_partial_algebra(std::get<PartialAlgebra>(payload)));
      break;
    case DocumentKind::lr: hub = std::get<LrStructure>(payload); break;
    case DocumentKind::category: hub = from_category(std::get<SmallCategory>(payload)); break;
    case DocumentKind::categorical_semigroup:
      hub = from_categorical_semigroup(std::get<CategoricalSemigroup>(payload));
      break;
  }
  switch (to) {
    case DocumentKind::ternary: return from_lr(hub);
    case DocumentKind::partial_algebra: return to_partial_algebra(from_lr(hub));
    case DocumentKind::lr: (void)from_lr(hub); return hub;
    case DocumentKind::category: return to_category(hub);
    case DocumentKind::categorical_semigroup: return to_categorical_semigroup(hub);
  }
  throw Error(ErrorKind::invalid_argument, "unknown target kind");
}

}  // namespace relcat
