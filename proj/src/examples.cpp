#include "relcat/examples.hpp"

#include <algorithm>
#include <tuple>

#include "relcat/enumerate.hpp"

namespace relcat {

std::vector<std::string> shuffle_words(std::size_t alphabet_size, std::size_t max_len) {
  if (alphabet_size < 2 || alphabet_size > 26 || max_len == 0) {
    throw Error(ErrorKind::invalid_argument, "shuffle needs 2 to 26 letters and max_len >= 1");
  }
  std::size_t count = 1;
  std::size_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    layer *= alphabet_size;
    count += layer;
    if (count > kMaxCarrier) {
      throw Error(ErrorKind::carrier_too_large,
                  "bounded shuffle would have more than " + std::to_string(kMaxCarrier) + " words");
    }
  }
  std::vector<std::string> words{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t c = 0; c < alphabet_size; ++c) {
        words.push_back(words[i] + static_cast<char>('a' + c));
      }
    }
    begin = end;
  }
  return words;
}

namespace {

// Classic table: fits[i][j] iff x[0, i+j) interleaves y[0, i) and z[0, j).
bool is_interleaving(const std::string& x, const std::string& y, const std::string& z) {
  if (x.size() != y.size() + z.size()) return false;
  std::vector<std::vector<char>> fits(y.size() + 1, std::vector<char>(z.size() + 1, 0));
  fits[0][0] = 1;
  for (std::size_t i = 0; i <= y.size(); ++i) {
    for (std::size_t j = 0; j <= z.size(); ++j) {
      if (i > 0 && fits[i - 1][j] && y[i - 1] == x[i + j - 1]) fits[i][j] = 1;
      if (j > 0 && fits[i][j - 1] && z[j - 1] == x[i + j - 1]) fits[i][j] = 1;
    }
  }
  return fits[y.size()][z.size()] != 0;
}

void collect(const std::string& y, const std::string& z, std::string& prefix,
             std::vector<std::string>& out) {
  if (y.empty() || z.empty()) {
    out.push_back(prefix + y + z);
    return;
  }
  for (const auto& [head, rest_y, rest_z] :
       {std::tuple{y[0], y.substr(1), z}, std::tuple{z[0], y, z.substr(1)}}) {
    prefix.push_back(head);
    collect(rest_y, rest_z, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::string> interleavings(const std::string& y, const std::string& z) {
  std::vector<std::string> out;
  std::string prefix;
  collect(y, z, prefix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TernaryStructure shuffle_bounded(std::size_t alphabet_size, std::size_t max_len) {
  const auto words = shuffle_words(alphabet_size, max_len);
  const auto n = static_cast<Element>(words.size());
  std::vector<Triple> triples;
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      if (words[y].size() + words[z].size() > max_len) continue;
      for (Element x = 0; x < n; ++x) {
        if (is_interleaving(words[x], words[y], words[z])) triples.push_back({x, y, z});
      }
    }
  }
  return TernaryStructure(n, triples);
}

TernaryStructure two_unit_monoid() { return TernaryStructure(2, {{0, 0, 0}, {1, 1, 1}}); }

TernaryStructure incoherent_monoid() {
  return TernaryStructure(2, {{0, 0, 0}, {1, 0, 1}, {1, 1, 0}});
}

PartialAlgebra a1_partial_monoid() {
  PartialAlgebra p;
  p.size = 2;
  p.table = {Element{0}, Element{1}, Element{1}, std::nullopt};
  p.units = {0};
  return p;
}

PartialAlgebra disjoint_partial_functions(std::size_t n) {
  if (n > 3) throw Error(ErrorKind::carrier_too_large, "partial functions limited to n <= 3");
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= n + 1;
  auto code = [&](std::size_t f, std::size_t i) {
    for (std::size_t k = 0; k < i; ++k) f /= n + 1;
    return f % (n + 1);
  };
  auto domain = [&](std::size_t f) {
    Mask d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (code(f, i) != 0) d |= bit(static_cast<Element>(i));
    }
    return d;
  };
  PartialAlgebra p;
  p.size = size;
  p.table.assign(size * size, std::nullopt);
  for (std::size_t f = 0; f < size; ++f) {
    for (std::size_t g = 0; g < size; ++g) {
      // Disjoint domains: the codes never overlap, so the union is the sum.
      if ((domain(f) & domain(g)) == 0) p.table[f * size + g] = static_cast<Element>(f + g);
    }
  }
  p.units = {0};
  return p;
}

std::vector<std::string> partial_function_labels(std::size_t n) {
  const PartialAlgebra p = disjoint_partial_functions(n);
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < p.size; ++f) {
    std::string label;
    std::size_t rest = f;
    for (std::size_t i = 0; i < n; ++i, rest /= n + 1) {
      if (rest % (n + 1) == 0) continue;
      label += (label.empty() ? "" : ",") + std::to_string(i) + ">" + std::to_string(rest % (n + 1) - 1);
    }
    labels.push_back(label.empty() ? "ε" : "{" + label + "}");
  }
  return labels;
}

CategoricalSemigroup no_collapse_semigroup() {
  CategoricalSemigroup c;
  c.size = 2;
  c.zero = 1;
  c.table = {0, 1, 1, 1};
  c.ell = {0, 1};
  c.rr = {0, 1};
  return c;
}

TernaryStructure single_arrow_category() {
  return TernaryStructure(3, {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {2, 2, 1}});
}

TernaryStructure discrete_units(std::size_t n) {
  std::vector<Triple> triples;
  for (Element e = 0; e < n; ++e) triples.push_back({e, e, e});
  return TernaryStructure(n, triples);
}

TernaryStructure ternary_form(const ExamplePayload& payload) {
  struct {
    TernaryStructure operator()(const TernaryStructure& s) const { return s; }
    TernaryStructure operator()(const PartialAlgebra& p) const { return from_partial_algebra(p); }
    TernaryStructure operator()(const CategoricalSemigroup& c) const {
      return categorical_relation(c);
    }
  } visitor;
  return std::visit(visitor, payload);
}

const std::vector<NamedExample>& named_examples() {
  static const std::vector<NamedExample> examples = [] {
    std::vector<NamedExample> v;
    v.push_back({"shuffle-2-2",
                 shuffle_bounded(2, 2),
                 shuffle_words(2, 2),
                 "shuffle of words of length <= 2 over {a,b}",
                 {{"relational-monoid", true},
                  {"weakly-functional", false},
                  {"single-unit", true},
                  {"total", false},
                  {"coherent", false}}});
    for (auto& w : v.back().labels) {
      if (w.empty()) w = "ε";
    }
    v.push_back({"two-unit-monoid",
                 two_unit_monoid(),
                 {"e", "e'"},
                 "two units that cannot be composed with each other",
                 {{"object-free-category", true},
                  {"multiple-units", true},
                  {"coherent", true},
                  {"total", false}}});
    v.push_back({"incoherent-monoid",
                 incoherent_monoid(),
                 {"e", "a"},
                 "unit e and a with e a = a = a e, a a undefined",
                 {{"relational-monoid", true},
                  {"partial-monoid", true},
                  {"coherent", false},
                  {"object-free-category", false}}});
    v.push_back({"a1-partial-monoid",
                 a1_partial_monoid(),
                 {"1", "a"},
                 "1 . 1 = 1, 1 . a = a = a . 1, a . a undefined",
                 {{"partial-monoid", true}, {"coherent", false}, {"object-free-category", false}}});
    v.push_back({"disjoint-partial-functions-1",
                 disjoint_partial_functions(1),
                 partial_function_labels(1),
                 "partial functions on a 1-element set, union on disjoint domains",
                 {{"partial-monoid", true}, {"coherent", false}, {"single-unit", true}}});
    v.push_back({"disjoint-partial-functions-2",
                 disjoint_partial_functions(2),
                 partial_function_labels(2),
                 "partial functions on a 2-element set, union on disjoint domains",
                 {{"partial-monoid", true}, {"coherent", false}, {"single-unit", true}}});
    v.push_back({"no-collapse-semigroup",
                 no_collapse_semigroup(),
                 {"x", "0"},
                 "categorical semigroup {x, 0} with x . x = x",
                 {{"monoid", true}, {"total", true}}});
    v.push_back({"single-arrow-category",
                 single_arrow_category(),
                 {"e", "e'", "f"},
                 "one arrow f from e to e'",
                 {{"object-free-category", true}, {"multiple-units", true}}});
    v.push_back({"discrete-three-units",
                 discrete_units(3),
                 {"e", "e'", "e''"},
                 "three units, each composable only with itself",
                 {{"object-free-category", true}, {"multiple-units", true}}});
    v.push_back({"trivial-monoid",
                 discrete_units(1),
                 {"e"},
                 "the one-element monoid",
                 {{"monoid", true}, {"object-free-category", true}, {"single-unit", true}}});
    return v;
  }();
  return examples;
}

const NamedExample& find_example(std::string_view name) {
  const auto& all = named_examples();
  const auto it =
      std::find_if(all.begin(), all.end(), [&](const NamedExample& e) { return e.name == name; });
  if (it == all.end()) {
    throw Error(ErrorKind::invalid_argument, "unknown example '" + std::string(name) + "'");
  }
  return *it;
}

std::vector<std::string> expectation_mismatches(const NamedExample& example) {
  const TernaryStructure s = ternary_form(example.payload);
  std::vector<std::string> out;
  for (const auto& [name, value] : example.expected) {
    if (satisfies_requirement(s, name) != value) {
      out.push_back(name + "=" + (value ? "true" : "false"));
    }
  }
  return out;
}

}  // namespace relcat
