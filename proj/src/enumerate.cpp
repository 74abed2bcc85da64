#include "relcat/enumerate.hpp"

#include <algorithm>
#include <array>

namespace relcat {

namespace {

using Cells = std::array<Mask, kMaxRelationalEnumeration * kMaxRelationalEnumeration>;

/// Backtracking over operand pairs in index order. After each assignment
/// every associativity instance whose inputs are known is re-checked, and
/// instances with one side known are checked for containment of what is
/// known of the other side.
class AssociativeSearch {
 public:
  AssociativeSearch(std::size_t n, std::vector<Mask> options,
                    const std::function<void(const Cells&)>& leaf)
      : n_(n), options_(std::move(options)), leaf_(leaf) {}

  void run() { descend(0); }

 private:
  void descend(std::size_t k) {
    if (k == n_ * n_) {
      leaf_(cells_);
      return;
    }
    for (Mask m : options_) {
      cells_[k] = m;
      if (consistent(k)) descend(k + 1);
    }
  }

  // Elements u whose cell (u, z) is assigned once cells 0..k are.
  Mask column_ready(std::size_t k, Element z) const {
    if (k < z) return 0;
    return full_mask(std::min(n_, (k - z) / n_ + 1));
  }
  Mask row_ready(std::size_t k, Element x) const {
    if (k < x * n_) return 0;
    return full_mask(std::min(n_, k - x * n_ + 1));
  }

  bool consistent(std::size_t k) const {
    const auto n = static_cast<Element>(n_);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const std::size_t kxy = x * n_ + y;
        if (kxy > k) break;
        const Mask xy = cells_[kxy];
        const Mask row = row_ready(k, x);
        for (Element z = 0; z < n; ++z) {
          const std::size_t kyz = y * n_ + z;
          if (kyz > k) break;
          const Mask yz = cells_[kyz];
          const Mask col = column_ready(k, z);
          Mask left = 0;
          for_each_bit(xy & col, [&](Element u) { left |= cells_[u * n_ + z]; });
          Mask right = 0;
          for_each_bit(yz & row, [&](Element w) { right |= cells_[x * n_ + w]; });
          const bool left_known = (xy & ~col) == 0;
          const bool right_known = (yz & ~row) == 0;
          if (left_known && (right & ~left) != 0) return false;
          if (right_known && (left & ~right) != 0) return false;
        }
      }
    }
    return true;
  }

  std::size_t n_;
  std::vector<Mask> options_;
  const std::function<void(const Cells&)>& leaf_;
  Cells cells_{};
};

std::vector<Mask> cell_options(std::size_t n, bool functional, bool total) {
  std::vector<Mask> options;
  if (functional) {
    if (!total) options.push_back(0);
    for (Element v = 0; v < n; ++v) options.push_back(bit(v));
  } else {
    for (Mask m = total ? 1 : 0; m <= full_mask(n); ++m) options.push_back(m);
  }
  return options;
}

TernaryStructure from_search(std::size_t n, const Cells& cells) {
  return TernaryStructure::from_cells(n, std::vector<Mask>(cells.begin(), cells.begin() + n * n));
}

struct Requirement {
  std::string name;
  bool negated = false;
};

Requirement parse_requirement(std::string_view text) {
  Requirement r;
  if (text.starts_with("not-")) {
    r.negated = true;
    text.remove_prefix(4);
  }
  r.name = std::string(text);
  const auto& names = requirement_names();
  if (std::find(names.begin(), names.end(), r.name) == names.end()) {
    throw Error(ErrorKind::invalid_argument, "unknown requirement '" + std::string(text) + "'");
  }
  return r;
}

bool evaluate(const TernaryStructure& s, const std::string& name) {
  if (auto c = parse_structure_class(name)) return belongs_to(s, *c);
  if (name == "weakly-functional") return static_cast<bool>(is_weakly_functional(s));
  if (name == "functional") return static_cast<bool>(is_functional(s));
  if (name == "total") return s.definedness().total();
  if (name == "associative") return static_cast<bool>(is_rel_associative(s));
  if (name == "coherent") return static_cast<bool>(is_coherent(s));
  if (name == "literal-unit-cover") return satisfies_literal_unit_cover(s);
  const int unit_count = std::popcount(units(s).all());
  if (name == "multiple-units") return unit_count >= 2;
  if (name == "single-unit") return unit_count == 1;
  return false;
}

// Positive requirements that let the search skip non-functional or partial
// cells.
bool forces(const std::vector<Requirement>& reqs, std::initializer_list<std::string_view> names) {
  return std::any_of(reqs.begin(), reqs.end(), [&](const Requirement& r) {
    return !r.negated && std::find(names.begin(), names.end(), r.name) != names.end();
  });
}

}  // namespace

const std::vector<std::string>& requirement_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"weakly-functional", "functional",     "total",
                               "associative",       "coherent",       "literal-unit-cover",
                               "multiple-units",    "single-unit"};
    for (StructureClass c : all_structure_classes()) v.emplace_back(to_string(c));
    return v;
  }();
  return names;
}

bool satisfies_requirement(const TernaryStructure& s, std::string_view requirement) {
  const Requirement r = parse_requirement(requirement);
  return evaluate(s, r.name) != r.negated;
}

void for_each_associative(std::size_t size, bool functional,
                          const std::function<void(const TernaryStructure&)>& visit) {
  const std::size_t limit = functional ? kMaxFunctionalEnumeration : kMaxRelationalEnumeration;
  if (size > limit) {
    throw Error(ErrorKind::size_limit_exceeded,
                std::string(functional ? "functional" : "relational") +
                    " enumeration is limited to " + std::to_string(limit) + " elements");
  }
  const std::function<void(const Cells&)> leaf = [&](const Cells& cells) {
    visit(from_search(size, cells));
  };
  AssociativeSearch(size, cell_options(size, functional, false), leaf).run();
}

void enumerate(const EnumerationSpec& spec,
               const std::function<bool(const CanonicalForm&)>& visit) {
  std::vector<Requirement> reqs;
  for (const auto& r : spec.require) reqs.push_back(parse_requirement(r));

  const StructureClass c = spec.target_class;
  const bool wf_forced =
      implies_weakly_functional(c) ||
      forces(reqs, {"weakly-functional", "functional", "partial-semigroup", "partial-monoid",
                    "object-free-category", "semigroup", "monoid"});
  const bool functional = spec.strategy == Strategy::functional ||
                          (spec.strategy == Strategy::automatic && wf_forced);
  const bool total = c == StructureClass::semigroup || c == StructureClass::monoid ||
                     forces(reqs, {"total", "functional", "semigroup", "monoid"});
  const std::size_t limit = functional ? kMaxFunctionalEnumeration : kMaxRelationalEnumeration;
  if (spec.size > limit) {
    throw Error(ErrorKind::size_limit_exceeded,
                std::string(functional ? "functional" : "relational") +
                    " enumeration is limited to " + std::to_string(limit) + " elements");
  }

  // The empty cell is never an option under totality, and every candidate
  // is associative by construction.
  std::vector<CanonicalForm> found;
  const std::function<void(const Cells&)> leaf = [&](const Cells& cells) {
    const TernaryStructure s = from_search(spec.size, cells);
    if (c != StructureClass::any && c != StructureClass::relational_semigroup &&
        !belongs_to(s, c)) {
      return;
    }
    for (const auto& r : reqs) {
      if (evaluate(s, r.name) == r.negated) return;
    }
    if (!is_canonical(s)) return;
    found.push_back({s, {}, encode(s)});
  };
  const bool needs_associativity = c != StructureClass::any || forces(reqs, {"associative"});
  if (needs_associativity || c == StructureClass::relational_semigroup) {
    AssociativeSearch(spec.size, cell_options(spec.size, functional, total), leaf).run();
  } else {
    // Unconstrained: plain odometer over all cells.
    const auto options = cell_options(spec.size, functional, total);
    const std::size_t cells = spec.size * spec.size;
    std::vector<std::size_t> digit(cells, 0);
    Cells current{};
    for (std::size_t i = 0; i < cells; ++i) current[i] = options[0];
    for (;;) {
      leaf(current);
      std::size_t i = cells;
      for (; i > 0; --i) {
        if (++digit[i - 1] < options.size()) {
          current[i - 1] = options[digit[i - 1]];
          break;
        }
        digit[i - 1] = 0;
        current[i - 1] = options[0];
      }
      if (i == 0) break;
    }
  }

  std::sort(found.begin(), found.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) { return a.encoding < b.encoding; });
  for (auto& f : found) {
    f.certificate.resize(spec.size);
    for (Element x = 0; x < spec.size; ++x) f.certificate[x] = x;
    if (!visit(f)) return;
  }
}

EnumerationResult enumerate(const EnumerationSpec& spec) {
  EnumerationResult result;
  enumerate(spec, [&](const CanonicalForm& f) {
    ++result.count;
    if (spec.mode != EnumerationMode::count) result.forms.push_back(f);
    return spec.mode != EnumerationMode::witnesses || result.count < spec.witness_limit;
  });
  return result;
}

std::size_t count_classes(std::size_t size, StructureClass c) {
  EnumerationSpec spec;
  spec.size = size;
  spec.target_class = c;
  spec.mode = EnumerationMode::count;
  return enumerate(spec).count;
}

}  // namespace relcat
