#include "relcat/ternary.hpp"

#include <algorithm>

namespace relcat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::carrier_too_large: return "CarrierTooLarge";
    case ErrorKind::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorKind::not_weakly_functional: return "NotWeaklyFunctional";
    case ErrorKind::not_relational_monoid: return "NotRelationalMonoid";
    case ErrorKind::not_partial_monoid: return "NotPartialMonoid";
    case ErrorKind::not_object_free_category: return "NotObjectFreeCategory";
    case ErrorKind::not_weak_coherent_partial_monoid: return "NotWeakCoherentPartialMonoid";
    case ErrorKind::lr_axiom_violation: return "LrAxiomViolation";
    case ErrorKind::category_axiom_violation: return "CategoryAxiomViolation";
    case ErrorKind::categorical_semigroup_axiom_violation:
      return "CategoricalSemigroupAxiomViolation";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::optional<Witness> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

ElementSet to_set(Mask m) {
  ElementSet out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  for_each_bit(m, [&](Element x) { out.push_back(x); });
  return out;
}

Mask to_mask(std::span<const Element> elements) {
  Mask m = 0;
  for (Element x : elements) m |= bit(x);
  return m;
}

namespace {

void check_carrier(std::size_t size) {
  if (size > kMaxCarrier) {
    throw Error(ErrorKind::carrier_too_large,
                "carrier of " + std::to_string(size) + " elements exceeds the limit of " +
                    std::to_string(kMaxCarrier));
  }
}

}  // namespace

DefinednessRelation::DefinednessRelation(const TernaryStructure& s) : rows_(s.size(), 0) {
  const auto n = s.size();
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      if (s.defined(y, z)) rows_[y] |= bit(z);
    }
  }
}

bool DefinednessRelation::total() const {
  const Mask all = full_mask(rows_.size());
  return std::all_of(rows_.begin(), rows_.end(), [&](Mask r) { return r == all; });
}

std::vector<std::pair<Element, Element>> DefinednessRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element y = 0; y < rows_.size(); ++y) {
    for_each_bit(rows_[y], [&](Element z) { out.emplace_back(y, z); });
  }
  return out;
}

TernaryStructure::TernaryStructure(std::size_t size) : size_(size) {
  check_carrier(size);
  cells_.assign(size * size, 0);
}

TernaryStructure::TernaryStructure(std::size_t size, std::span<const Triple> triples)
    : TernaryStructure(size) {
  for (const auto& t : triples) {
    if (t.result >= size || t.left >= size || t.right >= size) {
      throw Error(ErrorKind::invalid_argument,
                  "triple " + to_string(t) + " out of range for carrier of size " +
                      std::to_string(size));
    }
    cells_[t.left * size_ + t.right] |= bit(t.result);
  }
}

TernaryStructure TernaryStructure::from_cells(std::size_t size, std::vector<Mask> cells) {
  check_carrier(size);
  if (cells.size() != size * size) {
    throw Error(ErrorKind::invalid_argument, "expected size^2 result cells");
  }
  const Mask all = full_mask(size);
  for (Mask c : cells) {
    if ((c & ~all) != 0) throw Error(ErrorKind::invalid_argument, "result outside carrier");
  }
  TernaryStructure s;
  s.size_ = size;
  s.cells_ = std::move(cells);
  return s;
}

Mask TernaryStructure::product(Mask lefts, Mask rights) const {
  Mask out = 0;
  for_each_bit(lefts, [&](Element y) {
    const Mask* row = &cells_[y * size_];
    for_each_bit(rights, [&](Element z) { out |= row[z]; });
  });
  return out;
}

std::size_t TernaryStructure::triple_count() const {
  std::size_t count = 0;
  for (Mask c : cells_) count += static_cast<std::size_t>(std::popcount(c));
  return count;
}

std::vector<Triple> TernaryStructure::triples() const {
  std::vector<Triple> out;
  out.reserve(triple_count());
  for (Element y = 0; y < size_; ++y) {
    for (Element z = 0; z < size_; ++z) {
      for_each_bit(results(y, z), [&](Element x) { out.push_back({x, y, z}); });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TernaryStructure TernaryStructure::with(const Triple& t) const {
  TernaryStructure copy = *this;
  copy.cells_[t.left * size_ + t.right] |= bit(t.result);
  return copy;
}

TernaryStructure TernaryStructure::without(const Triple& t) const {
  TernaryStructure copy = *this;
  copy.cells_[t.left * size_ + t.right] &= ~bit(t.result);
  return copy;
}

TernaryStructure relabel(const TernaryStructure& s, std::span<const Element> permutation) {
  const auto n = s.size();
  if (permutation.size() != n) {
    throw Error(ErrorKind::invalid_argument, "permutation does not match carrier size");
  }
  Mask image_set = 0;
  for (Element p : permutation) {
    if (p < n) image_set |= bit(p);
  }
  if (image_set != s.carrier()) throw Error(ErrorKind::invalid_argument, "not a permutation");
  std::vector<Mask> cells(n * n, 0);
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      Mask image = 0;
      for_each_bit(s.results(y, z), [&](Element x) { image |= bit(permutation[x]); });
      cells[permutation[y] * n + permutation[z]] = image;
    }
  }
  return TernaryStructure::from_cells(n, std::move(cells));
}

std::string to_string(const Triple& t) {
  return "R^" + std::to_string(t.result) + "_{" + std::to_string(t.left) + "," +
         std::to_string(t.right) + "}";
}

}  // namespace relcat
