#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relcat/error.hpp"

namespace relcat {

/// Carriers are indexed by 64-bit masks, one per operand pair.
inline constexpr std::size_t kMaxCarrier = 64;

using Mask = std::uint64_t;

/// Ascending list of distinct elements.
using ElementSet = std::vector<Element>;

/// Total map on a carrier, `map[x]` is the image of `x`.
using ElementMap = std::vector<Element>;

inline Mask bit(Element x) { return Mask{1} << x; }

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
}

ElementSet to_set(Mask m);
Mask to_mask(std::span<const Element> elements);

/// R^result_{left right}: `result` is one outcome of composing `left` then
/// `right`. Result first everywhere in this project.
struct Triple {
  Element result = 0;
  Element left = 0;
  Element right = 0;

  auto operator<=>(const Triple&) const = default;
};

class TernaryStructure;

/// D^y_z holds iff the pair (y, z) has at least one composition result.
class DefinednessRelation {
 public:
  DefinednessRelation() = default;
  explicit DefinednessRelation(const TernaryStructure& s);

  std::size_t size() const { return rows_.size(); }
  bool contains(Element left, Element right) const { return (rows_[left] >> right) & 1U; }
  /// Right operands composable with `left`.
  Mask row(Element left) const { return rows_[left]; }
  bool total() const;
  std::vector<std::pair<Element, Element>> pairs() const;

  bool operator==(const DefinednessRelation&) const = default;

 private:
  std::vector<Mask> rows_;
};

/// Finite carrier {0, ..., size-1} with a ternary relation R on it. Storage is
/// one result mask per ordered operand pair, so the relation has set
/// semantics and checks run on word operations.
class TernaryStructure {
 public:
  TernaryStructure() = default;
  explicit TernaryStructure(std::size_t size);
  TernaryStructure(std::size_t size, std::span<const Triple> triples);
  TernaryStructure(std::size_t size, std::initializer_list<Triple> triples)
      : TernaryStructure(size, std::span<const Triple>(triples.begin(), triples.size())) {}

  /// `cells[left * size + right]` holds the results of `left` then `right`.
  static TernaryStructure from_cells(std::size_t size, std::vector<Mask> cells);

  std::size_t size() const { return size_; }
  Mask carrier() const { return full_mask(size_); }

  bool contains(Element result, Element left, Element right) const {
    return (cells_[left * size_ + right] >> result) & 1U;
  }
  bool contains(const Triple& t) const { return contains(t.result, t.left, t.right); }

  Mask results(Element left, Element right) const { return cells_[left * size_ + right]; }
  bool defined(Element left, Element right) const { return results(left, right) != 0; }

  /// Complex product of two subsets of the carrier.
  Mask product(Mask lefts, Mask rights) const;

  std::span<const Mask> cells() const { return cells_; }
  std::size_t triple_count() const;
  /// All triples in (result, left, right) lexicographic order.
  std::vector<Triple> triples() const;
  DefinednessRelation definedness() const { return DefinednessRelation(*this); }

  TernaryStructure with(const Triple& t) const;
  TernaryStructure without(const Triple& t) const;

  bool operator==(const TernaryStructure&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<Mask> cells_;
};

/// The structure with triples (p x, p y, p z) for each (x, y, z) of `s`.
TernaryStructure relabel(const TernaryStructure& s, std::span<const Element> permutation);

std::string to_string(const Triple& t);

}  // namespace relcat
