#pragma once

// Direct, unoptimised readings of the definitions, used to cross-check the
// library on small carriers.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "relcat/ternary.hpp"

namespace oracle {

using relcat::Element;
using relcat::TernaryStructure;
using relcat::Triple;

using TripleSet = std::set<std::tuple<Element, Element, Element>>;

inline TripleSet triple_set(const TernaryStructure& s) {
  TripleSet out;
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      for (Element z = 0; z < s.size(); ++z) {
        if (s.contains(x, y, z)) out.insert({x, y, z});
      }
    }
  }
  return out;
}

inline bool has(const TripleSet& r, Element x, Element y, Element z) { return r.count({x, y, z}) != 0; }

inline bool defined(const TripleSet& r, std::size_t n, Element y, Element z) {
  for (Element x = 0; x < n; ++x) {
    if (has(r, x, y, z)) return true;
  }
  return false;
}

inline bool weakly_functional(const TernaryStructure& s) {
  const auto r = triple_set(s);
  const auto n = s.size();
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      int count = 0;
      for (Element x = 0; x < n; ++x) count += has(r, x, y, z);
      if (count > 1) return false;
    }
  }
  return true;
}

// (exists v. R^u_{xv} and R^v_{yz}) iff (exists v. R^u_{vz} and R^v_{xy}).
inline bool associative(const TernaryStructure& s) {
  const auto r = triple_set(s);
  const auto n = s.size();
  for (Element u = 0; u < n; ++u) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          bool right = false;
          bool left = false;
          for (Element v = 0; v < n; ++v) {
            right = right || (has(r, u, x, v) && has(r, v, y, z));
            left = left || (has(r, u, v, z) && has(r, v, x, y));
          }
          if (left != right) return false;
        }
      }
    }
  }
  return true;
}

inline bool coherent(const TernaryStructure& s) {
  const auto r = triple_set(s);
  const auto n = s.size();
  for (const auto& [v, x, y] : r) {
    for (Element z = 0; z < n; ++z) {
      if (defined(r, n, y, z) && !defined(r, n, v, z)) return false;
    }
  }
  return true;
}

// e is a left unit iff R^x_{ex} for some x and R^y_{ex} implies y = x.
inline bool left_unit(const TernaryStructure& s, Element e) {
  const auto r = triple_set(s);
  bool exists = false;
  for (const auto& [y, l, x] : r) {
    if (l != e) continue;
    if (y != x) return false;
    exists = true;
  }
  return exists;
}

inline bool right_unit(const TernaryStructure& s, Element e) {
  const auto r = triple_set(s);
  bool exists = false;
  for (const auto& [y, x, rt] : r) {
    if (rt != e) continue;
    if (y != x) return false;
    exists = true;
  }
  return exists;
}

inline TernaryStructure permuted(const TernaryStructure& s, const std::vector<Element>& p) {
  std::vector<Triple> out;
  for (const auto& [x, y, z] : triple_set(s)) out.push_back({p[x], p[y], p[z]});
  return TernaryStructure(s.size(), out);
}

// Pair test over every permutation.
inline bool isomorphic(const TernaryStructure& a, const TernaryStructure& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  const auto target = triple_set(b);
  do {
    if (triple_set(permuted(a, p)) == target) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Every relation on n elements, by its n^3-bit code.
inline TernaryStructure from_code(std::size_t n, std::uint64_t code) {
  std::vector<Triple> triples;
  std::size_t i = 0;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z, ++i) {
        if ((code >> i) & 1U) triples.push_back({x, y, z});
      }
    }
  }
  return TernaryStructure(n, triples);
}

// Isomorphism classes of a family by repeated pair testing.
inline std::vector<TernaryStructure> classes(const std::vector<TernaryStructure>& family) {
  std::vector<TernaryStructure> reps;
  for (const auto& s : family) {
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](const TernaryStructure& r) { return isomorphic(r, s); });
    if (!seen) reps.push_back(s);
  }
  return reps;
}

inline std::vector<Element> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
