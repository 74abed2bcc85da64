#include "relcat/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace relcat {

namespace {

void guard(const TernaryStructure& s) {
  if (s.size() > kMaxCanonicalCarrier) {
    throw Error(ErrorKind::size_limit_exceeded,
                "canonical forms are limited to " + std::to_string(kMaxCanonicalCarrier) +
                    " elements");
  }
}

void set_position(Encoding& e, std::size_t i) { e[i / 64] |= std::uint64_t{1} << (63 - i % 64); }

Encoding encode_under(const TernaryStructure& s, const ElementMap& p) {
  const auto n = s.size();
  Encoding e{};
  for (Element y = 0; y < n; ++y) {
    for (Element z = 0; z < n; ++z) {
      const std::size_t operands = p[y] * n + p[z];
      for_each_bit(s.results(y, z), [&](Element x) { set_position(e, p[x] * n * n + operands); });
    }
  }
  return e;
}

ElementMap identity_map(std::size_t n) {
  ElementMap p(n);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

}  // namespace

Encoding encode(const TernaryStructure& s) {
  guard(s);
  return encode_under(s, identity_map(s.size()));
}

CanonicalForm canonicalize(const TernaryStructure& s) {
  guard(s);
  ElementMap p = identity_map(s.size());
  CanonicalForm best{s, p, encode_under(s, p)};
  while (std::next_permutation(p.begin(), p.end())) {
    const Encoding e = encode_under(s, p);
    if (e < best.encoding) {
      best.encoding = e;
      best.certificate = p;
    }
  }
  best.structure = relabel(s, best.certificate);
  return best;
}

bool is_canonical(const TernaryStructure& s) {
  guard(s);
  ElementMap p = identity_map(s.size());
  const Encoding own = encode_under(s, p);
  while (std::next_permutation(p.begin(), p.end())) {
    if (encode_under(s, p) < own) return false;
  }
  return true;
}

std::size_t automorphism_count(const TernaryStructure& s) {
  guard(s);
  ElementMap p = identity_map(s.size());
  const Encoding own = encode_under(s, p);
  std::size_t count = 1;
  while (std::next_permutation(p.begin(), p.end())) {
    if (encode_under(s, p) == own) ++count;
  }
  return count;
}

bool isomorphic(const TernaryStructure& a, const TernaryStructure& b) {
  return a.size() == b.size() && canonicalize(a).encoding == canonicalize(b).encoding;
}

}  // namespace relcat
