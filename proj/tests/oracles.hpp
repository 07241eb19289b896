#pragma once

// Slow, obviously-correct reference computations. They read only the
// multiplication table and never call the engine's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "sylowlab/group.hpp"

namespace oracle {

using sylowlab::Element;
using sylowlab::FiniteGroup;
using Members = std::vector<Element>;

inline Element pow(const FiniteGroup& g, Element x, std::int64_t n) {
  Element r = 0;
  for (std::int64_t i = 0; i < n; ++i) r = g.mul(r, x);
  return r;
}

inline std::uint32_t order(const FiniteGroup& g, Element x) {
  std::uint32_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

inline Element inverse(const FiniteGroup& g, Element x) {
  for (Element y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == 0) return y;
  }
  return 0;
}

// Multiply everything by everything until nothing new appears.
inline Members closure(const FiniteGroup& g, const Members& seed) {
  std::set<Element> s(seed.begin(), seed.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const Members cur(s.begin(), s.end());
    for (Element a : cur) {
      for (Element b : cur) grew |= s.insert(g.mul(a, b)).second;
    }
  }
  return {s.begin(), s.end()};
}

// Closures of every subset with at most max_gens elements.
inline std::set<Members> subgroups(const FiniteGroup& g, int max_gens) {
  std::set<Members> out;
  const auto h = static_cast<Element>(g.order());
  Members pick;
  auto rec = [&](auto&& self, Element from) -> void {
    out.insert(closure(g, pick));
    if (static_cast<int>(pick.size()) == max_gens) return;
    for (Element x = from; x < h; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline bool is_normal(const FiniteGroup& g, const Members& s) {
  const std::set<Element> in(s.begin(), s.end());
  for (Element t = 0; t < g.order(); ++t) {
    for (Element x : s) {
      if (!in.count(g.mul(g.mul(inverse(g, t), x), t))) return false;
    }
  }
  return true;
}

inline std::size_t normalizer_order(const FiniteGroup& g, const Members& s) {
  const std::set<Element> in(s.begin(), s.end());
  std::size_t n = 0;
  for (Element t = 0; t < g.order(); ++t) {
    bool ok = true;
    for (Element x : s) ok = ok && in.count(g.mul(g.mul(inverse(g, t), x), t));
    n += ok ? 1 : 0;
  }
  return n;
}

inline std::int64_t count_solutions(const FiniteGroup& g, std::int64_t n) {
  std::int64_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += pow(g, x, n) == 0 ? 1 : 0;
  return c;
}

inline std::int64_t count_of_order(const FiniteGroup& g, std::uint32_t m) {
  std::int64_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += order(g, x) == m ? 1 : 0;
  return c;
}

inline std::size_t center_order(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    n += central ? 1 : 0;
  }
  return n;
}

// Bijections fixing the identity that respect the table. Only for tiny groups.
inline std::size_t automorphism_count(const FiniteGroup& g) {
  Members images(g.order());
  std::iota(images.begin(), images.end(), Element{0});
  std::size_t n = 0;
  do {
    bool hom = true;
    for (Element a = 0; a < g.order() && hom; ++a) {
      for (Element b = 0; b < g.order() && hom; ++b) {
        hom = images[g.mul(a, b)] == g.mul(images[a], images[b]);
      }
    }
    n += hom ? 1 : 0;
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return n;
}

// Cosets as sorted member lists, and the product of cosets by
// representatives, checked to be well defined.
struct CosetTable {
  std::vector<Members> cosets;
  std::vector<std::vector<std::size_t>> product;
  bool well_defined = true;
};

inline CosetTable cosets(const FiniteGroup& g, const Members& n) {
  CosetTable t;
  std::vector<std::size_t> which(g.order(), SIZE_MAX);
  for (Element a = 0; a < g.order(); ++a) {
    if (which[a] != SIZE_MAX) continue;
    Members c;
    for (Element x : n) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    for (Element x : c) which[x] = t.cosets.size();
    t.cosets.push_back(c);
  }
  const std::size_t k = t.cosets.size();
  t.product.assign(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t r = which[g.mul(t.cosets[i][0], t.cosets[j][0])];
      for (Element a : t.cosets[i]) {
        for (Element b : t.cosets[j]) t.well_defined = t.well_defined && which[g.mul(a, b)] == r;
      }
      t.product[i][j] = r;
    }
  }
  return t;
}

}  // namespace oracle
