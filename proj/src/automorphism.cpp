#include "sylowlab/automorphism.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sylowlab/error.hpp"
#include "subgroup_internal.hpp"

namespace sylowlab {

namespace {

// Every element as a word: element = parent * generator, recorded in BFS order.
struct Word {
  Element parent;
  std::size_t generator;
};

struct Search {
  const FiniteGroup& g;
  std::vector<Element> gens;
  std::vector<Element> bfs_order;
  std::vector<Word> word;  // indexed by element
  std::vector<Element> images;
  std::vector<Automorphism> found;

  explicit Search(const FiniteGroup& group)
      : g(group), gens(group.generators().begin(), group.generators().end()) {
    const std::size_t h = g.order();
    word.assign(h, {kIdentity, 0});
    std::vector<bool> seen(h, false);
    seen[kIdentity] = true;
    bfs_order.push_back(kIdentity);
    for (std::size_t i = 0; i < bfs_order.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = g.mul(bfs_order[i], gens[k]);
        if (!seen[y]) {
          seen[y] = true;
          word[y] = {bfs_order[i], k};
          bfs_order.push_back(y);
        }
      }
    }
  }

  // Extends the generator images to a map on all elements and checks that it
  // is a bijective homomorphism.
  std::optional<Automorphism> extend() const {
    const std::size_t h = g.order();
    Automorphism phi(h, kIdentity);
    std::vector<bool> hit(h, false);
    hit[kIdentity] = true;
    for (std::size_t i = 1; i < bfs_order.size(); ++i) {
      const Element x = bfs_order[i];
      const Element y = g.mul(phi[word[x].parent], images[word[x].generator]);
      if (hit[y]) return std::nullopt;
      hit[y] = true;
      phi[x] = y;
    }
    for (Element a = 0; a < h; ++a) {
      for (Element b = 0; b < h; ++b) {
        if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return std::nullopt;
      }
    }
    return phi;
  }

  void run(std::size_t depth, const ElementSet& span) {
    if (depth == gens.size()) {
      if (auto phi = extend()) found.push_back(std::move(*phi));
      return;
    }
    const std::uint32_t want = g.order_of(gens[depth]);
    for (Element y = 0; y < g.order(); ++y) {
      // Generators were chosen outside the span of the earlier ones, and an
      // automorphism preserves that.
      if (g.order_of(y) != want || span.contains(y)) continue;
      images.push_back(y);
      run(depth + 1, detail::close_over(g, span, images));
      images.pop_back();
    }
  }
};

}  // namespace

std::vector<Automorphism> automorphisms(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw Error(ErrorKind::kEnumerationCapExceeded,
                "group order " + std::to_string(g.order()) + " exceeds automorphism cap " +
                    std::to_string(cap));
  }
  Search search(g);
  ElementSet span(g.order());
  span.insert(kIdentity);
  search.run(0, span);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

bool is_characteristic(const SubgroupSet& a, std::size_t cap) {
  return is_characteristic(a, automorphisms(a.parent(), cap));
}

bool is_characteristic(const SubgroupSet& a, const std::vector<Automorphism>& autos) {
  for (const auto& phi : autos) {
    bool stable = true;
    a.members().for_each([&](Element x) {
      if (stable && !a.contains(phi[x])) stable = false;
    });
    if (!stable) return false;
  }
  return true;
}

}  // namespace sylowlab
