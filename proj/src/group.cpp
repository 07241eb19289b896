#include "sylowlab/group.hpp"

#include <deque>
#include <numeric>
#include <unordered_map>

#include "sylowlab/error.hpp"
#include "sylowlab/numeric.hpp"

namespace sylowlab {

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

std::string FiniteGroup::label(Element a) const {
  if (a < data_->labels.size()) return data_->labels[a];
  return std::to_string(a);
}

void FiniteGroup::check(Element a) const {
  if (a >= data_->order) {
    throw Error(ErrorKind::kInvalidElement, "element " + std::to_string(a) +
                                                " not in group of order " +
                                                std::to_string(data_->order));
  }
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->name = std::move(name);
  return FiniteGroup(std::move(copy));
}

FiniteGroup FiniteGroup::relabeled(std::vector<std::string> labels) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->labels = std::move(labels);
  return FiniteGroup(std::move(copy));
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ || (a.data_->order == b.data_->order && a.data_->table == b.data_->table);
}

std::shared_ptr<FiniteGroup::Data> FiniteGroup::finish(std::shared_ptr<Data> d) {
  const std::size_t h = d->order;
  d->inverse.assign(h, 0);
  d->elem_order.assign(h, 1);
  for (Element a = 0; a < h; ++a) {
    for (Element b = 0; b < h; ++b) {
      if (d->table[a * h + b] == kIdentity) {
        d->inverse[a] = b;
        break;
      }
    }
    std::uint32_t k = 1;
    for (Element x = a; x != kIdentity; x = d->table[x * h + a]) ++k;
    d->elem_order[a] = k;
  }
  // Greedy generating set: add the smallest element outside the current span.
  d->generators.clear();
  std::vector<bool> in_span(h, false);
  std::vector<Element> span{kIdentity};
  in_span[kIdentity] = true;
  for (Element cand = 1; cand < h; ++cand) {
    if (in_span[cand]) continue;
    d->generators.push_back(cand);
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (Element g : d->generators) {
        const Element p = d->table[span[i] * h + g];
        if (!in_span[p]) {
          in_span[p] = true;
          span.push_back(p);
        }
      }
    }
  }
  return d;
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<Element> table, std::size_t order,
                                            std::string name, std::vector<std::string> labels) {
  auto d = std::make_shared<Data>();
  d->order = order;
  d->table = std::move(table);
  d->name = std::move(name);
  d->labels = std::move(labels);
  return FiniteGroup(finish(std::move(d)));
}

FiniteGroup group_from_generators(const std::vector<Permutation>& generators, std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::kInvalidArgument, "construction cap must be positive");
  const std::size_t degree = generators.empty() ? 1 : generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::kInvalidPermutation, "generators have different degrees");
    }
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, Element, PermutationHash> index{{elements[0], 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elements[i] * g;
      if (index.contains(next)) continue;
      if (elements.size() >= cap) {
        throw Error(ErrorKind::kClosureExceedsCap,
                    "closure has more than " + std::to_string(cap) + " elements");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t h = elements.size();
  std::vector<Element> table(h * h);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = 0; b < h; ++b) table[a * h + b] = index.at(elements[a] * elements[b]);
  }
  std::vector<std::string> labels;
  labels.reserve(h);
  for (const auto& e : elements) labels.push_back(e.to_cycle_string());
  return FiniteGroup::from_trusted_table(std::move(table), h, {}, std::move(labels));
}

FiniteGroup group_from_table(const std::vector<std::vector<Element>>& rows,
                             std::size_t associativity_cap) {
  const std::size_t h = rows.size();
  if (h == 0) throw Error(ErrorKind::kInvalidArgument, "empty multiplication table");
  std::vector<Element> table;
  table.reserve(h * h);
  for (std::size_t i = 0; i < h; ++i) {
    if (rows[i].size() != h) {
      throw Error(ErrorKind::kInvalidArgument, "row " + std::to_string(i) + " has " +
                                                   std::to_string(rows[i].size()) +
                                                   " entries, expected " + std::to_string(h));
    }
    for (std::size_t j = 0; j < h; ++j) {
      if (rows[i][j] >= h) {
        throw Error(ErrorKind::kInvalidArgument, "entry (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ") out of range");
      }
      table.push_back(rows[i][j]);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * h + b]; };
  for (Element j = 0; j < h; ++j) {
    if (at(0, j) != j) throw NotAGroupError("identity", {0, j, at(0, j)});
    if (at(j, 0) != j) throw NotAGroupError("identity", {j, 0, at(j, 0)});
  }
  for (Element a = 0; a < h; ++a) {
    bool found = false;
    for (Element b = 0; b < h && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) throw NotAGroupError("inverse", {a, a, a});
  }
  if (h <= associativity_cap) {
    for (Element a = 0; a < h; ++a) {
      for (Element b = 0; b < h; ++b) {
        const Element ab = at(a, b);
        for (Element c = 0; c < h; ++c) {
          if (at(ab, c) != at(a, at(b, c))) throw NotAGroupError("associativity", {a, b, c});
        }
      }
    }
  }
  return FiniteGroup::from_trusted_table(std::move(table), h);
}

std::uint32_t element_order(const FiniteGroup& g, Element x) {
  g.check(x);
  return g.order_of(x);
}

Element power(const FiniteGroup& g, Element x, std::int64_t k) {
  g.check(x);
  const auto e = numeric::mod(k, g.order_of(x));
  Element result = kIdentity;
  Element base = x;
  for (std::int64_t rest = e; rest > 0; rest >>= 1) {
    if (rest & 1) result = g.mul(result, base);
    base = g.mul(base, base);
  }
  return result;
}

Element conjugate(const FiniteGroup& g, Element x, Element t) {
  g.check(x);
  g.check(t);
  return g.mul(g.mul(g.inverse(t), x), t);
}

bool is_abelian(const FiniteGroup& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

}  // namespace sylowlab
