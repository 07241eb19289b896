#include "sylowlab/sylow.hpp"

#include <numeric>
#include <string>

#include "sylowlab/error.hpp"
#include "sylowlab/numeric.hpp"

namespace sylowlab {

namespace {

void require_prime(std::int64_t p) {
  if (!numeric::is_prime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
}

// Returns p if the order is p^lambda with lambda >= 1.
std::int64_t require_p_group(const FiniteGroup& g) {
  const auto p = numeric::prime_power_base(static_cast<std::int64_t>(g.order()));
  if (p == 0) {
    throw Error(ErrorKind::kNotAPGroup,
                "order " + std::to_string(g.order()) + " is not a prime power");
  }
  return p;
}

SubgroupSet cyclic_span(const FiniteGroup& g, Element x) {
  ElementSet s(g.order());
  Element y = kIdentity;
  do {
    s.insert(y);
    y = g.mul(y, x);
  } while (y != kIdentity);
  return SubgroupSet::trusted(g, std::move(s));
}

std::vector<SubgroupSet> build_chain(const FiniteGroup& g, std::int64_t p, int lambda) {
  const auto h = static_cast<std::int64_t>(g.order());
  // Among the elements of order p, the class sizes h/|C(P)| sum to mp - 1,
  // so some class has size prime to p; take its smallest element.
  Element anchor = kIdentity;
  SubgroupSet cent = SubgroupSet::trivial(g);
  for (Element x = 1; x < g.order(); ++x) {
    if (g.order_of(x) != p) continue;
    SubgroupSet c = centralizer(g, x);
    if ((h / static_cast<std::int64_t>(c.order())) % p != 0) {
      anchor = x;
      cent = std::move(c);
      break;
    }
  }
  if (anchor == kIdentity) {
    throw std::logic_error("no element of order p with centralizer index prime to p");
  }
  std::vector<SubgroupSet> chain{cyclic_span(g, anchor)};
  if (lambda == 1) return chain;

  const Restriction local = restrict_to(cent);
  Element local_anchor = kIdentity;
  for (std::size_t i = 0; i < local.to_parent.size(); ++i) {
    if (local.to_parent[i] == anchor) local_anchor = static_cast<Element>(i);
  }
  const Quotient q = quotient(local.group, cyclic_span(local.group, local_anchor));
  for (const auto& term : build_chain(q.group, p, lambda - 1)) {
    chain.push_back(embed(local, lift(q, term)));
  }
  return chain;
}

}  // namespace

SylowChain sylow_chain(const FiniteGroup& g, std::int64_t p) {
  require_prime(p);
  const int lambda = numeric::valuation(static_cast<std::int64_t>(g.order()), p);
  if (lambda == 0) {
    throw Error(ErrorKind::kPrimeDoesNotDivideOrder,
                std::to_string(p) + " does not divide " + std::to_string(g.order()));
  }
  return {p, lambda, build_chain(g, p, lambda)};
}

ChiefSeries chief_series(const FiniteGroup& pg) {
  const std::int64_t p = require_p_group(pg);
  ChiefSeries out{p, {}};
  if (static_cast<std::int64_t>(pg.order()) == p) return out;
  const SubgroupSet first = cyclic_span(pg, central_element_of_order_p(pg, SubgroupSet::whole(pg)));
  const Quotient q = quotient(pg, first);
  out.series.push_back(first);
  for (const auto& term : chief_series(q.group).series) out.series.push_back(lift(q, term));
  return out;
}

Element central_element_of_order_p(const FiniteGroup& pg, const SubgroupSet& n) {
  const std::int64_t p = require_p_group(pg);
  if (!n.parent().same_as(pg)) throw Error(ErrorKind::kParentMismatch, "subgroup of another group");
  if (n.order() == 1) throw Error(ErrorKind::kTrivialSubgroup, "subgroup is trivial");
  if (!is_normal(n)) throw Error(ErrorKind::kNotNormal, "subgroup is not normal");
  // n is a union of conjugacy classes of sizes p^k summing to |n|; the
  // identity is one singleton class, so others of size 1 must exist.
  const auto classes = conjugacy_classes(pg);
  for (Element x = 1; x < pg.order(); ++x) {
    if (!n.contains(x) || classes.class_sizes[classes.class_of[x]] != 1) continue;
    const auto order = static_cast<std::int64_t>(pg.order_of(x));
    return power(pg, x, order / p);
  }
  throw std::logic_error("normal subgroup of a p-group without central elements");
}

CoprimeDecomposition coprime_decomposition(const FiniteGroup& g, Element c, std::int64_t a,
                                           std::int64_t b) {
  g.check(c);
  if (a < 1 || b < 1) throw Error(ErrorKind::kInvalidArgument, "orders must be positive");
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorKind::kNotCoprime,
                std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
  }
  const std::int64_t ab = a * b;
  if (g.order_of(c) != ab) {
    throw Error(ErrorKind::kOrderMismatch, "element " + std::to_string(c) + " has order " +
                                               std::to_string(g.order_of(c)) + ", expected " +
                                               std::to_string(ab));
  }
  const auto bz = numeric::extended_gcd(a, b);
  CoprimeDecomposition d;
  d.a = a;
  d.b = b;
  d.alpha = numeric::mod(b * bz.y, ab);
  d.beta = numeric::mod(a * bz.x, ab);
  d.a_part = power(g, c, d.alpha);
  d.b_part = power(g, c, d.beta);
  return d;
}

CoprimeDecomposition p_part_decomposition(const FiniteGroup& g, Element x, std::int64_t p) {
  require_prime(p);
  g.check(x);
  const std::int64_t m = g.order_of(x);
  const std::int64_t a = numeric::ipow(p, numeric::valuation(m, p));
  return coprime_decomposition(g, x, a, m / a);
}

}  // namespace sylowlab
