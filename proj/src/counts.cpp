#include "sylowlab/counts.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "sylowlab/error.hpp"
#include "sylowlab/numeric.hpp"
#include "sylowlab/sylow.hpp"
#include "subgroup_internal.hpp"

namespace sylowlab {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t order_of(const FiniteGroup& g) { return static_cast<std::int64_t>(g.order()); }

void require_prime(std::int64_t p) {
  if (!numeric::is_prime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must be positive");
}

void require_prime_power_divides(std::int64_t h, std::int64_t p, int kappa) {
  if (kappa < 1) throw Error(ErrorKind::kInvalidArgument, "kappa must be at least 1");
  if (numeric::valuation(h, p) < kappa) {
    throw Error(ErrorKind::kPrimePowerDoesNotDivideOrder,
                std::to_string(p) + "^" + std::to_string(kappa) + " does not divide " +
                    std::to_string(h));
  }
}

bool one_mod(std::int64_t value, std::int64_t p) { return numeric::mod(value, p) == 1 % p; }

std::string str(std::int64_t v) { return std::to_string(v); }

VerificationReport make(std::string id, const FiniteGroup& g, Params params) {
  VerificationReport r;
  r.theorem_id = std::move(id);
  r.group = g.name();
  r.params = std::move(params);
  return r;
}

// Orbit of a under conjugation by the subgroup generated by conjugators.
std::unordered_set<ElementSet, ElementSetHash> orbit_under(const SubgroupSet& a,
                                                          const std::vector<Element>& conjugators) {
  std::unordered_set<ElementSet, ElementSetHash> seen{a.members()};
  std::vector<SubgroupSet> queue{a};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element t : conjugators) {
      SubgroupSet c = conjugate_subgroup(queue[i], t);
      if (seen.insert(c.members()).second) queue.push_back(std::move(c));
    }
  }
  return seen;
}

bool normalized_by(const SubgroupSet& a, const std::vector<Element>& conjugators) {
  for (Element t : conjugators) {
    if (!(conjugate_subgroup(a, t) == a)) return false;
  }
  return true;
}

}  // namespace

std::string describe(const SubgroupSet& s) {
  std::ostringstream os;
  os << "order " << s.order() << " {";
  bool first = true;
  s.members().for_each([&](Element e) {
    os << (first ? "" : ",") << e;
    first = false;
  });
  os << '}';
  return os.str();
}

std::int64_t count_solutions(const FiniteGroup& g, std::int64_t n) {
  require_positive(n, "n");
  std::int64_t count = 0;
  for (auto o : g.element_orders()) {
    if (n % o == 0) ++count;
  }
  return count;
}

VerificationReport verify_divisibility(const FiniteGroup& g, std::int64_t n) {
  const std::int64_t count = count_solutions(g, n);
  const std::int64_t d = std::gcd(n, order_of(g));
  auto r = make("INTRO.gcd", g, {{"n", n}});
  r.counted = {count, d};
  r.passed = count % d == 0;
  r.relation = "gcd(n,h)=" + str(d) + " divides #{x: x^n=e}=" + str(count);
  return r;
}

std::int64_t count_elements_of_order(const FiniteGroup& g, std::int64_t m) {
  require_positive(m, "m");
  std::int64_t count = 0;
  for (auto o : g.element_orders()) {
    if (o == m) ++count;
  }
  return count;
}

VerificationReport verify_order_p_form(const FiniteGroup& g, std::int64_t p) {
  require_prime(p);
  if (order_of(g) % p != 0) {
    throw Error(ErrorKind::kPrimeDoesNotDivideOrder, str(p) + " does not divide " + str(order_of(g)));
  }
  const std::int64_t count = count_elements_of_order(g, p);
  auto r = make("INTRO.order_p", g, {{"p", p}});
  r.passed = count % (p - 1) == 0 && count / (p - 1) >= 1 && one_mod(count / (p - 1), p);
  const std::int64_t n = r.passed ? (count / (p - 1) - 1) / p : -1;
  r.counted = {count, n};
  r.relation = "#{x: ord(x)=p}=" + str(count) + " = (p-1)(n*p+1) with n=" + str(n);
  return r;
}

ComplexSet solution_set(const FiniteGroup& g, std::int64_t n) {
  require_positive(n, "n");
  ComplexSet set(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (n % g.order_of(x) == 0) set.insert(x);
  }
  return set;
}

VerificationReport solution_subgroup(const FiniteGroup& g, std::int64_t n, std::size_t cap) {
  if (g.order() > cap) return solution_subgroup(g, n, nullptr);
  const auto autos = automorphisms(g, cap);
  return solution_subgroup(g, n, &autos);
}

VerificationReport solution_subgroup(const FiniteGroup& g, std::int64_t n,
                                     const std::vector<Automorphism>* autos) {
  require_positive(n, "n");
  if (order_of(g) % n != 0) {
    throw Error(ErrorKind::kInvalidArgument, str(n) + " does not divide " + str(order_of(g)));
  }
  const SubgroupSet generated = closure_of(solution_set(g, n));
  const auto order = static_cast<std::int64_t>(generated.order());
  const bool divisible = order % n == 0;
  const bool characteristic = autos == nullptr || is_characteristic(generated, *autos);
  auto r = make("S2.III", g, {{"n", n}, {"characteristic_checked", autos != nullptr ? 1 : 0}});
  r.counted = {count_solutions(g, n), order};
  r.passed = divisible && characteristic;
  r.relation = "n divides |<x: x^n=e>|=" + str(order) +
               (autos != nullptr ? (characteristic ? ", characteristic" : ", NOT characteristic")
                                 : ", characteristic check skipped (automorphism cap)");
  return r;
}

PowerStabilization complex_power_stabilization(const ComplexSet& r) {
  if (r.size() == 0) throw Error(ErrorKind::kInvalidArgument, "empty complex");
  const FiniteGroup& g = r.parent();
  const auto factors = r.members().members();
  std::vector<ElementSet> powers{r.members()};
  std::unordered_map<ElementSet, int, ElementSetHash> first_seen{{r.members(), 1}};
  while (true) {
    ElementSet next(g.order());
    powers.back().for_each([&](Element x) {
      for (Element y : factors) next.insert(g.mul(x, y));
    });
    const int exponent = static_cast<int>(powers.size()) + 1;
    const auto [it, inserted] = first_seen.emplace(next, exponent);
    if (!inserted) {
      PowerStabilization out{it->second, exponent - it->second, 0, ComplexSet(g)};
      out.t = ((out.r + out.s - 1) / out.s) * out.s;
      out.stabilized = ComplexSet(g, powers[static_cast<std::size_t>(out.t - 1)]);
      return out;
    }
    powers.push_back(std::move(next));
  }
}

VerificationReport verify_power_stabilization(const FiniteGroup& g, std::int64_t n) {
  const ComplexSet solutions = solution_set(g, n);
  const auto stab = complex_power_stabilization(solutions);
  const SubgroupSet generated = closure_of(solutions);
  auto r = make("S2.powers", g, {{"n", n}});
  const auto size = static_cast<std::int64_t>(stab.stabilized.size());
  r.counted = {stab.r, stab.s, size};
  r.passed = stab.s == 1 && stab.stabilized.members() == generated.members() && size % n == 0;
  r.relation = "R^" + str(stab.r) + "=R^" + str(stab.r + stab.s) +
               " with s=1, equal to <R> of order " + str(generated.order()) + " divisible by n";
  return r;
}

VerificationReport verify_coprime_product(const FiniteGroup& g, std::int64_t rr, std::int64_t ss) {
  require_positive(rr, "r");
  require_positive(ss, "s");
  if (std::gcd(rr, ss) != 1) throw Error(ErrorKind::kNotCoprime, str(rr) + " and " + str(ss));
  const std::int64_t h = order_of(g);
  if (h % rr != 0 || h % ss != 0) {
    throw Error(ErrorKind::kInvalidArgument, "r and s must divide the group order");
  }
  const Params params{{"r", rr}, {"s", ss}};
  const std::int64_t count_r = count_solutions(g, rr);
  const std::int64_t count_s = count_solutions(g, ss);
  if (count_r != rr || count_s != ss) {
    auto r = not_applicable("S2.IV", g.name(), params,
                            "#{x^r=e}=" + str(count_r) + ", #{x^s=e}=" + str(count_s));
    r.counted = {count_r, count_s};
    return r;
  }
  const auto as = solution_set(g, rr).members().members();
  const auto bs = solution_set(g, ss).members().members();
  bool commute = true;
  ElementSet products(g.order());
  for (Element a : as) {
    for (Element b : bs) {
      if (g.mul(a, b) != g.mul(b, a)) commute = false;
      products.insert(g.mul(a, b));
    }
  }
  const auto distinct = static_cast<std::int64_t>(products.count());
  const std::int64_t count_rs = count_solutions(g, rr * ss);
  auto r = make("S2.IV", g, params);
  r.counted = {count_r, count_s, distinct, count_rs};
  r.passed = commute && distinct == rr * ss && count_rs == rr * ss;
  r.relation = std::string(commute ? "A,B commute" : "A,B DO NOT commute") + ", " + str(distinct) +
               " distinct products AB, #{x^(rs)=e}=" + str(count_rs) + " = r*s";
  return r;
}

VerificationReport count_p_subgroups(const SubgroupLattice& lattice, std::int64_t p, int kappa) {
  require_prime(p);
  const FiniteGroup& g = lattice.group();
  require_prime_power_divides(order_of(g), p, kappa);
  const auto count =
      static_cast<std::int64_t>(lattice.indices_of_order(static_cast<std::size_t>(numeric::ipow(p, kappa))).size());
  auto r = make("S4.I", g, {{"p", p}, {"kappa", kappa}});
  r.counted = {count};
  r.passed = one_mod(count, p);
  r.relation = "r_kappa=" + str(count) + " = 1 mod p";
  return r;
}

VerificationReport count_p_subgroups(const FiniteGroup& g, std::int64_t p, int kappa, std::size_t cap) {
  return count_p_subgroups(SubgroupLattice(g, cap), p, kappa);
}

VerificationReport count_containing(const SubgroupLattice& lattice, const SubgroupSet& p_sub,
                                    std::int64_t p, int kappa) {
  require_prime(p);
  const FiniteGroup& g = lattice.group();
  if (!p_sub.parent().same_as(g)) throw Error(ErrorKind::kParentMismatch, "P is not in this group");
  require_prime_power_divides(order_of(g), p, kappa);
  const auto order = static_cast<std::int64_t>(p_sub.order());
  const int theta = numeric::valuation(order, p);
  if (numeric::ipow(p, theta) != order || theta > kappa) {
    throw Error(ErrorKind::kNotAPSubgroup,
                "P has order " + str(order) + ", not p^theta with theta <= " + str(kappa));
  }
  std::int64_t count = 0;
  for (auto i : lattice.indices_of_order(static_cast<std::size_t>(numeric::ipow(p, kappa)))) {
    if (p_sub.is_subgroup_of(lattice[i])) ++count;
  }
  auto r = make("S4.II", g, {{"p", p}, {"kappa", kappa}, {"theta", theta}});
  r.counted = {count};
  r.passed = one_mod(count, p);
  r.relation = "#{B: |B|=p^kappa, P<=B}=" + str(count) + " = 1 mod p";
  r.witnesses = {"P " + describe(p_sub)};
  return r;
}

VerificationReport incidence_check(const SubgroupLattice& lattice, std::int64_t p, int kappa) {
  require_prime(p);
  const FiniteGroup& g = lattice.group();
  require_prime_power_divides(order_of(g), p, kappa);
  const auto lower = lattice.indices_of_order(static_cast<std::size_t>(numeric::ipow(p, kappa - 1)));
  const auto upper = lattice.indices_of_order(static_cast<std::size_t>(numeric::ipow(p, kappa)));
  std::int64_t sum_a = 0, sum_b = 0;
  bool all_a = true, all_b = true;
  auto r = make("S4.4", g, {{"p", p}, {"kappa", kappa}});
  for (auto i : lower) {
    std::int64_t a = 0;
    for (auto j : upper) a += lattice[i].is_subgroup_of(lattice[j]) ? 1 : 0;
    sum_a += a;
    if (!one_mod(a, p)) {
      all_a = false;
      r.witnesses.push_back("a=" + str(a) + " for " + describe(lattice[i]));
    }
  }
  for (auto j : upper) {
    std::int64_t b = 0;
    for (auto i : lower) b += lattice[i].is_subgroup_of(lattice[j]) ? 1 : 0;
    sum_b += b;
    if (!one_mod(b, p)) {
      all_b = false;
      r.witnesses.push_back("b=" + str(b) + " for " + describe(lattice[j]));
    }
  }
  r.counted = {sum_a, sum_b, static_cast<std::int64_t>(lower.size()),
               static_cast<std::int64_t>(upper.size())};
  r.passed = sum_a == sum_b && all_a && all_b;
  r.relation = "sum a=" + str(sum_a) + " = sum b=" + str(sum_b) + ", every a, b = 1 mod p";
  return r;
}

std::pair<KindClassification, VerificationReport> classify_kinds(const SubgroupLattice& lattice,
                                                                  std::int64_t p, int kappa) {
  require_prime(p);
  const FiniteGroup& g = lattice.group();
  const std::int64_t h = order_of(g);
  require_prime_power_divides(h, p, kappa);
  const std::int64_t sylow_order = numeric::ipow(p, numeric::valuation(h, p));
  KindClassification kinds;
  for (auto i : lattice.indices_of_order(static_cast<std::size_t>(numeric::ipow(p, kappa)))) {
    const auto n = static_cast<std::int64_t>(lattice.normalizer_order(i));
    (n % sylow_order == 0 ? kinds.first_kind : kinds.second_kind).push_back(lattice[i]);
  }
  const auto first = static_cast<std::int64_t>(kinds.first_kind.size());
  const auto second = static_cast<std::int64_t>(kinds.second_kind.size());
  auto r = make("S5.I", g, {{"p", p}, {"kappa", kappa}});
  r.counted = {first, second};
  r.passed = one_mod(first, p) && second % p == 0;
  r.relation = "first kind " + str(first) + " = 1 mod p, second kind " + str(second) + " = 0 mod p";
  return {std::move(kinds), std::move(r)};
}

bool first_kind_via_sylow(const SubgroupLattice& lattice, const SubgroupSet& a, std::int64_t p) {
  require_prime(p);
  const std::int64_t h = order_of(lattice.group());
  const auto sylow_order = static_cast<std::size_t>(numeric::ipow(p, numeric::valuation(h, p)));
  for (auto i : lattice.indices_of_order(sylow_order)) {
    const SubgroupSet& sylow = lattice[i];
    if (!a.is_subgroup_of(sylow)) continue;
    if (normalized_by(a, detail::generating_set(sylow))) return true;
  }
  return false;
}

VerificationReport count_normal_within(const SubgroupLattice& lattice, const SubgroupSet& g_sub,
                                       std::int64_t p, int kappa, bool relaxed) {
  require_prime(p);
  const FiniteGroup& h_group = lattice.group();
  const std::int64_t h = order_of(h_group);
  if (!relaxed && numeric::prime_power_base(h) != p) {
    throw Error(ErrorKind::kNotAPGroup, "order " + str(h) + " is not a power of " + str(p));
  }
  if (!g_sub.parent().same_as(h_group)) throw Error(ErrorKind::kParentMismatch, "G is not in H");
  const auto g_index = lattice.index_of(g_sub);
  if (!g_index || !lattice.normal(*g_index)) throw Error(ErrorKind::kNotNormal, "G is not normal in H");
  require_prime_power_divides(static_cast<std::int64_t>(g_sub.order()), p, kappa);
  const std::int64_t sylow_order = numeric::ipow(p, numeric::valuation(h, p));
  std::int64_t count = 0;
  for (auto i : lattice.indices_of_order(static_cast<std::size_t>(numeric::ipow(p, kappa)))) {
    if (!lattice[i].is_subgroup_of(g_sub)) continue;
    const bool qualifies = relaxed
                               ? static_cast<std::int64_t>(lattice.normalizer_order(i)) % sylow_order == 0
                               : lattice.normal(i);
    if (qualifies) ++count;
  }
  auto r = make("S5.II", h_group,
                {{"p", p}, {"kappa", kappa}, {"g_order", static_cast<std::int64_t>(g_sub.order())},
                 {"relaxed", relaxed ? 1 : 0}});
  r.counted = {count};
  r.passed = one_mod(count, p);
  r.relation = std::string(relaxed ? "#{first-kind B<=G: |B|=p^kappa}=" : "#{B<=G: |B|=p^kappa, B normal in H}=") +
               str(count) + " = 1 mod p";
  r.witnesses = {"G " + describe(g_sub)};
  return r;
}

VerificationReport congruence7(const FiniteGroup& g, std::int64_t p, std::size_t cap) {
  require_prime(p);
  const std::int64_t h = order_of(g);
  const SylowChain chain = sylow_chain(g, p);
  const SubgroupSet& sylow = chain.chain.back();
  const int lambda = chain.exponent;
  const Params params{{"p", p}};
  if (is_normal(sylow)) {
    return not_applicable("S5.7", g.name(), params, "Sylow subgroup is normal");
  }
  int delta = 0;
  for (const auto& c : conjugates_of(sylow)) {
    if (c == sylow) continue;
    delta = std::max(delta, numeric::valuation(static_cast<std::int64_t>(intersect(sylow, c).order()), p));
  }
  const std::int64_t modulus = numeric::ipow(p, lambda - delta);
  const SubgroupSet n_p = normalizer(sylow);
  const auto p_prime = static_cast<std::int64_t>(n_p.order());

  const Restriction local = restrict_to(sylow);
  const SubgroupLattice inner(local.group, cap);
  auto r = make("S5.7", g, params);
  std::int64_t checked = 0;
  bool ok = true;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (!inner.normal(i)) continue;
    const SubgroupSet q = embed(local, inner[i]);
    const SubgroupSet n_q = normalizer(q);
    const auto q_prime = static_cast<std::int64_t>(n_q.order());
    const auto rr = static_cast<std::int64_t>(intersect(n_p, n_q).order());
    ++checked;
    if (h % q_prime != 0 || p_prime % rr != 0) {
      ok = false;
      r.witnesses.push_back("non-integral quotient for Q " + describe(q));
      continue;
    }
    const std::int64_t lhs = h / q_prime;
    const std::int64_t rhs = p_prime / rr;
    const bool holds = numeric::mod(lhs - rhs, modulus) == 0;
    ok = ok && holds;
    r.witnesses.push_back("Q " + describe(q) + ": h/q'=" + str(lhs) + " p'/r=" + str(rhs) +
                          (holds ? "" : " MISMATCH"));
  }
  r.counted = {checked, lambda, delta, p_prime};
  r.passed = ok;
  r.relation = "h/q' = p'/r mod p^(lambda-delta)=" + str(modulus) + " for all normal Q of P";
  return r;
}

VerificationReport normal_fusion_check(const SubgroupLattice& lattice, std::int64_t p) {
  require_prime(p);
  const FiniteGroup& g = lattice.group();
  const std::int64_t h = order_of(g);
  const SylowChain chain = sylow_chain(g, p);
  const SubgroupSet& sylow = chain.chain.back();
  const std::int64_t sylow_order = static_cast<std::int64_t>(sylow.order());
  const auto sylow_gens = detail::generating_set(sylow);
  const auto n_gens = detail::generating_set(normalizer(sylow));

  // Normal subgroups of P.
  std::vector<std::size_t> normal_in_p;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice[i].is_subgroup_of(sylow) && normalized_by(lattice[i], sylow_gens)) normal_in_p.push_back(i);
  }
  std::unordered_set<ElementSet, ElementSetHash> normal_set;
  for (auto i : normal_in_p) normal_set.insert(lattice[i].members());

  auto r = make("S5.III", g, {{"p", p}});
  std::int64_t pairs = 0, counterexamples = 0, class_mismatches = 0;
  for (auto i : normal_in_p) {
    const auto under_n = orbit_under(lattice[i], n_gens);
    for (const auto& c : conjugates_of(lattice[i])) {
      if (!normal_set.contains(c.members())) continue;
      ++pairs;
      if (!under_n.contains(c.members())) {
        ++counterexamples;
        r.witnesses.push_back("Q0 " + describe(lattice[i]) + " -> Q " + describe(c) +
                              " not fused in N(P)");
      }
    }
  }
  const int lambda = chain.exponent;
  for (int kappa = 0; kappa <= lambda; ++kappa) {
    const auto m = static_cast<std::size_t>(numeric::ipow(p, kappa));
    std::vector<SubgroupSet> first_kind;
    for (auto i : lattice.indices_of_order(m)) {
      if (static_cast<std::int64_t>(lattice.normalizer_order(i)) % sylow_order == 0) {
        first_kind.push_back(lattice[i]);
      }
    }
    const auto h_classes = static_cast<std::int64_t>(subgroup_conjugacy_classes(first_kind).size());
    std::int64_t n_classes = 0;
    std::unordered_set<ElementSet, ElementSetHash> covered;
    for (auto i : normal_in_p) {
      if (lattice[i].order() != m || covered.contains(lattice[i].members())) continue;
      ++n_classes;
      for (const auto& member : orbit_under(lattice[i], n_gens)) covered.insert(member);
    }
    if (h_classes != n_classes) {
      ++class_mismatches;
      r.witnesses.push_back("kappa=" + str(kappa) + ": " + str(h_classes) + " classes in H, " +
                            str(n_classes) + " in N(P)");
    }
  }
  r.counted = {pairs, counterexamples, class_mismatches, h};
  r.passed = counterexamples == 0 && class_mismatches == 0;
  r.relation = "normal subgroups of P conjugate in H are conjugate in N(P); class counts agree";
  return r;
}

VerificationReport sylow_single_class(const SubgroupLattice& lattice, std::int64_t p) {
  require_prime(p);
  const FiniteGroup& g = lattice.group();
  const std::int64_t h = order_of(g);
  const int lambda = numeric::valuation(h, p);
  if (lambda == 0) throw Error(ErrorKind::kPrimeDoesNotDivideOrder, str(p) + " does not divide " + str(h));
  const auto sylows = lattice.of_order(static_cast<std::size_t>(numeric::ipow(p, lambda)));
  const auto classes = static_cast<std::int64_t>(subgroup_conjugacy_classes(sylows).size());
  const auto count = static_cast<std::int64_t>(sylows.size());
  auto r = make("INTRO.sylow", g, {{"p", p}});
  r.counted = {count, classes};
  r.passed = classes == 1 && one_mod(count, p) && h % count == 0;
  r.relation = "n_p=" + str(count) + " in " + str(classes) + " class(es), = 1 mod p, divides h";
  return r;
}

}  // namespace sylowlab
