#include "sylowlab/verify.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "sylowlab/error.hpp"
#include "sylowlab/numeric.hpp"
#include "subgroup_internal.hpp"

namespace sylowlab {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

VerificationReport make(std::string id, const FiniteGroup& g,
                        std::vector<std::pair<std::string, std::int64_t>> params = {}) {
  VerificationReport r;
  r.theorem_id = std::move(id);
  r.group = g.name();
  r.params = std::move(params);
  return r;
}

std::int64_t p_group_prime(const FiniteGroup& g) {
  return numeric::prime_power_base(static_cast<std::int64_t>(g.order()));
}

bool normal_in(const SubgroupSet& a, const SubgroupSet& b) {
  for (Element t : detail::generating_set(b)) {
    if (!(conjugate_subgroup(a, t) == a)) return false;
  }
  return true;
}

}  // namespace

VerificationReport check_sylow_chain(const FiniteGroup& g, std::int64_t p, const SubgroupLattice* lattice) {
  const SylowChain chain = sylow_chain(g, p);
  auto r = make("S3", g, {{"p", p}});
  bool ok = static_cast<int>(chain.chain.size()) == chain.exponent;
  for (std::size_t i = 0; ok && i < chain.chain.size(); ++i) {
    const auto& term = chain.chain[i];
    if (static_cast<std::int64_t>(term.order()) != numeric::ipow(p, static_cast<int>(i) + 1)) {
      ok = false;
      r.witnesses.push_back("term " + str(static_cast<std::int64_t>(i)) + " has order " + str(static_cast<std::int64_t>(term.order())));
    }
    if (i + 1 < chain.chain.size()) {
      const auto& next = chain.chain[i + 1];
      if (!term.is_subgroup_of(next) || term == next || !normal_in(term, next)) {
        ok = false;
        r.witnesses.push_back("term " + str(static_cast<std::int64_t>(i)) + " not normal in the next");
      }
    }
  }
  bool listed = true;
  if (lattice != nullptr && !chain.chain.empty()) {
    listed = lattice->index_of(chain.chain.back()).has_value();
    if (!listed) r.witnesses.push_back("top term missing from the subgroup lattice");
  }
  for (const auto& term : chain.chain) r.witnesses.push_back(describe(term));
  r.counted = {chain.exponent, static_cast<std::int64_t>(chain.chain.size())};
  r.passed = ok && listed;
  r.relation = "chain of orders p..p^lambda, each normal in the next" +
               std::string(lattice != nullptr ? ", top is a listed Sylow subgroup" : "");
  return r;
}

VerificationReport check_center_has_order_p(const FiniteGroup& g) {
  const std::int64_t p = p_group_prime(g);
  const SubgroupSet z = center(g);
  std::int64_t count = 0;
  z.members().for_each([&](Element x) { count += g.order_of(x) == p ? 1 : 0; });
  auto r = make("S1.I", g, {{"p", p}});
  r.counted = {static_cast<std::int64_t>(z.order()), count};
  r.passed = count > 0;
  r.relation = "center of order " + str(static_cast<std::int64_t>(z.order())) + " has " + str(count) +
               " elements of order p";
  return r;
}

VerificationReport check_maximal_subgroups_normal(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  const std::int64_t p = p_group_prime(g);
  auto r = make("S1.II", g, {{"p", p}});
  std::int64_t total = 0, normal = 0;
  for (auto i : lattice.indices_of_order(g.order() / static_cast<std::size_t>(p))) {
    ++total;
    if (lattice.normal(i)) {
      ++normal;
    } else {
      r.witnesses.push_back("not normal: " + describe(lattice[i]));
    }
  }
  r.counted = {total, normal};
  r.passed = total == normal;
  r.relation = "all " + str(total) + " subgroups of index p are normal";
  return r;
}

VerificationReport check_normal_order_p_central(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  const std::int64_t p = p_group_prime(g);
  const SubgroupSet z = center(g);
  auto r = make("S1.III", g, {{"p", p}});
  std::int64_t checked = 0, central = 0;
  for (auto i : lattice.indices_of_order(static_cast<std::size_t>(p))) {
    if (!lattice.normal(i)) continue;
    ++checked;
    if (lattice[i].is_subgroup_of(z)) {
      ++central;
    } else {
      r.witnesses.push_back("not central: " + describe(lattice[i]));
    }
  }
  r.counted = {checked, central};
  r.passed = checked == central;
  r.relation = "every normal subgroup of order p is central";
  return r;
}

VerificationReport check_coprime_commute(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  auto r = make("S1.IV", g);
  std::int64_t pairs = 0, failures = 0;
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      const auto& a = lattice[i];
      const auto& b = lattice[j];
      if (std::gcd(a.order(), b.order()) != 1) continue;
      if (!normal_in(a, b) || !normal_in(b, a)) continue;
      ++pairs;
      if (!commute_elementwise(a, b)) {
        ++failures;
        r.witnesses.push_back(describe(a) + " and " + describe(b) + " do not commute");
      }
    }
  }
  r.counted = {pairs, failures};
  r.passed = failures == 0;
  r.relation = "coprime mutually normalizing subgroups commute elementwise";
  return r;
}

VerificationReport check_normal_meets_center(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  const std::int64_t p = p_group_prime(g);
  const SubgroupSet z = center(g);
  auto r = make("S1.V", g, {{"p", p}});
  std::int64_t checked = 0, failures = 0;
  for (std::size_t i = 1; i < lattice.size(); ++i) {
    if (!lattice.normal(i)) continue;
    ++checked;
    const SubgroupSet meet = intersect(lattice[i], z);
    const Element witness = central_element_of_order_p(g, lattice[i]);
    const bool ok = meet.order() > 1 && meet.contains(witness) && g.order_of(witness) == p;
    if (!ok) {
      ++failures;
      r.witnesses.push_back("no central element of order p in " + describe(lattice[i]));
    }
  }
  r.counted = {checked, failures};
  r.passed = failures == 0;
  r.relation = "every nontrivial normal subgroup contains a central element of order p";
  return r;
}

VerificationReport check_chief_series(const FiniteGroup& g) {
  const ChiefSeries cs = chief_series(g);
  const std::int64_t p = cs.prime;
  const int lambda = numeric::valuation(static_cast<std::int64_t>(g.order()), p);
  auto r = make("S1.chief", g, {{"p", p}});
  bool ok = static_cast<int>(cs.series.size()) == lambda - 1;
  for (std::size_t i = 0; i < cs.series.size(); ++i) {
    const auto& term = cs.series[i];
    ok = ok && static_cast<std::int64_t>(term.order()) == numeric::ipow(p, static_cast<int>(i) + 1) &&
         is_normal(term) && (i == 0 || cs.series[i - 1].is_subgroup_of(term));
    r.witnesses.push_back(describe(term));
  }
  r.counted = {lambda, static_cast<std::int64_t>(cs.series.size())};
  r.passed = ok;
  r.relation = "lambda-1 increasing terms of orders p, p^2, ..., each normal";
  return r;
}

VerificationReport check_maximal_subgroup_count(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  const std::int64_t p = p_group_prime(g);
  const auto count = static_cast<std::int64_t>(
      lattice.indices_of_order(g.order() / static_cast<std::size_t>(p)).size());
  const bool cyclic = is_cyclic(g);
  auto r = make("S5.max", g, {{"p", p}});
  r.counted = {count, cyclic ? 1 : 0};
  r.passed = cyclic ? count == 1 : (count > 1 && numeric::mod(count, p) == 1);
  r.relation = cyclic ? "cyclic: exactly one subgroup of index p"
                      : "non-cyclic: " + str(count) + " subgroups of index p, > 1 and = 1 mod p";
  return r;
}

VerificationReport check_decompositions(const FiniteGroup& g) {
  auto r = make("S2.I", g);
  std::int64_t checked = 0, failures = 0;
  for (Element c = 0; c < g.order(); ++c) {
    const std::int64_t m = g.order_of(c);
    for (std::int64_t a = 2; a < m; ++a) {
      if (m % a != 0 || std::gcd(a, m / a) != 1) continue;
      const std::int64_t b = m / a;
      const auto d = coprime_decomposition(g, c, a, b);
      ++checked;
      // A determines B = A^-1 c, so scanning A covers every candidate pair.
      std::int64_t solutions = 0;
      bool matches = false;
      for (Element x = 0; x < g.order(); ++x) {
        if (g.order_of(x) != a) continue;
        const Element y = g.mul(g.inverse(x), c);
        if (g.order_of(y) != b || g.mul(x, y) != g.mul(y, x)) continue;
        ++solutions;
        matches = x == d.a_part && y == d.b_part;
      }
      if (solutions != 1 || !matches) {
        ++failures;
        r.witnesses.push_back("element " + str(c) + " a=" + str(a) + " b=" + str(b) + ": " +
                              str(solutions) + " decompositions");
      }
    }
  }
  r.counted = {checked, failures};
  r.passed = failures == 0;
  r.relation = "each element of order ab splits uniquely as c^alpha * c^beta";
  return r;
}

bool theorem_selected(const std::string& id, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  for (const auto& f : filters) {
    if (id == f || id.rfind(f + ".", 0) == 0) return true;
  }
  return false;
}

VerifyResult verify_group(const FiniteGroup& g, const VerifyOptions& options) {
  VerifyResult out;
  const auto h = static_cast<std::int64_t>(g.order());
  const auto& filters = options.theorems;
  auto want = [&](const char* id) { return theorem_selected(id, filters); };
  auto emit = [&](VerificationReport r) { out.reports.push_back(std::move(r)); };

  const auto primes = numeric::prime_divisors(h);
  const auto divs = numeric::divisors(h);
  const std::int64_t pg_prime = numeric::prime_power_base(h);

  std::optional<SubgroupLattice> lattice;
  if (g.order() <= options.caps.subgroups) {
    lattice.emplace(g, options.caps.subgroups);
  } else {
    out.skipped.push_back(g.name() + ": order " + str(h) + " exceeds subgroup cap " +
                          str(static_cast<std::int64_t>(options.caps.subgroups)) +
                          "; lattice-based checks skipped");
  }
  const SubgroupLattice* lat = lattice ? &*lattice : nullptr;

  if (want("INTRO.gcd")) {
    if (h <= 64) {
      for (std::int64_t n = 1; n <= h; ++n) emit(verify_divisibility(g, n));
    } else {
      for (auto n : divs) emit(verify_divisibility(g, n));
    }
  }
  if (want("INTRO.order_p")) {
    for (auto p : primes) emit(verify_order_p_form(g, p));
  }
  if (want("INTRO.sylow") && lat) {
    for (auto p : primes) emit(sylow_single_class(*lat, p));
  }

  if (pg_prime != 0) {
    if (want("S1.I")) emit(check_center_has_order_p(g));
    if (lat) {
      if (want("S1.II")) emit(check_maximal_subgroups_normal(*lat));
      if (want("S1.III")) emit(check_normal_order_p_central(*lat));
    }
  }
  if (want("S1.IV") && lat) emit(check_coprime_commute(*lat));
  if (pg_prime != 0) {
    if (want("S1.V") && lat) emit(check_normal_meets_center(*lat));
    if (want("S1.chief")) emit(check_chief_series(g));
  }

  if (want("S2.I")) emit(check_decompositions(g));
  if (want("S2.III")) {
    std::optional<std::vector<Automorphism>> autos;
    if (g.order() <= options.caps.automorphisms) {
      autos = automorphisms(g, options.caps.automorphisms);
    } else {
      out.skipped.push_back(g.name() + ": order exceeds automorphism cap; characteristic checks skipped");
    }
    for (auto n : divs) emit(solution_subgroup(g, n, autos ? &*autos : nullptr));
  }
  if (want("S2.powers")) {
    for (auto n : divs) emit(verify_power_stabilization(g, n));
  }
  if (want("S2.IV")) {
    for (auto r : divs) {
      for (auto s : divs) {
        if (1 < r && r < s && std::gcd(r, s) == 1) emit(verify_coprime_product(g, r, s));
      }
    }
  }

  if (want("S3")) {
    for (auto p : primes) emit(check_sylow_chain(g, p, lat));
  }

  if (lat) {
    for (auto p : primes) {
      const int lambda = numeric::valuation(h, p);
      for (int kappa = 1; kappa <= lambda; ++kappa) {
        if (want("S4.I")) emit(count_p_subgroups(*lat, p, kappa));
        if (want("S4.II")) {
          // The count is invariant under conjugation of P, so one
          // representative per class suffices.
          for (int theta = 0; theta <= kappa; ++theta) {
            const auto subs = lat->of_order(static_cast<std::size_t>(numeric::ipow(p, theta)));
            for (const auto& cls : subgroup_conjugacy_classes(subs)) {
              emit(count_containing(*lat, subs[cls.front()], p, kappa));
            }
          }
        }
        if (want("S4.4")) emit(incidence_check(*lat, p, kappa));
        if (want("S5.I")) emit(classify_kinds(*lat, p, kappa).second);
      }
      if (want("S5.7")) emit(congruence7(g, p, options.caps.subgroups));
      if (want("S5.III")) emit(normal_fusion_check(*lat, p));
    }
    if (pg_prime != 0) {
      if (want("S5.II")) {
        for (std::size_t i = 1; i < lat->size(); ++i) {
          if (!lat->normal(i)) continue;
          const int top = numeric::valuation(static_cast<std::int64_t>((*lat)[i].order()), pg_prime);
          for (int kappa = 1; kappa <= top; ++kappa) {
            emit(count_normal_within(*lat, (*lat)[i], pg_prime, kappa));
          }
        }
      }
      if (want("S5.max")) emit(check_maximal_subgroup_count(*lat));
    }
  }
  return out;
}

}  // namespace sylowlab
