#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sylowlab/counts.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/numeric.hpp"
#include "sylowlab/sylow.hpp"

using namespace sylowlab;

namespace {

// Random permutation groups of small degree, redrawn until the order is
// within the lattice cap.
struct GroupGen {
  std::mt19937 rng{20240917};

  Permutation perm(std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0U);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
  }

  FiniteGroup group() {
    for (;;) {
      const std::size_t degree = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
      const int ngens = std::uniform_int_distribution<int>(1, 2)(rng);
      std::vector<Permutation> gens;
      for (int i = 0; i < ngens; ++i) gens.push_back(perm(degree));
      try {
        auto g = group_from_generators(gens, 64);
        if (g.order() > 1) return g;
      } catch (const Error&) {
      }
    }
  }
};

constexpr int kTrials = 40;

}  // namespace

TEST_CASE("property: lattice soundness and Lagrange") {
  GroupGen gen;
  for (int t = 0; t < kTrials; ++t) {
    const auto g = gen.group();
    CAPTURE(g.order());
    const auto subs = all_subgroups(g);
    for (const auto& s : subs) {
      CHECK(g.order() % s.order() == 0);
      CHECK(s.contains(0));
      CHECK(closure_of(s.as_complex()) == s);
      CHECK(oracle::closure(g, s.elements()) == s.elements());
    }
    CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
  }
}

TEST_CASE("property: headline divisibility for every n") {
  GroupGen gen;
  for (int t = 0; t < kTrials; ++t) {
    const auto g = gen.group();
    const auto h = static_cast<std::int64_t>(g.order());
    for (std::int64_t n = 1; n <= h; ++n) {
      const auto r = verify_divisibility(g, n);
      CHECK(r.passed);
      CHECK(r.counted[0] == oracle::count_solutions(g, n));
    }
  }
}

TEST_CASE("property: Sylow counts and chain") {
  GroupGen gen;
  for (int t = 0; t < kTrials; ++t) {
    const auto g = gen.group();
    const SubgroupLattice lattice(g);
    const auto h = static_cast<std::int64_t>(g.order());
    for (auto p : numeric::prime_divisors(h)) {
      const int lambda = numeric::valuation(h, p);
      for (int kappa = 1; kappa <= lambda; ++kappa) {
        CHECK(count_p_subgroups(lattice, p, kappa).passed);
        CHECK(classify_kinds(lattice, p, kappa).second.passed);
        CHECK(incidence_check(lattice, p, kappa).passed);
      }
      CHECK(sylow_single_class(lattice, p).passed);
      const auto chain = sylow_chain(g, p);
      CHECK(static_cast<int>(chain.chain.size()) == lambda);
      CHECK(lattice.index_of(chain.chain.back()).has_value());
      CHECK(congruence7(g, p).passed);
      CHECK(normal_fusion_check(lattice, p).passed);
    }
  }
}

TEST_CASE("property: decomposition round trip") {
  GroupGen gen;
  for (int t = 0; t < kTrials; ++t) {
    const auto g = gen.group();
    for (Element x = 0; x < g.order(); ++x) {
      for (auto p : numeric::prime_divisors(static_cast<std::int64_t>(g.order()))) {
        const auto d = p_part_decomposition(g, x, p);
        CHECK(g.mul(d.a_part, d.b_part) == x);
        CHECK(g.mul(d.a_part, d.b_part) == g.mul(d.b_part, d.a_part));
        CHECK(d.a * d.b == g.order_of(x));
        CHECK(numeric::prime_power_base(d.a) == (d.a == 1 ? 0 : p));
        CHECK(d.b % p != 0);
      }
    }
  }
}

TEST_CASE("property: power stabilization of solution sets") {
  GroupGen gen;
  for (int t = 0; t < kTrials; ++t) {
    const auto g = gen.group();
    for (auto n : numeric::divisors(static_cast<std::int64_t>(g.order()))) {
      const auto r = verify_power_stabilization(g, n);
      CHECK(r.passed);
    }
  }
}
