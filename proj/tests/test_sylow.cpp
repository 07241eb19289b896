#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/numeric.hpp"
#include "sylowlab/sylow.hpp"
#include "sylowlab/verify.hpp"

using namespace sylowlab;

namespace {

std::vector<std::size_t> orders(const std::vector<SubgroupSet>& chain) {
  std::vector<std::size_t> out;
  for (const auto& s : chain) out.push_back(s.order());
  return out;
}

}  // namespace

TEST_CASE("sylow_chain examples") {
  const auto s4 = build("sym:4");
  const auto three = sylow_chain(s4, 3);
  CHECK(orders(three.chain) == std::vector<std::size_t>{3});
  const auto threes = subgroups_of_order(s4, 3);
  CHECK(std::find(threes.begin(), threes.end(), three.chain[0]) != threes.end());

  const auto two = sylow_chain(s4, 2);
  CHECK(orders(two.chain) == std::vector<std::size_t>{2, 4, 8});
  for (std::size_t i = 0; i + 1 < two.chain.size(); ++i) {
    CHECK(two.chain[i].is_subgroup_of(two.chain[i + 1]));
    for (Element t : two.chain[i + 1].elements()) CHECK(conjugate_subgroup(two.chain[i], t) == two.chain[i]);
  }

  const auto c8 = build("cyclic:8");
  const auto chain = sylow_chain(c8, 2).chain;
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == subgroups_of_order(c8, 2)[0]);
  CHECK(chain[1] == subgroups_of_order(c8, 4)[0]);
  CHECK(chain[2] == SubgroupSet::whole(c8));

  CHECK_THROWS_AS(sylow_chain(s4, 4), Error);
  CHECK_THROWS_AS(sylow_chain(s4, 5), Error);
  try {
    sylow_chain(s4, 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrimeDoesNotDivideOrder);
  }
}

TEST_CASE("sylow_chain invariants on the catalog") {
  for (const auto& [name, g] : standard_catalog(60)) {
    for (auto p : numeric::prime_divisors(static_cast<std::int64_t>(g.order()))) {
      CAPTURE(name);
      CAPTURE(p);
      const SubgroupLattice lattice(g);
      const auto r = check_sylow_chain(g, p, &lattice);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("chief_series") {
  CHECK(chief_series(build("cyclic:5")).series.empty());

  const auto q8 = build("q8");
  const auto cs = chief_series(q8);
  CHECK(orders(cs.series) == std::vector<std::size_t>{2, 4});
  CHECK(cs.series[0] == center(q8));
  for (const auto& s : cs.series) CHECK(is_normal(s));

  const auto e9 = build("elab:3^2");
  const auto one = chief_series(e9);
  CHECK(orders(one.series) == std::vector<std::size_t>{3});
  CHECK(chief_series(e9).series[0] == one.series[0]);

  CHECK_THROWS_AS(chief_series(build("sym:3")), Error);
  CHECK_THROWS_AS(chief_series(build("cyclic:1")), Error);
}

TEST_CASE("central_element_of_order_p") {
  const auto q8 = build("q8");
  const Element z = central_element_of_order_p(q8, SubgroupSet::whole(q8));
  CHECK(z == testing::by_label(q8, "-1"));

  const auto d8 = build("dihedral:8");
  const auto zd = center(d8);
  for (const auto& v : subgroups_of_order(d8, 4)) {
    if (is_cyclic(restrict_to(v).group)) continue;
    const Element x = central_element_of_order_p(d8, v);
    CHECK(zd.contains(x));
    CHECK(d8.order_of(x) == 2);
  }
  const Element c = central_element_of_order_p(d8, zd);
  CHECK(zd.contains(c));

  // Element of order 4 in the center is replaced by its square.
  const auto c8 = build("cyclic:8");
  CHECK(central_element_of_order_p(c8, SubgroupSet::whole(c8)) == 4);

  CHECK_THROWS_AS(central_element_of_order_p(q8, SubgroupSet::trivial(q8)), Error);
  const auto twos = subgroups_of_order(d8, 2);
  const auto reflection = *std::find_if(twos.begin(), twos.end(), [](const SubgroupSet& s) { return !is_normal(s); });
  CHECK_THROWS_AS(central_element_of_order_p(d8, reflection), Error);
}

TEST_CASE("coprime_decomposition") {
  const auto c6 = build("cyclic:6");
  const auto id = coprime_decomposition(c6, 0, 1, 1);
  CHECK(id.a_part == 0);
  CHECK(id.b_part == 0);

  const auto d = coprime_decomposition(c6, 1, 2, 3);
  CHECK(d.a_part == 3);
  CHECK(d.b_part == 4);
  CHECK(d.alpha == 3);
  CHECK(d.beta == 4);

  const auto c12 = build("cyclic:12");
  const auto e = coprime_decomposition(c12, 1, 4, 3);
  CHECK(e.a_part == 9);
  CHECK(e.b_part == 4);
  CHECK(c12.order_of(e.a_part) == 4);
  CHECK(c12.order_of(e.b_part) == 3);

  CHECK_THROWS_AS(coprime_decomposition(c6, 1, 2, 2), Error);
  CHECK_THROWS_AS(coprime_decomposition(c6, 1, 1, 3), Error);
  try {
    coprime_decomposition(c6, 1, 1, 3);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kOrderMismatch);
  }
}

TEST_CASE("coprime decomposition is unique and lies in the cyclic span") {
  for (const auto& [name, g] : standard_catalog(24)) {
    CAPTURE(name);
    for (Element c = 0; c < g.order(); ++c) {
      const std::int64_t m = g.order_of(c);
      for (std::int64_t a = 1; a <= m; ++a) {
        if (m % a != 0 || std::gcd(a, m / a) != 1) continue;
        const std::int64_t b = m / a;
        const auto d = coprime_decomposition(g, c, a, b);
        CHECK(g.mul(d.a_part, d.b_part) == c);
        CHECK(g.mul(d.a_part, d.b_part) == g.mul(d.b_part, d.a_part));
        CHECK(g.order_of(d.a_part) == a);
        CHECK(g.order_of(d.b_part) == b);
        const auto cyc = oracle::closure(g, {c});
        CHECK(std::binary_search(cyc.begin(), cyc.end(), d.a_part));
        CHECK(std::binary_search(cyc.begin(), cyc.end(), d.b_part));
        int found = 0;
        for (Element x = 0; x < g.order(); ++x) {
          for (Element y = 0; y < g.order(); ++y) {
            if (oracle::order(g, x) == a && oracle::order(g, y) == b && g.mul(x, y) == c &&
                g.mul(x, y) == g.mul(y, x)) {
              ++found;
              CHECK(x == d.a_part);
              CHECK(y == d.b_part);
            }
          }
        }
        CHECK(found == 1);
      }
    }
  }
}

TEST_CASE("p_part_decomposition") {
  const auto c12 = build("cyclic:12");
  const auto d = p_part_decomposition(c12, 1, 2);
  CHECK(c12.order_of(d.a_part) == 4);
  CHECK(c12.order_of(d.b_part) == 3);

  const auto c5 = build("cyclic:5");
  const auto e = p_part_decomposition(c5, 1, 2);
  CHECK(e.a_part == 0);
  CHECK(e.b_part == 1);

  const auto f = p_part_decomposition(c12, 0, 3);
  CHECK(f.a_part == 0);
  CHECK(f.b_part == 0);
}
