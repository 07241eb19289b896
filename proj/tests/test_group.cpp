#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/group.hpp"

using namespace sylowlab;
using testing::by_label;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kIoError;
}

}  // namespace

TEST_CASE("permutation validation and composition") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK(kind_of([] { Permutation({1, 2, 2}); }) == ErrorKind::kInvalidPermutation);
  CHECK(kind_of([] { Permutation::from_cycles({{1, 2}, {2, 3}}, 3); }) == ErrorKind::kInvalidPermutation);
  CHECK(kind_of([] { Permutation::from_cycles({{1}}, 3); }) == ErrorKind::kInvalidPermutation);
  CHECK(kind_of([] { Permutation::from_cycles({{1, 4}}, 3); }) == ErrorKind::kInvalidPermutation);

  const auto a = Permutation::from_cycles({{1, 2}}, 3);
  const auto b = Permutation::from_cycles({{1, 2, 3}}, 3);
  // Left to right: apply a, then b. 1 -> 2 -> 3.
  CHECK((a * b)(0) == 2);
  CHECK((a * b).to_cycle_string() == "(1 3)");
  CHECK((b * b * b).is_identity());
  CHECK((b * b.inverse()).is_identity());
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(Permutation::from_cycles({{3, 1, 2}, {4, 5}}, 5).to_cycle_string() == "(1 2 3)(4 5)");
}

TEST_CASE("group_from_generators") {
  SUBCASE("S3 from a 3-cycle and a transposition") {
    const auto g = group_from_generators(
        {Permutation::from_cycles({{1, 2, 3}}, 3), Permutation::from_cycles({{1, 2}}, 3)});
    CHECK(g.order() == 6);
    CHECK(g.label(0) == "()");
    CHECK(g.label(1) == "(1 2 3)");
    CHECK(g.label(2) == "(1 2)");
  }
  SUBCASE("no generators") {
    CHECK(group_from_generators({}).order() == 1);
    CHECK(group_from_generators({Permutation::identity(1)}).order() == 1);
  }
  SUBCASE("Klein four-group") {
    const auto g = group_from_generators(
        {Permutation::from_cycles({{1, 2}, {3, 4}}, 4), Permutation::from_cycles({{1, 3}, {2, 4}}, 4)});
    CHECK(g.order() == 4);
    CHECK(exponent(g) == 2);
  }
  SUBCASE("cap and degree errors") {
    const std::vector<Permutation> s5{Permutation::from_cycles({{1, 2, 3, 4, 5}}, 5),
                                      Permutation::from_cycles({{1, 2}}, 5)};
    CHECK(kind_of([&] { group_from_generators(s5, 100); }) == ErrorKind::kClosureExceedsCap);
    CHECK(group_from_generators(s5, 120).order() == 120);
    CHECK(kind_of([] {
            group_from_generators({Permutation::from_cycles({{1, 2}}, 2), Permutation::from_cycles({{1, 2}}, 3)});
          }) == ErrorKind::kInvalidPermutation);
  }
  SUBCASE("deterministic numbering") {
    const std::vector<Permutation> gens{Permutation::from_cycles({{1, 2, 3, 4}}, 4),
                                        Permutation::from_cycles({{1, 2}}, 4)};
    CHECK(group_from_generators(gens) == group_from_generators(gens));
  }
}

TEST_CASE("group_from_table") {
  CHECK(group_from_table({{0}}).order() == 1);

  std::vector<std::vector<Element>> z4(4, std::vector<Element>(4));
  for (Element i = 0; i < 4; ++i) {
    for (Element j = 0; j < 4; ++j) z4[i][j] = (i + j) % 4;
  }
  const auto g = group_from_table(z4);
  CHECK(g.order() == 4);
  CHECK(g.order_of(1) == 4);
  CHECK(g.order_of(2) == 2);
  CHECK(g.inverse(1) == 3);

  try {
    group_from_table({{0, 1}, {1, 1}});
    FAIL("accepted a table without inverses");
  } catch (const NotAGroupError& e) {
    CHECK(e.kind() == ErrorKind::kNotAGroup);
    CHECK(e.axiom() == "inverse");
    CHECK(e.witness()[0] == 1);
  }

  // Identity row broken.
  CHECK_THROWS_AS(group_from_table({{1, 0}, {0, 1}}), NotAGroupError);
  CHECK(kind_of([] { group_from_table({{0, 1}, {1, 5}}); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { group_from_table({{0, 1}, {1}}); }) == ErrorKind::kInvalidArgument);

  // A loop with inverses that is not associative: order 5, identity 0,
  // every element self-inverse, Latin square.
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    group_from_table(loop);
    FAIL("accepted a non-associative table");
  } catch (const NotAGroupError& e) {
    CHECK(e.axiom() == "associativity");
    const auto [a, b, c] = e.witness();
    CHECK(loop[loop[a][b]][c] != loop[a][loop[b][c]]);
  }
}

TEST_CASE("element_order, power, conjugate") {
  const auto c12 = build("cyclic:12");
  CHECK(element_order(c12, 0) == 1);
  CHECK(element_order(c12, 1) == 12);
  CHECK(element_order(c12, power(c12, 1, 8)) == 3);
  CHECK(element_order(c12, power(c12, 1, 8)) == oracle::order(c12, 8));

  const auto c6 = build("cyclic:6");
  CHECK(power(c6, 1, 0) == 0);
  CHECK(power(c6, 1, -3) == 3);
  CHECK(power(c6, 1, 7) == 1);
  CHECK(power(c6, 5, -1) == 1);

  const auto s3 = build("sym:3");
  CHECK(conjugate(s3, by_label(s3, "(1 2)"), by_label(s3, "(1 2 3)")) == by_label(s3, "(2 3)"));
  CHECK(conjugate(s3, 0, 4) == 0);
  for (Element x = 0; x < c6.order(); ++x) CHECK(conjugate(c6, x, 5) == x);

  CHECK(kind_of([&] { c6.check(6); }) == ErrorKind::kInvalidElement);
}

TEST_CASE("group invariants on the catalog") {
  for (const auto& [name, g] : standard_catalog(32)) {
    CAPTURE(name);
    for (Element a = 0; a < g.order(); ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inverse(a)) == 0);
      CHECK(g.order() % g.order_of(a) == 0);
      CHECK(g.order_of(a) == oracle::order(g, a));
      for (Element t = 0; t < g.order(); t += 3) CHECK(g.order_of(conjugate(g, a, t)) == g.order_of(a));
      for (std::int64_t k = -3; k <= 3; ++k) {
        for (std::int64_t m = -2; m <= 2; ++m) CHECK(power(g, power(g, a, k), m) == power(g, a, k * m));
      }
    }
  }
}
