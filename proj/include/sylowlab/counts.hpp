#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sylowlab/automorphism.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/report.hpp"

namespace sylowlab {

// Number of x with x^n = e, i.e. whose order divides n.
std::int64_t count_solutions(const FiniteGroup& g, std::int64_t n);

// gcd(n, h) divides count_solutions(g, n). Any n >= 1.
VerificationReport verify_divisibility(const FiniteGroup& g, std::int64_t n);

std::int64_t count_elements_of_order(const FiniteGroup& g, std::int64_t m);

// The number of elements of order p is (p-1)(np+1) for some n >= 0; the
// report carries n. Throws kNotPrime, kPrimeDoesNotDivideOrder.
VerificationReport verify_order_p_form(const FiniteGroup& g, std::int64_t p);

// The solutions of x^n = e generate a subgroup whose order is divisible by n
// and which is characteristic. The characteristic test runs only when the
// group is within the automorphism cap (param "characteristic_checked").
// Throws kInvalidArgument unless n divides h.
VerificationReport solution_subgroup(const FiniteGroup& g, std::int64_t n,
                                     std::size_t automorphism_cap = kDefaultAutomorphismCap);
VerificationReport solution_subgroup(const FiniteGroup& g, std::int64_t n,
                                     const std::vector<Automorphism>* autos);

// Elements x with x^n = e as a complex.
ComplexSet solution_set(const FiniteGroup& g, std::int64_t n);

struct PowerStabilization {
  int r = 1;  // first power that recurs
  int s = 1;  // period of the recurrence: R^(r+s) = R^r
  int t = 1;  // the multiple of s in [r, r+s)
  ComplexSet stabilized{FiniteGroup{}};  // R^t, the only subgroup in the sequence
};

// Iterates R, R^2, R^3, ... (complex products) until a power repeats.
// Throws kInvalidArgument for an empty complex.
PowerStabilization complex_power_stabilization(const ComplexSet& r);

// Power sequence of the solution set of x^n = e: period 1, limit equal to
// the generated subgroup, whose order n divides.
VerificationReport verify_power_stabilization(const FiniteGroup& g, std::int64_t n);

// For coprime r, s dividing h with exactly r solutions of x^r = e and s of
// x^s = e: the solutions commute pairwise and their r*s products are distinct
// and are exactly the solutions of x^(rs) = e. Not applicable otherwise.
// Throws kNotCoprime, kInvalidArgument (r or s does not divide h).
VerificationReport verify_coprime_product(const FiniteGroup& g, std::int64_t r, std::int64_t s);

// r_kappa = number of subgroups of order p^kappa, which is 1 mod p.
// Throws kNotPrime, kPrimePowerDoesNotDivideOrder.
VerificationReport count_p_subgroups(const SubgroupLattice& lattice, std::int64_t p, int kappa);
VerificationReport count_p_subgroups(const FiniteGroup& g, std::int64_t p, int kappa,
                                     std::size_t cap = kDefaultSubgroupCap);

// Subgroups of order p^kappa containing the p-subgroup P: 1 mod p.
// Throws kNotAPSubgroup unless |P| = p^theta with theta <= kappa.
VerificationReport count_containing(const SubgroupLattice& lattice, const SubgroupSet& p_sub,
                                    std::int64_t p, int kappa);

// Incidences between subgroups of orders p^(kappa-1) and p^kappa: both sides
// of the incidence count agree and every per-subgroup count is 1 mod p.
VerificationReport incidence_check(const SubgroupLattice& lattice, std::int64_t p, int kappa);

struct KindClassification {
  std::vector<SubgroupSet> first_kind;   // normalizer order divisible by p^lambda
  std::vector<SubgroupSet> second_kind;
};

// First kind count is 1 mod p, second kind count is 0 mod p.
std::pair<KindClassification, VerificationReport> classify_kinds(const SubgroupLattice& lattice,
                                                                  std::int64_t p, int kappa);

// Direct form of the first-kind definition: some Sylow p-subgroup contains
// a as a normal subgroup.
bool first_kind_via_sylow(const SubgroupLattice& lattice, const SubgroupSet& a, std::int64_t p);

// Subgroups of order p^kappa inside the normal subgroup g_sub of the p-group
// H that are normal in H: 1 mod p. With relaxed = true, H may be any group
// and the count is of first-kind subgroups (with respect to H) inside g_sub.
// Throws kNotAPGroup, kNotNormal, kPrimePowerDoesNotDivideOrder.
VerificationReport count_normal_within(const SubgroupLattice& lattice, const SubgroupSet& g_sub,
                                       std::int64_t p, int kappa, bool relaxed = false);

// For each normal subgroup Q of a Sylow p-subgroup P (with P not normal):
// h/q' = p'/r mod p^(lambda-delta), where p', q' are the normalizer orders of
// P and Q, r the order of their intersection, and p^delta the largest
// intersection of P with a distinct conjugate.
VerificationReport congruence7(const FiniteGroup& g, std::int64_t p,
                               std::size_t cap = kDefaultSubgroupCap);

// Normal subgroups of a Sylow p-subgroup P that are conjugate in the group
// are conjugate under N(P); first-kind class counts match.
VerificationReport normal_fusion_check(const SubgroupLattice& lattice, std::int64_t p);

// Sylow p-subgroups: one conjugacy class, count 1 mod p, count divides h.
VerificationReport sylow_single_class(const SubgroupLattice& lattice, std::int64_t p);

// Short deterministic description of a subgroup for report witnesses.
std::string describe(const SubgroupSet& s);

}  // namespace sylowlab
