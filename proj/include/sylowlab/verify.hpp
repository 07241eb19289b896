#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/counts.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {

// Structural checks on the Sylow engine and on p-groups. The lattice may be
// null when the group is beyond the subgroup cap; checks that need it then
// skip their lattice part.

// Chain orders p..p^lambda, strict containment, each term normal in the
// next, and the top term listed in the lattice.
VerificationReport check_sylow_chain(const FiniteGroup& g, std::int64_t p, const SubgroupLattice* lattice);

// p-group: the center contains an element of order p.
VerificationReport check_center_has_order_p(const FiniteGroup& g);
// p-group: every subgroup of index p is normal.
VerificationReport check_maximal_subgroups_normal(const SubgroupLattice& lattice);
// p-group: every normal subgroup of order p lies in the center.
VerificationReport check_normal_order_p_central(const SubgroupLattice& lattice);
// Coprime subgroups normalizing each other commute elementwise.
VerificationReport check_coprime_commute(const SubgroupLattice& lattice);
// p-group: every nontrivial normal subgroup meets the center in an element of order p.
VerificationReport check_normal_meets_center(const SubgroupLattice& lattice);
// p-group: the chief series has lambda-1 terms, all normal, increasing.
VerificationReport check_chief_series(const FiniteGroup& g);
// p-group: the number of maximal subgroups is 1 iff cyclic, else 1 mod p and > 1.
VerificationReport check_maximal_subgroup_count(const SubgroupLattice& lattice);
// Every element of order ab (coprime a, b > 1) splits uniquely into commuting
// parts of orders a and b, equal to the constructed decomposition.
VerificationReport check_decompositions(const FiniteGroup& g);

struct VerifyOptions {
  Caps caps;
  // Theorem id filters: "S4" selects S4.I, S4.II, S4.4; "S4.I" selects only it.
  std::vector<std::string> theorems;
};

bool theorem_selected(const std::string& id, const std::vector<std::string>& filters);

struct VerifyResult {
  std::vector<VerificationReport> reports;
  std::vector<std::string> skipped;  // diagnostics for checks not run
};

// Runs every applicable check on g for each prime p | h and each kappa up to
// the p-adic valuation. The divisibility theorem sweeps n over 1..h, or over
// the divisors of h once h > 64.
VerifyResult verify_group(const FiniteGroup& g, const VerifyOptions& options);

}  // namespace sylowlab
