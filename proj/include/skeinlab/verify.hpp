#pragma once

// Named verification checks shared by the CLI `verify-all` command and the
// acceptance suite. Each check returns a pass flag plus a deterministic JSON
// detail document (counts, and a counterexample when it fails).

#include <string>
#include <vector>

#include "skeinlab/json_io.hpp"

namespace skeinlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    Json detail;
};

// All identity tags over their valid index ranges up to max.
CheckResult check_identities(int max);

// Byte-exact forms of S_2 - S_1 and S_3 - S_2.
CheckResult check_example_small_differences();

// (S-S) <= (Tbar) <= (S) <= (x^n) at max, and the negative control
// NOT (Tbar) >= (x^n) at degree 2.
CheckResult check_dominance_chain(int max);

// Closed-form vs oracle structure constants for all m, n <= max, with every
// constant in {0, 1, 2}.
CheckResult check_products(int max);

// Odd-odd product display for all n, m <= max_pair.
CheckResult check_odd_odd(int max_pair);

// Annulus closed forms vs recurrence evaluations for indices <= max, plus the
// two-term operator identity.
CheckResult check_annulus(int max);

// Disk closed form vs rewrite for n <= max, the printed n = 0..5 outputs,
// symmetry, and symmetric-part positivity.
CheckResult check_disk(int max);

// Re-derive the C-rule coefficients from the printed outputs.
CheckResult check_rule_forcing();

// transparency_check for 1 <= N <= 12 at modulus 4N, and the N = 3 negative
// control at modulus 13.
CheckResult check_transparency();

// lower_bound_check on the named families at max, d = 0 on random nonneg
// coefficient vectors with a = 0, d != 0 with a != 0, and the Tbar-expansion
// round trip.
CheckResult check_audit(int max, int random_trials);

// The whole suite in a fixed order.
std::vector<CheckResult> verify_all(int max);

}  // namespace skeinlab
