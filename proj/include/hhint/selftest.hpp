#pragma once

#include <string>
#include <vector>

namespace hhint {

// One check of the built-in verification suite. `id` orders the items,
// `name` says what is being verified, `details` carries the observed
// numbers (deterministic: no timings, no addresses).
struct SelftestItem {
    std::string id;
    std::string name;
    bool pass = false;
    std::string details;
};

struct SelftestOptions {
    // Injects a deliberately corrupted structure-constant tensor into the
    // validation item, which must then fail. Used to prove the suite can
    // detect a broken build rather than vacuously passing.
    bool negative_control = false;
};

// Runs the full verification suite: fixture validation, the symmetric-group
// dimension checks (formula vs direct linear algebra), the generating-series
// and partition-statistic identities, the two-variable truncated-polynomial
// integrability survey, the Nakayama certificates, randomized obstruction
// calculus, witness closure properties, structural invariants, and the
// power-of-p refutation orders. Items never throw; failures are reported in
// the returned list.
std::vector<SelftestItem> run_selftest(const SelftestOptions& opt = {});

bool all_pass(const std::vector<SelftestItem>& items);

}  // namespace hhint
