// Acceptance gate: runs the built-in verification suite and prints one
// pass/fail line per item. Item 00 validates the fixture pool; items 01-10
// are the acceptance checks proper (symmetric-group dimensions, series and
// partition statistics, the truncated-polynomial integrability survey,
// Nakayama certificates, randomized obstruction calculus, witness closure,
// structural invariants, and refutation orders).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "hhint/selftest.hpp"

TEST_CASE("acceptance suite") {
    std::vector<hhint::SelftestItem> items = hhint::run_selftest({});
    REQUIRE(items.size() == 11);
    for (const hhint::SelftestItem& it : items) {
        std::printf("%s %s %s | %s\n", it.pass ? "PASS" : "FAIL", it.id.c_str(), it.name.c_str(),
                    it.details.c_str());
        INFO("item " << it.id << " (" << it.name << "): " << it.details);
        CHECK(it.pass);
    }
    std::fflush(stdout);
    CHECK(hhint::all_pass(items));
}
