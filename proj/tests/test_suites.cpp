// Runs every property suite at its default size; the l2, lift and product
// batteries also gate the acceptance criteria, so here they run with a
// different seed as a robustness spot-check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radtower/suites.hpp"

using namespace radtower;

TEST_CASE("all property suites pass at their default sizes") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        std::uint64_t count = 0;
        if (name == "l2-lower-bound" || name == "l2-scaled" || name == "l2-window")
            count = 300;  // full 1000-instance battery runs in the acceptance suite
        if (name == "root-lift" || name == "product-tuple") count = 150;
        SuiteResult r = run_suite(name, 987654321, count, 1e-9);
        CHECK(r.instances > 0);
        CHECK(r.violations == 0);
        if (!r.notes.empty()) {
            CAPTURE(r.notes.front());
            CHECK(r.notes.empty());
        }
    }
}

TEST_CASE("unknown suite name is a usage error") {
    CHECK_THROWS(run_suite("nope", 1, 1, 1e-9));
}
