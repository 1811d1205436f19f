#include <doctest.h>

#include "support/property_suite.hpp"

using namespace socoulomb;

TEST_CASE("algebra laws hold across randomized trials") {
    auto res = testgen::run_property_trials(1000, 20260822);
    INFO(res.first_failure);
    CHECK(res.trials == 1000);
    CHECK(res.failures == 0);
}

TEST_CASE("concurrent products share immutable elements safely") {
    CHECK(testgen::run_thread_smoke());
}
