#pragma once

// Randomized algebra-law trials shared by the unit tests and the acceptance
// gate.  Each trial draws small random elements (mixed dimensions, sigma
// factors, negative radial powers) and checks the ring and star-algebra laws.

#include "socoulomb/element.hpp"
#include "support/random_gen.hpp"

#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace socoulomb::testgen {

struct PropertyResult {
    int trials = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

inline PropertyResult run_property_trials(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    PropertyResult res;
    auto fail = [&res](int trial, const char* law) {
        ++res.failures;
        if (res.first_failure.empty())
            res.first_failure = "trial " + std::to_string(trial) + ": " + law;
    };
    for (int trial = 0; trial < trials; ++trial) {
        ++res.trials;
        int dim = trial % 3 + 1;
        Element a = rnd_element(rng, dim), b = rnd_element(rng, dim), c = rnd_element(rng, dim);
        if ((a * b) * c != a * (b * c)) fail(trial, "associativity");
        if (a * (b + c) != a * b + a * c) fail(trial, "left distributivity");
        if ((a + b) * c != a * c + b * c) fail(trial, "right distributivity");
        if (commutator(a, b) != -commutator(b, a)) fail(trial, "commutator antisymmetry");
        Element jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                         commutator(c, commutator(a, b));
        if (!jacobi.is_zero()) fail(trial, "Jacobi identity");
        if (adjoint(a * b) != adjoint(b) * adjoint(a)) fail(trial, "adjoint anti-automorphism");
        if (adjoint(adjoint(a)) != a) fail(trial, "adjoint involution");
        if (a.canonicalize() != a) fail(trial, "canonicalize is a fixed point");
        if (Element::parse(a.str()) != a) fail(trial, "serialization round-trip");
    }
    return res;
}

// Concurrent products over shared immutable elements must agree with the
// serial result (the kernel holds no hidden mutable state).
inline bool run_thread_smoke() {
    std::mt19937 rng(4242);
    Element a = rnd_element(rng, 3, 4), b = rnd_element(rng, 3, 4);
    Element expect = commutator(a, b);
    std::vector<Element> results(4, Element::zero(3));
    std::vector<std::thread> threads;
    for (auto& slot : results)
        threads.emplace_back([&a, &b, &slot] { slot = commutator(a, b); });
    for (auto& t : threads) t.join();
    for (const auto& got : results)
        if (got != expect) return false;
    return true;
}

}  // namespace socoulomb::testgen
