#pragma once

#include "setcalc/cardinality.hpp"
#include "setcalc/term.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace setcalc {

struct AuditConfig {
    unsigned rank = 3;             // universe rank for exhaustive domains
    std::uint64_t samples = 1000;  // sample count for randomized checks
    std::uint64_t seed = 42;
};

struct AuditReport {
    std::string name;
    std::string domain; // description of the quantifier domain
    std::uint64_t tested = 0;
    std::vector<std::string> failures; // counterexamples as printed terms
    std::uint64_t seed = 0;
    std::int64_t millis = 0;

    bool passed() const { return failures.empty(); }
};

/// Names of all registered checks, in report order. One check per in-scope
/// proposition plus the artifact-level invariants.
std::vector<std::string> registered_checks();

/// Runs one named check. Deterministic given the config. Throws Error for an
/// unknown name and ResourceError when the rank exceeds what the check can
/// exhaust.
AuditReport run_check(const std::string& name, const AuditConfig& config = {});

std::vector<AuditReport> run_all_checks(const AuditConfig& config = {});

/// Independent oracle for is_powered: searches every candidate of the given
/// universe rank for a set whose powerset is x.
bool brute_force_powered(const HfSet& x, unsigned rank);

struct FormGenConfig {
    std::vector<HfSet> pool;    // Zermelo parts; payloads are its non-powered
                                // nonempty members
    unsigned max_components = 2;
    unsigned max_level = 3;
    std::uint64_t seed = 42;
};

/// Seeded, reproducible stream of well-represented forms over the bounded
/// family described by the config. Duplicated components and empty Zermelo
/// parts occur.
class FormGenerator {
public:
    explicit FormGenerator(FormGenConfig config);

    NormalForm next();

private:
    std::uint64_t bounded(std::uint64_t n);

    FormGenConfig config_;
    std::vector<HfSet> payload_pool_;
    std::mt19937_64 rng_;
};

} // namespace setcalc
