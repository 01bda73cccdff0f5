#pragma once

// Deterministic randomized sweep over configuration/center pairs,
// checking blow-up invariance of the motive on each.

#include <cstdint>
#include <optional>

#include "micc/blowup.hpp"

namespace micc {

// Reproducible across platforms (splitmix64 core; no std distributions).
class SweepRng {
public:
    explicit SweepRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // uniform in [lo, hi], inclusive
    long long range(long long lo, long long hi);
    bool chance(unsigned percent);

private:
    std::uint64_t state_;
};

struct SweepOptions {
    std::uint64_t seed = 0;
    unsigned count = 100;
    int max_ambient_dim = 5;
    int max_components = 6;
    int max_multiplicity = 6;
};

struct SweepCase {
    Configuration config;
    BlowupCenter center;
    ComponentSet selection;
};

SweepCase generate_case(SweepRng& rng, const SweepOptions& opts);

struct SweepSummary {
    unsigned passed = 0;
    unsigned failed = 0;
    std::optional<unsigned> first_failure_index;
    std::string first_failure;  // rendered case + diff

    bool all_pass() const { return failed == 0; }
    std::string render() const;
};

SweepSummary run_sweep(const SweepOptions& opts);

} // namespace micc
