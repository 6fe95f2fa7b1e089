#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tracealg/homological.hpp"

namespace tracealg {

struct Bounds {
    uint32_t degree_cap = 0;   // Groebner degree cap, 0 = unlimited
    size_t dim_cap = 64;       // algebra dimension cap for the fd oracle
    size_t ext_bound = 4;      // bounded ARC window: Ext^i for 1 <= i <= ext_bound
    int syzygy_min = -2;       // window of syzygy indices n for thm-3.9
    int syzygy_max = 2;
};

struct CheckSpec {
    std::string check_id;      // from registered_checks()
    QRingPtr ring;             // fixture ring (unused by "examples")
    bool exhaustive = true;    // enumerate monomial ideals
    size_t random_count = 0;   // extra seeded random ideals
    uint64_t seed = 0;
    Bounds bounds;
    size_t jobs = 1;
};

struct Counterexample {
    size_t instance = 0;
    std::string ring_text;
    std::vector<std::string> generators;
    std::string detail;
};

// Machine-readable outcome of one named check. Serializes deterministically
// for a fixed seed (wall_ms excepted).
struct Report {
    std::string check_id;
    std::string paper_ref;
    size_t instances_tested = 0;
    std::vector<std::string> skipped;  // "instance N: reason" — no silent skips
    std::string verdict;               // pass | fail | skipped
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> engine_disagreements;
    uint64_t seed = 0;
    Bounds bounds;
    size_t jobs = 1;
    int64_t wall_ms = 0;

    nlohmann::ordered_json to_json() const;
    bool failed() const { return verdict == "fail"; }
    bool disagreed() const { return !engine_disagreements.empty(); }
};

const std::vector<std::string>& registered_checks();
Report run_check(const CheckSpec& spec);

// the Example 2.4 membership fixtures (12 monomial ideals in the avatar)
std::vector<std::vector<std::string>> example_2_4_fixture_ideals();

}  // namespace tracealg
