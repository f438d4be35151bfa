#ifndef TILTWALL_VERIFY_HPP
#define TILTWALL_VERIFY_HPP

#include "tiltwall/walls.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace tiltwall {

/// End-to-end scenario run compared against a checked-in expected fixture.
struct ScenarioReport {
    std::string scenario;
    int degree = 0; // 0 for degree-independent scenarios
    std::string claim;
    nlohmann::json expected;
    nlohmann::json actual;
    bool match = false;
    std::vector<std::string> notes; // e.g. extra-case / expected-only-case flags
    double duration_seconds = 0.0;  // wall clock; excluded from serialized output

    nlohmann::json to_json() const;
};

ScenarioReport verify_prop_4_1(int d);        // d in {1..5}
ScenarioReport verify_lemma_5_2(int d);       // d in {3,4,5}
ScenarioReport verify_prop_5_3(int d);        // d in {3,4,5}
ScenarioReport verify_prop_6_5(int d);        // d in {2,3,4,5}
ScenarioReport verify_numerical_class(int d); // d in {1..5}; singular system surfaces as mismatch
ScenarioReport verify_diophantine();
ScenarioReport verify_pairings();

/// Every scenario over its standard degrees, in deterministic order.
std::vector<ScenarioReport> verify_all();

} // namespace tiltwall

#endif
