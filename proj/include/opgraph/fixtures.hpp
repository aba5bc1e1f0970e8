#pragma once

#include <string>
#include <vector>

namespace opgraph {

struct FixtureResult {
    std::string id;
    std::string description;
    std::string provenance;
    bool pass = false;
    std::string expected;
    std::string actual;
};

std::string default_fixture_path();

// Runs the bundled fixtures whose id equals filter, or starts with it when it ends in '*'.
// An empty filter selects everything.
std::vector<FixtureResult> verify_fixtures(const std::string& filter = "",
                                           const std::string& path = default_fixture_path());

}  // namespace opgraph
