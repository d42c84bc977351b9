#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mpx {

// One verified claim of the reproduction suite.
struct ReproResult {
    std::string id;
    std::string claim;
    bool passed = false;
    std::string detail;  // filled on failure (or with a short note)
};

std::vector<std::string> reproduction_ids();
ReproResult run_reproduction(const std::string& id);  // input_error on unknown id
std::vector<ReproResult> run_reproduction();

}  // namespace mpx
