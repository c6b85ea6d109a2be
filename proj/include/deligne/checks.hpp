#pragma once
// Oracle sweeps and golden values behind `deligne check`.
#include <string>
#include <vector>

#include "json.hpp"

namespace deligne {

struct CheckRow {
    std::string suite;
    long cases = 0;
    long failed = 0;
    std::vector<std::string> failures;  // first few, for the report
};

// suite: lr | gamma | hom | golden | all. Throws DomainError on an unknown name.
// dump receives one JSON line per primitive idempotent built by the hom sweep
// (only when non-null).
std::vector<CheckRow> run_checks(const std::string& suite, int threads, std::vector<nlohmann::json>* dump = nullptr);

}  // namespace deligne
