#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bosonorder {

struct CheckResult {
    std::string identity;  // what was compared
    std::string tag;       // which relation family it belongs to
    bool passed = false;
    std::string detail;
};

// Rows of the printed reference triangles: (r, s) -> rows n = 1..6 and row sums.
struct ReferenceTriangle {
    unsigned r;
    unsigned s;
    std::vector<std::vector<long long>> rows;
    std::vector<long long> sums;
};
const std::vector<ReferenceTriangle>& reference_triangles();

// Named suites: "table1", "dobinski", "genfun", "oracle", "identities", "all".
// Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view name);

std::vector<std::string> suite_names();

}  // namespace bosonorder
