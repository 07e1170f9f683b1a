#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycsch/cyclotomic.hpp"

namespace cycsch {

struct SuiteReport {
    std::string suite;
    std::string instance;
    bool pass = true;
    int checked = 0;   // instances actually verified
    int skipped = 0;   // instances outside the hypothesis or above caps
    std::vector<std::string> failures;
    std::string note;

    std::string to_json() const;
};

/// Known suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one named theorem-verification suite over a ring. With a subgroup
/// the suite checks that single instance (when it satisfies the suite's
/// hypothesis); without one it sweeps all unit subgroups under the caps.
SuiteReport run_suite(const std::string& name, const RingPtr& ring,
                      const std::optional<UnitSubgroup>& k, const Caps& caps = default_caps());

}  // namespace cycsch
