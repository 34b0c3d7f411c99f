#pragma once

#include <string>
#include <vector>

#include "hkmod/rational.hpp"

namespace hkmod {

// The verify-paper battery: every numeric identity the library mechanizes,
// re-derived from scratch with one row per check.  Rows carry an anchor
// naming the identity they test and come out in a fixed order, so the
// report is byte-identical across runs and parallelism settings.

struct CheckResult {
    std::string id;      // unique, e.g. "3.dictionary-dv"
    std::string group;   // acceptance group "1".."12", or "x" for extras
    std::string anchor;  // identity label, e.g. "prodcidue"
    bool pass;
    std::string expected;
    std::string got;
};

struct Report {
    std::vector<CheckResult> rows;

    bool all_pass() const;
    std::size_t failures() const;
};

// Runs the full battery; `only` filters rows whose id or anchor contains the
// given substring (empty = everything).  `parallel` toggles the OpenMP grid
// kernels; it never changes any value in the report.
Report verify_paper(const std::string& only = "", bool parallel = true);

// Group headlines for the per-criterion summary, in display order.
std::vector<std::pair<std::string, std::string>> criterion_titles();

}  // namespace hkmod
