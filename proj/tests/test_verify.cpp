#include <doctest.h>

#include <set>

#include "hkmod/verify.hpp"

using namespace hkmod;

TEST_CASE("battery report is well formed and passes") {
    Report rep = verify_paper("", true);
    CHECK(rep.all_pass());
    CHECK(rep.failures() == 0);
    CHECK(rep.rows.size() >= 100);

    std::set<std::string> ids;
    std::set<std::string> groups;
    for (const auto& r : rep.rows) {
        CHECK(!r.anchor.empty());
        CHECK(ids.insert(r.id).second);  // unique check ids
        groups.insert(r.group);
    }
    // every acceptance criterion is exercised
    for (const auto& [g, title] : criterion_titles()) {
        CAPTURE(title);
        CHECK(groups.count(g) == 1);
    }

    // filtering is a pure row filter with deterministic content
    Report filt = verify_paper("seirigido", true);
    CHECK(!filt.rows.empty());
    for (const auto& r : filt.rows)
        CHECK((r.id.find("seirigido") != std::string::npos ||
               r.anchor.find("seirigido") != std::string::npos));
    std::size_t found = 0;
    for (const auto& r : rep.rows)
        for (const auto& f : filt.rows)
            if (r.id == f.id) {
                ++found;
                CHECK(r.got == f.got);
            }
    CHECK(found == filt.rows.size());
}
