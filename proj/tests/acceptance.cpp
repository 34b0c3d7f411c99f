// Acceptance runner: executes the full identity battery and prints one
// pass/fail line per criterion group, with failing rows expanded.
// Exit code 0 iff every check passes.
#include <cstring>
#include <iostream>
#include <map>

#include "hkmod/verify.hpp"

int main(int argc, char** argv) {
    bool serial = false;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--serial")) serial = true;

    hkmod::Report rep = hkmod::verify_paper("", !serial);

    std::map<std::string, std::pair<int, int>> tally;  // group -> {pass, fail}
    for (const auto& r : rep.rows) {
        auto& t = tally[r.group];
        (r.pass ? t.first : t.second)++;
    }

    bool ok = true;
    for (const auto& [group, title] : hkmod::criterion_titles()) {
        auto it = tally.find(group);
        int pass = it == tally.end() ? 0 : it->second.first;
        int fail = it == tally.end() ? 0 : it->second.second;
        bool good = fail == 0 && pass > 0;
        ok = ok && good;
        std::cout << (good ? "PASS" : "FAIL") << " criterion " << group << ": " << title << " ("
                  << pass << "/" << pass + fail << " checks)\n";
        if (fail > 0)
            for (const auto& r : rep.rows)
                if (r.group == group && !r.pass)
                    std::cout << "    " << r.id << " [" << r.anchor << "] expected=" << r.expected
                              << " got=" << r.got << "\n";
    }
    std::cout << (ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << rep.rows.size() - rep.failures() << "/" << rep.rows.size() << " checks)\n";
    return ok ? 0 : 1;
}
