// End-to-end driver for the CLI binary: spawns it with real argument lists
// and checks exit codes, JSON payloads and output determinism.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return RunResult{code, out};
}

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

void expect_exit(const std::string& args, int code) {
    RunResult r = run(args);
    expect(r.exit_code == code,
           args + " -> exit " + std::to_string(r.exit_code) + ", want " + std::to_string(code));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_driver <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    {
        RunResult r = run("dictionary --e 22 --r0 2 --i 2 --format json");
        expect(r.exit_code == 0, "dictionary exit code");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded(), "dictionary emits JSON");
        expect(j["m0"] == 3 && j["s0"] == 2, "dictionary m0/s0");
        expect(j["ch3_coeff"]["num"] == "-1" && j["ch3_coeff"]["den"] == "264",
               "dictionary ch3 coefficient");
        expect(j["ch4"]["num"] == "-1" && j["ch4"]["den"] == "4", "dictionary ch4");
        expect(j["div_h"] == 2, "dictionary divisibility");
    }
    {
        RunResult r = run("min-neg-square --d 3 --e 2");
        expect(r.exit_code == 0, "min-neg-square exit code");
        expect(r.out.rfind("4\n", 0) == 0, "min-neg-square prints 4 first");
    }
    {
        RunResult r = run("catalog --format table");
        expect(r.exit_code == 0, "catalog exit code");
        expect(r.out.find("cubic-lines-Q") != std::string::npos &&
                   r.out.find("dv-Q") != std::string::npos,
               "catalog lists both entries");
    }
    {
        RunResult r = run("walls --d 3 --e 2 --a 10 --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["walls"].size() == 4, "walls count at a = 10");
        RunResult r2 = run("walls --d 30 --e 6 --a 8 --format json");
        json j2 = json::parse(r2.out, nullptr, false);
        expect(!j2.is_discarded() && j2["walls"].empty(), "no walls below the lower bound");
    }
    {
        RunResult r = run("suitable --d 3 --e 2 --a 4 --h 0,1 --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["suitable"] == false, "suitability sign table");
        RunResult r2 = run("suitable --d 30 --e 6 --a 8 --h 0,1 --format json");
        json j2 = json::parse(r2.out, nullptr, false);
        expect(!j2.is_discarded() && j2["suitable"] == true, "suitable when no walls");
    }
    {
        RunResult r = run("isotropic --e 22 --d 45 --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["unique"] == true && j["q_h_alpha_gcd_de"] == 990,
               "isotropic analysis");
    }
    {
        RunResult r = run("hilb2-chern --r0 2 --m0 3 --sign + --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["ch0"]["num"] == "4", "hilb2-chern rank");
        expect(j["q_h"]["num"] == "11" && j["q_h"]["den"] == "2", "hilb2-chern q(h^+)");
    }
    {
        RunResult r = run("oracle --r0 3 --m0 5 --sign - --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(r.exit_code == 0 && !j.is_discarded() && j["ok"] == true, "oracle agreement");
    }
    {
        RunResult r = run("semihom --n 2 --d1 1 --d2 3 --r0 3 --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["r"] == 3 && j["gcd_part"]["num"] == "1", "semihom ranks");
    }
    {
        RunResult r = run("nl-check --e 22 --d 20000 --i 2 --r0 2 --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["all"] == true &&
                   j["threshold_pazienza"]["num"] == "1380",
               "nl-check gates");
    }
    {
        std::string ch = R"({"model":{"gram":[[22]]},"ch0":4,"ch1":[1],)"
                         R"("ch2":{"sym2":[["1/8"]],"c2":"-1/8"},)"
                         R"("ch3":{"sym3":[[["-1/264"]]]},"ch4":"-1/4"})";
        RunResult r = run("modularity --ch '" + ch + "' --format json");
        json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() && j["modular"] == true && j["d"]["num"] == "30",
               "modularity of the DV character");
        RunResult r2 = run("chi-end0 --ch '" + ch + "' --format json");
        json j2 = json::parse(r2.out, nullptr, false);
        expect(!j2.is_discarded() && j2["chi_end0"]["num"] == "0", "chi-end0 of the DV character");
    }

    // exit-code contract: 2 usage, 3 precondition
    expect_exit("no-such-command", 2);
    expect_exit("walls --d 3", 2);
    expect_exit("dictionary --e 7 --r0 2 --i 2", 3);
    expect_exit("hilb2-chern --r0 5 --m0 4 --sign +", 3);
    expect_exit("walls --d 0 --e 2 --a 4", 3);
    expect_exit("modularity --ch not-json", 2);

    // verify-paper: exits 0, filter works, output is byte-stable and
    // independent of the parallel kernels
    {
        RunResult full1 = run("verify-paper --format json");
        RunResult full2 = run("verify-paper --format json");
        RunResult fulls = run("verify-paper --format json --serial");
        expect(full1.exit_code == 0, "verify-paper exit code");
        expect(full1.out == full2.out, "verify-paper byte-identical across runs");
        expect(full1.out == fulls.out, "verify-paper identical with --serial");
        json j = json::parse(full1.out, nullptr, false);
        expect(!j.is_discarded() && j["failures"] == 0, "verify-paper reports zero failures");
    }
    {
        std::string path = "/tmp/hkmod_report.json";
        std::remove(path.c_str());
        RunResult r = run("dictionary --e 6 --r0 2 --i 2 --out " + path);
        expect(r.exit_code == 0, "dictionary --out exit code");
        FILE* f = std::fopen(path.c_str(), "r");
        expect(f != nullptr, "--out writes the JSON document");
        if (f) {
            std::string content;
            std::array<char, 4096> buf;
            std::size_t n;
            while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
            std::fclose(f);
            json j = json::parse(content, nullptr, false);
            expect(!j.is_discarded() && j["m0"] == 1, "--out document parses");
        }
        std::remove(path.c_str());
    }
    {
        RunResult r = run("verify-paper --only seirigido");
        expect(r.exit_code == 0, "filtered verify-paper exit code");
        expect(r.out.find("PASS") != std::string::npos, "filtered battery runs checks");
        expect(r.out.find("[prodcidue]") == std::string::npos,
               "filter drops unrelated anchors");
    }

    if (g_failures == 0) std::cout << "cli_driver: all checks passed\n";
    return g_failures == 0 ? 0 : 1;
}
