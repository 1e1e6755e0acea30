// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// With the CLI path as argv[1], criterion 10 also checks that two separate
// `selftest --json` processes print identical bytes.

#include <array>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "starpt/selftest.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;

// stdout of a shell command, or nullopt if it could not be run or exited nonzero
std::optional<std::string> capture(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
    if (pclose(pipe) != 0) return std::nullopt;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int failed = 0;
    for (int id = 1; id <= starpt::selftest::kCriteria; ++id) {
        starpt::selftest::CriterionResult r;
        try {
            r = starpt::selftest::run_criterion(id, kSeed);
        } catch (const std::exception& e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), {}};
        }
        if (id == starpt::selftest::kCriteria && argc > 1) {
            const std::string cmd = std::string("'") + argv[1] + "' selftest --seed 42 --json 2>/dev/null";
            const auto first = capture(cmd), second = capture(cmd);
            const bool same = first && second && *first == *second;
            r.pass = r.pass && same;
            r.detail += same ? "; two CLI runs print identical JSON (" + std::to_string(first->size()) + " bytes)"
                             : "; two CLI runs differ or failed";
        }
        failed += !r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << '\n';
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
    return failed ? 1 : 0;
}
