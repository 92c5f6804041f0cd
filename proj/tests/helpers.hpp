// Shared helpers for the test binaries: deterministic random generators for
// weights and characters, and a small wrapper for driving the CLI.

#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>

#include "gr33/weights.hpp"

namespace testutil {

inline gr33::Triple random_strict_triple(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::set<int> vals;
    while (vals.size() < 3) vals.insert(dist(rng));
    gr33::Triple t{};
    int i = 0;
    for (auto it = vals.rbegin(); it != vals.rend(); ++it) t[static_cast<std::size_t>(i++)] = *it;
    return t;
}

inline gr33::PDomWeight random_pdom(std::mt19937& rng, int lo = -9, int hi = 15) {
    return gr33::PDomWeight(random_strict_triple(rng, lo, hi),
                            random_strict_triple(rng, lo, hi));
}

// Six distinct values, descending; min normalized to zero by of_values.
inline std::array<int, 6> random_regular_values(std::mt19937& rng, int hi = 12) {
    std::uniform_int_distribution<int> dist(0, hi);
    std::set<int> vals;
    while (vals.size() < 6) vals.insert(dist(rng));
    std::array<int, 6> out{};
    int i = 0;
    for (auto it = vals.rbegin(); it != vals.rend(); ++it) out[static_cast<std::size_t>(i++)] = *it;
    return out;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded.
inline RunResult run_command(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

// Shell-quotes one argument (weights contain '|' and parentheses).
inline std::string q(const std::string& s) { return "'" + s + "'"; }

inline int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace testutil
