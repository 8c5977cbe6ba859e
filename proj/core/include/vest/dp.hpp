#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "vest/instance.hpp"

namespace vest {

// One dynamic-programming level: how many distinct product values were
// reachable and how many sequences they account for (always m^level).
struct DpTraceEntry {
    std::uint64_t level = 0;
    std::uint64_t states = 0;
    CountValue total;
};

struct DpOptions {
    std::ostream* trace = nullptr;                // "level i: states=..., total=..." lines
    std::vector<DpTraceEntry>* trace_sink = nullptr;
};

// Exact M_k for a finite-field instance by tabulating, per level i, the
// number of length-i sequences whose product equals each reachable matrix
// value. Only reachable values are stored; absent values have count zero.
// Agrees with mk_bruteforce on every input. InfiniteFieldError over Q.
CountValue count_mk_dp(const VestInstance& inst, std::uint64_t k, const DpOptions& opts = {});

// Row-restricted variant: every transform must have zero rows beyond the
// first p, and the DP states are the p x p leading blocks of the products.
// Requires a vector_zero target and k >= 1.
CountValue count_mk_dp_rows(const VestInstance& inst, int p, std::uint64_t k,
                            const DpOptions& opts = {});

struct MinKStats {
    std::uint64_t levels = 0; // state-expansion levels executed
};

struct MinKOptions {
    std::optional<int> p_rows; // run the row-restricted DP with this p
    MinKStats* stats = nullptr;
};

// Smallest k >= 1 with M_k > 0, or nothing when no such k exists. Tracks
// reachable product values only (counts are irrelevant for positivity) and
// stops once a level introduces no value unseen at earlier levels; at most
// |F|^(p^2) levels are ever executed. InfiniteFieldError over Q.
std::optional<std::uint64_t> min_k(const VestInstance& inst, const MinKOptions& opts = {});

} // namespace vest
