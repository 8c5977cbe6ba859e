#pragma once

#include <cstdint>
#include <optional>

#include "vest/instance.hpp"

namespace vest {

// Default enumeration budget, in sequence-steps (matrix applications).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SolveOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1; // worker cap for full counting; results are thread-count independent
};

// Exact M_k over all m^k index sequences, enumerated in lexicographic order
// of (i_1, ..., i_k). M_0 is 1 when the empty product already meets the
// target (S v = 0, or an identity-matrix target), else 0. Throws
// BudgetExceededError when the enumeration would exceed opts.budget steps.
CountValue mk_bruteforce(const VestInstance& inst, std::uint64_t k, const SolveOptions& opts = {});

// True iff M_k > 0; stops at the first witness.
bool decide(const VestInstance& inst, std::uint64_t k, const SolveOptions& opts = {});

// Smallest k in [1, kmax] with M_k > 0, or nothing. Runs a level-synchronized
// search over the states reachable in exactly k steps, so large kmax is fine
// as long as the reachable state set stays within budget.
std::optional<std::uint64_t> exists_up_to(const VestInstance& inst, std::uint64_t kmax,
                                          const SolveOptions& opts = {});

} // namespace vest
