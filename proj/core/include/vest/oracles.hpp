#pragma once

#include <optional>
#include <vector>

#include "vest/brute_force.hpp"
#include "vest/linalg.hpp"
#include "vest/problems.hpp"

// Independent brute-force solvers for the source problems the generators in
// vest/reductions.hpp start from. They work at the string/set level (plus
// plain matrix products) and share no solver code with the generators or the
// value-table solvers, so agreement between the two sides of a reduction is
// meaningful validation. All favor clarity over speed and fail loudly with
// BudgetExceededError instead of running away.

namespace vest::oracles {

// Number of k-element vertex subsets whose closed neighborhoods cover the
// graph. Graphs up to 64 vertices.
CountValue count_dominating_sets(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

// Can the universe be partitioned into k pairwise-disjoint sets drawn from
// the collection?
bool exact_cover_exists(const SetSystem& sys, int k, std::uint64_t budget = kDefaultBudget);

// Do at most k numbers from a (repetition allowed) sum to 1?
bool at_most_k_sum_target1_exists(const std::vector<mpz_class>& a, int k,
                                  std::uint64_t budget = kDefaultBudget);

// Do exactly k numbers from a (repetition allowed) multiply to 1?
bool k_product_target1_exists(const std::vector<mpq_class>& a, int k,
                              std::uint64_t budget = kDefaultBudget);

enum class ProductTarget { Zero, Identity };

// Does some length-k sequence of the given matrices (repetition allowed)
// multiply to the zero/identity matrix?
bool matrix_product_target_exists(const std::vector<Matrix>& mats, int k, ProductTarget target,
                                  std::uint64_t budget = kDefaultBudget);

// Shortest index sequence (1-based) of length <= kmax making the two word
// concatenations equal, found by breadth-first search over sequences;
// nothing when no witness exists within the bound.
std::optional<std::vector<int>> pcp_bounded_search(const PcpInstance& pcp, int kmax,
                                                   std::uint64_t budget = kDefaultBudget);

} // namespace vest::oracles
