#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vest/instance.hpp"
#include "vest/problems.hpp"

// Randomized and exhaustive-small cross-validation of the instance
// generators: the source problem is solved by an independent oracle, the
// generated instance by the sequence solvers, and the two verdicts must
// agree. Backs `vest verify-reduction` and the test suites.

namespace vest::verify {

using Rng = std::mt19937_64;

// Engine output used directly (no distribution objects), so sequences are
// identical across standard libraries.
std::uint64_t rand_below(Rng& rng, std::uint64_t n);
long long rand_range(Rng& rng, long long lo, long long hi);

Graph random_graph(Rng& rng, int max_n);
SetSystem random_set_system(Rng& rng, int max_universe, int max_sets);
std::vector<mpz_class> random_integer_set(Rng& rng, int max_size, long long max_abs);
PcpInstance random_pcp(Rng& rng, int max_pairs, int max_len);

// Random rational vector_zero instance with explicit, possibly rectangular
// S. Entries come from a small pool of integers, plus halves unless
// integral_only is set.
VestInstance random_rational_instance(Rng& rng, int max_d, int max_m, bool integral_only = false);

// Uniform prime-field vector_zero instance with explicit S of random height.
VestInstance random_prime_instance(Rng& rng, const FieldTag& tag, int d, int m);

struct Report {
    std::vector<std::string> lines;
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& reduction_names();

// A fixed exhaustive-small battery plus `trials` seeded random trials for
// the named generator. Unknown names raise DomainError.
Report verify_reduction(const std::string& name, int trials, int max_size, std::uint64_t seed);

} // namespace vest::verify
