#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vest/instance.hpp"
#include "vest/problems.hpp"

namespace vest {

// Ties a generated instance back to its source: which construction produced
// it, from what, how the parameter moved, and the equivalence the pair must
// satisfy. Descriptors are JSON documents kept as strings.
struct ReductionCertificate {
    std::string reduction;
    std::string source_json;
    std::string produced_json;
    std::int64_t k_source = 0;
    std::int64_t k_target = 0;
    std::string equivalence;
};

struct InstanceReduction {
    VestInstance instance;
    std::optional<std::int64_t> k; // absent for unparameterized constructions
    ReductionCertificate certificate;
};

struct MatrixListReduction {
    std::vector<Matrix> matrices;
    std::int64_t k = 0;
    ReductionCertificate certificate;
};

struct RationalSetReduction {
    std::vector<mpq_class> numbers;
    std::int64_t k = 0;
    ReductionCertificate certificate;
};

struct IntegerSetReduction {
    std::vector<mpz_class> numbers;
    std::int64_t k = 0;
    ReductionCertificate certificate;
};

enum class DominatingStyle { Counting, Decision };

namespace reductions {

// The first n primes, ascending. A sieve up to max(4, n^2) suffices since
// the n-th prime is at most n^2 for n >= 2.
std::vector<std::uint64_t> sieve_primes(int n);

// [[1, x], [0, 1]]; shear(x) * shear(y) = shear(x + y).
Matrix shear(const mpz_class& x);

// [[0, 0], [-1, 1]], idempotent; collapse() * shear(r) * collapse()
// = (1 - r) * collapse().
Matrix collapse();

// The 2x2 integer matrix encoding a binary word so that multiplication
// realizes concatenation: word_matrix(v) * word_matrix(w) = word_matrix(wv).
// The empty word maps to the identity. AlphabetError on other symbols.
Matrix word_matrix(const std::string& word);

// Counting style: one 4n x 4n transform per vertex over coordinates
// 4u..4u+3, with M_k = k! * (number of dominating sets of size k).
// Decision style: diagonal n x n 0/1 transforms, all-ones v, identity S,
// with M_k > 0 iff a dominating set of size k exists (k <= n).
// The field must be the rationals or Z_2; entries are 0/1 either way.
InstanceReduction dominating_set_to_vest(const Graph& g, std::int64_t k, DominatingStyle style,
                                         const FieldTag& tag = FieldTag::prime(2));

// One prime per universe element plus a fresh prime p: the numbers
// p * prod(primes of C) for each set C together with 1/(p^k * prod(all
// element primes)). An exact k-cover exists iff some k+1 numbers (with
// repetition) multiply to 1.
RationalSetReduction exact_cover_to_k_product(const SetSystem& sys, std::int64_t k);

// Characteristic vectors in base x = k+2: -(x^(m+1) + sum of x^j over the
// set) per set, plus y = k*x^(m+1) + sum_{j=0..m} x^j. An exact k-cover
// exists iff at most k+1 numbers (with repetition) sum to 1.
IntegerSetReduction exact_cover_to_at_most_k_sum(const SetSystem& sys, std::int64_t k);

// The shears of the input numbers plus the collapse matrix: at most k picks
// summing to 1 exist iff some k+2 matrices (with repetition) multiply to the
// 2x2 zero matrix.
MatrixListReduction sum_to_zero_matrix_product(const std::vector<mpz_class>& a, std::int64_t k);

// Same matrix set evaluated against v = (0,1)^T with S = identity: at most
// k picks summing to 1 exist iff M_{k+1} > 0.
InstanceReduction sum_to_vest_identity_s(const std::vector<mpz_class>& a, std::int64_t k);

// Folds an explicit S into the transform list: squares S by zero padding,
// then appends two coordinates ((k, 1) on v) that force the S-derived
// transform to be applied exactly once, last. M_k(input) > 0 iff
// M_{k+1}(output) > 0. Rational instances with s and v only.
InstanceReduction eliminate_s(const VestInstance& inst, std::int64_t k);

// Lifts a matrix-zero-product question to a vector instance: block-diagonal
// d copies of each input matrix, v stacking the d unit vectors, identity S.
// The evaluated vector stacks the columns of the original product, so some
// k inputs multiply to zero iff M_k(output) > 0.
InstanceReduction zero_product_to_vest(const std::vector<Matrix>& mats, std::int64_t k);

// The reverse direction: after eliminate_s, adjoins gadget blocks (a
// nilpotent A/B pair and shear/collapse blocks) that force one matrix to act
// as v, one as S, and the rest as transforms. M_k(input) > 0 iff some k+3
// output matrices (with repetition) multiply to zero. Rational only.
MatrixListReduction vest_to_zero_product(const VestInstance& inst, std::int64_t k);

// 4x4 block pairs of word matrices with v = (0,1,0,1)^T and S = (1,0,-1,0):
// evaluating a sequence yields the difference of the two concatenations read
// as binary numbers, so equal concatenations give M_k > 0.
InstanceReduction pcp_to_vest(const PcpInstance& pcp);

} // namespace reductions
} // namespace vest
