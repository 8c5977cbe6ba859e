#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vest/linalg.hpp"

namespace vest {

// Exact nonnegative count; values routinely exceed any fixed word size.
using CountValue = mpz_class;

// What a length-k product must hit for the sequence to be counted.
enum class TargetVariant {
    VectorZero,     // S * T_{i_k} ... T_{i_1} * v = 0 (v required, S optional = identity)
    MatrixZero,     // T_{i_k} ... T_{i_1} = 0        (no v, no S)
    MatrixIdentity, // T_{i_k} ... T_{i_1} = I        (no v, no S)
};

std::string target_name(TargetVariant t);
TargetVariant target_from_name(const std::string& name); // MalformedInputError otherwise

// A problem instance: the transformation list plus the evaluation frame.
// Immutable after construction; the constructor enforces shape and variant
// consistency.
struct VestInstance {
    FieldTag tag;
    int dim; // d
    std::vector<Matrix> transforms;
    std::optional<Matrix> s; // h x dim; absent means the identity
    std::optional<Vector> v;
    TargetVariant target;

    VestInstance(FieldTag tag, int dim, std::vector<Matrix> transforms, std::optional<Matrix> s,
                 std::optional<Vector> v, TargetVariant target);

    int transform_count() const { return static_cast<int>(transforms.size()); }

    // S, materialized: the stored matrix or identity(dim).
    Matrix effective_s() const;
};

// Convenience builders for the two common shapes.
VestInstance make_vector_zero_instance(std::vector<Matrix> transforms, std::optional<Matrix> s,
                                       Vector v);
VestInstance make_matrix_target_instance(std::vector<Matrix> transforms, TargetVariant target);

} // namespace vest
