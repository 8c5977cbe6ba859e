#pragma once

#include <string>
#include <vector>

#include "vest/instance.hpp"

namespace vest::testutil {

inline Matrix int_matrix(const FieldTag& tag, const std::vector<std::vector<long long>>& rows) {
    Matrix m(tag, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), Scalar::of(tag, rows[i][j]));
        }
    }
    return m;
}

inline Matrix q_matrix(const std::vector<std::vector<long long>>& rows) {
    return int_matrix(FieldTag::rational(), rows);
}

inline Vector int_vector(const FieldTag& tag, const std::vector<long long>& entries) {
    Vector v(tag, static_cast<int>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        v.set(static_cast<int>(i), Scalar::of(tag, entries[i]));
    }
    return v;
}

inline Vector q_vector(const std::vector<long long>& entries) {
    return int_vector(FieldTag::rational(), entries);
}

// The worked 1-dimensional Z_2 instance: transforms ([1], [0]), S = [1],
// v = (1); M_2 = 3.
inline VestInstance sample_z2_instance() {
    const FieldTag z2 = FieldTag::prime(2);
    return VestInstance(z2, 1, {int_matrix(z2, {{1}}), int_matrix(z2, {{0}})},
                        int_matrix(z2, {{1}}), int_vector(z2, {1}), TargetVariant::VectorZero);
}

// All d x d matrices over Z_p, in lexicographic entry order.
inline std::vector<Matrix> all_matrices(const FieldTag& tag, int d) {
    const std::uint64_t p = tag.modulus();
    std::vector<Matrix> out;
    std::vector<std::uint64_t> entries(static_cast<std::size_t>(d) * d, 0);
    while (true) {
        Matrix m(tag, d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) m.set(i, j, Scalar::residue(tag, entries[i * d + j]));
        }
        out.push_back(std::move(m));
        int pos = static_cast<int>(entries.size()) - 1;
        while (pos >= 0 && entries[pos] == p - 1) {
            entries[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++entries[pos];
    }
    return out;
}

} // namespace vest::testutil
