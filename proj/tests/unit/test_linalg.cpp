#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vest/linalg.hpp"

using namespace vest;
using namespace vest::testutil;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const FieldTag& tag, int rows, int cols) {
    Matrix m(tag, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (tag.is_prime()) {
                m.set(i, j, Scalar::residue(tag, rng() % tag.modulus()));
            } else {
                m.set(i, j, Scalar::of(tag, static_cast<long long>(rng() % 9) - 4));
            }
        }
    }
    return m;
}

} // namespace

TEST_CASE("identity is neutral for mat_mul") {
    std::mt19937_64 rng(7);
    const Matrix m = random_matrix(rng, FieldTag::rational(), 3, 3);
    CHECK(Matrix::identity(FieldTag::rational(), 3) * m == m);
    CHECK(m * Matrix::identity(FieldTag::rational(), 3) == m);
}

TEST_CASE("shear-style products compose additively") {
    const Matrix u1 = q_matrix({{1, 1}, {0, 1}});
    const Matrix u2 = q_matrix({{1, 2}, {0, 1}});
    const Matrix u3 = q_matrix({{1, 3}, {0, 1}});
    CHECK(u1 * u2 == u3);
}

TEST_CASE("the collapse sandwich of a unit shear vanishes") {
    const Matrix x = q_matrix({{0, 0}, {-1, 1}});
    const Matrix u1 = q_matrix({{1, 1}, {0, 1}});
    CHECK((x * u1 * x).is_zero());
}

TEST_CASE("block_diag") {
    CHECK(block_diag({q_matrix({{2}}), q_matrix({{3}})}) == q_matrix({{2, 0}, {0, 3}}));

    const Matrix empty = block_diag({});
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);

    // The 4x4 pairing of two 2x2 word-style blocks.
    const Matrix tv = q_matrix({{2, 0}, {1, 1}});
    const Matrix tw = q_matrix({{1, 1}, {0, 2}});
    const Matrix paired = block_diag({tv, tw});
    CHECK(paired == q_matrix({{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}));
}

TEST_CASE("block_diag distributes over products") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix x1 = random_matrix(rng, FieldTag::rational(), 2, 2);
        const Matrix x2 = random_matrix(rng, FieldTag::rational(), 3, 3);
        const Matrix y1 = random_matrix(rng, FieldTag::rational(), 2, 2);
        const Matrix y2 = random_matrix(rng, FieldTag::rational(), 3, 3);
        CHECK(block_diag({x1, x2}) * block_diag({y1, y2}) == block_diag({x1 * y1, x2 * y2}));
    }
}

TEST_CASE("rr_mul worked example") {
    const RowRestrictedMatrix t1(q_matrix({{2}}), q_matrix({{3}}));
    const RowRestrictedMatrix t2(q_matrix({{5}}), q_matrix({{7}}));
    const RowRestrictedMatrix prod = rr_mul(t1, t2);
    CHECK(prod.a() == q_matrix({{10}}));
    CHECK(prod.b() == q_matrix({{14}}));
    CHECK(t1.embed() * t2.embed() == prod.embed());
    CHECK(t1.embed() == q_matrix({{2, 3}, {0, 0}}));
}

TEST_CASE("rr_mul with identity A keeps the other factor") {
    const FieldTag z2 = FieldTag::prime(2);
    const RowRestrictedMatrix t1(Matrix::identity(z2, 2), int_matrix(z2, {{1}, {0}}));
    const RowRestrictedMatrix t2(int_matrix(z2, {{1, 1}, {0, 1}}), int_matrix(z2, {{0}, {1}}));
    const RowRestrictedMatrix prod = rr_mul(t1, t2);
    CHECK(prod.a() == t2.a());
    CHECK(prod.b() == t2.b());
}

TEST_CASE("rr_mul agrees with embedded multiplication, exhaustively over Z_2") {
    const FieldTag z2 = FieldTag::prime(2);
    for (int d = 1; d <= 3; ++d) {
        for (int p = 0; p <= std::min(2, d); ++p) {
            // Every A|B pair is p*(p + (d-p)) free entries.
            const int bits = p * d;
            std::vector<RowRestrictedMatrix> all;
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
                Matrix full(z2, d, d);
                for (int e = 0; e < bits; ++e) {
                    if (mask & (std::uint64_t(1) << e)) {
                        full.set(e / d, e % d, Scalar::one(z2));
                    }
                }
                all.push_back(RowRestrictedMatrix::from_matrix(full, p));
            }
            for (const auto& t1 : all) {
                for (const auto& t2 : all) {
                    CHECK(rr_mul(t1, t2).embed() == t1.embed() * t2.embed());
                }
            }
        }
    }
}

TEST_CASE("k-fold row-restricted products keep only the last B") {
    // prod(A_i|B_i) = (prod A_i) | (prod_{i<k} A_i * B_k) on random Z_2 triples.
    std::mt19937_64 rng(23);
    const FieldTag z2 = FieldTag::prime(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RowRestrictedMatrix> ts;
        for (int i = 0; i < 3; ++i) {
            ts.emplace_back(random_matrix(rng, z2, 1, 1), random_matrix(rng, z2, 1, 2));
        }
        const RowRestrictedMatrix lhs = rr_mul(rr_mul(ts[0], ts[1]), ts[2]);
        const Matrix a_all = ts[0].a() * ts[1].a() * ts[2].a();
        const Matrix head_b = ts[0].a() * ts[1].a() * ts[2].b();
        CHECK(lhs.a() == a_all);
        CHECK(lhs.b() == head_b);
    }
}

TEST_CASE("from_matrix rejects nonzero rows past p") {
    const FieldTag z2 = FieldTag::prime(2);
    const Matrix bad = int_matrix(z2, {{1, 0}, {1, 0}});
    CHECK_THROWS_AS(RowRestrictedMatrix::from_matrix(bad, 1), ShapeError);
}

TEST_CASE("predicates and application") {
    CHECK(Matrix(FieldTag::rational(), 2, 2).is_zero());
    CHECK(q_matrix({{1, 0}, {0, 1}}).is_identity()); // the zero-shift shear
    CHECK_FALSE(q_matrix({{1, 1}, {0, 1}}).is_identity());

    // The collapse matrix fixes (0, 1).
    const Matrix x = q_matrix({{0, 0}, {-1, 1}});
    const Vector v = q_vector({0, 1});
    CHECK(x * v == v);
}

TEST_CASE("mat_mul is associative on random triples") {
    std::mt19937_64 rng(31);
    for (const FieldTag& tag : {FieldTag::rational(), FieldTag::prime(3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix a = random_matrix(rng, tag, 2, 3);
            const Matrix b = random_matrix(rng, tag, 3, 2);
            const Matrix c = random_matrix(rng, tag, 2, 2);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("shape and field mismatches") {
    const Matrix a = q_matrix({{1, 2}});
    CHECK_THROWS_AS(a * a, ShapeError);
    CHECK_THROWS_AS(a * Matrix::identity(FieldTag::prime(2), 2), MixedFieldError);
    CHECK_THROWS_AS(a * Vector(FieldTag::rational(), 3), ShapeError);
    CHECK_THROWS_AS(block_diag({a}), ShapeError);
}

TEST_CASE("canonical keys separate distinct matrices") {
    const auto mats = all_matrices(FieldTag::prime(2), 2);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = 0; j < mats.size(); ++j) {
            CHECK((mats[i].canonical_key() == mats[j].canonical_key()) == (i == j));
        }
    }
    CHECK(q_matrix({{1}}).canonical_key() != int_matrix(FieldTag::prime(2), {{1}}).canonical_key());
}
