#include <doctest.h>

#include <random>

#include "vest/field.hpp"

using namespace vest;

TEST_CASE("rational scalars canonicalize at construction") {
    const Scalar s = Scalar::rational(2, -4);
    CHECK(s.str() == "-1/2");
    CHECK(s.rational_value().get_den() == 2);

    CHECK(Scalar::rational(0, 7).str() == "0");
    CHECK(Scalar::rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Scalar::rational(1, 0), DivisionByZeroError);
}

TEST_CASE("canonical form makes equality representational") {
    CHECK(parse_scalar(FieldTag::rational(), "2/4") == parse_scalar(FieldTag::rational(), "1/2"));
    CHECK(parse_scalar(FieldTag::rational(), "-3/9") == Scalar::rational(-1, 3));
    CHECK(Scalar::rational(5, 1).str() == "5");
}

TEST_CASE("prime field inverse") {
    const FieldTag z5 = FieldTag::prime(5);
    CHECK(Scalar::residue(z5, 3).inverse() == Scalar::residue(z5, 2));
    CHECK_THROWS_AS(Scalar::zero(z5).inverse(), DivisionByZeroError);
}

TEST_CASE("inverse pairs multiply to one") {
    const Scalar a = Scalar::rational(1, 150);
    const Scalar b = Scalar::of(FieldTag::rational(), 150);
    CHECK((a * b).is_one());
}

TEST_CASE("enumerate_field") {
    const auto z2 = enumerate_field(FieldTag::prime(2));
    REQUIRE(z2.size() == 2);
    CHECK(z2[0].is_zero());
    CHECK(z2[1].is_one());

    const auto z3 = enumerate_field(FieldTag::prime(3));
    REQUIRE(z3.size() == 3);
    for (std::uint64_t r = 0; r < 3; ++r) CHECK(z3[r].residue_value() == r);

    CHECK_THROWS_AS(enumerate_field(FieldTag::rational()), InfiniteFieldError);
}

TEST_CASE("mixed-field operations are rejected") {
    const Scalar q = Scalar::one(FieldTag::rational());
    const Scalar r = Scalar::one(FieldTag::prime(3));
    CHECK_THROWS_AS(q + r, MixedFieldError);
    CHECK_THROWS_AS(q * r, MixedFieldError);
}

TEST_CASE("field tags validate their modulus") {
    CHECK_THROWS_AS(FieldTag::prime(1), DomainError);
    CHECK_THROWS_AS(FieldTag::prime(4), DomainError);
    CHECK_THROWS_AS(FieldTag::prime(std::uint64_t(1) << 33), DomainError);
    CHECK(FieldTag::prime(2).modulus() == 2);
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(91)); // 7 * 13
}

TEST_CASE("field axioms hold exactly on random triples") {
    std::mt19937_64 rng(12345);
    const auto random_scalar = [&rng](const FieldTag& tag) {
        if (tag.is_prime()) return Scalar::residue(tag, rng() % tag.modulus());
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = 1 + static_cast<long>(rng() % 20);
        return Scalar::rational(mpz_class(num), mpz_class(den));
    };
    for (const FieldTag& tag : {FieldTag::rational(), FieldTag::prime(5), FieldTag::prime(2)}) {
        for (int i = 0; i < 200; ++i) {
            const Scalar a = random_scalar(tag), b = random_scalar(tag), c = random_scalar(tag);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Scalar::zero(tag));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("scalar parsing") {
    const FieldTag q = FieldTag::rational();
    CHECK(parse_scalar(q, "7").str() == "7");
    CHECK(parse_scalar(q, "-7/21").str() == "-1/3");
    CHECK_THROWS_AS(parse_scalar(q, "abc"), MalformedInputError);
    CHECK_THROWS_AS(parse_scalar(q, "1/0"), MalformedInputError);
    CHECK_THROWS_AS(parse_scalar(q, ""), MalformedInputError);

    const FieldTag z5 = FieldTag::prime(5);
    CHECK(parse_scalar(z5, "7").residue_value() == 2);
    CHECK(parse_scalar(z5, "-1").residue_value() == 4);
    CHECK_THROWS_AS(parse_scalar(z5, "1/2"), MalformedInputError);
}
