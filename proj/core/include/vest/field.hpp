#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vest/errors.hpp"

namespace vest {

/// Deterministic trial-division primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

// Identifies the field scalars live in: the rationals, or Z_p for a prime p.
// Moduli must fit in 32 bits so that residue products fit in uint64.
class FieldTag {
  public:
    enum class Kind { Rational, Prime };

    static FieldTag rational() { return FieldTag(Kind::Rational, 0); }
    static FieldTag prime(std::uint64_t p); // throws DomainError unless p is prime

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_prime() const { return kind_ == Kind::Prime; }

    // The prime modulus; only meaningful for prime fields.
    std::uint64_t modulus() const;

    friend bool operator==(const FieldTag& a, const FieldTag& b) = default;

    std::string str() const; // "Q" or "Z_p"

  private:
    FieldTag(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

// An immutable field element in canonical form: rationals are reduced
// fractions with positive denominator (zero is 0/1), prime-field values are
// residues in [0, p). Canonical form is established at construction, so
// equality is plain representation equality.
class Scalar {
  public:
    Scalar() : tag_(FieldTag::rational()) {} // rational zero

    static Scalar zero(const FieldTag& tag);
    static Scalar one(const FieldTag& tag);

    // Embeds an integer into the field (reduces mod p for prime fields).
    static Scalar of(const FieldTag& tag, long long value);
    static Scalar of(const FieldTag& tag, const mpz_class& value);

    static Scalar rational(mpq_class q); // canonicalizes
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar residue(const FieldTag& prime_tag, std::uint64_t r);

    const FieldTag& tag() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational_value() const; // rational scalars only
    std::uint64_t residue_value() const;     // prime scalars only

    Scalar operator-() const;
    Scalar inverse() const; // throws DivisionByZeroError on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

    // "a/b" (or "a" when b = 1) for rationals, the decimal residue otherwise.
    std::string str() const;

  private:
    explicit Scalar(const FieldTag& tag) : tag_(tag) {}

    FieldTag tag_;
    std::uint64_t res_ = 0; // prime fields
    mpq_class q_;           // rationals
};

// Throws MixedFieldError unless both scalars share a tag.
void check_same_field(const Scalar& a, const Scalar& b);

// Parses "a/b" or the integer shorthand "a"; for prime fields any integer
// text is accepted and reduced to its residue.
Scalar parse_scalar(const FieldTag& tag, const std::string& text);

// The field elements 0, 1, ..., p-1 in order. InfiniteFieldError for Q.
std::vector<Scalar> enumerate_field(const FieldTag& tag);

} // namespace vest
