#include "vest/field.hpp"

#include <limits>

namespace vest {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldTag FieldTag::prime(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("prime modulus must fit in 32 bits, got " + std::to_string(p));
    }
    if (!is_prime_u64(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
    }
    return FieldTag(Kind::Prime, p);
}

std::uint64_t FieldTag::modulus() const {
    if (!is_prime()) throw DomainError("modulus() called on the rational field");
    return p_;
}

std::string FieldTag::str() const {
    return is_rational() ? "Q" : "Z_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldTag& tag) {
    return Scalar(tag);
}

Scalar Scalar::one(const FieldTag& tag) {
    Scalar s(tag);
    if (tag.is_rational()) {
        s.q_ = 1;
    } else {
        s.res_ = tag.modulus() == 1 ? 0 : 1;
    }
    return s;
}

Scalar Scalar::of(const FieldTag& tag, long long value) {
    return of(tag, mpz_class(static_cast<long>(value)));
}

Scalar Scalar::of(const FieldTag& tag, const mpz_class& value) {
    Scalar s(tag);
    if (tag.is_rational()) {
        s.q_ = mpq_class(value);
    } else {
        // mpz_fdiv_ui yields the nonnegative remainder for any sign of value.
        s.res_ = mpz_fdiv_ui(value.get_mpz_t(), tag.modulus());
    }
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s(FieldTag::rational());
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    return rational(mpq_class(num, den));
}

Scalar Scalar::residue(const FieldTag& prime_tag, std::uint64_t r) {
    if (!prime_tag.is_prime()) throw DomainError("residue() needs a prime field tag");
    Scalar s(prime_tag);
    s.res_ = r % prime_tag.modulus();
    return s;
}

bool Scalar::is_zero() const {
    return tag_.is_rational() ? q_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return tag_.is_rational() ? q_ == 1 : res_ == 1 % tag_.modulus();
}

const mpq_class& Scalar::rational_value() const {
    if (!tag_.is_rational()) throw DomainError("rational_value() on a prime-field scalar");
    return q_;
}

std::uint64_t Scalar::residue_value() const {
    if (!tag_.is_prime()) throw DomainError("residue_value() on a rational scalar");
    return res_;
}

Scalar Scalar::operator-() const {
    Scalar s(tag_);
    if (tag_.is_rational()) {
        s.q_ = -q_;
    } else {
        const std::uint64_t p = tag_.modulus();
        s.res_ = res_ == 0 ? 0 : p - res_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    Scalar s(tag_);
    if (tag_.is_rational()) {
        s.q_ = 1 / q_;
    } else {
        // Fermat: a^(p-2) mod p by square and multiply.
        const std::uint64_t p = tag_.modulus();
        std::uint64_t base = res_, acc = 1, e = p - 2;
        while (e > 0) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        s.res_ = acc;
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same_field(a, b);
    Scalar s(a.tag_);
    if (a.tag_.is_rational()) {
        s.q_ = a.q_ + b.q_;
    } else {
        const std::uint64_t p = a.tag_.modulus();
        s.res_ = (a.res_ + b.res_) % p;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same_field(a, b);
    Scalar s(a.tag_);
    if (a.tag_.is_rational()) {
        s.q_ = a.q_ * b.q_;
    } else {
        s.res_ = a.res_ * b.res_ % a.tag_.modulus();
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_.is_rational() ? a.q_ == b.q_ : a.res_ == b.res_;
}

std::string Scalar::str() const {
    if (tag_.is_prime()) return std::to_string(res_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

void check_same_field(const Scalar& a, const Scalar& b) {
    if (a.tag() != b.tag()) {
        throw MixedFieldError("scalars from " + a.tag().str() + " and " + b.tag().str());
    }
}

namespace {

mpz_class parse_integer(const std::string& text) {
    try {
        if (text.empty()) throw std::invalid_argument("empty");
        return mpz_class(text, 10);
    } catch (const std::invalid_argument&) {
        throw MalformedInputError("not an integer: '" + text + "'");
    }
}

} // namespace

Scalar parse_scalar(const FieldTag& tag, const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Scalar::of(tag, parse_integer(text));
    }
    if (tag.is_prime()) {
        throw MalformedInputError("prime-field scalars are plain residues, got '" + text + "'");
    }
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw MalformedInputError("zero denominator in '" + text + "'");
    return Scalar::rational(num, den);
}

std::vector<Scalar> enumerate_field(const FieldTag& tag) {
    if (tag.is_rational()) throw InfiniteFieldError("cannot enumerate Q");
    const std::uint64_t p = tag.modulus();
    std::vector<Scalar> out;
    out.reserve(p);
    for (std::uint64_t r = 0; r < p; ++r) out.push_back(Scalar::residue(tag, r));
    return out;
}

} // namespace vest
