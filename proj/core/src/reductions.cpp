#include "vest/reductions.hpp"

#include <algorithm>

#include "vest/json_io.hpp"

namespace vest::reductions {
namespace {

const FieldTag kQ = FieldTag::rational();

Scalar q_of(const mpz_class& z) {
    return Scalar::rational(mpq_class(z));
}

Matrix int_matrix_2x2(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                      const mpz_class& d) {
    Matrix m(kQ, 2, 2);
    m.set(0, 0, q_of(a));
    m.set(0, 1, q_of(b));
    m.set(1, 0, q_of(c));
    m.set(1, 1, q_of(d));
    return m;
}

void require_k_at_least(std::int64_t k, std::int64_t least) {
    if (k < least) throw DomainError("parameter k must be >= " + std::to_string(least));
}

mpz_class word_value(const std::string& word) {
    mpz_class value = 0;
    for (char c : word) {
        if (c != '0' && c != '1') {
            throw AlphabetError(std::string("word symbol '") + c + "' is not 0 or 1");
        }
        value = 2 * value + (c - '0');
    }
    return value;
}

} // namespace

std::vector<std::uint64_t> sieve_primes(int n) {
    if (n < 1) throw DomainError("need n >= 1 primes");
    const std::uint64_t limit =
        std::max<std::uint64_t>(4, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    primes.reserve(n);
    for (std::uint64_t i = 2; i <= limit && primes.size() < static_cast<std::size_t>(n); ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    if (primes.size() < static_cast<std::size_t>(n)) {
        throw DomainError("sieve bound too small"); // cannot happen: p_n <= max(4, n^2)
    }
    return primes;
}

Matrix shear(const mpz_class& x) {
    return int_matrix_2x2(1, x, 0, 1);
}

Matrix collapse() {
    return int_matrix_2x2(0, 0, -1, 1);
}

Matrix word_matrix(const std::string& word) {
    const mpz_class value = word_value(word);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, word.size());
    return int_matrix_2x2(pow2 - value, value, pow2 - value - 1, value + 1);
}

InstanceReduction dominating_set_to_vest(const Graph& g, std::int64_t k, DominatingStyle style,
                                         const FieldTag& tag) {
    require_k_at_least(k, 1);
    if (!tag.is_rational() && tag.modulus() != 2) {
        throw DomainError("dominating-set instances live over Q or Z_2");
    }
    const auto nbh = g.closed_neighborhoods();
    const Scalar zero = Scalar::zero(tag);
    const Scalar one = Scalar::one(tag);

    std::vector<Matrix> transforms;
    transforms.reserve(g.n);
    std::optional<Matrix> s;
    std::optional<Vector> v;
    std::string claim;

    if (style == DominatingStyle::Counting) {
        // Vertex u owns coordinates 4u..4u+3. The first tracks domination,
        // the next three form the pushdown that rules out repeated picks.
        const int d = 4 * g.n;
        for (int u = 0; u < g.n; ++u) {
            Matrix t = Matrix::identity(tag, d);
            for (int w : nbh[u]) t.set(4 * w, 4 * w, zero);
            t.set(4 * u + 1, 4 * u + 1, zero);
            t.set(4 * u + 1, 4 * u + 2, one);
            t.set(4 * u + 2, 4 * u + 2, zero);
            t.set(4 * u + 2, 4 * u + 3, one);
            transforms.push_back(std::move(t));
        }
        Vector init(tag, d);
        Matrix sel(tag, d, d);
        for (int u = 0; u < g.n; ++u) {
            init.set(4 * u, one);
            init.set(4 * u + 3, one);
            sel.set(4 * u, 4 * u, one);
            sel.set(4 * u + 1, 4 * u + 1, one);
        }
        s = std::move(sel);
        v = std::move(init);
        claim = "M_k(instance) = k! * (number of dominating sets of size k in the graph)";
    } else {
        // One diagonal 0/1 matrix per vertex; zeros exactly on N[u].
        const int d = g.n;
        for (int u = 0; u < g.n; ++u) {
            Matrix t = Matrix::identity(tag, d);
            for (int w : nbh[u]) t.set(w, w, zero);
            transforms.push_back(std::move(t));
        }
        Vector init(tag, d);
        for (int u = 0; u < d; ++u) init.set(u, one);
        v = std::move(init);
        claim = "for k <= n: M_k(instance) > 0 iff the graph has a dominating set of size k";
    }

    VestInstance inst(tag, style == DominatingStyle::Counting ? 4 * g.n : g.n,
                      std::move(transforms), std::move(s), std::move(v),
                      TargetVariant::VectorZero);
    ReductionCertificate cert{
        "dominating-set-to-vest", graph_to_json(g), instance_to_json(inst, k), k, k, claim};
    return InstanceReduction{std::move(inst), k, std::move(cert)};
}

RationalSetReduction exact_cover_to_k_product(const SetSystem& sys, std::int64_t k) {
    require_k_at_least(k, 1);
    const auto primes = sieve_primes(sys.universe + 1);
    const mpz_class extra = primes[sys.universe]; // the prime tied to no element

    std::vector<mpq_class> numbers;
    numbers.reserve(sys.sets.size() + 1);
    for (const auto& set : sys.sets) {
        mpz_class value = extra;
        for (int e : set) value *= primes[e - 1];
        numbers.emplace_back(value);
    }
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), extra.get_mpz_t(), static_cast<unsigned long>(k));
    for (int e = 1; e <= sys.universe; ++e) denom *= primes[e - 1];
    numbers.emplace_back(mpq_class(mpz_class(1), denom));

    ReductionCertificate cert{"exact-cover-to-k-product", set_system_to_json(sys),
                              rational_set_to_json("k_product_with_repetition_target_1", numbers,
                                                   k + 1),
                              k, k + 1,
                              "an exact cover by k sets exists iff some k+1 of the numbers "
                              "(repetition allowed) have product 1"};
    return RationalSetReduction{std::move(numbers), k + 1, std::move(cert)};
}

IntegerSetReduction exact_cover_to_at_most_k_sum(const SetSystem& sys, std::int64_t k) {
    require_k_at_least(k, 1);
    const int m = sys.universe;
    const mpz_class x = k + 2;
    std::vector<mpz_class> xpow(m + 2);
    xpow[0] = 1;
    for (int j = 1; j <= m + 1; ++j) xpow[j] = xpow[j - 1] * x;

    std::vector<mpz_class> numbers;
    numbers.reserve(sys.sets.size() + 1);
    for (const auto& set : sys.sets) {
        mpz_class value = xpow[m + 1];
        for (int e : set) value += xpow[e];
        numbers.push_back(-value);
    }
    mpz_class y = k * xpow[m + 1];
    for (int j = 0; j <= m; ++j) y += xpow[j];
    numbers.push_back(y);

    ReductionCertificate cert{"exact-cover-to-at-most-k-sum", set_system_to_json(sys),
                              integer_set_to_json("at_most_k_sum_with_repetition_target_1",
                                                  numbers, k + 1),
                              k, k + 1,
                              "an exact cover by k sets exists iff at most k+1 of the numbers "
                              "(repetition allowed) sum to 1"};
    return IntegerSetReduction{std::move(numbers), k + 1, std::move(cert)};
}

MatrixListReduction sum_to_zero_matrix_product(const std::vector<mpz_class>& a, std::int64_t k) {
    require_k_at_least(k, 1);
    std::vector<Matrix> mats;
    mats.reserve(a.size() + 1);
    for (const auto& value : a) mats.push_back(shear(value));
    mats.push_back(collapse());

    ReductionCertificate cert{
        "sum-to-zero-matrix-product", integer_list_to_json(a),
        instance_to_json(make_matrix_target_instance(mats, TargetVariant::MatrixZero), k + 2),
        k, k + 2,
        "at most k of the numbers (repetition allowed) sum to 1 iff some k+2 of the matrices "
        "(repetition allowed) multiply to the 2x2 zero matrix"};
    return MatrixListReduction{std::move(mats), k + 2, std::move(cert)};
}

InstanceReduction sum_to_vest_identity_s(const std::vector<mpz_class>& a, std::int64_t k) {
    require_k_at_least(k, 1);
    std::vector<Matrix> mats;
    mats.reserve(a.size() + 1);
    for (const auto& value : a) mats.push_back(shear(value));
    mats.push_back(collapse());
    Vector v(kQ, 2);
    v.set(1, Scalar::one(kQ));

    VestInstance inst(kQ, 2, std::move(mats), std::nullopt, std::move(v),
                      TargetVariant::VectorZero);
    ReductionCertificate cert{"sum-to-vest", integer_list_to_json(a),
                              instance_to_json(inst, k + 1), k, k + 1,
                              "at most k of the numbers (repetition allowed) sum to 1 iff "
                              "M_{k+1}(instance) > 0"};
    return InstanceReduction{std::move(inst), k + 1, std::move(cert)};
}

namespace {

// Zero-pads S square, padding the instance alongside when S is taller than
// it is wide: extra zero columns on S, zero rows/columns on every transform,
// zero entries on v.
struct Squared {
    Matrix s;
    std::vector<Matrix> transforms;
    Vector v;
    int dim;
};

Squared square_s(const VestInstance& inst) {
    const FieldTag& tag = inst.tag;
    const Matrix& s = *inst.s;
    const int d = inst.dim;
    const int h = s.rows();
    if (h <= d) {
        Matrix padded(tag, d, d);
        for (int i = 0; i < h; ++i) {
            for (int j = 0; j < d; ++j) padded.set(i, j, s.at(i, j));
        }
        return Squared{std::move(padded), inst.transforms, *inst.v, d};
    }
    Matrix padded(tag, h, h);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < d; ++j) padded.set(i, j, s.at(i, j));
    }
    std::vector<Matrix> transforms;
    transforms.reserve(inst.transforms.size());
    for (const auto& t : inst.transforms) {
        Matrix grown(tag, h, h);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) grown.set(i, j, t.at(i, j));
        }
        transforms.push_back(std::move(grown));
    }
    Vector v(tag, h);
    for (int i = 0; i < d; ++i) v.set(i, inst.v->at(i));
    return Squared{std::move(padded), std::move(transforms), std::move(v), h};
}

void require_rational_vector_instance(const VestInstance& inst, const char* what) {
    if (inst.target != TargetVariant::VectorZero || !inst.s || !inst.v) {
        throw VariantError(std::string(what) + " needs an instance with explicit s and v");
    }
    if (!inst.tag.is_rational()) {
        throw DomainError(std::string(what) + " is a rational-field construction");
    }
}

} // namespace

InstanceReduction eliminate_s(const VestInstance& inst, std::int64_t k) {
    require_rational_vector_instance(inst, "eliminate_s");
    require_k_at_least(k, 1);
    const FieldTag& tag = inst.tag;
    Squared sq = square_s(inst);
    const int d = sq.dim;

    // Two fresh coordinates: v carries (k, 1); every transform subtracts the
    // second from the first, so exactly k transform picks drain it; the
    // S-derived matrix scales the first by 10 and kills the second, so it is
    // forced to come last and exactly once.
    Vector v(tag, d + 2);
    for (int i = 0; i < d; ++i) v.set(i, sq.v.at(i));
    v.set(d, Scalar::of(tag, k));
    v.set(d + 1, Scalar::one(tag));

    const Matrix transform_tail = int_matrix_2x2(1, -1, 0, 1);
    const Matrix s_tail = int_matrix_2x2(10, 0, 0, 0);

    std::vector<Matrix> out;
    out.reserve(sq.transforms.size() + 1);
    for (const auto& t : sq.transforms) out.push_back(block_diag({t, transform_tail}));
    out.push_back(block_diag({sq.s, s_tail}));

    VestInstance result(tag, d + 2, std::move(out), std::nullopt, std::move(v),
                        TargetVariant::VectorZero);
    ReductionCertificate cert{"eliminate-s", instance_to_json(inst, k),
                              instance_to_json(result, k + 1), k, k + 1,
                              "M_k(source) > 0 iff M_{k+1}(instance) > 0"};
    return InstanceReduction{std::move(result), k + 1, std::move(cert)};
}

InstanceReduction zero_product_to_vest(const std::vector<Matrix>& mats, std::int64_t k) {
    require_k_at_least(k, 1);
    if (mats.empty()) throw DomainError("need at least one matrix");
    const FieldTag tag = mats.front().tag();
    const int d = mats.front().rows();
    for (const auto& m : mats) {
        if (m.tag() != tag) throw MixedFieldError("matrices from different fields");
        if (m.rows() != d || m.cols() != d) throw ShapeError("matrices must share a square shape");
    }

    // d block-diagonal copies track the d columns of the running product;
    // the evaluated vector is exactly those columns stacked.
    std::vector<Matrix> transforms;
    transforms.reserve(mats.size());
    for (const auto& m : mats) {
        transforms.push_back(block_diag(std::vector<Matrix>(d, m)));
    }
    Vector v(tag, d * d);
    for (int b = 0; b < d; ++b) v.set(b * d + b, Scalar::one(tag));

    VestInstance inst(tag, d * d, std::move(transforms), std::nullopt, std::move(v),
                      TargetVariant::VectorZero);
    ReductionCertificate cert{
        "zero-product-to-vest",
        instance_to_json(make_matrix_target_instance(mats, TargetVariant::MatrixZero), k),
        instance_to_json(inst, k), k, k,
        "some k of the source matrices (repetition allowed) multiply to zero iff "
        "M_k(instance) > 0"};
    return InstanceReduction{std::move(inst), k, std::move(cert)};
}

MatrixListReduction vest_to_zero_product(const VestInstance& inst, std::int64_t k) {
    require_rational_vector_instance(inst, "vest_to_zero_product");
    require_k_at_least(k, 1);
    InstanceReduction folded = eliminate_s(inst, k);
    const VestInstance& elim = folded.instance;
    const FieldTag& tag = elim.tag;
    const int big = elim.dim;
    const int m = elim.transform_count() - 1; // last transform is the S stand-in

    // A * B = 0 while B * A, A * A, B * B are all nonzero: the pair forces
    // the v stand-in to be applied first and the blocker H last.
    Matrix a(kQ, 3, 3);
    a.set(1, 1, Scalar::one(kQ));
    Matrix b(kQ, 3, 3);
    b.set(0, 1, Scalar::one(kQ));
    b.set(2, 2, Scalar::one(kQ));

    const Matrix i3 = Matrix::identity(tag, 3);
    const Matrix x = collapse();
    Matrix v_col(tag, big, big);
    for (int i = 0; i < big; ++i) v_col.set(i, 0, elim.v->at(i));

    std::vector<Matrix> out;
    out.reserve(m + 3);
    for (int i = 0; i < m; ++i) {
        out.push_back(block_diag({elim.transforms[i], i3, shear(-2)}));
    }
    out.push_back(block_diag({elim.transforms[m], i3, shear(2 * k + 1)}));
    out.push_back(block_diag({v_col, b, x}));
    out.push_back(block_diag({Matrix::identity(tag, big), a, x}));

    ReductionCertificate cert{
        "vest-to-zero-product", instance_to_json(inst, k),
        instance_to_json(make_matrix_target_instance(out, TargetVariant::MatrixZero), k + 3),
        k, k + 3,
        "M_k(source) > 0 iff some k+3 of the matrices (repetition allowed) multiply to "
        "the zero matrix"};
    return MatrixListReduction{std::move(out), k + 3, std::move(cert)};
}

InstanceReduction pcp_to_vest(const PcpInstance& pcp) {
    std::vector<Matrix> transforms;
    transforms.reserve(pcp.pairs.size());
    for (const auto& [v, w] : pcp.pairs) {
        transforms.push_back(block_diag({word_matrix(v), word_matrix(w)}));
    }
    Vector v(kQ, 4);
    v.set(1, Scalar::one(kQ));
    v.set(3, Scalar::one(kQ));
    Matrix s(kQ, 1, 4);
    s.set(0, 0, Scalar::one(kQ));
    s.set(0, 2, -Scalar::one(kQ));

    VestInstance inst(kQ, 4, std::move(transforms), std::move(s), std::move(v),
                      TargetVariant::VectorZero);
    ReductionCertificate cert{
        "pcp-to-vest", pcp_to_json(pcp), instance_to_json(inst), 0, 0,
        "evaluating a length-k sequence yields (v-concatenation)_2 - (w-concatenation)_2; "
        "equal concatenations of any length k give M_k > 0"};
    return InstanceReduction{std::move(inst), std::nullopt, std::move(cert)};
}

} // namespace vest::reductions
