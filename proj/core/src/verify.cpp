#include "vest/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "vest/brute_force.hpp"
#include "vest/dp.hpp"
#include "vest/oracles.hpp"
#include "vest/reductions.hpp"

namespace vest::verify {

std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

long long rand_range(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Graph random_graph(Rng& rng, int max_n) {
    const int n = 1 + static_cast<int>(rand_below(rng, std::max(1, max_n)));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rand_below(rng, 2) == 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

SetSystem random_set_system(Rng& rng, int max_universe, int max_sets) {
    const int m = 1 + static_cast<int>(rand_below(rng, std::max(1, max_universe)));
    const int count = 1 + static_cast<int>(rand_below(rng, std::max(1, max_sets)));
    std::vector<std::vector<int>> sets;
    sets.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<int> set;
        for (int e = 1; e <= m; ++e) {
            if (rand_below(rng, 2) == 1) set.push_back(e);
        }
        if (set.empty()) set.push_back(1 + static_cast<int>(rand_below(rng, m)));
        sets.push_back(std::move(set));
    }
    return SetSystem(m, std::move(sets));
}

std::vector<mpz_class> random_integer_set(Rng& rng, int max_size, long long max_abs) {
    const int size = 1 + static_cast<int>(rand_below(rng, std::max(1, max_size)));
    std::set<long long> values;
    for (int i = 0; i < size; ++i) values.insert(rand_range(rng, -max_abs, max_abs));
    std::vector<mpz_class> out;
    out.reserve(values.size());
    for (long long v : values) out.emplace_back(static_cast<long>(v));
    return out;
}

PcpInstance random_pcp(Rng& rng, int max_pairs, int max_len) {
    const int count = 1 + static_cast<int>(rand_below(rng, std::max(1, max_pairs)));
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(count);
    const auto word = [&] {
        std::string w;
        const int len = static_cast<int>(rand_below(rng, max_len + 1));
        for (int i = 0; i < len; ++i) w.push_back(rand_below(rng, 2) == 0 ? '0' : '1');
        return w;
    };
    for (int i = 0; i < count; ++i) pairs.emplace_back(word(), word());
    return PcpInstance(std::move(pairs));
}

namespace {

Scalar pick_rational(Rng& rng, bool integral_only) {
    // Zero-heavy pool keeps the gadget matrices sparse-ish.
    switch (rand_below(rng, integral_only ? 6 : 7)) {
        case 0:
        case 1: return Scalar::zero(FieldTag::rational());
        case 2: return Scalar::one(FieldTag::rational());
        case 3: return -Scalar::one(FieldTag::rational());
        case 4: return Scalar::of(FieldTag::rational(), 2);
        case 5: return Scalar::zero(FieldTag::rational());
        default: return Scalar::rational(1, 2);
    }
}

} // namespace

VestInstance random_rational_instance(Rng& rng, int max_d, int max_m, bool integral_only) {
    const FieldTag tag = FieldTag::rational();
    const int d = 1 + static_cast<int>(rand_below(rng, std::max(1, max_d)));
    const int m = 1 + static_cast<int>(rand_below(rng, std::max(1, max_m)));
    const int h = 1 + static_cast<int>(rand_below(rng, std::max(1, max_d + 1)));
    std::vector<Matrix> transforms;
    for (int t = 0; t < m; ++t) {
        Matrix mat(tag, d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) mat.set(i, j, pick_rational(rng, integral_only));
        }
        transforms.push_back(std::move(mat));
    }
    Matrix s(tag, h, d);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < d; ++j) s.set(i, j, pick_rational(rng, integral_only));
    }
    Vector v(tag, d);
    for (int i = 0; i < d; ++i) v.set(i, pick_rational(rng, integral_only));
    return VestInstance(tag, d, std::move(transforms), std::move(s), std::move(v),
                        TargetVariant::VectorZero);
}

VestInstance random_prime_instance(Rng& rng, const FieldTag& tag, int d, int m) {
    const std::uint64_t p = tag.modulus();
    std::vector<Matrix> transforms;
    for (int t = 0; t < m; ++t) {
        Matrix mat(tag, d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) mat.set(i, j, Scalar::residue(tag, rand_below(rng, p)));
        }
        transforms.push_back(std::move(mat));
    }
    const int h = 1 + static_cast<int>(rand_below(rng, d + 1));
    Matrix s(tag, h, d);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < d; ++j) s.set(i, j, Scalar::residue(tag, rand_below(rng, p)));
    }
    Vector v(tag, d);
    for (int i = 0; i < d; ++i) v.set(i, Scalar::residue(tag, rand_below(rng, p)));
    return VestInstance(tag, d, std::move(transforms), std::move(s), std::move(v),
                        TargetVariant::VectorZero);
}

namespace {

using namespace vest::reductions;

CountValue factorial(std::int64_t k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

struct Check {
    std::function<bool(std::string&)> exhaustive; // fills a case-count note
    std::function<bool(Rng&, int, std::string&)> trial;
};

bool counting_identity_holds(const Graph& g, std::int64_t k, const FieldTag& tag) {
    const auto red = dominating_set_to_vest(g, k, DominatingStyle::Counting, tag);
    return mk_bruteforce(red.instance, k) ==
           factorial(k) * oracles::count_dominating_sets(g, static_cast<int>(k));
}

bool decision_gadget_holds(const Graph& g, std::int64_t k, const FieldTag& tag) {
    const auto red = dominating_set_to_vest(g, k, DominatingStyle::Decision, tag);
    return decide(red.instance, k) == (oracles::count_dominating_sets(g, static_cast<int>(k)) > 0);
}

bool check_dominating_exhaustive(std::string& note) {
    int cases = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << all_edges.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_edges.size(); ++i) {
                if (mask & (std::uint64_t(1) << i)) edges.push_back(all_edges[i]);
            }
            const Graph g(n, edges);
            for (int k = 1; k <= std::min(2, n); ++k) {
                for (const FieldTag& tag : {FieldTag::prime(2), FieldTag::rational()}) {
                    if (!counting_identity_holds(g, k, tag)) return false;
                    if (!decision_gadget_holds(g, k, tag)) return false;
                    ++cases;
                }
            }
        }
    }
    note = std::to_string(cases) + " cases";
    return true;
}

bool check_dominating_trial(Rng& rng, int max_size, std::string&) {
    const Graph g = random_graph(rng, std::min(max_size, 6));
    const std::int64_t k = 1 + static_cast<std::int64_t>(rand_below(rng, std::min(3, g.n)));
    const FieldTag tag = rand_below(rng, 2) == 0 ? FieldTag::prime(2) : FieldTag::rational();
    return counting_identity_holds(g, k, tag) && decision_gadget_holds(g, k, tag);
}

bool k_product_agrees(const SetSystem& sys, std::int64_t k) {
    const auto red = exact_cover_to_k_product(sys, k);
    return oracles::exact_cover_exists(sys, static_cast<int>(k)) ==
           oracles::k_product_target1_exists(red.numbers, static_cast<int>(red.k));
}

bool at_most_k_sum_agrees(const SetSystem& sys, std::int64_t k) {
    const auto red = exact_cover_to_at_most_k_sum(sys, k);
    return oracles::exact_cover_exists(sys, static_cast<int>(k)) ==
           oracles::at_most_k_sum_target1_exists(red.numbers, static_cast<int>(red.k));
}

template <class Fn>
bool for_all_small_systems(int max_universe, int max_sets, Fn&& fn) {
    for (int m = 1; m <= max_universe; ++m) {
        std::vector<std::vector<int>> subsets;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            std::vector<int> set;
            for (int e = 0; e < m; ++e) {
                if (mask & (std::uint64_t(1) << e)) set.push_back(e + 1);
            }
            subsets.push_back(std::move(set));
        }
        // Collections = subsets of the subset list, sizes 1..max_sets.
        std::vector<std::size_t> pick;
        const std::function<bool(std::size_t)> rec = [&](std::size_t from) {
            if (!pick.empty()) {
                std::vector<std::vector<int>> sets;
                for (std::size_t i : pick) sets.push_back(subsets[i]);
                const SetSystem sys(m, std::move(sets));
                for (std::int64_t k = 1; k <= 2; ++k) {
                    if (!fn(sys, k)) return false;
                }
            }
            if (pick.size() == static_cast<std::size_t>(max_sets)) return true;
            for (std::size_t i = from; i < subsets.size(); ++i) {
                pick.push_back(i);
                if (!rec(i + 1)) return false;
                pick.pop_back();
            }
            return true;
        };
        if (!rec(0)) return false;
    }
    return true;
}

bool check_k_product_exhaustive(std::string& note) {
    note = "universes <= 2, collections <= 2, k <= 2";
    return for_all_small_systems(2, 2, k_product_agrees);
}

bool check_k_product_trial(Rng& rng, int max_size, std::string&) {
    const SetSystem sys = random_set_system(rng, std::min(max_size, 5), 5);
    return k_product_agrees(sys, 1 + static_cast<std::int64_t>(rand_below(rng, 3)));
}

bool check_at_most_k_sum_exhaustive(std::string& note) {
    note = "universes <= 2, collections <= 2, k <= 2";
    return for_all_small_systems(2, 2, at_most_k_sum_agrees);
}

bool check_at_most_k_sum_trial(Rng& rng, int max_size, std::string&) {
    const SetSystem sys = random_set_system(rng, std::min(max_size, 5), 5);
    return at_most_k_sum_agrees(sys, 1 + static_cast<std::int64_t>(rand_below(rng, 3)));
}

bool sum_to_zero_product_agrees(const std::vector<mpz_class>& a, std::int64_t k) {
    const auto red = sum_to_zero_matrix_product(a, k);
    const auto inst = make_matrix_target_instance(red.matrices, TargetVariant::MatrixZero);
    return oracles::at_most_k_sum_target1_exists(a, static_cast<int>(k)) ==
           decide(inst, red.k);
}

bool sum_to_vest_agrees(const std::vector<mpz_class>& a, std::int64_t k) {
    const auto red = sum_to_vest_identity_s(a, k);
    return oracles::at_most_k_sum_target1_exists(a, static_cast<int>(k)) ==
           decide(red.instance, *red.k);
}

template <class Fn>
bool for_all_small_integer_sets(Fn&& fn) {
    const std::vector<long long> pool = {-2, -1, 1, 2};
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << pool.size()); ++mask) {
        std::vector<mpz_class> a;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (mask & (std::uint64_t(1) << i)) a.emplace_back(static_cast<long>(pool[i]));
        }
        for (std::int64_t k = 1; k <= 2; ++k) {
            if (!fn(a, k)) return false;
        }
    }
    return true;
}

bool check_sum_to_zero_product_exhaustive(std::string& note) {
    note = "subsets of {-2,-1,1,2}, k <= 2";
    return for_all_small_integer_sets(sum_to_zero_product_agrees);
}

bool check_sum_to_zero_product_trial(Rng& rng, int max_size, std::string&) {
    const auto a = random_integer_set(rng, std::min(max_size, 4), 4);
    return sum_to_zero_product_agrees(a, 1 + static_cast<std::int64_t>(rand_below(rng, 3)));
}

bool check_sum_to_vest_exhaustive(std::string& note) {
    note = "subsets of {-2,-1,1,2}, k <= 2";
    return for_all_small_integer_sets(sum_to_vest_agrees);
}

bool check_sum_to_vest_trial(Rng& rng, int max_size, std::string&) {
    const auto a = random_integer_set(rng, std::min(max_size, 4), 4);
    return sum_to_vest_agrees(a, 1 + static_cast<std::int64_t>(rand_below(rng, 3)));
}

bool eliminate_s_agrees(const VestInstance& inst, std::int64_t k) {
    const auto red = eliminate_s(inst, k);
    return decide(inst, k) == decide(red.instance, *red.k);
}

VestInstance tiny_rational_instance(const std::vector<std::vector<std::vector<int>>>& transforms,
                                    const std::vector<std::vector<int>>& s,
                                    const std::vector<int>& v) {
    const FieldTag q = FieldTag::rational();
    const int d = static_cast<int>(v.size());
    std::vector<Matrix> ts;
    for (const auto& rows : transforms) {
        Matrix t(q, d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) t.set(i, j, Scalar::of(q, rows[i][j]));
        }
        ts.push_back(std::move(t));
    }
    Matrix sm(q, static_cast<int>(s.size()), d);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (int j = 0; j < d; ++j) sm.set(static_cast<int>(i), j, Scalar::of(q, s[i][j]));
    }
    Vector vv(q, d);
    for (int i = 0; i < d; ++i) vv.set(i, Scalar::of(q, v[i]));
    return VestInstance(q, d, std::move(ts), std::move(sm), std::move(vv),
                        TargetVariant::VectorZero);
}

std::vector<VestInstance> fixed_elimination_sources() {
    std::vector<VestInstance> out;
    out.push_back(tiny_rational_instance({{{0}}}, {{1}}, {1}));         // solvable at k = 1
    out.push_back(tiny_rational_instance({{{1}}}, {{1}}, {1}));         // never solvable
    out.push_back(tiny_rational_instance({{{0}}}, {{1}, {0}}, {1}));    // S taller than wide
    out.push_back(tiny_rational_instance(
        {{{0, 0}, {1, 0}}, {{1, 0}, {0, 1}}}, {{1, 0}}, {1, 0}));       // S wider than tall
    out.push_back(tiny_rational_instance({{{0, 1}, {0, 0}}}, {{1, 1}}, {0, 1}));
    return out;
}

bool check_eliminate_s_exhaustive(std::string& note) {
    int cases = 0;
    for (const auto& inst : fixed_elimination_sources()) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            if (!eliminate_s_agrees(inst, k)) return false;
            ++cases;
        }
    }
    note = std::to_string(cases) + " cases";
    return true;
}

bool check_eliminate_s_trial(Rng& rng, int max_size, std::string&) {
    const VestInstance inst = random_rational_instance(rng, std::min(max_size, 2), 2);
    return eliminate_s_agrees(inst, 1 + static_cast<std::int64_t>(rand_below(rng, 2)));
}

bool zero_product_to_vest_agrees(const std::vector<Matrix>& mats, std::int64_t k) {
    const auto red = zero_product_to_vest(mats, k);
    return oracles::matrix_product_target_exists(mats, static_cast<int>(k),
                                                 oracles::ProductTarget::Zero) ==
           decide(red.instance, *red.k);
}

bool check_zero_product_to_vest_exhaustive(std::string& note) {
    const FieldTag q = FieldTag::rational();
    int cases = 0;
    // All single 0/1 matrices of dimension 2, k <= 2.
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        Matrix t(q, 2, 2);
        for (int e = 0; e < 4; ++e) {
            if (mask & (std::uint64_t(1) << e)) t.set(e / 2, e % 2, Scalar::one(q));
        }
        for (std::int64_t k = 1; k <= 2; ++k) {
            if (!zero_product_to_vest_agrees({t}, k)) return false;
            ++cases;
        }
    }
    note = std::to_string(cases) + " cases";
    return true;
}

bool check_zero_product_to_vest_trial(Rng& rng, int max_size, std::string&) {
    const FieldTag q = FieldTag::rational();
    const int d = 1 + static_cast<int>(rand_below(rng, std::min(max_size, 2)));
    const int m = 1 + static_cast<int>(rand_below(rng, 2));
    std::vector<Matrix> mats;
    for (int t = 0; t < m; ++t) {
        Matrix mat(q, d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) mat.set(i, j, pick_rational(rng, /*integral_only=*/true));
        }
        mats.push_back(std::move(mat));
    }
    return zero_product_to_vest_agrees(mats, 1 + static_cast<std::int64_t>(rand_below(rng, 2)));
}

bool vest_to_zero_product_agrees(const VestInstance& inst, std::int64_t k) {
    const auto red = vest_to_zero_product(inst, k);
    const auto target = make_matrix_target_instance(red.matrices, TargetVariant::MatrixZero);
    return decide(inst, k) == decide(target, red.k);
}

bool check_vest_to_zero_product_exhaustive(std::string& note) {
    int cases = 0;
    for (const auto& inst : fixed_elimination_sources()) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            if (!vest_to_zero_product_agrees(inst, k)) return false;
            ++cases;
        }
    }
    note = std::to_string(cases) + " cases";
    return true;
}

bool check_vest_to_zero_product_trial(Rng& rng, int max_size, std::string&) {
    // Integral sources keep the int64 representation eligible; fractional
    // entries are exercised at k = 1 where the exact path stays fast.
    const bool fractional = rand_below(rng, 5) == 0;
    const VestInstance inst =
        random_rational_instance(rng, std::min(max_size, 2), 2, /*integral_only=*/!fractional);
    const std::int64_t k = fractional ? 1 : 1 + static_cast<std::int64_t>(rand_below(rng, 2));
    return vest_to_zero_product_agrees(inst, k);
}

mpz_class word_value_of(const std::string& word) {
    mpz_class v = 0;
    for (char c : word) v = 2 * v + (c - '0');
    return v;
}

// Evaluates S T_{(i_k)} ... T_{(i_1)} v through the generated instance and
// compares with the difference of the concatenated words' binary values.
bool pcp_value_formula_holds(const PcpInstance& pcp, const std::vector<int>& seq) {
    const auto red = pcp_to_vest(pcp);
    const VestInstance& inst = red.instance;
    Vector state = *inst.v;
    std::string vcat, wcat;
    for (int idx : seq) {
        state = inst.transforms[idx - 1] * state;
        vcat += pcp.pairs[idx - 1].first;
        wcat += pcp.pairs[idx - 1].second;
    }
    const Vector evaluated = inst.effective_s() * state;
    const mpq_class expected(word_value_of(vcat) - word_value_of(wcat));
    return evaluated.dim() == 1 && evaluated.at(0).rational_value() == expected;
}

bool pcp_agrees(const PcpInstance& pcp, Rng* rng) {
    // Value formula on every length-1 and length-2 sequence plus a few
    // longer ones.
    const int m = static_cast<int>(pcp.pairs.size());
    for (int i = 1; i <= m; ++i) {
        if (!pcp_value_formula_holds(pcp, {i})) return false;
        for (int j = 1; j <= m; ++j) {
            if (!pcp_value_formula_holds(pcp, {i, j})) return false;
        }
    }
    if (rng) {
        for (int t = 0; t < 5; ++t) {
            std::vector<int> seq;
            for (int l = 0; l < 3; ++l) seq.push_back(1 + static_cast<int>(rand_below(*rng, m)));
            if (!pcp_value_formula_holds(pcp, seq)) return false;
        }
    }
    // A string-level witness must be a matrix-level witness.
    const auto witness = oracles::pcp_bounded_search(pcp, 4, 2'000'000);
    if (witness) {
        const auto red = pcp_to_vest(pcp);
        if (!decide(red.instance, witness->size())) return false;
    }
    return true;
}

bool check_pcp_exhaustive(std::string& note) {
    using Pairs = std::vector<std::pair<std::string, std::string>>;
    const std::vector<PcpInstance> fixed = {
        PcpInstance(Pairs{{"01", "01"}}),
        PcpInstance(Pairs{{"0", "1"}}),
        PcpInstance(Pairs{{"1", "101"}, {"10", "00"}, {"011", "11"}}),
        PcpInstance(Pairs{{"", ""}}),
        PcpInstance(Pairs{{"0", "00"}}),
    };
    for (const auto& pcp : fixed) {
        if (!pcp_agrees(pcp, nullptr)) return false;
    }
    note = std::to_string(fixed.size()) + " fixed instances";
    return true;
}

bool check_pcp_trial(Rng& rng, int max_size, std::string&) {
    const PcpInstance pcp = random_pcp(rng, std::min(max_size, 3), 3);
    return pcp_agrees(pcp, &rng);
}

struct NamedCheck {
    const char* name;
    bool (*exhaustive)(std::string&);
    bool (*trial)(Rng&, int, std::string&);
};

constexpr NamedCheck kChecks[] = {
    {"dominating-set", check_dominating_exhaustive, check_dominating_trial},
    {"k-product", check_k_product_exhaustive, check_k_product_trial},
    {"at-most-k-sum", check_at_most_k_sum_exhaustive, check_at_most_k_sum_trial},
    {"sum-to-zero-product", check_sum_to_zero_product_exhaustive, check_sum_to_zero_product_trial},
    {"sum-to-vest", check_sum_to_vest_exhaustive, check_sum_to_vest_trial},
    {"eliminate-s", check_eliminate_s_exhaustive, check_eliminate_s_trial},
    {"zero-product-to-vest", check_zero_product_to_vest_exhaustive,
     check_zero_product_to_vest_trial},
    {"vest-to-zero-product", check_vest_to_zero_product_exhaustive,
     check_vest_to_zero_product_trial},
    {"pcp", check_pcp_exhaustive, check_pcp_trial},
};

} // namespace

const std::vector<std::string>& reduction_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& check : kChecks) out.emplace_back(check.name);
        return out;
    }();
    return names;
}

Report verify_reduction(const std::string& name, int trials, int max_size, std::uint64_t seed) {
    const NamedCheck* check = nullptr;
    for (const auto& c : kChecks) {
        if (name == c.name) check = &c;
    }
    if (!check) throw DomainError("unknown reduction '" + name + "'");

    Report report;
    const auto record = [&report](const std::string& label, bool pass, const std::string& note) {
        std::ostringstream line;
        line << label << ": " << (pass ? "PASS" : "FAIL");
        if (!note.empty()) line << " (" << note << ")";
        report.lines.push_back(line.str());
        (pass ? report.passed : report.failed)++;
    };

    std::string note;
    record("exhaustive", check->exhaustive(note), note);
    Rng rng(seed);
    for (int t = 1; t <= trials; ++t) {
        note.clear();
        record("trial " + std::to_string(t), check->trial(rng, max_size, note), note);
    }
    return report;
}

} // namespace vest::verify
