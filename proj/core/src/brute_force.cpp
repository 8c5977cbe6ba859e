#include "vest/brute_force.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

// The enumeration loops run on one of three internal element representations,
// picked per instance: uint64 residues for prime fields, plain int64 when a
// rational instance is integer-valued and a conservative growth bound rules
// out overflow, exact mpq otherwise. Selection never changes results.

namespace vest {
namespace {

struct PrimeRing {
    using Elem = std::uint64_t;
    std::uint64_t p = 2;
    bool wide = false; // accumulate in 128 bits when raw sums of (p-1)^2 could overflow

    static Elem from_scalar(const Scalar& s) { return s.residue_value(); }

    void matvec(int rows, int cols, const Elem* m, const Elem* x, Elem* out) const {
        for (int i = 0; i < rows; ++i) {
            if (wide) {
                unsigned __int128 acc = 0;
                for (int j = 0; j < cols; ++j) {
                    acc += static_cast<unsigned __int128>(m[i * cols + j]) * x[j];
                }
                out[i] = static_cast<Elem>(acc % p);
            } else {
                Elem acc = 0;
                for (int j = 0; j < cols; ++j) acc += m[i * cols + j] * x[j];
                out[i] = acc % p;
            }
        }
    }

    // out = a * b, all d x d row-major.
    void matmat(int d, const Elem* a, const Elem* b, Elem* out) const {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (wide) {
                    unsigned __int128 acc = 0;
                    for (int l = 0; l < d; ++l) {
                        acc += static_cast<unsigned __int128>(a[i * d + l]) * b[l * d + j];
                    }
                    out[i * d + j] = static_cast<Elem>(acc % p);
                } else {
                    Elem acc = 0;
                    for (int l = 0; l < d; ++l) acc += a[i * d + l] * b[l * d + j];
                    out[i * d + j] = acc % p;
                }
            }
        }
    }

    static bool is_zero(const Elem& e) { return e == 0; }
    static bool is_one(const Elem& e) { return e == 1; }
};

struct Int64Ring {
    using Elem = long long;

    static Elem from_scalar(const Scalar& s) {
        return static_cast<Elem>(s.rational_value().get_num().get_si());
    }

    void matvec(int rows, int cols, const Elem* m, const Elem* x, Elem* out) const {
        for (int i = 0; i < rows; ++i) {
            Elem acc = 0;
            for (int j = 0; j < cols; ++j) acc += m[i * cols + j] * x[j];
            out[i] = acc;
        }
    }

    void matmat(int d, const Elem* a, const Elem* b, Elem* out) const {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                Elem acc = 0;
                for (int l = 0; l < d; ++l) acc += a[i * d + l] * b[l * d + j];
                out[i * d + j] = acc;
            }
        }
    }

    static bool is_zero(const Elem& e) { return e == 0; }
    static bool is_one(const Elem& e) { return e == 1; }
};

struct MpqRing {
    using Elem = mpq_class;

    static Elem from_scalar(const Scalar& s) {
        return s.tag().is_rational() ? s.rational_value() : mpq_class(s.residue_value());
    }

    void matvec(int rows, int cols, const Elem* m, const Elem* x, Elem* out) const {
        for (int i = 0; i < rows; ++i) {
            mpq_class acc = 0;
            for (int j = 0; j < cols; ++j) {
                if (m[i * cols + j] != 0) acc += m[i * cols + j] * x[j];
            }
            out[i] = acc;
        }
    }

    void matmat(int d, const Elem* a, const Elem* b, Elem* out) const {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                mpq_class acc = 0;
                for (int l = 0; l < d; ++l) {
                    if (a[i * d + l] != 0) acc += a[i * d + l] * b[l * d + j];
                }
                out[i * d + j] = acc;
            }
        }
    }

    static bool is_zero(const Elem& e) { return e == 0; }
    static bool is_one(const Elem& e) { return e == 1; }
};

// Instance flattened onto a ring. The evolving state is either the vector
// T_{i_j}...T_{i_1} v (vector_zero target) or the running product
// T_{i_j}...T_{i_1}, row-major; extending a sequence multiplies on the left.
template <class Ring>
struct Engine {
    Ring ring;
    int d = 0;
    int m = 0;
    int h = 0;
    TargetVariant target = TargetVariant::VectorZero;
    bool vector_mode = false;
    std::vector<typename Ring::Elem> mats; // m * d * d
    std::vector<typename Ring::Elem> s;    // h * d, vector mode only
    std::vector<typename Ring::Elem> init; // d (vector mode) or d * d (identity)
    int state_len = 0;

    using Elem = typename Ring::Elem;

    void apply(int q, const Elem* in, Elem* out) const {
        const Elem* mat = mats.data() + static_cast<std::size_t>(q) * d * d;
        if (vector_mode) {
            ring.matvec(d, d, mat, in, out);
        } else {
            ring.matmat(d, mat, in, out);
        }
    }

    bool hit(const Elem* state, Elem* scratch_h) const {
        if (vector_mode) {
            ring.matvec(h, d, s.data(), state, scratch_h);
            for (int i = 0; i < h; ++i) {
                if (!Ring::is_zero(scratch_h[i])) return false;
            }
            return true;
        }
        if (target == TargetVariant::MatrixZero) {
            for (int i = 0; i < d * d; ++i) {
                if (!Ring::is_zero(state[i])) return false;
            }
            return true;
        }
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const Elem& e = state[i * d + j];
                if (i == j ? !Ring::is_one(e) : !Ring::is_zero(e)) return false;
            }
        }
        return true;
    }
};

template <class Ring>
Engine<Ring> build_engine(const VestInstance& inst, Ring ring) {
    Engine<Ring> eng;
    eng.ring = ring;
    eng.d = inst.dim;
    eng.m = inst.transform_count();
    eng.target = inst.target;
    eng.vector_mode = inst.target == TargetVariant::VectorZero;
    eng.mats.reserve(static_cast<std::size_t>(eng.m) * eng.d * eng.d);
    for (const auto& t : inst.transforms) {
        for (int i = 0; i < eng.d; ++i) {
            for (int j = 0; j < eng.d; ++j) eng.mats.push_back(Ring::from_scalar(t.at(i, j)));
        }
    }
    if (eng.vector_mode) {
        const Matrix s = inst.effective_s();
        eng.h = s.rows();
        for (int i = 0; i < eng.h; ++i) {
            for (int j = 0; j < eng.d; ++j) eng.s.push_back(Ring::from_scalar(s.at(i, j)));
        }
        for (int i = 0; i < eng.d; ++i) eng.init.push_back(Ring::from_scalar(inst.v->at(i)));
        eng.state_len = eng.d;
    } else {
        for (int i = 0; i < eng.d; ++i) {
            for (int j = 0; j < eng.d; ++j) {
                eng.init.push_back(Ring::from_scalar(
                    i == j ? Scalar::one(inst.tag) : Scalar::zero(inst.tag)));
            }
        }
        eng.state_len = eng.d * eng.d;
    }
    return eng;
}

// Conservative per-entry magnitude bound after `applications` left-multiplies
// plus the final S application; qualifies the int64 representation.
bool int64_safe(const VestInstance& inst, std::uint64_t applications) {
    if (!inst.tag.is_rational()) return false;
    if (applications > 64) return false;
    bool integral = true;
    mpz_class max_t = 1, max_s = 1, max_init = 1;
    const auto scan = [&integral](mpz_class& acc, const Scalar& s) {
        if (s.rational_value().get_den() != 1) {
            integral = false;
            return;
        }
        mpz_class a = abs(s.rational_value().get_num());
        if (a > acc) acc = a;
    };
    for (const auto& t : inst.transforms) {
        for (int i = 0; i < t.rows(); ++i) {
            for (int j = 0; j < t.cols(); ++j) scan(max_t, t.at(i, j));
        }
    }
    if (inst.target == TargetVariant::VectorZero) {
        const Matrix s = inst.effective_s();
        for (int i = 0; i < s.rows(); ++i) {
            for (int j = 0; j < s.cols(); ++j) scan(max_s, s.at(i, j));
        }
        for (int i = 0; i < inst.v->dim(); ++i) scan(max_init, inst.v->at(i));
    }
    if (!integral) return false;
    const mpz_class limit = mpz_class(1) << 62;
    mpz_class bound = max_init;
    const mpz_class step = mpz_class(inst.dim) * max_t;
    for (std::uint64_t i = 0; i < applications; ++i) {
        bound *= step;
        if (bound > limit) return false;
    }
    bound *= mpz_class(inst.dim) * max_s;
    return bound <= limit;
}

// Total applications performed by a full depth-k enumeration: m + m^2 + ... + m^k.
mpz_class enumeration_steps(int m, std::uint64_t k) {
    if (m == 0 || k == 0) return 0;
    if (m == 1) return mpz_class(static_cast<unsigned long>(k));
    mpz_class total = 0, level = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
        level *= m;
        total += level;
        if (total > mpz_class(1) << 80) break; // already far past any budget
    }
    return total;
}

template <class Ring>
struct Dfs {
    const Engine<Ring>& eng;
    std::uint64_t k;
    std::uint64_t budget;
    bool counting;
    bool charge_live;

    mpz_class count = 0;
    bool found = false;
    std::vector<std::vector<typename Ring::Elem>> stack;
    std::vector<typename Ring::Elem> scratch;

    Dfs(const Engine<Ring>& e, std::uint64_t k_, std::uint64_t budget_, bool counting_,
        bool charge_live_)
        : eng(e), k(k_), budget(budget_), counting(counting_), charge_live(charge_live_) {
        stack.assign(k + 1, std::vector<typename Ring::Elem>(eng.state_len));
        stack[0] = eng.init;
        scratch.assign(std::max(1, eng.h), typename Ring::Elem());
    }

    void charge() {
        if (!charge_live) return;
        if (budget == 0) throw BudgetExceededError("enumeration budget exhausted");
        --budget;
    }

    void run() {
        if (k == 0) {
            if (eng.hit(stack[0].data(), scratch.data())) {
                count = 1;
                found = true;
            }
            return;
        }
        descend(0);
    }

    void descend(std::uint64_t depth) {
        for (int q = 0; q < eng.m; ++q) {
            charge();
            eng.apply(q, stack[depth].data(), stack[depth + 1].data());
            if (depth + 1 == k) {
                if (eng.hit(stack[depth + 1].data(), scratch.data())) {
                    if (!counting) {
                        found = true;
                        return;
                    }
                    ++count;
                }
            } else {
                descend(depth + 1);
                if (!counting && found) return;
            }
        }
    }

    // Counts only the subtrees whose first index lies in [q_lo, q_hi).
    void run_slice(int q_lo, int q_hi) {
        for (int q = q_lo; q < q_hi; ++q) {
            eng.apply(q, stack[0].data(), stack[1].data());
            if (k == 1) {
                if (eng.hit(stack[1].data(), scratch.data())) ++count;
            } else {
                descend(1);
            }
        }
    }
};

template <class Ring>
CountValue count_with(const Engine<Ring>& eng, std::uint64_t k, const SolveOptions& opts) {
    if (opts.threads <= 1 || k == 0 || eng.m < 2) {
        Dfs<Ring> dfs(eng, k, opts.budget, /*counting=*/true, /*charge_live=*/false);
        dfs.run();
        return dfs.count;
    }
    const unsigned workers = std::min<unsigned>(opts.threads, static_cast<unsigned>(eng.m));
    std::vector<mpz_class> partial(workers, 0);
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        const int lo = static_cast<int>(static_cast<std::uint64_t>(eng.m) * w / workers);
        const int hi = static_cast<int>(static_cast<std::uint64_t>(eng.m) * (w + 1) / workers);
        pool.emplace_back([&, w, lo, hi] {
            try {
                Dfs<Ring> dfs(eng, k, opts.budget, /*counting=*/true, /*charge_live=*/false);
                dfs.run_slice(lo, hi);
                partial[w] = dfs.count;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    mpz_class total = 0;
    for (const auto& c : partial) total += c;
    return total;
}

template <class Ring>
bool decide_with(const Engine<Ring>& eng, std::uint64_t k, const SolveOptions& opts) {
    Dfs<Ring> dfs(eng, k, opts.budget, /*counting=*/false, /*charge_live=*/true);
    dfs.run();
    return dfs.found;
}

template <class Ring>
std::optional<std::uint64_t> exists_with(const Engine<Ring>& eng, std::uint64_t kmax,
                                         const SolveOptions& opts) {
    using Elem = typename Ring::Elem;
    using State = std::vector<Elem>;
    std::uint64_t budget = opts.budget;
    std::vector<Elem> scratch(std::max(1, eng.h));
    std::vector<State> frontier = {eng.init};
    State next_state(eng.state_len);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        std::set<State> next;
        for (const auto& st : frontier) {
            for (int q = 0; q < eng.m; ++q) {
                if (budget == 0) throw BudgetExceededError("enumeration budget exhausted");
                --budget;
                eng.apply(q, st.data(), next_state.data());
                next.insert(next_state);
            }
        }
        if (next.empty()) return std::nullopt; // m = 0
        frontier.assign(next.begin(), next.end());
        for (const auto& st : frontier) {
            if (eng.hit(st.data(), scratch.data())) return k;
        }
    }
    return std::nullopt;
}

enum class RingChoice { Prime, Int64, Mpq };

RingChoice choose_ring(const VestInstance& inst, std::uint64_t applications) {
    if (inst.tag.is_prime()) return RingChoice::Prime;
    if (int64_safe(inst, applications)) return RingChoice::Int64;
    return RingChoice::Mpq;
}

PrimeRing make_prime_ring(const VestInstance& inst) {
    const std::uint64_t p = inst.tag.modulus();
    return PrimeRing{p, /*wide=*/p > (1u << 21)};
}

template <class Fn>
auto with_engine(const VestInstance& inst, std::uint64_t applications, Fn&& fn) {
    switch (choose_ring(inst, applications)) {
        case RingChoice::Prime: return fn(build_engine(inst, make_prime_ring(inst)));
        case RingChoice::Int64: return fn(build_engine(inst, Int64Ring{}));
        case RingChoice::Mpq: return fn(build_engine(inst, MpqRing{}));
    }
    throw DomainError("unreachable ring choice");
}

} // namespace

CountValue mk_bruteforce(const VestInstance& inst, std::uint64_t k, const SolveOptions& opts) {
    if (enumeration_steps(inst.transform_count(), k) > opts.budget) {
        throw BudgetExceededError("m^k enumeration exceeds budget of " +
                                  std::to_string(opts.budget) + " steps");
    }
    return with_engine(inst, k, [&](const auto& eng) { return count_with(eng, k, opts); });
}

bool decide(const VestInstance& inst, std::uint64_t k, const SolveOptions& opts) {
    if (k > opts.budget) {
        throw BudgetExceededError("a single length-" + std::to_string(k) +
                                  " sequence exceeds the budget");
    }
    return with_engine(inst, k, [&](const auto& eng) { return decide_with(eng, k, opts); });
}

std::optional<std::uint64_t> exists_up_to(const VestInstance& inst, std::uint64_t kmax,
                                          const SolveOptions& opts) {
    return with_engine(inst, kmax, [&](const auto& eng) { return exists_with(eng, kmax, opts); });
}

} // namespace vest
