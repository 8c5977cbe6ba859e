#include "vest/dp.hpp"

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>

namespace vest {
namespace {

// Level tables map the canonical encoding of a product value to the value
// itself and its sequence count. std::map keeps per-level iteration in
// sorted encoding order, so runs are reproducible.
using Table = std::map<std::string, std::pair<Matrix, CountValue>>;

void bump(Table& table, const Matrix& value, const CountValue& by) {
    auto [it, inserted] = table.try_emplace(value.canonical_key(), value, 0);
    it->second.second += by;
}

void emit_trace(const DpOptions& opts, std::uint64_t level, const Table& table) {
    if (!opts.trace && !opts.trace_sink) return;
    CountValue total = 0;
    for (const auto& [key, entry] : table) total += entry.second;
    if (opts.trace) {
        *opts.trace << "level " << level << ": states=" << table.size()
                    << ", total=" << total.get_str() << "\n";
    }
    if (opts.trace_sink) {
        opts.trace_sink->push_back({level, table.size(), total});
    }
}

CountValue empty_product_count(const VestInstance& inst) {
    switch (inst.target) {
        case TargetVariant::VectorZero:
            return (inst.effective_s() * *inst.v).is_zero() ? 1 : 0;
        case TargetVariant::MatrixZero:
            return 0; // the identity is never zero for dim >= 1
        case TargetVariant::MatrixIdentity:
            return 1;
    }
    throw DomainError("unknown target variant");
}

bool product_hits_target(const VestInstance& inst, const Matrix& x) {
    switch (inst.target) {
        case TargetVariant::VectorZero:
            return (inst.effective_s() * (x * *inst.v)).is_zero();
        case TargetVariant::MatrixZero:
            return x.is_zero();
        case TargetVariant::MatrixIdentity:
            return x.is_identity();
    }
    throw DomainError("unknown target variant");
}

void require_finite(const VestInstance& inst) {
    if (!inst.tag.is_prime()) {
        throw InfiniteFieldError("the value table requires a finite field");
    }
}

} // namespace

CountValue count_mk_dp(const VestInstance& inst, std::uint64_t k, const DpOptions& opts) {
    require_finite(inst);
    if (k == 0) return empty_product_count(inst);

    Table table;
    for (const auto& t : inst.transforms) bump(table, t, 1);
    emit_trace(opts, 1, table);

    for (std::uint64_t level = 2; level <= k; ++level) {
        Table next;
        for (const auto& [key, entry] : table) {
            for (const auto& t : inst.transforms) {
                bump(next, entry.first * t, entry.second);
            }
        }
        table = std::move(next);
        emit_trace(opts, level, table);
    }

    CountValue result = 0;
    for (const auto& [key, entry] : table) {
        if (product_hits_target(inst, entry.first)) result += entry.second;
    }
    return result;
}

namespace {

struct RowSplit {
    std::vector<RowRestrictedMatrix> transforms;
    Matrix s;      // h x d
    Vector v_head; // first p coordinates of v
    Vector v_tail; // remaining d - p coordinates
};

RowSplit split_rows(const VestInstance& inst, int p) {
    if (inst.target != TargetVariant::VectorZero) {
        throw VariantError("the row-restricted table needs a vector_zero target");
    }
    RowSplit out{{}, inst.effective_s(), Vector(inst.tag, p), Vector(inst.tag, inst.dim - p)};
    out.transforms.reserve(inst.transforms.size());
    for (const auto& t : inst.transforms) {
        out.transforms.push_back(RowRestrictedMatrix::from_matrix(t, p));
    }
    for (int i = 0; i < p; ++i) out.v_head.set(i, inst.v->at(i));
    for (int i = p; i < inst.dim; ++i) out.v_tail.set(i - p, inst.v->at(i));
    return out;
}

// S * embed((X A_q) | (X B_q)) * v = 0? Only the first p coordinates of the
// intermediate vector can be nonzero.
bool last_step_hits(const RowSplit& split, const Matrix& x, const RowRestrictedMatrix& t,
                    const FieldTag& tag, int d, int p) {
    const Matrix xa = x * t.a();
    const Matrix xb = x * t.b();
    Vector u(tag, d);
    for (int i = 0; i < p; ++i) {
        Scalar acc = Scalar::zero(tag);
        for (int j = 0; j < p; ++j) acc = acc + xa.at(i, j) * split.v_head.at(j);
        for (int j = 0; j < d - p; ++j) acc = acc + xb.at(i, j) * split.v_tail.at(j);
        u.set(i, std::move(acc));
    }
    return (split.s * u).is_zero();
}

} // namespace

CountValue count_mk_dp_rows(const VestInstance& inst, int p, std::uint64_t k,
                            const DpOptions& opts) {
    require_finite(inst);
    if (k < 1) throw DomainError("the row-restricted table needs k >= 1");
    if (p < 0 || p > inst.dim) throw ShapeError("row bound p out of range");
    const RowSplit split = split_rows(inst, p);

    // a^0: the empty product of A blocks.
    Table table;
    bump(table, Matrix::identity(inst.tag, p), 1);
    for (std::uint64_t level = 1; level + 1 <= k; ++level) {
        Table next;
        for (const auto& [key, entry] : table) {
            for (const auto& t : split.transforms) {
                bump(next, entry.first * t.a(), entry.second);
            }
        }
        table = std::move(next);
        emit_trace(opts, level, table);
    }

    CountValue result = 0;
    for (const auto& [key, entry] : table) {
        for (const auto& t : split.transforms) {
            if (last_step_hits(split, entry.first, t, inst.tag, inst.dim, p)) {
                result += entry.second;
            }
        }
    }
    return result;
}

namespace {

mpz_class state_space_size(std::uint64_t field_size, int p) {
    mpz_class size;
    mpz_ui_pow_ui(size.get_mpz_t(), field_size, static_cast<unsigned long>(p) * p);
    return size;
}

} // namespace

std::optional<std::uint64_t> min_k(const VestInstance& inst, const MinKOptions& opts) {
    require_finite(inst);
    const int d = inst.dim;
    const int p = opts.p_rows.value_or(d);
    if (p < 0 || p > d) throw ShapeError("row bound p out of range");
    const bool rows_mode = p < d;
    MinKStats local_stats;
    MinKStats& stats = opts.stats ? *opts.stats : local_stats;
    stats.levels = 0;

    const mpz_class space = state_space_size(inst.tag.modulus(), p);

    if (!rows_mode) {
        // Reachable full products per level; a level with no unseen value and
        // no hit proves M_k = 0 forever.
        std::set<std::string> seen;
        std::vector<Matrix> frontier;
        for (std::uint64_t level = 1;; ++level) {
            ++stats.levels;
            std::map<std::string, Matrix> next;
            if (level == 1) {
                for (const auto& t : inst.transforms) next.try_emplace(t.canonical_key(), t);
            } else {
                for (const auto& x : frontier) {
                    for (const auto& t : inst.transforms) {
                        Matrix y = x * t;
                        auto key = y.canonical_key();
                        next.try_emplace(std::move(key), std::move(y));
                    }
                }
            }
            frontier.clear();
            bool fresh = false;
            for (auto& [key, x] : next) {
                if (product_hits_target(inst, x)) return level;
                if (seen.insert(key).second) fresh = true;
                frontier.push_back(std::move(x));
            }
            if (!fresh) return std::nullopt;
            // Every possible value has appeared and been tested.
            if (mpz_class(static_cast<unsigned long>(seen.size())) >= space) return std::nullopt;
        }
    }

    // Row-restricted mode: states are A-block products; the target test for
    // M_{j+1} pairs a level-j state with each transform's last step.
    const RowSplit split = split_rows(inst, p);
    std::set<std::string> seen;
    std::vector<Matrix> frontier = {Matrix::identity(inst.tag, p)};
    for (std::uint64_t level = 1;; ++level) {
        for (const auto& x : frontier) {
            for (const auto& t : split.transforms) {
                if (last_step_hits(split, x, t, inst.tag, d, p)) return level;
            }
        }
        ++stats.levels;
        std::map<std::string, Matrix> next;
        for (const auto& x : frontier) {
            for (const auto& t : split.transforms) {
                Matrix y = x * t.a();
                auto key = y.canonical_key();
                next.try_emplace(std::move(key), std::move(y));
            }
        }
        frontier.clear();
        bool fresh = false;
        for (auto& [key, x] : next) {
            if (seen.insert(key).second) fresh = true;
            frontier.push_back(std::move(x));
        }
        if (!fresh) return std::nullopt;
    }
}

} // namespace vest
