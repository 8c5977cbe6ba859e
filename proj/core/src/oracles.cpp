#include "vest/oracles.hpp"

#include <deque>
#include <string>

namespace vest::oracles {
namespace {

struct Budget {
    std::uint64_t remaining;
    void charge() {
        if (remaining == 0) throw BudgetExceededError("oracle budget exhausted");
        --remaining;
    }
};

std::uint64_t domination_mask(const std::vector<std::vector<int>>& nbh, int u) {
    std::uint64_t mask = 0;
    for (int w : nbh[u]) mask |= std::uint64_t(1) << w;
    return mask;
}

} // namespace

CountValue count_dominating_sets(const Graph& g, int k, std::uint64_t budget) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (g.n > 64) throw DomainError("dominating-set oracle handles at most 64 vertices");
    const auto nbh = g.closed_neighborhoods();
    std::vector<std::uint64_t> cover(g.n);
    for (int u = 0; u < g.n; ++u) cover[u] = domination_mask(nbh, u);
    const std::uint64_t full =
        g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;

    Budget steps{budget};
    CountValue count = 0;
    // Enumerate k-subsets {first < ... } recursively, tracking the union.
    auto rec = [&](auto&& self, int next, int picked, std::uint64_t covered) -> void {
        steps.charge();
        if (picked == k) {
            if (covered == full) ++count;
            return;
        }
        for (int u = next; u <= g.n - (k - picked); ++u) {
            self(self, u + 1, picked + 1, covered | cover[u]);
        }
    };
    rec(rec, 0, 0, 0);
    return count;
}

bool exact_cover_exists(const SetSystem& sys, int k, std::uint64_t budget) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (sys.universe > 64) throw DomainError("exact-cover oracle handles universes up to 64");
    std::vector<std::uint64_t> masks;
    masks.reserve(sys.sets.size());
    for (const auto& set : sys.sets) {
        std::uint64_t m = 0;
        for (int e : set) m |= std::uint64_t(1) << (e - 1);
        masks.push_back(m);
    }
    const std::uint64_t full =
        sys.universe == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << sys.universe) - 1;

    Budget steps{budget};
    // Partitions never repeat a set (two copies of a nonempty set intersect),
    // so enumerating index subsets suffices.
    auto rec = [&](auto&& self, std::size_t next, int picked, std::uint64_t covered) -> bool {
        steps.charge();
        if (picked == k) return covered == full;
        for (std::size_t i = next; i < masks.size(); ++i) {
            if ((covered & masks[i]) != 0) continue;
            if (self(self, i + 1, picked + 1, covered | masks[i])) return true;
        }
        return false;
    };
    return rec(rec, 0, 0, 0);
}

bool at_most_k_sum_target1_exists(const std::vector<mpz_class>& a, int k, std::uint64_t budget) {
    if (k < 0) throw DomainError("k must be nonnegative");
    Budget steps{budget};
    // Multisets as nondecreasing index sequences of every size 1..k.
    auto rec = [&](auto&& self, std::size_t from, int left, const mpz_class& sum) -> bool {
        steps.charge();
        if (sum == 1) return true;
        if (left == 0) return false;
        for (std::size_t i = from; i < a.size(); ++i) {
            if (self(self, i, left - 1, sum + a[i])) return true;
        }
        return false;
    };
    return rec(rec, 0, k, mpz_class(0));
}

bool k_product_target1_exists(const std::vector<mpq_class>& a, int k, std::uint64_t budget) {
    if (k < 0) throw DomainError("k must be nonnegative");
    Budget steps{budget};
    auto rec = [&](auto&& self, std::size_t from, int left, const mpq_class& prod) -> bool {
        steps.charge();
        if (left == 0) return prod == 1;
        if (prod == 0) return false;
        for (std::size_t i = from; i < a.size(); ++i) {
            if (self(self, i, left - 1, prod * a[i])) return true;
        }
        return false;
    };
    return rec(rec, 0, k, mpq_class(1));
}

bool matrix_product_target_exists(const std::vector<Matrix>& mats, int k, ProductTarget target,
                                  std::uint64_t budget) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (mats.empty()) throw DomainError("matrix oracle needs at least one matrix");
    const int d = mats.front().rows();
    for (const auto& m : mats) {
        if (m.rows() != d || m.cols() != d) throw ShapeError("matrices must share a square shape");
    }
    Budget steps{budget};
    const auto hits = [&](const Matrix& m) {
        return target == ProductTarget::Zero ? m.is_zero() : m.is_identity();
    };
    // Sequences, newest factor on the left.
    auto rec = [&](auto&& self, int left, const Matrix& prod) -> bool {
        steps.charge();
        if (left == 0) return hits(prod);
        for (const auto& m : mats) {
            if (self(self, left - 1, m * prod)) return true;
        }
        return false;
    };
    return rec(rec, k, Matrix::identity(mats.front().tag(), d));
}

std::optional<std::vector<int>> pcp_bounded_search(const PcpInstance& pcp, int kmax,
                                                   std::uint64_t budget) {
    if (kmax < 1) throw DomainError("kmax must be >= 1");
    Budget steps{budget};

    struct Node {
        std::string v, w;
        std::vector<int> seq; // 1-based pair indices
    };
    std::deque<Node> queue;
    queue.push_back({"", "", {}});
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(node.seq.size()) == kmax) continue;
        for (std::size_t i = 0; i < pcp.pairs.size(); ++i) {
            steps.charge();
            Node next{node.v + pcp.pairs[i].first, node.w + pcp.pairs[i].second, node.seq};
            next.seq.push_back(static_cast<int>(i) + 1);
            if (next.v == next.w) return next.seq;
            // Unless one concatenation is a prefix of the other, no extension
            // can ever equalize them.
            const std::size_t common = std::min(next.v.size(), next.w.size());
            if (next.v.compare(0, common, next.w, 0, common) != 0) continue;
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

} // namespace vest::oracles
