#include "vest/problems.hpp"

#include <algorithm>

namespace vest {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 1) throw DomainError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw DomainError("multi-edges are not allowed");
    }
}

std::vector<std::vector<int>> Graph::closed_neighborhoods() const {
    std::vector<std::vector<int>> nbh(n);
    for (int u = 0; u < n; ++u) nbh[u].push_back(u);
    for (const auto& [u, v] : edges) {
        nbh[u].push_back(v);
        nbh[v].push_back(u);
    }
    for (auto& list : nbh) std::sort(list.begin(), list.end());
    return nbh;
}

SetSystem::SetSystem(int universe_, std::vector<std::vector<int>> sets_)
    : universe(universe_), sets(std::move(sets_)) {
    if (universe < 1) throw DomainError("universe must be nonempty");
    for (auto& set : sets) {
        if (set.empty()) throw DomainError("sets in the collection must be nonempty");
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (set.front() < 1 || set.back() > universe) {
            throw DomainError("set element outside the universe");
        }
    }
}

PcpInstance::PcpInstance(std::vector<std::pair<std::string, std::string>> pairs_)
    : pairs(std::move(pairs_)) {
    if (pairs.empty()) throw DomainError("a correspondence instance needs at least one pair");
    for (const auto& [v, w] : pairs) {
        for (char c : v + w) {
            if (c != '0' && c != '1') {
                throw AlphabetError(std::string("word symbol '") + c + "' is not 0 or 1");
            }
        }
    }
}

} // namespace vest
