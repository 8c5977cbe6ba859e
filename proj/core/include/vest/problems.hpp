#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vest/errors.hpp"

namespace vest {

// Simple undirected graph on vertices 0..n-1; no loops, no multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, sorted, unique

    Graph(int n, std::vector<std::pair<int, int>> edges);

    // N[u] for every u: the sorted closed neighborhood, u included.
    std::vector<std::vector<int>> closed_neighborhoods() const;
};

// A universe {1..universe} and a collection of nonempty subsets of it.
struct SetSystem {
    int universe = 0;
    std::vector<std::vector<int>> sets; // each sorted, unique, nonempty

    SetSystem(int universe, std::vector<std::vector<int>> sets);
};

// Word pairs over the alphabet {0,1}; empty words are allowed.
struct PcpInstance {
    std::vector<std::pair<std::string, std::string>> pairs;

    explicit PcpInstance(std::vector<std::pair<std::string, std::string>> pairs);
};

} // namespace vest
