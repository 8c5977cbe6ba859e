#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vest/instance.hpp"
#include "vest/problems.hpp"
#include "vest/reductions.hpp"

// File formats. Instances travel as JSON objects
//   {"field": {"kind":"rational"} | {"kind":"prime","p":5},
//    "dim": d, "target": "vector_zero"|"matrix_zero"|"matrix_identity",
//    "s": [[...]]|null, "v": [...]|null, "matrices": [[[...]]],
//    "k": integer|null}
// with scalars as strings ("a/b" or "a" over Q, decimal residues mod p).
// Graphs are edge-list text ("n m" header, then one "u v" line per edge);
// set systems are {"universe": m, "sets": [[...]]}; correspondence instances
// are a JSON list of word pairs. All parse failures raise
// MalformedInputError.

namespace vest {

struct InstanceFile {
    VestInstance instance;
    std::optional<std::int64_t> k;
};

std::string instance_to_json(const VestInstance& inst, std::optional<std::int64_t> k = {});
InstanceFile instance_from_json(const std::string& text);
InstanceFile load_instance(const std::string& path);

Graph graph_from_text(const std::string& text);
Graph load_graph(const std::string& path);

SetSystem set_system_from_json(const std::string& text);
SetSystem load_set_system(const std::string& path);

PcpInstance pcp_from_json(const std::string& text);
PcpInstance load_pcp(const std::string& path);

// A JSON array of integers (numbers or decimal strings), or an object with a
// "numbers" array.
std::vector<mpz_class> integer_set_from_json(const std::string& text);
std::vector<mpz_class> load_integer_set(const std::string& path);

// Number-set reduction outputs: {"kind": ..., "numbers": [...], "k": ...}.
std::string rational_set_to_json(const std::string& kind, const std::vector<mpq_class>& numbers,
                                 std::int64_t k);
std::string integer_set_to_json(const std::string& kind, const std::vector<mpz_class>& numbers,
                                std::int64_t k);

std::string certificate_to_json(const ReductionCertificate& cert);

// Compact descriptor builders used for certificate source fields.
std::string graph_to_json(const Graph& g);
std::string set_system_to_json(const SetSystem& sys);
std::string pcp_to_json(const PcpInstance& pcp);
std::string integer_list_to_json(const std::vector<mpz_class>& values);
std::string matrix_list_to_json(const FieldTag& tag, const std::vector<Matrix>& mats);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace vest
