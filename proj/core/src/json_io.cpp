#include "vest/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vest {
namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("invalid JSON: ") + e.what());
    }
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw MalformedInputError("scalar entries must be strings or integers");
}

FieldTag field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw MalformedInputError("field must be an object with a 'kind'");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldTag::rational();
    if (kind == "prime") {
        if (!j.contains("p")) throw MalformedInputError("prime field needs 'p'");
        try {
            return FieldTag::prime(j.at("p").get<std::uint64_t>());
        } catch (const DomainError& e) {
            throw MalformedInputError(e.what());
        }
    }
    throw MalformedInputError("unknown field kind '" + kind + "'");
}

json field_to_json(const FieldTag& tag) {
    json j;
    if (tag.is_rational()) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = tag.modulus();
    }
    return j;
}

Matrix matrix_from_json(const FieldTag& tag, const json& j) {
    if (!j.is_array() || j.empty()) throw MalformedInputError("matrix must be a nonempty array");
    const int rows = static_cast<int>(j.size());
    if (!j.at(0).is_array()) throw MalformedInputError("matrix rows must be arrays");
    const int cols = static_cast<int>(j.at(0).size());
    Matrix m(tag, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw MalformedInputError("ragged matrix rows");
        }
        for (int c = 0; c < cols; ++c) m.set(i, c, parse_scalar(tag, scalar_text(row.at(c))));
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Vector vector_from_json(const FieldTag& tag, const json& j) {
    if (!j.is_array()) throw MalformedInputError("vector must be an array");
    std::vector<Scalar> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(parse_scalar(tag, scalar_text(e)));
    return Vector(std::move(entries));
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(v.at(i).str());
    return out;
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw MalformedInputError("not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw MalformedInputError("integers must be numbers or decimal strings");
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace

std::string instance_to_json(const VestInstance& inst, std::optional<std::int64_t> k) {
    json j;
    j["field"] = field_to_json(inst.tag);
    j["dim"] = inst.dim;
    j["target"] = target_name(inst.target);
    j["s"] = inst.s ? matrix_to_json(*inst.s) : json(nullptr);
    j["v"] = inst.v ? vector_to_json(*inst.v) : json(nullptr);
    json mats = json::array();
    for (const auto& t : inst.transforms) mats.push_back(matrix_to_json(t));
    j["matrices"] = std::move(mats);
    j["k"] = k ? json(*k) : json(nullptr);
    return dump(j);
}

InstanceFile instance_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        const FieldTag tag = field_from_json(j.at("field"));
        const int dim = j.at("dim").get<int>();
        const TargetVariant target = target_from_name(j.at("target").get<std::string>());
        std::optional<Matrix> s;
        if (j.contains("s") && !j.at("s").is_null()) s = matrix_from_json(tag, j.at("s"));
        std::optional<Vector> v;
        if (j.contains("v") && !j.at("v").is_null()) v = vector_from_json(tag, j.at("v"));
        std::vector<Matrix> transforms;
        for (const auto& m : j.at("matrices")) transforms.push_back(matrix_from_json(tag, m));
        std::optional<std::int64_t> k;
        if (j.contains("k") && !j.at("k").is_null()) k = j.at("k").get<std::int64_t>();
        return InstanceFile{
            VestInstance(tag, dim, std::move(transforms), std::move(s), std::move(v), target), k};
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("bad instance document: ") + e.what());
    } catch (const Error& e) {
        throw MalformedInputError(std::string("bad instance document: ") + e.what());
    }
}

InstanceFile load_instance(const std::string& path) {
    return instance_from_json(read_file(path));
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw MalformedInputError("graph header must be 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw MalformedInputError("missing edge line");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const DomainError& e) {
        throw MalformedInputError(e.what());
    }
}

Graph load_graph(const std::string& path) {
    return graph_from_text(read_file(path));
}

SetSystem set_system_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        const int universe = j.at("universe").get<int>();
        std::vector<std::vector<int>> sets;
        for (const auto& s : j.at("sets")) sets.push_back(s.get<std::vector<int>>());
        return SetSystem(universe, std::move(sets));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("bad set system: ") + e.what());
    } catch (const DomainError& e) {
        throw MalformedInputError(e.what());
    }
}

SetSystem load_set_system(const std::string& path) {
    return set_system_from_json(read_file(path));
}

PcpInstance pcp_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        std::vector<std::pair<std::string, std::string>> pairs;
        const json& list = j.is_object() && j.contains("pairs") ? j.at("pairs") : j;
        for (const auto& p : list) {
            if (!p.is_array() || p.size() != 2) {
                throw MalformedInputError("each pair must be a [v, w] array");
            }
            pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        }
        return PcpInstance(std::move(pairs));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("bad word-pair list: ") + e.what());
    } catch (const Error& e) {
        throw MalformedInputError(e.what());
    }
}

PcpInstance load_pcp(const std::string& path) {
    return pcp_from_json(read_file(path));
}

std::vector<mpz_class> integer_set_from_json(const std::string& text) {
    const json j = parse(text);
    const json& list = j.is_object() && j.contains("numbers") ? j.at("numbers") : j;
    if (!list.is_array()) throw MalformedInputError("expected an array of integers");
    std::vector<mpz_class> out;
    out.reserve(list.size());
    for (const auto& e : list) out.push_back(integer_from_json(e));
    return out;
}

std::vector<mpz_class> load_integer_set(const std::string& path) {
    return integer_set_from_json(read_file(path));
}

namespace {

std::string mpq_text(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace

std::string rational_set_to_json(const std::string& kind, const std::vector<mpq_class>& numbers,
                                 std::int64_t k) {
    json j;
    j["kind"] = kind;
    json list = json::array();
    for (const auto& q : numbers) list.push_back(mpq_text(q));
    j["numbers"] = std::move(list);
    j["k"] = k;
    return dump(j);
}

std::string integer_set_to_json(const std::string& kind, const std::vector<mpz_class>& numbers,
                                std::int64_t k) {
    json j;
    j["kind"] = kind;
    json list = json::array();
    for (const auto& z : numbers) list.push_back(z.get_str());
    j["numbers"] = std::move(list);
    j["k"] = k;
    return dump(j);
}

std::string certificate_to_json(const ReductionCertificate& cert) {
    json j;
    j["reduction"] = cert.reduction;
    j["source"] = parse(cert.source_json);
    j["produced"] = parse(cert.produced_json);
    j["parameter_map"] = {{"k_source", cert.k_source}, {"k_target", cert.k_target}};
    j["equivalence"] = cert.equivalence;
    return dump(j);
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["kind"] = "graph";
    j["n"] = g.n;
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return dump(j);
}

std::string set_system_to_json(const SetSystem& sys) {
    json j;
    j["kind"] = "set_system";
    j["universe"] = sys.universe;
    j["sets"] = sys.sets;
    return dump(j);
}

std::string pcp_to_json(const PcpInstance& pcp) {
    json j;
    j["kind"] = "word_pairs";
    json pairs = json::array();
    for (const auto& [v, w] : pcp.pairs) pairs.push_back(json::array({v, w}));
    j["pairs"] = std::move(pairs);
    return dump(j);
}

std::string integer_list_to_json(const std::vector<mpz_class>& values) {
    json j;
    j["kind"] = "integer_set";
    json list = json::array();
    for (const auto& z : values) list.push_back(z.get_str());
    j["numbers"] = std::move(list);
    return dump(j);
}

std::string matrix_list_to_json(const FieldTag& tag, const std::vector<Matrix>& mats) {
    json j;
    j["kind"] = "matrix_list";
    j["field"] = field_to_json(tag);
    json list = json::array();
    for (const auto& m : mats) list.push_back(matrix_to_json(m));
    j["matrices"] = std::move(list);
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInputError("cannot write '" + path + "'");
    out << text;
}

} // namespace vest
