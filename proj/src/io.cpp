#include "ctube/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ctube {

namespace {

long long small_int(const mpz_class& v) {
    if (!v.fits_slong_p())
        fail(ErrorKind::InternalInvariantBroken, "matrix entry out of JSON integer range");
    return v.get_si();
}

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

std::string joined(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const Indec& x) { return {{"a", x.a}, {"b", x.b}}; }

nlohmann::json to_json(const TubeObject& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Indec& x : xs) arr.push_back(to_json(x));
    return arr;
}

nlohmann::json to_json(const MaximalRigid& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Indec& x : t.summands) arr.push_back(to_json(x));
    return arr;
}

nlohmann::json to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(small_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const LaurentPoly& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : v.terms())
        terms.push_back({{"exp", e}, {"coef", c.get_str()}});
    return terms;
}

nlohmann::json to_json(const ClusterRecord& r) {
    return {{"object", to_json(r.object)},
            {"terms", to_json(r.variable)},
            {"den", r.den},
            {"g", r.g}};
}

Indec parse_indec(const std::string& s, int p) {
    std::string body = strip(s);
    if (body.size() < 5 || body.front() != '(' || body.back() != ')')
        fail(ErrorKind::UsageError, "expected \"(a,b)\", got \"" + s + "\"");
    body = body.substr(1, body.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos)
        fail(ErrorKind::UsageError, "expected \"(a,b)\", got \"" + s + "\"");
    long long a = 0, b = 0;
    try {
        a = std::stoll(strip(body.substr(0, comma)));
        b = std::stoll(strip(body.substr(comma + 1)));
    } catch (const std::exception&) {
        fail(ErrorKind::UsageError, "non-integer coordinates in \"" + s + "\"");
    }
    return Indec(a, b, p);
}

MaximalRigid parse_maximal_rigid(const std::string& s, int n) {
    if (n < 1) fail(ErrorKind::InvalidRank, "rank parameter must be at least 1");
    std::vector<Indec> summands;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';'))
        if (!strip(part).empty()) summands.push_back(parse_indec(part, n + 1));
    return make_maximal_rigid(n, std::move(summands));
}

std::string records_csv(const std::vector<ClusterRecord>& records) {
    std::string out = "object,den,g\n";
    for (const ClusterRecord& r : records) {
        out += csv_field(to_string(r.object)) + "," + csv_field(joined(r.den)) + "," +
               csv_field(joined(r.g)) + "\n";
    }
    return out;
}

namespace {

std::string node_label(const Seed& s) {
    std::vector<Indec> sorted = s.objects.summands;
    std::sort(sorted.begin(), sorted.end());
    std::string label;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) label += ";";
        label += to_string(sorted[i]);
    }
    return label;
}

}  // namespace

std::string exchange_graph_dot(const PatternResult& pattern) {
    std::string out = "graph exchange {\n";
    for (size_t i = 0; i < pattern.seeds.size(); ++i)
        out += "  s" + std::to_string(i) + " [label=\"" + node_label(pattern.seeds[i]) + "\"];\n";
    for (const PatternEdge& e : pattern.edges)
        out += "  s" + std::to_string(e.from) + " -- s" + std::to_string(e.to) + " [label=\"" +
               std::to_string(e.k) + "\"];\n";
    out += "}\n";
    return out;
}

nlohmann::json exchange_graph_json(const PatternResult& pattern) {
    nlohmann::json nodes = nlohmann::json::array();
    for (size_t i = 0; i < pattern.seeds.size(); ++i)
        nodes.push_back({{"id", i}, {"objects", to_json(pattern.seeds[i].objects)}});
    nlohmann::json edges = nlohmann::json::array();
    for (const PatternEdge& e : pattern.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"k", e.k}});
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace ctube
