#include "ghct/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "ghct/errors.hpp"

namespace ghct {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line, const char* what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'",
                         line);
    }
    if (pos != tok.size())
        throw ParseError(std::string("trailing characters in ") + what + " '" + tok + "'",
                         line);
    return value;
}

double parse_weight(const std::string& tok, int line) {
    size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected numeric weight, got '" + tok + "'", line);
    }
    if (pos != tok.size())
        throw ParseError("trailing characters in weight '" + tok + "'", line);
    if (!(value > 0.0)) throw ParseError("weight must be positive", line);
    return value;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    int m = -1;
    bool dimacs = false;
    ParsedGraph out;
    std::vector<Edge> edges;
    // DIMACS arcs aggregated per unordered vertex pair
    std::map<std::pair<int, int>, double> arc_weight;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            if (tok.size() != 4 || (tok[1] != "ghct" && tok[1] != "max"))
                throw ParseError("problem line must be 'p ghct <n> <m>' or 'p max <n> <m>'",
                                 lineno);
            dimacs = tok[1] == "max";
            n = parse_int(tok[2], lineno, "vertex count");
            m = parse_int(tok[3], lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError("negative size in problem line", lineno);
            continue;
        }
        if (n < 0) throw ParseError("data line before problem line", lineno);
        if (tok[0] == "n") {
            if (!dimacs) throw ParseError("node designator only valid in DIMACS input", lineno);
            if (tok.size() != 3 || (tok[2] != "s" && tok[2] != "t"))
                throw ParseError("node line must be 'n <id> s' or 'n <id> t'", lineno);
            int id = parse_int(tok[1], lineno, "node id");
            if (id < 1 || id > n) throw ParseError("node id out of range", lineno);
            if (tok[2] == "s")
                out.source = id - 1;
            else
                out.sink = id - 1;
            continue;
        }
        const char* edge_tag = dimacs ? "a" : "e";
        if (tok[0] == edge_tag) {
            if (tok.size() != 4)
                throw ParseError(std::string("edge line must be '") + edge_tag +
                                     " <u> <v> <w>'",
                                 lineno);
            int u = parse_int(tok[1], lineno, "vertex id");
            int v = parse_int(tok[2], lineno, "vertex id");
            double w = parse_weight(tok[3], lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex id out of range [1, n]", lineno);
            if (u == v) throw ParseError("self-loop rejected", lineno);
            if (dimacs) {
                arc_weight[std::minmax(u - 1, v - 1)] += w;
            } else {
                edges.push_back({u - 1, v - 1, w});
            }
            continue;
        }
        throw ParseError("unrecognized line type '" + tok[0] + "'", lineno);
    }
    if (n < 0) throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
    if (dimacs)
        for (const auto& [pair, w] : arc_weight) edges.push_back({pair.first, pair.second, w});
    else if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge count " + std::to_string(edges.size()) +
                             " does not match header " + std::to_string(m),
                         lineno == 0 ? 1 : lineno);
    out.graph = Graph(n, std::move(edges));
    return out;
}

ParsedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p ghct " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    char buf[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << buf << '\n';
    }
    return out.str();
}

std::vector<double> parse_labels_text(const std::string& text, int edge_count) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<double> labels(static_cast<size_t>(edge_count), 0.0);
    std::vector<char> seen(static_cast<size_t>(edge_count), 0);
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] != "k" || tok.size() != 3)
            throw ParseError("label line must be 'k <edge-index> <value>'", lineno);
        int idx = parse_int(tok[1], lineno, "edge index");
        if (idx < 0 || idx >= edge_count) throw ParseError("edge index out of range", lineno);
        if (seen[idx]) throw ParseError("duplicate label for edge " + std::to_string(idx), lineno);
        seen[idx] = 1;
        labels[idx] = parse_weight(tok[2], lineno);
    }
    for (int i = 0; i < edge_count; ++i)
        if (!seen[i])
            throw ParseError("missing label for edge " + std::to_string(i),
                             lineno == 0 ? 1 : lineno);
    return labels;
}

std::vector<double> load_labels(const std::string& path, int edge_count) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_labels_text(buf.str(), edge_count);
}

std::string serialize_labels(const std::vector<double>& labels) {
    std::ostringstream out;
    char buf[64];
    for (size_t i = 0; i < labels.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", labels[i]);
        out << "k " << i << ' ' << buf << '\n';
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename to '" + path + "' failed");
}

std::string content_digest(const std::string& content) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

}  // namespace ghct
