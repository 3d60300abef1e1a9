#include "core/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cff {

namespace {

struct Token {
    std::string_view text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_int(const Token& tok, int line_no, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw ParseError(std::string("expected integer for ") + what, line_no, tok.column);
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    bool have_header = false;
    int n = 0, m = 0;
    bool weighted = false;
    Graph graph;
    std::vector<int> f_values;
    int edges_seen = 0;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].text == "c") continue;

        if (toks[0].text == "p") {
            if (have_header) throw ParseError("duplicate header line", line_no, toks[0].column);
            if (toks.size() != 5)
                throw ParseError("header must be 'p ffactor <n> <m> <weighted>'", line_no,
                                 toks[0].column);
            if (toks[1].text != "ffactor")
                throw ParseError("unknown problem type", line_no, toks[1].column);
            long long nn = parse_int(toks[2], line_no, "vertex count");
            long long mm = parse_int(toks[3], line_no, "edge count");
            long long ww = parse_int(toks[4], line_no, "weighted flag");
            if (nn < 0 || nn > 1000000) throw ParseError("bad vertex count", line_no, toks[2].column);
            if (mm < 0) throw ParseError("bad edge count", line_no, toks[3].column);
            if (ww != 0 && ww != 1) throw ParseError("weighted flag must be 0 or 1", line_no,
                                                     toks[4].column);
            n = static_cast<int>(nn);
            m = static_cast<int>(mm);
            weighted = ww == 1;
            graph = Graph(n, weighted);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("header line must precede data lines", line_no, toks[0].column);

        if (toks[0].text == "f") {
            for (size_t i = 1; i < toks.size(); ++i) {
                long long v = parse_int(toks[i], line_no, "degree value");
                if (v < 0) throw ParseError("negative degree value", line_no, toks[i].column);
                if (static_cast<int>(f_values.size()) >= n)
                    throw ParseError("more degree values than vertices", line_no, toks[i].column);
                f_values.push_back(static_cast<int>(v));
            }
            continue;
        }
        if (toks[0].text == "e") {
            size_t expected = weighted ? 4 : 3;
            if (toks.size() < 3)
                throw ParseError("edge line needs two endpoints", line_no, toks[0].column);
            if (weighted && toks.size() < 4)
                throw ParseError("missing weight", line_no,
                                 toks.back().column + static_cast<int>(toks.back().text.size()));
            if (toks.size() > expected)
                throw ParseError(weighted ? "trailing tokens on edge line" : "unexpected weight",
                                 line_no, toks[expected].column);
            long long u = parse_int(toks[1], line_no, "endpoint");
            long long v = parse_int(toks[2], line_no, "endpoint");
            if (u < 0 || u >= n) throw ParseError("endpoint out of range", line_no, toks[1].column);
            if (v < 0 || v >= n) throw ParseError("endpoint out of range", line_no, toks[2].column);
            if (u == v) throw ParseError("self-loop", line_no, toks[1].column);
            if (graph.has_edge(static_cast<int>(u), static_cast<int>(v)))
                throw ParseError("duplicate edge", line_no, toks[1].column);
            if (edges_seen >= m)
                throw ParseError("more edge lines than declared", line_no, toks[0].column);
            if (weighted) {
                long long w = parse_int(toks[3], line_no, "weight");
                if (w < 0) throw ParseError("negative weight", line_no, toks[3].column);
                graph.add_edge(static_cast<int>(u), static_cast<int>(v), w);
            } else {
                graph.add_edge(static_cast<int>(u), static_cast<int>(v));
            }
            ++edges_seen;
            continue;
        }
        throw ParseError("unknown line type", line_no, toks[0].column);
    }

    if (!have_header) throw ParseError("missing header line", line_no, 1);
    if (static_cast<int>(f_values.size()) != n)
        throw ParseError("degree line(s) must carry exactly one value per vertex", line_no, 1);
    if (edges_seen != m) throw ParseError("fewer edge lines than declared", line_no, 1);

    return Instance{std::move(graph), DegreeSpec(std::move(f_values))};
}

std::string serialize_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    std::ostringstream out;
    out << "p ffactor " << g.vertex_count() << ' ' << g.edge_count() << ' '
        << (g.weighted() ? 1 : 0) << '\n';
    if (g.vertex_count() > 0) {
        out << 'f';
        for (Vertex v = 0; v < g.vertex_count(); ++v) out << ' ' << inst.f(v);
        out << '\n';
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "e " << g.edge(e).u << ' ' << g.edge(e).v;
        if (g.weighted()) out << ' ' << g.weight(e);
        out << '\n';
    }
    return out.str();
}

bool parity_warning(const Instance& inst) {
    return inst.f.sum() % 2 != 0;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << serialize_instance(inst);
}

}  // namespace cff
