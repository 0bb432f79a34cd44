#include "bergetool/hgr_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bergetool/errors.hpp"

namespace berge {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

Hypergraph read_hgr(const std::string& text) {
    Hypergraph h;
    bool have_header = false;
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            throw ParseError(line_no, "CR line ending; HGR uses LF");
        if (line.empty()) {
            if (start > text.size()) break;  // trailing newline
            throw ParseError(line_no, "blank line");
        }
        if (line[0] == '#') continue;
        auto tokens = split_ws(line);
        if (!have_header) {
            if (tokens.size() != 4 || tokens[0] != "hgr")
                throw ParseError(line_no, "expected header 'hgr <r> <n> <simple|multi>'");
            h.r = parse_int(tokens[1], line_no, "uniformity");
            h.n = parse_int(tokens[2], line_no, "vertex count");
            if (tokens[3] == "simple")
                h.simple = true;
            else if (tokens[3] == "multi")
                h.simple = false;
            else
                throw ParseError(line_no, "mode must be 'simple' or 'multi'");
            if (h.r < 2) throw ParseError(line_no, "uniformity must be at least 2");
            if (h.n < 0) throw ParseError(line_no, "vertex count must be nonnegative");
            have_header = true;
            continue;
        }
        if (static_cast<int>(tokens.size()) != h.r)
            throw ParseError(line_no, "expected " + std::to_string(h.r) +
                                          " labels, got " + std::to_string(tokens.size()));
        Edge e;
        for (const auto& tok : tokens) e.push_back(parse_int(tok, line_no, "vertex label"));
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 1 || e[j] > h.n)
                throw ParseError(line_no, "label " + std::to_string(e[j]) +
                                              " out of range 1.." + std::to_string(h.n));
            if (j > 0 && e[j] <= e[j - 1])
                throw ParseError(line_no, "labels not strictly ascending");
        }
        if (h.simple) {
            for (const Edge& prev : h.edges)
                if (prev == e)
                    throw ParseError(line_no, "duplicate edge under simple flag");
        }
        h.edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    return h;
}

std::string write_hgr(const Hypergraph& h) {
    std::vector<Edge> sorted = h.edges;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "hgr " << h.r << ' ' << h.n << ' ' << (h.simple ? "simple" : "multi")
        << '\n';
    for (const Edge& e : sorted) {
        for (size_t j = 0; j < e.size(); ++j) {
            if (j) out << ' ';
            out << e[j];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph read_hgr_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_hgr(buf.str());
}

void write_hgr_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path);
    out << write_hgr(h);
}

}  // namespace berge
