#include "bergetool/certificates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bergetool/errors.hpp"

namespace berge {

namespace {

void check_indices(const Hypergraph& h, const std::vector<EdgeIndex>& indices) {
    for (EdgeIndex i : indices)
        if (i < 0 || i >= h.edge_count())
            throw IndexOutOfRange("edge index " + std::to_string(i + 1) +
                                  " exceeds e(H) = " + std::to_string(h.edge_count()));
}

bool all_distinct_vertices(const std::vector<Vertex>& vs) {
    std::set<Vertex> seen(vs.begin(), vs.end());
    return seen.size() == vs.size();
}

bool all_distinct_indices(const std::vector<EdgeIndex>& is) {
    std::set<EdgeIndex> seen(is.begin(), is.end());
    return seen.size() == is.size();
}

bool edge_has(const Hypergraph& h, EdgeIndex i, Vertex v) {
    const Edge& e = h.edge(i);
    return std::binary_search(e.begin(), e.end(), v);
}

bool label_ok(const Hypergraph& h, Vertex v) { return v >= 1 && v <= h.n; }

}  // namespace

bool verify_certificate(const Hypergraph& h, const BergePath& p) {
    check_indices(h, p.edge_indices);
    if (p.vertices.size() != p.edge_indices.size() + 1) return false;
    if (p.edge_indices.empty()) return false;
    if (!all_distinct_vertices(p.vertices) || !all_distinct_indices(p.edge_indices))
        return false;
    for (Vertex v : p.vertices)
        if (!label_ok(h, v)) return false;
    for (size_t j = 0; j < p.edge_indices.size(); ++j) {
        EdgeIndex e = p.edge_indices[j];
        if (!edge_has(h, e, p.vertices[j]) || !edge_has(h, e, p.vertices[j + 1]))
            return false;
    }
    return true;
}

bool verify_certificate(const Hypergraph& h, const BergeCycle& c) {
    check_indices(h, c.edge_indices);
    size_t t = c.edge_indices.size();
    if (c.vertices.size() != t || t < 2) return false;
    if (!all_distinct_vertices(c.vertices) || !all_distinct_indices(c.edge_indices))
        return false;
    for (Vertex v : c.vertices)
        if (!label_ok(h, v)) return false;
    for (size_t j = 0; j < t; ++j) {
        // edge i_{j+1} joins v_j and v_{j+1 mod t}
        EdgeIndex e = c.edge_indices[j];
        if (!edge_has(h, e, c.vertices[j]) ||
            !edge_has(h, e, c.vertices[(j + 1) % t]))
            return false;
    }
    return true;
}

bool verify_certificate(const Hypergraph& h, const SemiPath& s) {
    check_indices(h, s.edge_indices);
    size_t t = s.edge_indices.size();
    if (s.vertices.size() != t || t == 0) return false;
    if (!all_distinct_vertices(s.vertices) || !all_distinct_indices(s.edge_indices))
        return false;
    for (Vertex v : s.vertices)
        if (!label_ok(h, v)) return false;
    if (!edge_has(h, s.edge_indices[0], s.vertices[0])) return false;
    for (size_t j = 1; j < t; ++j) {
        EdgeIndex e = s.edge_indices[j];
        if (!edge_has(h, e, s.vertices[j - 1]) || !edge_has(h, e, s.vertices[j]))
            return false;
    }
    return true;
}

std::string to_line(const BergePath& p) {
    std::ostringstream out;
    out << "path " << p.length() << ":";
    for (size_t j = 0; j < p.vertices.size(); ++j) {
        out << ' ' << p.vertices[j];
        if (j < p.edge_indices.size()) out << " (" << p.edge_indices[j] + 1 << ')';
    }
    return out.str();
}

std::string to_line(const BergeCycle& c) {
    std::ostringstream out;
    out << "cycle " << c.length() << ":";
    for (size_t j = 0; j < c.vertices.size(); ++j)
        out << ' ' << c.vertices[j] << " (" << c.edge_indices[j] + 1 << ')';
    return out.str();
}

std::string to_line(const SemiPath& s) {
    std::ostringstream out;
    out << "semipath " << s.length() << ":";
    for (size_t j = 0; j < s.edge_indices.size(); ++j)
        out << " (" << s.edge_indices[j] + 1 << ") " << s.vertices[j];
    return out.str();
}

BergePath reversed(const BergePath& p) {
    BergePath out;
    out.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
    out.edge_indices.assign(p.edge_indices.rbegin(), p.edge_indices.rend());
    return out;
}

}  // namespace berge
