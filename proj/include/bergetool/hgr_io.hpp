#pragma once

#include <string>

#include "bergetool/hypergraph.hpp"

namespace berge {

/// HGR text format.
///   # comment lines may appear anywhere
///   hgr <r> <n> <simple|multi>
///   one edge per line: r strictly ascending space-separated labels
/// Repeated identical lines encode multiplicity (multi mode only).
/// Throws ParseError (with 1-based line number) on malformed or invalid input.
Hypergraph read_hgr(const std::string& text);

/// Canonical emission: no comments, edges sorted lexicographically, single
/// spaces, LF newlines, no trailing whitespace. read_hgr(write_hgr(h)) == h
/// whenever h's edge list is already sorted.
std::string write_hgr(const Hypergraph& h);

Hypergraph read_hgr_file(const std::string& path);
void write_hgr_file(const Hypergraph& h, const std::string& path);

}  // namespace berge
