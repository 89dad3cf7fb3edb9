#pragma once

#include "comass/gadget.hpp"

#include <iosfwd>
#include <string>

namespace comass {

/// Complex file: `dim <m>`, an optional `scale <p>/<q>` (written only when
/// the edge scale is not 1), then one `s v0 v1 ... vk` line per maximal
/// simplex.  Chain file: `deg <k>`, then `c v0 ... vk <coeff>` lines.
/// Map file: `<domain vertex> -> <codomain vertex>` lines.  Lattice file:
/// `N <N> vecs <M+1>`, then M+1 rows of N integers.  Blank lines and lines
/// starting with `#` are ignored; anything else malformed raises
/// MalformedInput with its line number.

SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& x);

Chain read_chain(std::istream& in);
void write_chain(std::ostream& out, const Chain& z);

std::map<int, int> read_vertex_map(std::istream& in);
void write_vertex_map(std::ostream& out, const std::map<int, int>& f);

LatticeBasis read_lattice(std::istream& in);
void write_lattice(std::ostream& out, const LatticeBasis& basis);

SimplicialComplex read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const SimplicialComplex& x);
Chain read_chain_file(const std::string& path);
void write_chain_file(const std::string& path, const Chain& z);
std::map<int, int> read_vertex_map_file(const std::string& path);
void write_vertex_map_file(const std::string& path,
                           const std::map<int, int>& f);
LatticeBasis read_lattice_file(const std::string& path);

}  // namespace comass
