#pragma once

#include <filesystem>
#include <string>

#include "fourier.hpp"
#include "function.hpp"

namespace weakconv {

// Accepts, in order of preference:
//   - shorthand: cyclic(32), torus_grid(64,1), dihedral(4), symmetric(3),
//     product(cyclic(2),cyclic(3)) with nesting
//   - inline JSON: {"kind":"cyclic","n":32}, ... {"kind":"table","path":...}
//   - a path to a JSON spec file or to a raw Cayley-table file
GroupPtr load_group_spec(const std::string& spec);

// Cayley-table file: first token n, then n*n whitespace-separated indices
// (row-major, table[a][b] = a*b).  Errors carry the 1-based line number.
GroupPtr load_cayley_table(const std::filesystem::path& path);

// Function files: JSON ({"format":"weakconv-function","length":n,
// "values":[[re,im],...]}, bare [[re,im],...] also accepted) or CSV with
// lines index,re,im.  The format is sniffed from the content.
GroupFunction read_function(const GroupPtr& g,
                            const std::filesystem::path& path);
void write_function(const GroupFunction& f, const std::filesystem::path& path,
                    bool as_csv);

// {"format":"weakconv-irreps","irreps":[{"dim":d,"matrices":[per element:
// d*d row-major [re,im] pairs]}]}; validated before returning.
IrrepTable read_irreps(const GroupPtr& g, const std::filesystem::path& path);

// {"format":"weakconv-symbol","kind":"scalar","values":[[re,im] x n]} or
// {"kind":"matrix","blocks":[{"dim":d,"values":[d*d pairs]},...]}.
MultiplierSymbol read_symbol(const GroupPtr& g,
                             const std::filesystem::path& path);

}  // namespace weakconv
