#pragma once

#include <filesystem>
#include <iosfwd>

#include "qcpl/triangulation.hpp"

namespace qcpl {

// OFF dialect: line 1 `OFF`; line 2 `<nv> <nc> 0`; nv vertex lines of m
// decimals; nc cell lines `<k> i0 ... i_{k-1}` with constant k = d+1.
// `#` starts a comment line; an optional `# d=<d>` comment pins the intrinsic
// dimension. Indices are 0-based. Vertices round-trip within print precision.
Triangulation load_off(std::istream& in);
Triangulation load_off(const std::filesystem::path& path);

void save_off(std::ostream& out, const Triangulation& t);
void save_off(const std::filesystem::path& path, const Triangulation& t);

}  // namespace qcpl
