#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pgq/bitmat.hpp"

// alist interchange format (the one most LDPC tools read):
//   line 1: N M           (columns, rows)
//   line 2: max_col_deg max_row_deg
//   line 3: the N column degrees
//   line 4: the M row degrees
//   then N lines of 1-based row indices per column, zero-padded to max_col_deg
//   then M lines of 1-based column indices per row, zero-padded to max_row_deg

namespace pgq {

std::string to_alist(const BitMatrix& m);

// Throws std::runtime_error on malformed input.
BitMatrix bitmatrix_from_alist(std::istream& in);

void write_alist(const std::filesystem::path& path, const BitMatrix& m);
BitMatrix read_alist(const std::filesystem::path& path);

}  // namespace pgq
