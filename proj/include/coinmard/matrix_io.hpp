#pragma once

#include <filesystem>
#include <iosfwd>

#include "coinmard/hadamard.hpp"

namespace coinmard {

// Text ".had": decimal order on the first line, then n lines of n '+'/'-'
// characters. Ragged or foreign lines throw ParseError with the line number.
void write_text(std::ostream& out, const SignMatrix& m);
SignMatrix read_text(std::istream& in);

// Packed binary: 8-byte little-endian n, then n rows of ceil(n/8) bytes,
// LSB-first, set bit = -1.
void write_binary(std::ostream& out, const SignMatrix& m);
SignMatrix read_binary(std::istream& in);

enum class MatrixFormat { text, binary };

void save_matrix(const std::filesystem::path& path, const SignMatrix& m, MatrixFormat format);
SignMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format);

}  // namespace coinmard
