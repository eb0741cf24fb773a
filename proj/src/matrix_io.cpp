#include "coinmard/matrix_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace coinmard {

void write_text(std::ostream& out, const SignMatrix& m) {
  const std::size_t n = m.order();
  out << n << '\n';
  std::string line(n, '+');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) line[j] = m.negative(i, j) ? '-' : '+';
    out << line << '\n';
  }
}

SignMatrix read_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing order line");
  std::size_t n = 0;
  const char* end = line.data() + line.size();
  const auto [ptr, ec] = std::from_chars(line.data(), end, n);
  if (ec != std::errc{} || ptr != end || n == 0)
    throw ParseError(1, "order must be a positive decimal integer");

  SignMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lineno = i + 2;
    if (!std::getline(in, line)) throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
    if (line.size() != n)
      throw ParseError(lineno, "row has " + std::to_string(line.size()) + " characters, expected " +
                                   std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (line[j] == '-')
        m.set_negative(i, j, true);
      else if (line[j] != '+')
        throw ParseError(lineno, "unexpected character at column " + std::to_string(j + 1));
    }
  }
  std::size_t lineno = n + 2;
  while (std::getline(in, line)) {
    if (!line.empty()) throw ParseError(lineno, "trailing content after last row");
    ++lineno;
  }
  return m;
}

void write_binary(std::ostream& out, const SignMatrix& m) {
  const u64 n = m.order();
  std::array<char, 8> header{};
  for (std::size_t b = 0; b < 8; ++b) header[b] = static_cast<char>((n >> (8 * b)) & 0xffu);
  out.write(header.data(), header.size());

  std::string row((n + 7) / 8, '\0');
  for (std::size_t i = 0; i < n; ++i) {
    const auto words = m.row(i);
    for (std::size_t byte = 0; byte < row.size(); ++byte)
      row[byte] = static_cast<char>((words[byte / 8] >> (8 * (byte % 8))) & 0xffu);
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

SignMatrix read_binary(std::istream& in) {
  std::array<unsigned char, 8> header{};
  if (!in.read(reinterpret_cast<char*>(header.data()), header.size()))
    throw ParseError(0, "truncated header");
  u64 n = 0;
  for (std::size_t b = 0; b < 8; ++b) n |= u64{header[b]} << (8 * b);
  if (n == 0) throw ParseError(0, "order must be positive");
  // Guard against absurd headers before allocating n*n bits.
  if (n > (u64{1} << 24)) throw ResourceError("binary matrix order " + std::to_string(n) + " too large");

  SignMatrix m(n);
  const std::size_t row_bytes = (n + 7) / 8;
  std::string row(row_bytes, '\0');
  for (std::size_t i = 0; i < n; ++i) {
    if (!in.read(row.data(), static_cast<std::streamsize>(row_bytes)))
      throw ParseError(0, "truncated at row " + std::to_string(i));
    auto words = m.row(i);
    for (std::size_t byte = 0; byte < row_bytes; ++byte)
      words[byte / 8] |= u64{static_cast<unsigned char>(row[byte])} << (8 * (byte % 8));
    if (n % 8 != 0 && (static_cast<unsigned char>(row.back()) >> (n % 8)) != 0)
      throw ParseError(0, "padding bits set in row " + std::to_string(i));
  }
  if (in.peek() != std::char_traits<char>::eof()) throw ParseError(0, "trailing bytes");
  return m;
}

void save_matrix(const std::filesystem::path& path, const SignMatrix& m, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path.string() + " for writing");
  if (format == MatrixFormat::text)
    write_text(out, m);
  else
    write_binary(out, m);
  if (!out) throw DomainError("write failed: " + path.string());
}

SignMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  return format == MatrixFormat::text ? read_text(in) : read_binary(in);
}

}  // namespace coinmard
