#include "lgpmh/graph6.hpp"

#include "lgpmh/error.hpp"

namespace lgpmh {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw FormatError(pos, "truncated graph6 record");
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw FormatError(pos, "byte " + std::to_string(c) + " outside printable range 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::string_view s = text;

  std::size_t pos = base;
  long long n = 0;
  const int first = sextet(s, pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else if (sextet(s, pos + 1) < 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(s, pos + i);
    pos += 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(s, pos + i);
    pos += 8;
  }
  if (n > 100000) throw FormatError(base, "order " + std::to_string(n) + " too large");

  const long long bits = n * (n - 1) / 2;
  const auto bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() < pos + bytes) throw FormatError(s.size(), "truncated graph6 bit vector");
  if (s.size() > pos + bytes) throw FormatError(pos + bytes, "trailing bytes after graph6 record");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const auto at = pos + static_cast<std::size_t>(k / 6);
      if ((sextet(s, at) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const auto at = pos + bytes - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if (sextet(s, at) & ((1 << pad) - 1)) throw FormatError(at, "nonzero padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + kBias));
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + kBias));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

}  // namespace lgpmh
