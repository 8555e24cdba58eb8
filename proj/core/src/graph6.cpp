#include "ks/graph6.hpp"

#include <string>

#include "ks/error.hpp"

namespace ks {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw InputError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                     " outside 63..126");
  }
  return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw InputError("graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = sextet(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw InputError("graph6: truncated size header");
    n = (long{sextet(text, 1)} << 12) | (long{sextet(text, 2)} << 6) | sextet(text, 3);
    pos = 4;
  } else {
    if (text.size() < 8) throw InputError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
  }
  if (n > Graph::kMaxVertices) {
    throw InputError("graph6: " + std::to_string(n) + " vertices exceeds the limit of " +
                     std::to_string(Graph::kMaxVertices));
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InputError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) +
                     ", found " + std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int chunk = sextet(text, pos + k / 6);
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw InputError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + kBias);
    out += static_cast<char>(((n >> 6) & 63) + kBias);
    out += static_cast<char>((n & 63) + kBias);
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + kBias);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((chunk << (6 - filled)) + kBias);
  return out;
}

std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = line;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    if (body.empty()) continue;
    Graph6Record rec;
    rec.line = lineno;
    try {
      rec.graph = from_graph6(body);
    } catch (const InputError& e) {
      rec.error = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace ks
