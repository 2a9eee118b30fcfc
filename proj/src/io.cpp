#include "lmd/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "lmd/errors.hpp"

namespace lmd::io {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == '\n' || s.front() == '\r' || s.front() == ' ')) s.remove_prefix(1);
  return s;
}

std::vector<std::uint64_t> parse_integers(std::string_view text, const char* what) {
  std::vector<std::uint64_t> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && !std::isspace(static_cast<unsigned char>(*next))))
      throw ParseError(std::string(what) + ": expected an integer near '" +
                       std::string(p, std::min<std::size_t>(8, end - p)) + "'");
    out.push_back(value);
    p = next;
  }
  return out;
}

int g6_value(char c, const char* what) {
  if (c < 63 || c > 126) throw ParseError(std::string(what) + ": byte out of graph6 range");
  return c - 63;
}

}  // namespace

const char* to_string(Format f) {
  switch (f) {
    case Format::Graph6: return "graph6";
    case Format::EdgeList: return "edgelist";
    case Format::BipEdgeList: return "bip-edgelist";
  }
  return "?";
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return Format::Graph6;
  if (name == "edgelist" || name == "el") return Format::EdgeList;
  if (name == "bip-edgelist" || name == "bel") return Format::BipEdgeList;
  return std::nullopt;
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("encode_graph6: order above 258047 not supported");
  }
  int bit = 5;
  unsigned char cur = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= static_cast<unsigned char>(1u << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph decode_graph6(std::string_view raw) {
  std::string_view text = strip(raw);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] == 126) {
    if (text.size() >= 2 && text[1] == 126)
      throw ParseError("graph6: orders above 258047 not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated order header");
    n = static_cast<std::size_t>(g6_value(text[1], "graph6")) << 12;
    n |= static_cast<std::size_t>(g6_value(text[2], "graph6")) << 6;
    n |= static_cast<std::size_t>(g6_value(text[3], "graph6"));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(g6_value(text[0], "graph6"));
    if (n > 62) throw ParseError("graph6: malformed order header");
    pos = 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw ParseError("graph6: body has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(expected));

  Graph g(n);
  std::size_t index = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const int value = g6_value(text[pos + index / 6], "graph6");
      if ((value >> (5 - index % 6)) & 1) g.add_edge(i, j);
      ++index;
    }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  const auto values = parse_integers(text, "edgelist");
  if (values.size() < 2) throw ParseError("edgelist: missing 'n m' header");
  const std::size_t n = values[0];
  const std::size_t m = values[1];
  if (values.size() != 2 + 2 * m)
    throw ParseError("edgelist: expected " + std::to_string(2 * m) + " endpoint values, got " +
                     std::to_string(values.size() - 2));
  Graph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t u = values[2 + 2 * e];
    const std::size_t v = values[3 + 2 * e];
    if (u >= n || v >= n) throw ParseError("edgelist: endpoint out of range");
    if (u == v) throw ParseError("edgelist: self-loop not allowed");
    g.add_edge(u, v);
  }
  return g;
}

std::string encode_bip_edge_list(const BipartiteGraph& b) {
  std::ostringstream out;
  const auto edges = b.edges();
  out << b.side1() << ' ' << b.side2() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

BipartiteGraph decode_bip_edge_list(std::string_view text) {
  const auto values = parse_integers(text, "bip-edgelist");
  if (values.size() < 3) throw ParseError("bip-edgelist: missing 'n1 n2 m' header");
  const std::size_t n1 = values[0];
  const std::size_t n2 = values[1];
  const std::size_t m = values[2];
  if (values.size() != 3 + 2 * m)
    throw ParseError("bip-edgelist: expected " + std::to_string(2 * m) +
                     " endpoint values, got " + std::to_string(values.size() - 3));
  BipartiteGraph b(n1, n2);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t u = values[3 + 2 * e];
    const std::size_t v = values[4 + 2 * e];
    if (u >= n1 || v >= n2) throw ParseError("bip-edgelist: endpoint out of range");
    b.add_edge(u, v);
  }
  return b;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GraphInput parse_graph(const std::string& bytes, std::optional<Format> format) {
  Format f;
  if (format) {
    f = *format;
  } else {
    // Sniff from the first line; digits never occur in graph6 bytes.
    std::string_view view(bytes);
    const std::size_t eol = view.find('\n');
    std::string_view first = strip(view.substr(0, eol));
    std::size_t ints = 0;
    bool numeric = !first.empty();
    {
      std::istringstream ss{std::string(first)};
      std::string tok;
      while (ss >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos) {
          numeric = false;
          break;
        }
        ++ints;
      }
    }
    if (numeric && ints == 2)
      f = Format::EdgeList;
    else if (numeric && ints == 3)
      f = Format::BipEdgeList;
    else
      f = Format::Graph6;
  }

  GraphInput input;
  input.format = f;
  input.digest = fnv1a_hex(bytes);
  switch (f) {
    case Format::Graph6: input.value = decode_graph6(bytes); break;
    case Format::EdgeList: input.value = decode_edge_list(bytes); break;
    case Format::BipEdgeList: input.value = decode_bip_edge_list(bytes); break;
  }
  return input;
}

GraphInput read_graph_file(const std::string& path, std::optional<Format> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

}  // namespace lmd::io
