#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lmd/graph.hpp"

namespace lmd::io {

enum class Format { Graph6, EdgeList, BipEdgeList };
const char* to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

/// Standard graph6: one header byte 63+n for n <= 62 (the 4-byte '~'
/// extension above that), then the upper-triangle bits x(0,1), x(0,2),
/// x(1,2), x(0,3), ... packed 6 per byte, MSB first, each byte offset by 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);  // throws ParseError

/// First line "n m", then m lines "u v", 0-based.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

/// First line "n1 n2 m"; v indexes side 2 from 0.
std::string encode_bip_edge_list(const BipartiteGraph& b);
BipartiteGraph decode_bip_edge_list(std::string_view text);

struct GraphInput {
  Format format = Format::EdgeList;
  std::variant<Graph, BipartiteGraph> value;
  std::string digest;  // FNV-1a 64 of the raw input bytes, hex
};

/// When `format` is empty the input is sniffed: a first line of two
/// integers is an edge list, of three a bipartite edge list, anything else
/// graph6.
GraphInput parse_graph(const std::string& bytes, std::optional<Format> format);
GraphInput read_graph_file(const std::string& path, std::optional<Format> format);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace lmd::io
