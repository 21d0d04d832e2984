#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cdc/cycles.hpp"
#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"

namespace cdc {

/// Thrown on malformed graph6/sparse6/JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 for simple graphs. Edges of a parsed graph are ordered by (max endpoint, min endpoint).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

/// sparse6 (leading ':'), supports parallel edges and loops.
std::string to_sparse6(const Graph& g);
Graph from_sparse6(std::string_view line);

/// Picks the format from the first character; strips an optional >>graph6<< / >>sparse6<< header.
Graph parse_graph_line(std::string_view line);
/// graph6 when simple, sparse6 otherwise.
std::string to_graph_line(const Graph& g);

/// Reads every non-empty line of a graph6/sparse6 file.
std::vector<Graph> read_graph_file(const std::string& path);
std::vector<Graph> read_graph_stream(std::istream& in);

nlohmann::json embedding_to_json(const PlaneEmbedding& e);
PlaneEmbedding embedding_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const CycleCatalog& cat);

}  // namespace cdc
