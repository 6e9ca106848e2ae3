#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adsv {

using Vertex = std::uint32_t;

enum class StreamModel { turnstile, vanilla, weighted, adjlist };

std::string to_string(StreamModel m);
StreamModel model_from_string(const std::string& s);

enum class TokenKind : std::uint8_t { turnstile_edge, vanilla_edge, weighted_edge, adjlist_entry, set_vertex, set_end };

// value is Delta for turnstile edges, the weight for weighted edges, 1 otherwise.
// For adjacency-list entries u is the list owner and v the neighbor.
// Set-family tokens follow the edges: set_vertex carries the vertex in u and the side (0 = U, 1 = W) in
// value; set_end closes one set or pair.
struct StreamToken {
  TokenKind kind;
  Vertex u;
  Vertex v;
  std::int64_t value;
  std::uint64_t position;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Public parameters of an instance: everything except the token sequence.
struct InstanceHeader {
  std::uint32_t n = 0;
  StreamModel model = StreamModel::turnstile;
  bool directed = false;
  std::int64_t W = 1;
  std::optional<Vertex> source;
  std::optional<Vertex> target;
};

struct GraphInstance {
  InstanceHeader header;
  std::vector<StreamToken> tokens;
  // Set-family inputs for the edge-count problems.
  std::vector<std::vector<Vertex>> sets;
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> set_pairs;

  std::uint32_t n() const { return header.n; }

  void add_edge(Vertex u, Vertex v, std::int64_t value = 1);
  void add_adjlist(Vertex owner, const std::vector<Vertex>& nbrs);
};

GraphInstance parse_stream(const std::string& text);
GraphInstance load_stream_file(const std::string& path);
std::string format_stream(const GraphInstance& g);

std::string encode_binary(const GraphInstance& g);
GraphInstance decode_binary(const std::string& bytes);

using TokenObserver = std::function<void(const StreamToken&)>;

// Set-family portion of the input (after every edge token), in file order.
std::vector<StreamToken> set_stream(const GraphInstance& g);

// Delivers each edge token once, in order, to every observer.
void replay(const GraphInstance& g, const std::vector<TokenObserver>& observers);

// Final n x n state after all tokens: multiplicities, weights, or adjacency counts.
// Undirected models fill both orientations.
std::vector<std::vector<std::int64_t>> final_matrix(const GraphInstance& g);

}  // namespace adsv
