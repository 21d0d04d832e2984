#include "cdc/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace cdc {

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int byte_value(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw FormatError(std::string("invalid character in graph string: '") + c + "'");
  return v;
}

// Returns n and advances pos past the size field.
long long get_size(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw FormatError("graph string is missing its size field");
  if (s[pos] != 126) return byte_value(s[pos++]);
  ++pos;
  int digits = 3;
  if (pos < s.size() && s[pos] == 126) {
    ++pos;
    digits = 6;
  }
  if (pos + static_cast<std::size_t>(digits) > s.size()) throw FormatError("truncated size field");
  long long n = 0;
  for (int i = 0; i < digits; ++i) n = (n << 6) | byte_value(s[pos++]);
  return n;
}

class BitWriter {
 public:
  void put(unsigned long long value, int width) {
    for (int i = width - 1; i >= 0; --i) bits_.push_back(static_cast<char>((value >> i) & 1U));
  }
  std::size_t size() const { return bits_.size(); }
  void emit(std::string& out) const {
    for (std::size_t i = 0; i < bits_.size(); i += 6) {
      int v = 0;
      for (std::size_t k = 0; k < 6; ++k) v = (v << 1) | (i + k < bits_.size() ? bits_[i + k] : 0);
      out.push_back(static_cast<char>(v + kBias));
    }
  }

 private:
  std::vector<char> bits_;
};

class BitReader {
 public:
  BitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}
  std::size_t remaining() const { return (s_.size() - pos_) * 6 - bit_; }
  int get() {
    const int v = byte_value(s_[pos_]);
    const int b = (v >> (5 - bit_)) & 1;
    if (++bit_ == 6) {
      bit_ = 0;
      ++pos_;
    }
    return b;
  }
  long long get(int width) {
    long long v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | get();
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_;
  int bit_ = 0;
};

std::string_view strip(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  for (std::string_view header : {">>graph6<<", ">>sparse6<<"}) {
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  }
  return line;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw PreconditionError("graph6 encodes simple graphs only; use sparse6");
  const int n = g.vertex_count();
  std::string out;
  put_size(out, n);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  BitWriter bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.put(adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1);
  }
  bits.emit(out);
  return out;
}

Graph from_graph6(std::string_view line) {
  line = strip(line);
  std::size_t pos = 0;
  const long long n = get_size(line, pos);
  const long long needed_bits = n * (n - 1) / 2;
  const auto needed_bytes = static_cast<std::size_t>((needed_bits + 5) / 6);
  if (line.size() - pos != needed_bytes) throw FormatError("graph6 body has the wrong length");
  BitReader bits(line, pos);
  std::vector<std::pair<int, int>> pairs;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      if (bits.get()) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(static_cast<int>(n), pairs);
}

std::string to_sparse6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out(":");
  put_size(out, n);
  int nb = 0;
  for (int i = n - 1; i > 0; i >>= 1) ++nb;
  std::vector<std::pair<int, int>> pairs;  // (larger, smaller)
  for (const Edge& e : g.edges()) pairs.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  BitWriter bits;
  int lastj = 0;
  for (auto [j, i] : pairs) {
    if (j == lastj) {
      bits.put(0, 1);
      bits.put(static_cast<unsigned>(i), nb);
    } else {
      bits.put(1, 1);
      if (j > lastj + 1) {
        bits.put(static_cast<unsigned>(j), nb);
        bits.put(0, 1);
      }
      bits.put(static_cast<unsigned>(i), nb);
      lastj = j;
    }
  }
  const int pad = static_cast<int>((6 - bits.size() % 6) % 6);
  if (pad > 0) {
    if (nb < 6 && pad >= nb + 1 && lastj == n - 2 && n == (1 << nb)) {
      bits.put(0, 1);
      bits.put((1ULL << (pad - 1)) - 1, pad - 1);
    } else {
      bits.put((1ULL << pad) - 1, pad);
    }
  }
  bits.emit(out);
  return out;
}

Graph from_sparse6(std::string_view line) {
  line = strip(line);
  if (line.empty() || line.front() != ':') throw FormatError("sparse6 string must start with ':'");
  std::size_t pos = 1;
  const long long n = get_size(line, pos);
  int nb = 0;
  for (long long i = n - 1; i > 0; i >>= 1) ++nb;
  BitReader bits(line, pos);
  std::vector<std::pair<int, int>> pairs;
  long long v = 0;
  while (bits.remaining() >= static_cast<std::size_t>(nb + 1)) {
    const int b = bits.get();
    const long long x = bits.get(nb);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      pairs.emplace_back(static_cast<int>(x), static_cast<int>(v));
    }
  }
  const bool loops = std::any_of(pairs.begin(), pairs.end(), [](auto p) { return p.first == p.second; });
  return Graph(static_cast<int>(n), pairs, loops);
}

Graph parse_graph_line(std::string_view line) {
  line = strip(line);
  if (line.empty()) throw FormatError("empty graph line");
  if (line.front() == ':') return from_sparse6(line);
  if (line.front() == ';') throw FormatError("incremental sparse6 (digraph6/';') is not supported");
  if (line.front() == '&') throw FormatError("digraph6 is not supported");
  return from_graph6(line);
}

std::string to_graph_line(const Graph& g) { return g.is_simple() ? to_graph6(g) : to_sparse6(g); }

std::vector<Graph> read_graph_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    try {
      out.push_back(parse_graph_line(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_graph_stream(in);
}

nlohmann::json embedding_to_json(const PlaneEmbedding& e) {
  nlohmann::json j;
  j["n"] = e.graph().vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const Edge& ed : e.graph().edges()) j["edges"].push_back({ed.u, ed.v});
  j["rotation"] = nlohmann::json::array();
  for (const auto& rot : e.rotations()) {
    auto r = nlohmann::json::array();
    for (const auto& d : rot) r.push_back({d.edge, d.side});
    j["rotation"].push_back(r);
  }
  return j;
}

PlaneEmbedding embedding_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& ed : j.at("edges")) pairs.emplace_back(ed.at(0).get<int>(), ed.at(1).get<int>());
    const bool loops = std::any_of(pairs.begin(), pairs.end(), [](auto p) { return p.first == p.second; });
    Graph g(n, pairs, loops);
    std::vector<std::vector<EdgeEnd>> rotation;
    for (const auto& r : j.at("rotation")) {
      std::vector<EdgeEnd> rot;
      for (const auto& d : r) rot.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
      rotation.push_back(std::move(rot));
    }
    return PlaneEmbedding(std::move(g), std::move(rotation));
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed embedding JSON: ") + ex.what());
  }
}

nlohmann::json catalog_to_json(const CycleCatalog& cat) {
  auto out = nlohmann::json::array();
  for (const auto& c : cat.cycles) out.push_back(std::vector<EdgeId>(c.edges().begin(), c.edges().end()));
  return out;
}

}  // namespace cdc
