#include "gpgame/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "gpgame/errors.hpp"

namespace gpgame {

Graph::Graph(int order) {
  if (order < 1) throw ParameterError("graph order must be >= 1");
  adj_.resize(static_cast<std::size_t>(order));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw ParameterError("vertex " + std::to_string(v) +
                         " out of range for order " + std::to_string(order()));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("loops are not allowed");
  auto& nu = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::string Graph::to_edge_list_text() const {
  std::string out =
      std::to_string(order()) + " " + std::to_string(edge_count_) + "\n";
  for (const auto& [u, v] : edge_list()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

namespace {

// Whitespace-tolerant decimal scanner that reports byte offsets on failure.
class IntScanner {
 public:
  explicit IntScanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  // Position of the next token (leading whitespace skipped), so error
  // offsets point at the offending text rather than the gap before it.
  std::size_t pos() {
    skip_space();
    return pos_;
  }

  long long next(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, what);
    if (text_[pos_] < '0' || text_[pos_] > '9') throw ParseError(pos_, what);
    long long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError(pos_, "a smaller integer");
      ++pos_;
    }
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph Graph::from_edge_list_text(std::string_view text) {
  IntScanner scan(text);
  long long n = scan.next("vertex count");
  long long m = scan.next("edge count");
  if (n < 1) throw ParseError(0, "a vertex count >= 1");
  Graph g(static_cast<int>(n));
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 0; i < m; ++i) {
    std::size_t at = scan.pos();
    long long u = scan.next("edge endpoint");
    long long v = scan.next("edge endpoint");
    if (u >= v) throw ParseError(at, "endpoints with u < v");
    if (v >= n) throw ParseError(at, "endpoints below the vertex count");
    if (!seen.insert({u, v}).second) {
      throw ParseError(at, "no duplicate edges");
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!scan.at_end()) throw ParseError(scan.pos(), "end of file");
  return g;
}

std::string edge_list_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : g.to_edge_list_text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace gpgame
