#include "csf_forge/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace csf_forge {

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& token) {
  throw std::invalid_argument("graph parse error: " + what + " in \"" + token + "\"");
}

}  // namespace

LabeledGraph::LabeledGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph must have at least one vertex");
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second) throw std::invalid_argument("self-loop not allowed");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

bool LabeledGraph::has_edge(int i, int j) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(i, j));
}

int LabeledGraph::degree(int vertex) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.first == vertex) + (e.second == vertex);
  return d;
}

int LabeledGraph::leaf_count() const {
  std::vector<int> deg(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++deg[e.first];
    ++deg[e.second];
  }
  return static_cast<int>(std::count(deg.begin() + 1, deg.end(), 1));
}

std::vector<std::vector<int>> LabeledGraph::neighbors() const {
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const auto& e : edges_) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return adj;
}

std::vector<std::vector<int>> LabeledGraph::connected_components() const {
  const auto adj = neighbors();
  std::vector<int> component(n_ + 1, 0);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n_; ++start) {
    if (component[start]) continue;
    out.emplace_back();
    auto& members = out.back();
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adj[v]) {
        if (!component[w]) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

bool LabeledGraph::is_connected() const { return connected_components().size() == 1; }

bool LabeledGraph::is_acyclic() const {
  // A graph is a forest iff every component has |edges| = |vertices| - 1,
  // i.e. globally |E| = n - #components.
  return edge_count() == n_ - static_cast<int>(connected_components().size());
}

LabeledGraph LabeledGraph::relabeled(const Permutation& s) const {
  if (s.degree() != n_) throw std::invalid_argument("relabeling degree mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back(make_edge(s.apply(e.first), s.apply(e.second)));
  return LabeledGraph(n_, std::move(edges));
}

LabeledGraph LabeledGraph::disjoint_union(const LabeledGraph& other) const {
  std::vector<Edge> edges = edges_;
  for (const auto& e : other.edges_) edges.emplace_back(e.first + n_, e.second + n_);
  return LabeledGraph(n_ + other.n_, std::move(edges));
}

std::string LabeledGraph::to_string() const {
  std::string s = "n=" + std::to_string(n_) + ":";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
  }
  return s;
}

LabeledGraph LabeledGraph::parse(const std::string& text) {
  if (text.rfind("n=", 0) != 0) parse_fail("expected \"n=\" prefix", text);
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) parse_fail("expected ':' after vertex count", text);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(2, colon - 2), &used);
    if (used != colon - 2) parse_fail("bad vertex count", text.substr(0, colon));
  } catch (const std::invalid_argument&) {
    parse_fail("bad vertex count", text.substr(0, colon));
  }
  if (n < 1) parse_fail("vertex count must be positive", text.substr(0, colon));

  std::vector<Edge> edges;
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    const std::size_t dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      parse_fail("expected edge of the form i-j", token);
    int i = 0, j = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(token.substr(0, dash), &used);
      if (used != dash) parse_fail("bad endpoint", token);
      j = std::stoi(token.substr(dash + 1), &used);
      if (used != token.size() - dash - 1) parse_fail("bad endpoint", token);
    } catch (const std::invalid_argument&) {
      parse_fail("bad endpoint", token);
    }
    if (i < 1 || i > n || j < 1 || j > n) parse_fail("endpoint out of range", token);
    if (i == j) parse_fail("self-loop", token);
    edges.push_back(make_edge(i, j));
    pos = comma + 1;
  }
  const auto before = edges.size();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() != before) parse_fail("duplicate edge", text);
  return LabeledGraph(n, std::move(edges));
}

LabeledTree::LabeledTree(int n, std::vector<Edge> edges) : LabeledTree(LabeledGraph(n, std::move(edges))) {}

LabeledTree::LabeledTree(const LabeledGraph& g) : LabeledGraph(g) {
  if (!is_acyclic()) throw std::invalid_argument("cycle detected in " + g.to_string());
  if (!is_connected()) throw std::invalid_argument("tree must be connected: " + g.to_string());
}

}  // namespace csf_forge
