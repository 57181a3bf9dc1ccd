#ifndef CSF_FORGE_GRAPH_HPP
#define CSF_FORGE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "csf_forge/permutation.hpp"

namespace csf_forge {

/// Undirected edge as a normalized pair (min endpoint, max endpoint).
using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

/// Simple undirected graph on vertices {1..n}. No self-loops, no duplicate
/// edges; edges are kept sorted so equal graphs compare equal.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;

  int degree(int vertex) const;
  int leaf_count() const;  // vertices of degree 1
  std::vector<std::vector<int>> neighbors() const;  // index 1..n

  std::vector<std::vector<int>> connected_components() const;
  bool is_connected() const;
  bool is_acyclic() const;
  bool is_tree() const { return is_connected() && is_acyclic(); }

  /// Edge (i,j) becomes (s(i), s(j)).
  LabeledGraph relabeled(const Permutation& s) const;

  /// Disjoint union; vertices of other are shifted up by this->vertex_count().
  LabeledGraph disjoint_union(const LabeledGraph& other) const;

  /// "n=4:1-2,1-3,1-4" with edges in sorted order; "n=1:" for no edges.
  std::string to_string() const;
  static LabeledGraph parse(const std::string& text);

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const LabeledGraph& a, const LabeledGraph& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A connected acyclic LabeledGraph; construction validates.
class LabeledTree : public LabeledGraph {
 public:
  LabeledTree(int n, std::vector<Edge> edges);
  explicit LabeledTree(const LabeledGraph& g);

  LabeledTree relabeled(const Permutation& s) const {
    return LabeledTree(LabeledGraph::relabeled(s));
  }

  static LabeledTree parse(const std::string& text) {
    return LabeledTree(LabeledGraph::parse(text));
  }
};

}  // namespace csf_forge

#endif
