#ifndef CSF_FORGE_GROUP_ALGEBRA_HPP
#define CSF_FORGE_GROUP_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csf_forge/graph.hpp"
#include "csf_forge/permutation.hpp"

namespace csf_forge {

/// Sparse integer-coefficient formal sum of permutations of a fixed degree.
///
/// Canonical form: no zero coefficients are ever stored, and terms iterate
/// in lexicographic order of their image sequences, so printing is
/// deterministic. Coefficients are checked 64-bit integers; products of
/// edge factors only ever need ±1.
class GroupAlgebraElement {
 public:
  using TermMap = std::map<Permutation, std::int64_t, PermutationImageLess>;

  /// The zero element of degree n.
  explicit GroupAlgebraElement(int n);

  /// c times a single permutation.
  GroupAlgebraElement(const Permutation& p, std::int64_t c);

  static GroupAlgebraElement zero(int n) { return GroupAlgebraElement(n); }
  static GroupAlgebraElement unit(int n) { return {Permutation::identity(n), 1}; }

  int degree() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Permutation& p) const;
  const TermMap& terms() const { return terms_; }

  void add_term(const Permutation& p, std::int64_t c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator-() const;

  /// All coefficients multiplied by c (checked).
  GroupAlgebraElement scaled(std::int64_t c) const;

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return !(a == b);
  }

  /// One term per line, "coeff * cycle-notation", in canonical term order.
  /// Doubles as the deduplication key for sets of elements.
  std::string to_text() const;

 private:
  int n_;
  TermMap terms_;
};

/// Ordering of a graph's edges; the sequence is the multiplication order of
/// the edge factors (1 - (ij)). Pairs are unordered, duplicates rejected.
class EdgeOrdering {
 public:
  explicit EdgeOrdering(std::vector<Edge> edges);

  /// Sorted-edge ordering of a graph; the default when none is given.
  static EdgeOrdering of_graph(const LabeledGraph& g) { return EdgeOrdering(g.edges()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  /// Same edges in the same sequence after relabeling endpoints by s.
  EdgeOrdering conjugated_by(const Permutation& s) const;

  /// True iff this ordering lists exactly the graph's edge set.
  bool matches(const LabeledGraph& g) const;

  std::string to_string() const;  // "1-2,2-3"
  static EdgeOrdering parse(const std::string& text);

  friend bool operator==(const EdgeOrdering& a, const EdgeOrdering& b) {
    return a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
};

/// Vertex relabeling; a bijection on {1..n}.
using Labeling = Permutation;

/// The ordered product of edge factors (1 - (ij)) over the given ordering of
/// the edges of an acyclic graph. The global n! of the classical definition
/// is omitted together with the 1/n! of the character map, keeping all
/// coefficients integers; for a forest with e edges the result has exactly
/// 2^e terms with coefficients ±1.
GroupAlgebraElement k_product(const LabeledGraph& g, const EdgeOrdering& ordering);

/// As above with the sorted-edge ordering.
GroupAlgebraElement k_product(const LabeledGraph& g);

/// Each term t becomes s t s^{-1}; coefficients unchanged. A ring
/// automorphism, and the element-side face of vertex relabeling.
GroupAlgebraElement conjugate_element(const Permutation& s, const GroupAlgebraElement& a);

}  // namespace csf_forge

#endif
