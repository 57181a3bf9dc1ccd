#ifndef CSF_FORGE_CSF_HPP
#define CSF_FORGE_CSF_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csf_forge/graph.hpp"
#include "csf_forge/symmetric_function.hpp"

namespace csf_forge {

/// Chromatic symmetric function of an acyclic graph in the power-sum basis.
///
/// Fast production route: walks the 2^|E| edge subsets incrementally with a
/// rollback union-find, accumulating signed component-size partitions. Equal
/// to the group-algebra route and to the plain subset oracle; independent of
/// labeling and edge order.
SymmetricFunction csf(const LabeledGraph& g);

/// The literal group-algebra route: Frobenius characteristic of the ordered
/// edge-factor product. Exposed alongside the fast route; results agree.
SymmetricFunction csf_group_algebra(const LabeledGraph& g);

/// Plain subset-expansion oracle: loops bitmasks over edge subsets, finds
/// component sizes with a fresh scratch union-find per subset, no shared
/// machinery with the production route or the group algebra. |E| <= 30.
SymmetricFunction csf_subset_oracle(const LabeledGraph& g);

/// Monomial-basis CSF by brute enumeration of proper colorings with colors
/// {1..max_colors}; max_colors = 0 means use the vertex count. Oracle scale:
/// n <= 8 and max_colors >= n.
SymmetricFunction csf_coloring_oracle(const LabeledGraph& g, int max_colors = 0);

/// Matching polynomial: coeffs[k] = number of k-matchings; trailing zeros
/// trimmed, so coeffs.front() == 1 and coeffs.size()-1 is the largest
/// matching size.
struct MatchingPolynomial {
  int n = 0;
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const MatchingPolynomial& a, const MatchingPolynomial& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
  std::string to_json_string() const;
  std::string to_text() const;  // "1 + 3x + x^2"
};

/// Number of connected subtrees of each order 2..n.
struct SubtreeCounts {
  int n = 0;
  std::map<int, std::int64_t> counts;

  friend bool operator==(const SubtreeCounts& a, const SubtreeCounts& b) {
    return a.n == b.n && a.counts == b.counts;
  }
  std::string to_json_string() const;  // counts as an array indexed by k
};

/// Reads the matching polynomial off an acyclic-graph CSF: m_k is the
/// absolute value of the coefficient of p_(2^k,1^(n-2k)), whose sign must be
/// (-1)^k; a violated sign pattern throws (the input was not such a CSF).
MatchingPolynomial matching_poly_from_csf(const SymmetricFunction& x);

/// Direct enumeration of matchings; independent of the CSF pipeline.
MatchingPolynomial matching_poly_direct(const LabeledGraph& g);

/// Reads subtree counts off a tree CSF: counts[k] = |coefficient of
/// p_(k,1^(n-k))| for k = 2..n.
SubtreeCounts subtree_counts_from_csf(const SymmetricFunction& x);

/// Direct enumeration of connected vertex subsets; independent code path.
SubtreeCounts subtree_counts_direct(const LabeledTree& t);

/// Leaf count of a tree of order n >= 3 from its CSF: the number of
/// connected subtrees of order n-1.
std::int64_t leaf_count_from_csf(const SymmetricFunction& x);

/// True iff the coefficient of p_(n) is nonzero; for a forest CSF this is
/// connectedness.
bool is_connected_from_csf(const SymmetricFunction& x);

/// CSF of a disjoint union from component CSFs: the power-sum product.
SymmetricFunction csf_disjoint_union(const SymmetricFunction& a, const SymmetricFunction& b);

}  // namespace csf_forge

#endif
