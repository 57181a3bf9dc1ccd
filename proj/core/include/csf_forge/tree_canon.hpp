#ifndef CSF_FORGE_TREE_CANON_HPP
#define CSF_FORGE_TREE_CANON_HPP

#include <functional>
#include <optional>
#include <string>

#include "csf_forge/graph.hpp"
#include "csf_forge/permutation.hpp"

namespace csf_forge {

/// Label-invariant identifier of a tree's isomorphism class, printed as a
/// balanced-parenthesis string. Two trees share a code iff isomorphic.
struct CanonicalCode {
  std::string code;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.code == b.code;
  }
  friend bool operator!=(const CanonicalCode& a, const CanonicalCode& b) { return !(a == b); }
  friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) {
    return a.code < b.code;
  }
};

/// Center vertices after repeated leaf stripping; one or two of them.
std::vector<int> tree_center(const LabeledTree& t);

/// AHU canonical form rooted at the center; for a bicentral tree the two
/// half codes are concatenated in sorted order. Always 2n characters.
CanonicalCode canonical_code(const LabeledTree& t);

/// A vertex bijection f with f(edges of a) == edges of b, or nullopt.
std::optional<Permutation> tree_isomorphism(const LabeledTree& a, const LabeledTree& b);

/// Streams vertex bijections f with f(edges of a) == edges of b to the
/// visitor until it returns false. Returns false if the visitor stopped the
/// walk early, true if the enumeration ran to completion.
bool for_each_isomorphism(const LabeledTree& a, const LabeledTree& b,
                          const std::function<bool(const Permutation&)>& visit);

}  // namespace csf_forge

#endif
