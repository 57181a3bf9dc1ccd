#ifndef CSF_FORGE_TREE_GEN_HPP
#define CSF_FORGE_TREE_GEN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "csf_forge/graph.hpp"

namespace csf_forge {

/// Streams one representative per isomorphism class of trees of order n.
///
/// Walks canonical rooted level sequences with the classic constant-time
/// successor rule and keeps exactly those rooted at the tree's canonical
/// center, so each free tree appears once, in a deterministic canonical
/// labeling (preorder positions of its canonical level sequence).
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  /// Next tree, or nullopt when exhausted. Deterministic sequence.
  std::optional<LabeledTree> next();

  /// Skips count trees; used to resume a partially processed stream.
  void skip(std::uint64_t count);

 private:
  bool advance();  // successor rule; false when the walk is over

  int n_;
  std::vector<int> levels_;
  bool fresh_ = true;
  bool done_ = false;
};

/// All free trees of order n, collected. Convenience for tests and small n.
std::vector<LabeledTree> generate_free_trees(int n);

/// Number of isomorphism classes of trees of order n.
std::uint64_t count_free_trees(int n);

/// Rebuilds the tree with labels {1..n} assigned in preorder of the
/// canonical level sequence; the labeling the generator itself uses.
LabeledTree tree_from_level_sequence(const std::vector<int>& levels);

}  // namespace csf_forge

#endif
