#include "csf_forge/tree_gen.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "csf_forge/tree_canon.hpp"

namespace csf_forge {

namespace {

// Canonical rooted level sequence: root at level 1, vertices in preorder,
// subtree sequences arranged in non-increasing lexicographic order.
std::vector<int> canonical_levels(const LabeledTree& t, int root) {
  const auto adj = t.neighbors();
  std::function<std::vector<int>(int, int)> rec = [&](int v, int parent) {
    std::vector<std::vector<int>> subtrees;
    for (int w : adj[v])
      if (w != parent) subtrees.push_back(rec(w, v));
    std::sort(subtrees.begin(), subtrees.end(), std::greater<std::vector<int>>());
    std::vector<int> out{0};
    for (const auto& sub : subtrees)
      for (int level : sub) out.push_back(level + 1);
    return out;
  };
  auto levels = rec(root, 0);
  for (int& level : levels) ++level;  // root at level 1
  return levels;
}

// The canonical level sequence of the free tree: rooted at the center, and
// for a bicentral tree at whichever center gives the lexicographically
// larger sequence (a fixed tie-break; both give the same sequence when the
// halves are isomorphic).
std::vector<int> canonical_free_levels(const LabeledTree& t) {
  const auto centers = tree_center(t);
  auto best = canonical_levels(t, centers[0]);
  if (centers.size() == 2) {
    auto other = canonical_levels(t, centers[1]);
    if (other > best) best = std::move(other);
  }
  return best;
}

}  // namespace

LabeledTree tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    int parent = -1;
    for (int j = i - 1; j >= 0; --j) {
      if (levels[j] == levels[i] - 1) {
        parent = j;
        break;
      }
    }
    if (parent < 0) throw std::invalid_argument("malformed level sequence");
    edges.push_back(make_edge(i + 1, parent + 1));
  }
  return LabeledTree(n, std::move(edges));
}

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n_ < 1) throw std::invalid_argument("tree order must be at least 1");
  levels_.resize(n_);
  for (int i = 0; i < n_; ++i) levels_[i] = i + 1;  // the path, lexicographically largest
}

bool FreeTreeGenerator::advance() {
  // Successor rule over canonical rooted level sequences, in decreasing
  // lexicographic order: find the last entry above 2, clip it, and tile the
  // tail with copies of the block starting at its parent.
  int p = -1;
  for (int i = n_ - 1; i >= 0; --i) {
    if (levels_[i] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (levels_[i] == levels_[p] - 1) {
      q = i;
      break;
    }
  }
  const int block = p - q;
  for (int i = p; i < n_; ++i) levels_[i] = levels_[i - block];
  return true;
}

std::optional<LabeledTree> FreeTreeGenerator::next() {
  while (!done_) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      done_ = true;
      break;
    }
    LabeledTree t = tree_from_level_sequence(levels_);
    if (canonical_free_levels(t) == levels_) return t;
  }
  return std::nullopt;
}

void FreeTreeGenerator::skip(std::uint64_t count) {
  while (count > 0 && next().has_value()) --count;
}

std::vector<LabeledTree> generate_free_trees(int n) {
  std::vector<LabeledTree> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::uint64_t count_free_trees(int n) {
  std::uint64_t count = 0;
  FreeTreeGenerator gen(n);
  while (gen.next().has_value()) ++count;
  return count;
}

}  // namespace csf_forge
