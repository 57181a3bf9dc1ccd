#ifndef CSF_FORGE_PERMUTATION_HPP
#define CSF_FORGE_PERMUTATION_HPP

#include <string>
#include <vector>

#include "csf_forge/partition.hpp"

namespace csf_forge {

/// Bijection on {1..n} with an explicit degree n.
///
/// Composition convention, fixed once for the whole project: products apply
/// right to left, i.e. compose(p, q) maps x to p(q(x)). All ordering-sensitive
/// group-algebra results are stated relative to this choice.
///
/// Points are 1-based everywhere in the public interface.
class Permutation {
 public:
  /// Identity of degree n.
  explicit Permutation(int n);

  /// From the image sequence: images[i-1] is the image of point i.
  /// Throws unless the sequence is a bijection on {1..degree}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }

  /// The transposition (i j) in degree n; throws if i == j or out of range.
  static Permutation transposition(int i, int j, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const;  // image of a 1-based point
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  /// Cycle lengths as a partition of the degree; fixed points included
  /// as parts equal to 1.
  Partition cycle_type() const;

  /// Nontrivial cycles, each starting at its minimum point, cycles ordered
  /// by minimum point.
  std::vector<std::vector<int>> cycles() const;

  /// Cycle notation without degree: "(1 2)(3 4)", identity prints "()".
  std::string to_cycle_string() const;

  /// Cycle notation with explicit degree: "n=4:(1 2)". Round-trips with parse().
  std::string to_string() const;

  /// Parses the "n=4:(1 2)" format.
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<int> images_;
};

/// compose(p, q) maps x to p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// s p s^{-1}: conjugation, the group-side face of vertex relabeling.
Permutation conjugate(const Permutation& s, const Permutation& p);

/// Lexicographic order on image sequences; the canonical term order for
/// group-algebra printing and map keys.
struct PermutationImageLess {
  bool operator()(const Permutation& a, const Permutation& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.images() < b.images();
  }
};

}  // namespace csf_forge

#endif
