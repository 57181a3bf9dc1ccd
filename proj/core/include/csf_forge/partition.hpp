#ifndef CSF_FORGE_PARTITION_HPP
#define CSF_FORGE_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace csf_forge {

/// Integer partition: weakly decreasing sequence of positive parts.
///
/// Indexes the power-sum and monomial bases and records permutation cycle
/// types (fixed points appear as parts equal to 1).
class Partition {
 public:
  Partition() = default;

  /// Parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts the given parts into canonical (weakly decreasing) order.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }                                  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }  // number of parts
  bool empty() const { return parts_.empty(); }

  /// Multiplicity of a given part value.
  int multiplicity(int value) const;

  /// Multiset union of parts: p_lambda * p_mu = p_{lambda union mu}.
  Partition merged_with(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  /// "(3,1)" or "()" for the empty partition.
  std::string to_string() const;

  /// All partitions of n, lexicographically descending.
  static std::vector<Partition> all_of(int n);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Lexicographically descending order on part sequences, the canonical
/// display and serialization order: (4) before (3,1) before (2,2) ...
struct PartitionLexGreater {
  bool operator()(const Partition& a, const Partition& b) const {
    return b.parts() < a.parts();
  }
};

}  // namespace csf_forge

#endif
