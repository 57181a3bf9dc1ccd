#ifndef CSF_FORGE_DISTINGUISHER_HPP
#define CSF_FORGE_DISTINGUISHER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "csf_forge/symmetric_function.hpp"

namespace csf_forge {

/// 128-bit FNV-1a digest; stable across runs and platforms.
struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const Digest128& a, const Digest128& b) {
    return a.hi == b.hi && a.lo == b.lo;
  }
  friend bool operator!=(const Digest128& a, const Digest128& b) { return !(a == b); }
  friend bool operator<(const Digest128& a, const Digest128& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }

  std::string to_hex() const;
};

Digest128 fnv1a128(const std::string& bytes);

/// Digest of the canonical serialized power-sum form: basis, degree, then
/// the sorted (partition, coefficient) sequence. Equal functions always get
/// equal digests; a digest collision is resolved by exact comparison before
/// anything is reported.
Digest128 fingerprint(const SymmetricFunction& x);

/// Outcome of checking one order n: every free tree fingerprinted, digest
/// collisions re-verified exactly, surviving groups listed by canonical
/// tree code. Empty collision_groups means the trees of this order are
/// pairwise distinguished by their CSFs.
struct VerificationReport {
  int n = 0;
  std::uint64_t tree_count = 0;
  std::vector<std::vector<std::string>> collision_groups;
  std::int64_t elapsed_ms = 0;
  int workers = 1;

  bool conjecture_holds() const { return collision_groups.empty(); }
  std::string to_json_string() const;
};

inline constexpr int kDefaultMaxVerifyOrder = 18;

/// Fingerprints the CSFs of all free trees of order n across the given
/// number of workers. Reports are identical for any worker count.
VerificationReport verify_order(int n, int workers = 1, int max_order = kDefaultMaxVerifyOrder);

/// verify_order for each n in [low, high]. A checkpoint path makes the run
/// resumable: completed shards of the tree stream are appended as JSON
/// lines, each carrying its own integrity digest, and are reloaded instead
/// of recomputed. Corruption is detected and reported as an error.
std::vector<VerificationReport> verify_range(int low, int high, int workers = 1,
                                             const std::string& checkpoint_path = "",
                                             int max_order = kDefaultMaxVerifyOrder);

namespace detail {

/// The digest-then-exact-compare reducer behind verify_order, separated so
/// the collision path is testable: items whose digests collide are grouped
/// only if their exact CSFs, recomputed via exact_csf, are equal.
std::vector<std::vector<std::string>> collision_groups(
    const std::vector<std::pair<Digest128, std::string>>& items,
    const std::function<SymmetricFunction(const std::string&)>& exact_csf,
    const std::function<std::string(const std::string&)>& display_code);

}  // namespace detail

}  // namespace csf_forge

#endif
