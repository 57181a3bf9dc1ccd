#ifndef CSF_FORGE_CONJUGACY_HPP
#define CSF_FORGE_CONJUGACY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csf_forge/group_algebra.hpp"
#include "csf_forge/tree_canon.hpp"

namespace csf_forge {

/// One member of a tree's S-set together with how it was produced.
struct KRecord {
  GroupAlgebraElement element;
  Labeling labeling;       // vertex relabeling applied to the source tree
  EdgeOrdering ordering;   // multiplication order, in relabeled coordinates
  CanonicalCode source_tree;
};

/// Every distinct edge-factor product of the tree over all vertex labelings
/// and all edge orderings, with provenance. Deduplicated on the canonical
/// printout. Guarded to n <= 6 (the set grows like n! * (n-1)!).
std::vector<KRecord> s_set_records(const LabeledTree& t);

/// The S-set itself: just the distinct elements.
std::vector<GroupAlgebraElement> s_set(const LabeledTree& t);

/// True iff the two trees' S-sets share an element; equivalent to tree
/// isomorphism.
bool s_sets_intersect(const LabeledTree& t1, const LabeledTree& t2);

/// Recovers the labeled edge set from a forest's edge-factor product: the
/// pairs whose transposition carries coefficient -1. Any transposition term
/// with a different coefficient means the element is not such a product.
std::set<Edge> extract_edges(const GroupAlgebraElement& k);

/// True iff every two edges sharing an endpoint appear in the same relative
/// order in both orderings; orderings of the same edge set only. Two
/// orderings of a forest multiply to equal products exactly when consistent.
bool ordering_consistent(const EdgeOrdering& pi1, const EdgeOrdering& pi2);

/// Outcome of a conjugator search: a verified witness, a proof of absence,
/// or an inconclusive walk that hit the candidate cap.
struct ConjugatorResult {
  enum class Status { Found, None, Inconclusive };
  Status status = Status::None;
  std::optional<Permutation> sigma;

  bool found() const { return status == Status::Found; }
};

/// Searches for sigma with conjugate_element(sigma, k1) == k2. Candidates
/// are the edge-set isomorphisms (a coset of the tree's automorphisms);
/// each is verified against the full ordered product before being reported.
ConjugatorResult find_conjugator(const GroupAlgebraElement& k1, const GroupAlgebraElement& k2,
                                 std::size_t candidate_cap = 10000);

struct ProbeOptions {
  std::uint64_t seed = 1;
  int orderings_per_side = 1000;
  bool exhaustive = false;  // all orderings and all conjugators; n <= 5
};

/// Report of a conjugation-equality probe between two trees: whether their
/// CSFs agree, and a verified (sigma, pi1, pi2) witness of conjugate
/// products when one is found in the searched space. A witness always
/// implies equal CSFs; the converse is only observed, never assumed.
struct ProbeReport {
  struct Witness {
    Permutation sigma;
    EdgeOrdering pi1;
    EdgeOrdering pi2;
  };

  int n = 0;
  std::string tree1;
  std::string tree2;
  bool csf_equal = false;
  std::optional<Witness> witness;
  std::string mode;  // "sampled" or "exhaustive"
  std::uint64_t seed = 0;
  int orderings_sampled = 0;

  std::string to_json_string() const;
};

ProbeReport reformulation_probe(const LabeledTree& t1, const LabeledTree& t2,
                                const ProbeOptions& options = {});

}  // namespace csf_forge

#endif
