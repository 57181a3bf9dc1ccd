#include "csf_forge/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "csf_forge/csf.hpp"

namespace csf_forge {

namespace {

constexpr int kMaxSSetOrder = 6;
constexpr int kMaxProbeOrder = 8;
constexpr int kMaxProbeOrderExhaustive = 5;

void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    if (!visit(Permutation(images))) return;
  } while (std::next_permutation(images.begin(), images.end()));
}

// Deterministic Fisher-Yates; mt19937_64 is pinned by the standard, so
// sampled searches replay identically everywhere.
template <typename T>
void seeded_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[rng() % i]);
}

bool is_transposition(const Permutation& p, Edge& edge_out) {
  int moved[2] = {0, 0};
  int count = 0;
  for (int x = 1; x <= p.degree(); ++x) {
    if (p.apply(x) == x) continue;
    if (count == 2) return false;
    moved[count++] = x;
  }
  if (count != 2) return false;
  edge_out = make_edge(moved[0], moved[1]);
  return true;
}

// Relative order of every adjacent edge pair, packed into a string key.
// Orderings of a forest multiply to equal products iff their keys agree,
// since factors of disjoint edges commute.
std::string adjacency_order_key(const EdgeOrdering& ordering) {
  std::vector<Edge> sorted = ordering.edges();
  std::sort(sorted.begin(), sorted.end());
  std::map<Edge, std::size_t> position;
  for (std::size_t i = 0; i < ordering.size(); ++i) position[ordering.edges()[i]] = i;
  std::string key;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      const auto& e = sorted[a];
      const auto& f = sorted[b];
      const bool share = e.first == f.first || e.first == f.second || e.second == f.first ||
                         e.second == f.second;
      if (!share) continue;
      key += position[e] < position[f] ? '<' : '>';
    }
  }
  return key;
}

// Candidate conjugators between two forests' labeled edge sets: bijections
// sigma with sigma(E1) == E2. Components are matched by canonical code and
// tree isomorphisms are composed per matched pair; vertices outside any edge
// are mapped in one fixed order since the conjugated element cannot see how
// they permute among themselves.
class EdgeSetMatcher {
 public:
  EdgeSetMatcher(const LabeledGraph& g1, const LabeledGraph& g2)
      : mapping_(g1.vertex_count(), 0) {
    build_side(g1, comps1_, isolated1_);
    build_side(g2, comps2_, isolated2_);
  }

  bool enumerate(const std::function<bool(const Permutation&)>& visit) {
    if (isolated1_.size() != isolated2_.size() || comps1_.size() != comps2_.size()) return true;
    auto codes1 = code_multiset(comps1_);
    auto codes2 = code_multiset(comps2_);
    if (codes1 != codes2) return true;
    for (std::size_t i = 0; i < isolated1_.size(); ++i)
      mapping_[isolated1_[i] - 1] = isolated2_[i];
    visit_ = &visit;
    std::vector<bool> used(comps2_.size(), false);
    return match_components(0, used);
  }

 private:
  struct Component {
    std::vector<int> vertices;           // original labels, sorted
    std::vector<Edge> compact_edges;     // relabeled to 1..|vertices|
    CanonicalCode code;
  };

  static void build_side(const LabeledGraph& g, std::vector<Component>& comps,
                         std::vector<int>& isolated) {
    for (const auto& members : g.connected_components()) {
      if (members.size() == 1) {
        isolated.push_back(members[0]);
        continue;
      }
      Component c;
      c.vertices = members;
      std::unordered_map<int, int> compact;
      for (std::size_t i = 0; i < members.size(); ++i) compact[members[i]] = static_cast<int>(i) + 1;
      for (const auto& [a, b] : g.edges())
        if (compact.count(a) && compact.count(b)) c.compact_edges.push_back(make_edge(compact[a], compact[b]));
      c.code = canonical_code(LabeledTree(static_cast<int>(members.size()), c.compact_edges));
      comps.push_back(std::move(c));
    }
  }

  static std::vector<std::string> code_multiset(const std::vector<Component>& comps) {
    std::vector<std::string> out;
    for (const auto& c : comps) out.push_back(c.code.code);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool match_components(std::size_t idx, std::vector<bool>& used) {
    if (idx == comps1_.size()) {
      return (*visit_)(Permutation(std::vector<int>(mapping_.begin(), mapping_.end())));
    }
    const auto& a = comps1_[idx];
    for (std::size_t j = 0; j < comps2_.size(); ++j) {
      if (used[j] || comps2_[j].code != a.code) continue;
      used[j] = true;
      const auto& b = comps2_[j];
      const LabeledTree ta(static_cast<int>(a.vertices.size()), a.compact_edges);
      const LabeledTree tb(static_cast<int>(b.vertices.size()), b.compact_edges);
      const bool keep_going = for_each_isomorphism(ta, tb, [&](const Permutation& f) {
        for (std::size_t i = 0; i < a.vertices.size(); ++i)
          mapping_[a.vertices[i] - 1] = b.vertices[f.apply(static_cast<int>(i) + 1) - 1];
        return match_components(idx + 1, used);
      });
      used[j] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  std::vector<int> mapping_;
  std::vector<Component> comps1_, comps2_;
  std::vector<int> isolated1_, isolated2_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

LabeledGraph forest_of_product(const GroupAlgebraElement& k) {
  const auto edges = extract_edges(k);
  LabeledGraph g(k.degree(), std::vector<Edge>(edges.begin(), edges.end()));
  if (!g.is_acyclic())
    throw std::invalid_argument("element is not a forest edge-factor product: edges contain a cycle");
  if (k.term_count() != (1ull << g.edge_count()) ||
      k.coefficient(Permutation::identity(k.degree())) != 1)
    throw std::invalid_argument("element is not a forest edge-factor product");
  return g;
}

std::vector<EdgeOrdering> all_orderings(const LabeledGraph& g) {
  std::vector<Edge> edges = g.edges();
  std::vector<EdgeOrdering> out;
  std::sort(edges.begin(), edges.end());
  do {
    out.emplace_back(edges);
  } while (std::next_permutation(edges.begin(), edges.end()));
  return out;
}

std::vector<EdgeOrdering> sampled_orderings(const LabeledGraph& g, int count,
                                            std::mt19937_64& rng) {
  std::vector<EdgeOrdering> out;
  out.reserve(count);
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < count; ++i) {
    seeded_shuffle(edges, rng);
    out.emplace_back(edges);
  }
  return out;
}

}  // namespace

std::vector<KRecord> s_set_records(const LabeledTree& t) {
  const int n = t.vertex_count();
  if (n > kMaxSSetOrder)
    throw std::length_error("S-set enumeration limited to 6 vertices");
  const CanonicalCode code = canonical_code(t);
  std::vector<KRecord> records;
  std::unordered_set<std::string> seen;
  for_each_permutation(n, [&](const Permutation& labeling) {
    const LabeledTree relabeled = t.relabeled(labeling);
    std::vector<Edge> edges = relabeled.edges();
    std::sort(edges.begin(), edges.end());
    do {
      EdgeOrdering ordering{edges};
      GroupAlgebraElement element = k_product(relabeled, ordering);
      if (seen.insert(element.to_text()).second)
        records.push_back(KRecord{std::move(element), labeling, std::move(ordering), code});
    } while (std::next_permutation(edges.begin(), edges.end()));
    return true;
  });
  return records;
}

std::vector<GroupAlgebraElement> s_set(const LabeledTree& t) {
  std::vector<GroupAlgebraElement> out;
  for (auto& r : s_set_records(t)) out.push_back(std::move(r.element));
  return out;
}

bool s_sets_intersect(const LabeledTree& t1, const LabeledTree& t2) {
  if (t1.vertex_count() != t2.vertex_count()) return false;
  std::unordered_set<std::string> keys;
  for (const auto& e : s_set(t1)) keys.insert(e.to_text());
  for (const auto& e : s_set(t2))
    if (keys.count(e.to_text())) return true;
  return false;
}

std::set<Edge> extract_edges(const GroupAlgebraElement& k) {
  std::set<Edge> out;
  for (const auto& [p, c] : k.terms()) {
    Edge e;
    if (!is_transposition(p, e)) continue;
    if (c != -1)
      throw std::invalid_argument(
          "element is not a forest edge-factor product: transposition term with coefficient " +
          std::to_string(c));
    out.insert(e);
  }
  return out;
}

bool ordering_consistent(const EdgeOrdering& pi1, const EdgeOrdering& pi2) {
  auto sorted1 = pi1.edges();
  auto sorted2 = pi2.edges();
  std::sort(sorted1.begin(), sorted1.end());
  std::sort(sorted2.begin(), sorted2.end());
  if (sorted1 != sorted2)
    throw std::invalid_argument("ordering consistency requires the same edge set");
  return adjacency_order_key(pi1) == adjacency_order_key(pi2);
}

ConjugatorResult find_conjugator(const GroupAlgebraElement& k1, const GroupAlgebraElement& k2,
                                 std::size_t candidate_cap) {
  if (k1.degree() != k2.degree())
    throw std::invalid_argument("degree mismatch in conjugator search");
  const LabeledGraph g1 = forest_of_product(k1);
  const LabeledGraph g2 = forest_of_product(k2);

  ConjugatorResult result;
  std::size_t tried = 0;
  bool capped = false;
  EdgeSetMatcher matcher(g1, g2);
  matcher.enumerate([&](const Permutation& sigma) {
    if (++tried > candidate_cap) {
      capped = true;
      return false;
    }
    if (conjugate_element(sigma, k1) == k2) {
      result.status = ConjugatorResult::Status::Found;
      result.sigma = sigma;
      return false;
    }
    return true;
  });
  if (!result.found() && capped) result.status = ConjugatorResult::Status::Inconclusive;
  return result;
}

std::string ProbeReport::to_json_string() const {
  nlohmann::json j = {{"n", n},
                      {"tree1", tree1},
                      {"tree2", tree2},
                      {"csf_equal", csf_equal},
                      {"witness", nullptr},
                      {"search",
                       {{"mode", mode}, {"seed", seed}, {"orderings_sampled", orderings_sampled}}}};
  if (witness) {
    j["witness"] = {{"sigma", witness->sigma.to_string()},
                    {"pi1", witness->pi1.to_string()},
                    {"pi2", witness->pi2.to_string()}};
  }
  return j.dump();
}

ProbeReport reformulation_probe(const LabeledTree& t1, const LabeledTree& t2,
                                const ProbeOptions& options) {
  if (t1.vertex_count() != t2.vertex_count())
    throw std::invalid_argument("probe requires trees of the same order");
  const int n = t1.vertex_count();
  const int guard = options.exhaustive ? kMaxProbeOrderExhaustive : kMaxProbeOrder;
  if (n > guard)
    throw std::length_error("probe guard exceeded: order " + std::to_string(n) +
                            (options.exhaustive ? " in exhaustive mode (max 5)" : " (max 8)"));

  ProbeReport report;
  report.n = n;
  report.tree1 = t1.to_string();
  report.tree2 = t2.to_string();
  report.csf_equal = csf(t1) == csf(t2);
  report.mode = options.exhaustive ? "exhaustive" : "sampled";
  report.seed = options.seed;

  std::mt19937_64 rng(options.seed);
  const auto orderings1 =
      options.exhaustive ? all_orderings(t1) : sampled_orderings(t1, options.orderings_per_side, rng);
  const auto orderings2 =
      options.exhaustive ? all_orderings(t2) : sampled_orderings(t2, options.orderings_per_side, rng);
  report.orderings_sampled = static_cast<int>(orderings1.size());

  std::unordered_map<std::string, std::size_t> side2_by_key;
  for (std::size_t i = 0; i < orderings2.size(); ++i)
    side2_by_key.emplace(adjacency_order_key(orderings2[i]), i);

  const auto& edges2 = t2.edges();
  for_each_permutation(n, [&](const Permutation& sigma) {
    // A witness must map the edge set of t1 onto the edge set of t2.
    std::vector<Edge> mapped;
    mapped.reserve(edges2.size());
    for (const auto& [a, b] : t1.edges()) mapped.push_back(make_edge(sigma.apply(a), sigma.apply(b)));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != edges2) return true;
    for (const auto& pi1 : orderings1) {
      const EdgeOrdering mapped_ordering = pi1.conjugated_by(sigma);
      const auto hit = side2_by_key.find(adjacency_order_key(mapped_ordering));
      if (hit == side2_by_key.end()) continue;
      const EdgeOrdering& pi2 = orderings2[hit->second];
      // Verify the full ordered-product equality before reporting.
      if (conjugate_element(sigma, k_product(t1, pi1)) != k_product(t2, pi2)) continue;
      report.witness = ProbeReport::Witness{sigma, pi1, pi2};
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace csf_forge
