#include "csf_forge/csf.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "csf_forge/group_algebra.hpp"
#include "csf_forge/union_find.hpp"

namespace csf_forge {

namespace {

constexpr int kMaxSubsetEdges = 30;
constexpr int kMaxColoringVertices = 8;
constexpr int kMaxSubtreeEnumVertices = 15;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Perfect lookup from component-size multisets to partition indices: the key
// of a multiset is the wrapped sum of per-size constants, updatable in O(1)
// when two components merge. Injectivity over the partitions of n is checked
// at build time, so lookups are exact, not probabilistic.
struct PartitionTable {
  std::vector<Partition> partitions;
  std::vector<std::uint64_t> size_key;  // index 0..n
  std::unordered_map<std::uint64_t, std::int32_t> index;

  explicit PartitionTable(int n) : partitions(Partition::all_of(n)), size_key(n + 1) {
    for (std::uint64_t salt = 0;; ++salt) {
      for (int k = 0; k <= n; ++k) size_key[k] = splitmix64(static_cast<std::uint64_t>(k) + (salt << 32));
      index.clear();
      index.reserve(partitions.size() * 2);
      bool injective = true;
      for (std::size_t i = 0; i < partitions.size() && injective; ++i) {
        std::uint64_t key = 0;
        for (int part : partitions[i].parts()) key += size_key[part];
        injective = index.emplace(key, static_cast<std::int32_t>(i)).second;
      }
      if (injective) return;
    }
  }
};

std::shared_ptr<const PartitionTable> partition_table(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const PartitionTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const PartitionTable>(n);
  return slot;
}

void require_acyclic(const LabeledGraph& g) {
  if (!g.is_acyclic())
    throw std::invalid_argument("chromatic symmetric function requires an acyclic graph");
}

std::int64_t integer_coefficient(const SymmetricFunction& x, const Partition& lambda) {
  return x.coefficient(lambda).as_integer();
}

Partition hook_partition(int k, int n) {  // (k, 1^(n-k))
  std::vector<int> parts{k};
  parts.insert(parts.end(), n - k, 1);
  return Partition(std::move(parts));
}

}  // namespace

SymmetricFunction csf(const LabeledGraph& g) {
  require_acyclic(g);
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int e = static_cast<int>(edges.size());
  if (e > kMaxSubsetEdges) throw std::length_error("subset expansion limited to 30 edges");

  const auto table = partition_table(n);
  std::vector<std::int64_t> acc(table->partitions.size(), 0);

  RollbackUnionFind uf(n);
  std::uint64_t key = static_cast<std::uint64_t>(n) * table->size_key[1];

  std::function<void(int, std::int64_t)> walk = [&](int idx, std::int64_t sign) {
    if (idx == e) {
      acc[table->index.at(key)] += sign;
      return;
    }
    walk(idx + 1, sign);
    const auto [a, b] = edges[idx];
    const int sa = uf.component_size(a);
    const int sb = uf.component_size(b);
    uf.unite(a, b);  // endpoints are in distinct components: the graph is a forest
    key += table->size_key[sa + sb] - table->size_key[sa] - table->size_key[sb];
    walk(idx + 1, -sign);
    key -= table->size_key[sa + sb] - table->size_key[sa] - table->size_key[sb];
    uf.undo();
  };
  walk(0, 1);

  SymmetricFunction out(n, Basis::PowerSum);
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.add_term(table->partitions[i], Rational(acc[i]));
  return out;
}

SymmetricFunction csf_group_algebra(const LabeledGraph& g) {
  require_acyclic(g);
  return frobenius_ch(k_product(g));
}

SymmetricFunction csf_subset_oracle(const LabeledGraph& g) {
  require_acyclic(g);
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int e = static_cast<int>(edges.size());
  if (e > kMaxSubsetEdges) throw std::length_error("subset oracle limited to 30 edges");

  std::map<Partition, std::int64_t, PartitionLexGreater> acc;
  std::vector<int> parent(n + 1), size(n + 1);
  for (std::uint64_t mask = 0; mask < (1ull << e); ++mask) {
    for (int v = 0; v <= n; ++v) parent[v] = v;
    const auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    int sign = 1;
    for (int i = 0; i < e; ++i) {
      if (!(mask >> i & 1)) continue;
      sign = -sign;
      parent[find(edges[i].first)] = find(edges[i].second);
    }
    std::fill(size.begin(), size.end(), 0);
    for (int v = 1; v <= n; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (int v = 1; v <= n; ++v)
      if (size[v] > 0) parts.push_back(size[v]);
    acc[Partition::from_unsorted(std::move(parts))] += sign;
  }

  SymmetricFunction out(n, Basis::PowerSum);
  for (const auto& [lambda, c] : acc)
    if (c != 0) out.add_term(lambda, Rational(c));
  return out;
}

SymmetricFunction csf_coloring_oracle(const LabeledGraph& g, int max_colors) {
  const int n = g.vertex_count();
  if (max_colors == 0) max_colors = n;
  if (n > kMaxColoringVertices)
    throw std::length_error("coloring oracle limited to 8 vertices");
  if (max_colors < n)
    throw std::invalid_argument("coloring oracle needs at least n colors");
  double total = 1;
  for (int v = 0; v < n; ++v) total *= max_colors;
  if (total > 5e8) throw std::length_error("coloring oracle: too many colorings");

  const auto& edges = g.edges();
  std::map<Partition, std::int64_t, PartitionLexGreater> tally;
  std::vector<int> color(n + 1, 1);
  std::vector<int> count(max_colors + 1, 0);
  for (;;) {
    bool proper = true;
    for (const auto& [a, b] : edges) {
      if (color[a] == color[b]) {
        proper = false;
        break;
      }
    }
    if (proper) {
      std::fill(count.begin(), count.end(), 0);
      for (int v = 1; v <= n; ++v) ++count[color[v]];
      std::vector<int> parts;
      for (int c = 1; c <= max_colors; ++c)
        if (count[c]) parts.push_back(count[c]);
      ++tally[Partition::from_unsorted(std::move(parts))];
    }
    int v = 1;
    while (v <= n && ++color[v] > max_colors) color[v++] = 1;
    if (v > n) break;
  }

  // The tally counts colorings per color-multiset type; the monomial-basis
  // coefficient is that total divided by the number of distinct exponent
  // vectors of the type over max_colors variables.
  SymmetricFunction out(n, Basis::Monomial);
  for (const auto& [mu, total_count] : tally) {
    std::int64_t falling = 1, repeats = 1;
    for (int i = 0; i < mu.length(); ++i) falling = checked_mul(falling, max_colors - i);
    for (int v = 1; v <= n; ++v) {
      const int mult = mu.multiplicity(v);
      for (int i = 2; i <= mult; ++i) repeats = checked_mul(repeats, i);
    }
    const std::int64_t arrangements = falling / repeats;
    if (falling % repeats != 0 || total_count % arrangements != 0)
      throw std::logic_error("coloring tally is not divisible by arrangement count");
    out.add_term(mu, Rational(total_count / arrangements));
  }
  return out;
}

std::string MatchingPolynomial::to_json_string() const {
  const nlohmann::json j = {{"n", n}, {"m", coeffs}};
  return j.dump();
}

std::string MatchingPolynomial::to_text() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0 || coeffs[k] != 1) s += std::to_string(coeffs[k]);
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::string SubtreeCounts::to_json_string() const {
  std::vector<std::int64_t> by_order(n + 1, 0);
  for (const auto& [k, c] : counts) by_order[k] = c;
  const nlohmann::json j = {{"n", n}, {"counts", by_order}};
  return j.dump();
}

MatchingPolynomial matching_poly_from_csf(const SymmetricFunction& x) {
  if (x.basis() != Basis::PowerSum)
    throw std::invalid_argument("matching polynomial extraction expects the p basis");
  const int n = x.n();
  MatchingPolynomial out{n, {}};
  for (int k = 0; 2 * k <= n; ++k) {
    std::vector<int> parts(k, 2);
    parts.insert(parts.end(), n - 2 * k, 1);
    const std::int64_t c = integer_coefficient(x, Partition(std::move(parts)));
    const int expected_sign = k % 2 == 0 ? 1 : -1;
    if (c != 0 && (c > 0) != (expected_sign > 0))
      throw std::domain_error("sign pattern violated: coefficient of the 2^" + std::to_string(k) +
                              " hook has the wrong sign; input is not an acyclic-graph CSF");
    if (k == 0 && c != 1)
      throw std::domain_error("sign pattern violated: coefficient of p_(1^n) must be 1");
    out.coeffs.push_back(c < 0 ? -c : c);
  }
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

MatchingPolynomial matching_poly_direct(const LabeledGraph& g) {
  if (g.edge_count() > 25) throw std::length_error("matching enumeration limited to 25 edges");
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  MatchingPolynomial out{n, std::vector<std::int64_t>(n / 2 + 1, 0)};
  std::vector<bool> used(n + 1, false);

  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int size) {
    if (idx == edges.size()) {
      ++out.coeffs[size];
      return;
    }
    rec(idx + 1, size);
    const auto [a, b] = edges[idx];
    if (!used[a] && !used[b]) {
      used[a] = used[b] = true;
      rec(idx + 1, size + 1);
      used[a] = used[b] = false;
    }
  };
  rec(0, 0);
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

SubtreeCounts subtree_counts_from_csf(const SymmetricFunction& x) {
  if (x.basis() != Basis::PowerSum)
    throw std::invalid_argument("subtree count extraction expects the p basis");
  const int n = x.n();
  SubtreeCounts out{n, {}};
  for (int k = 2; k <= n; ++k) {
    const std::int64_t c = integer_coefficient(x, hook_partition(k, n));
    out.counts[k] = c < 0 ? -c : c;
  }
  return out;
}

SubtreeCounts subtree_counts_direct(const LabeledTree& t) {
  const int n = t.vertex_count();
  if (n > kMaxSubtreeEnumVertices)
    throw std::length_error("subtree enumeration limited to 15 vertices");
  const auto adj = t.neighbors();
  std::vector<std::int64_t> by_size(n + 1, 0);

  // Connected vertex sets, each enumerated once at its minimum vertex: a
  // frontier of candidate extensions is decided left to right, include or
  // skip, so every set corresponds to exactly one decision path.
  std::vector<int> frontier;
  std::vector<bool> seen(n + 1);
  for (int v = 1; v <= n; ++v) {
    std::fill(seen.begin(), seen.end(), false);
    frontier.clear();
    seen[v] = true;
    for (int w : adj[v])
      if (w > v) {
        frontier.push_back(w);
        seen[w] = true;
      }
    int set_size = 1;
    std::function<void(std::size_t)> rec = [&](std::size_t head) {
      if (head == frontier.size()) {
        ++by_size[set_size];
        return;
      }
      rec(head + 1);  // skip frontier[head]
      const int u = frontier[head];
      const std::size_t mark = frontier.size();
      ++set_size;
      for (int w : adj[u])
        if (w > v && !seen[w]) {
          frontier.push_back(w);
          seen[w] = true;
        }
      rec(head + 1);
      while (frontier.size() > mark) {
        seen[frontier.back()] = false;
        frontier.pop_back();
      }
      --set_size;
    };
    rec(0);
  }

  SubtreeCounts out{n, {}};
  for (int k = 2; k <= n; ++k) out.counts[k] = by_size[k];
  return out;
}

std::int64_t leaf_count_from_csf(const SymmetricFunction& x) {
  if (x.n() < 3)
    throw std::invalid_argument("leaf count from the CSF is defined for order >= 3");
  const std::int64_t c = integer_coefficient(x, hook_partition(x.n() - 1, x.n()));
  return c < 0 ? -c : c;
}

bool is_connected_from_csf(const SymmetricFunction& x) {
  return !x.coefficient(Partition({x.n()})).is_zero();
}

SymmetricFunction csf_disjoint_union(const SymmetricFunction& a, const SymmetricFunction& b) {
  return p_mul(a, b);
}

}  // namespace csf_forge
