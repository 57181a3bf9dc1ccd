// Test-side oracles, independent of the library's production code paths:
// Prüfer-sequence enumeration of labeled trees, brute-force evaluation of
// symmetric functions, and deterministic random generators for property
// tests. Everything here is deliberately simple and slow.
#ifndef CSF_FORGE_TESTS_ORACLES_HPP
#define CSF_FORGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "csf_forge/graph.hpp"
#include "csf_forge/group_algebra.hpp"
#include "csf_forge/symmetric_function.hpp"

namespace csf_forge::test {

// Standard Prüfer decode: sequence entries in {1..n}, length n-2.
inline LabeledTree prufer_decode(const std::vector<int>& seq, int n) {
  if (n == 1) return LabeledTree(1, {});
  if (static_cast<int>(seq.size()) != n - 2) throw std::invalid_argument("bad Prüfer length");
  std::vector<int> degree(n + 1, 1);
  for (int v : seq) ++degree[v];
  std::vector<Edge> edges;
  std::vector<bool> used(n + 1, false);
  for (int v : seq) {
    int leaf = -1;
    for (int u = 1; u <= n; ++u) {
      if (degree[u] == 1 && !used[u]) {
        leaf = u;
        break;
      }
    }
    edges.push_back(make_edge(leaf, v));
    used[leaf] = true;
    --degree[v];
  }
  std::vector<int> last;
  for (int u = 1; u <= n; ++u)
    if (!used[u] && degree[u] == 1) last.push_back(u);
  edges.push_back(make_edge(last[0], last[1]));
  return LabeledTree(n, std::move(edges));
}

// All n^(n-2) labeled trees on {1..n}; feasible to n = 8.
inline std::vector<LabeledTree> all_labeled_trees(int n) {
  if (n > 8) throw std::invalid_argument("labeled-tree enumeration capped at n = 8");
  std::vector<LabeledTree> out;
  if (n == 1) {
    out.push_back(LabeledTree(1, {}));
    return out;
  }
  std::vector<int> seq(n - 2, 1);
  for (;;) {
    out.push_back(prufer_decode(seq, n));
    int i = 0;
    while (i < n - 2 && ++seq[i] > n) seq[i++] = 1;
    if (i == n - 2) break;
  }
  return out;
}

inline std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Value at x_1 = ... = x_k = 1, all other variables 0. For a CSF this is the
// chromatic polynomial at k.
inline std::int64_t evaluate_at_ones(const SymmetricFunction& f, int k) {
  std::int64_t total = 0;
  for (const auto& [lambda, c] : f.coefficients()) {
    std::int64_t term;
    if (f.basis() == Basis::PowerSum) {
      // p_j(1^k) = k, so p_lambda(1^k) = k^(number of parts)
      term = int_pow(k, lambda.length());
    } else {
      // m_lambda(1^k) = number of distinct exponent vectors over k variables
      if (lambda.length() > k) {
        term = 0;
      } else {
        std::int64_t falling = 1, repeats = 1;
        for (int i = 0; i < lambda.length(); ++i) falling *= k - i;
        for (int v = 1; v <= lambda.n(); ++v)
          for (int i = 2; i <= lambda.multiplicity(v); ++i) repeats *= i;
        term = falling / repeats;
      }
    }
    total += c.as_integer() * term;
  }
  return total;
}

// Deterministic helpers; mt19937_64 plus modulo keeps runs identical.
inline int rand_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  for (int i = n; i > 1; --i) std::swap(images[i - 1], images[rand_below(rng, i)]);
  return Permutation(std::move(images));
}

inline LabeledTree random_tree(int n, std::mt19937_64& rng) {
  if (n <= 2) return n == 1 ? LabeledTree(1, {}) : LabeledTree(2, {{1, 2}});
  std::vector<int> seq(n - 2);
  for (auto& v : seq) v = 1 + rand_below(rng, n);
  return prufer_decode(seq, n);
}

inline EdgeOrdering random_ordering(const LabeledGraph& g, std::mt19937_64& rng) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[rand_below(rng, static_cast<int>(i))]);
  return EdgeOrdering(std::move(edges));
}

inline GroupAlgebraElement random_element(int n, int terms, std::mt19937_64& rng) {
  GroupAlgebraElement out(n);
  for (int i = 0; i < terms; ++i)
    out.add_term(random_permutation(n, rng), rand_below(rng, 9) - 4);
  return out;
}

// A random edge ordering consistent with the given one: a random linear
// extension of the precedence of edges that share an endpoint.
inline EdgeOrdering random_consistent_reordering(const EdgeOrdering& pi, std::mt19937_64& rng) {
  const auto& edges = pi.edges();
  const std::size_t e = edges.size();
  const auto share = [](const Edge& a, const Edge& b) {
    return a.first == b.first || a.first == b.second || a.second == b.first ||
           a.second == b.second;
  };
  std::vector<bool> placed(e, false);
  std::vector<Edge> out;
  while (out.size() < e) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < e; ++i) {
      if (placed[i]) continue;
      bool blocked = false;
      for (std::size_t j = 0; j < i; ++j)
        if (!placed[j] && share(edges[i], edges[j])) blocked = true;
      if (!blocked) ready.push_back(i);
    }
    const std::size_t pick = ready[rand_below(rng, static_cast<int>(ready.size()))];
    placed[pick] = true;
    out.push_back(edges[pick]);
  }
  return EdgeOrdering(std::move(out));
}

}  // namespace csf_forge::test

#endif
