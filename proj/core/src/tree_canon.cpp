#include "csf_forge/tree_canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace csf_forge {

namespace {

std::vector<int> children_of(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<int> out;
  for (int w : adj[v])
    if (w != parent) out.push_back(w);
  return out;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> parts;
  for (int w : children_of(adj, v, parent)) parts.push_back(rooted_code(adj, w, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

// Subtree code for every vertex under a fixed root orientation.
void fill_codes(const std::vector<std::vector<int>>& adj, int v, int parent,
                std::vector<std::string>& codes) {
  std::vector<std::string> parts;
  for (int w : children_of(adj, v, parent)) {
    fill_codes(adj, w, v, codes);
    parts.push_back(codes[w]);
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  codes[v] = std::move(out);
}

// Enumerates code-preserving subtree matchings in continuation-passing style;
// every callback returns false to abort the whole walk.
class IsomorphismWalk {
 public:
  IsomorphismWalk(const std::vector<std::vector<int>>& adj_a,
                  const std::vector<std::vector<int>>& adj_b,
                  const std::vector<std::string>& code_a, const std::vector<std::string>& code_b,
                  int n, const std::function<bool(const Permutation&)>& visit)
      : adj_a_(adj_a), adj_b_(adj_b), code_a_(code_a), code_b_(code_b), visit_(visit),
        mapping_(n, 0) {}

  bool match_pair(int u, int v, int pu, int pv, const std::function<bool()>& done) {
    mapping_[u - 1] = v;
    const auto ca = children_of(adj_a_, u, pu);
    const auto cb = children_of(adj_b_, v, pv);
    std::vector<bool> used(cb.size(), false);
    return match_children(ca, cb, used, 0, u, v, done);
  }

  bool emit() {
    return visit_(Permutation(std::vector<int>(mapping_.begin(), mapping_.end())));
  }

 private:
  bool match_children(const std::vector<int>& ca, const std::vector<int>& cb,
                      std::vector<bool>& used, std::size_t idx, int u, int v,
                      const std::function<bool()>& done) {
    if (idx == ca.size()) return done();
    const int a_child = ca[idx];
    for (std::size_t bi = 0; bi < cb.size(); ++bi) {
      if (used[bi] || code_b_[cb[bi]] != code_a_[a_child]) continue;
      used[bi] = true;
      const bool keep_going = match_pair(a_child, cb[bi], u, v, [&] {
        return match_children(ca, cb, used, idx + 1, u, v, done);
      });
      used[bi] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  const std::vector<std::vector<int>>& adj_a_;
  const std::vector<std::vector<int>>& adj_b_;
  const std::vector<std::string>& code_a_;
  const std::vector<std::string>& code_b_;
  const std::function<bool(const Permutation&)>& visit_;
  std::vector<int> mapping_;
};

}  // namespace

std::vector<int> tree_center(const LabeledTree& t) {
  const int n = t.vertex_count();
  auto adj = t.neighbors();
  std::vector<int> degree(n + 1, 0);
  for (int v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());

  std::vector<int> layer;
  std::vector<bool> removed(n + 1, false);
  for (int v = 1; v <= n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int w : adj[v]) {
        if (removed[w]) continue;
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 1; v <= n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

CanonicalCode canonical_code(const LabeledTree& t) {
  const auto adj = t.neighbors();
  const auto centers = tree_center(t);
  if (centers.size() == 1) return {rooted_code(adj, centers[0], 0)};
  std::string s1 = rooted_code(adj, centers[0], centers[1]);
  std::string s2 = rooted_code(adj, centers[1], centers[0]);
  if (s2 < s1) std::swap(s1, s2);
  return {s1 + s2};
}

bool for_each_isomorphism(const LabeledTree& a, const LabeledTree& b,
                          const std::function<bool(const Permutation&)>& visit) {
  if (a.vertex_count() != b.vertex_count()) return true;
  const int n = a.vertex_count();
  const auto adj_a = a.neighbors();
  const auto adj_b = b.neighbors();
  const auto centers_a = tree_center(a);
  const auto centers_b = tree_center(b);
  if (centers_a.size() != centers_b.size()) return true;

  std::vector<std::string> code_a(n + 1), code_b(n + 1);
  IsomorphismWalk walk(adj_a, adj_b, code_a, code_b, n, visit);

  if (centers_a.size() == 1) {
    fill_codes(adj_a, centers_a[0], 0, code_a);
    fill_codes(adj_b, centers_b[0], 0, code_b);
    if (code_a[centers_a[0]] != code_b[centers_b[0]]) return true;
    return walk.match_pair(centers_a[0], centers_b[0], 0, 0, [&] { return walk.emit(); });
  }

  const int a1 = centers_a[0], a2 = centers_a[1];
  const int b1 = centers_b[0], b2 = centers_b[1];
  fill_codes(adj_a, a1, a2, code_a);
  fill_codes(adj_a, a2, a1, code_a);
  fill_codes(adj_b, b1, b2, code_b);
  fill_codes(adj_b, b2, b1, code_b);

  // A bijection must map the center pair to the center pair; try both pairings.
  const std::pair<int, int> pairings[2] = {{b1, b2}, {b2, b1}};
  for (const auto& [first, second] : pairings) {
    if (code_a[a1] != code_b[first] || code_a[a2] != code_b[second]) continue;
    const bool keep_going = walk.match_pair(a1, first, a2, second, [&] {
      return walk.match_pair(a2, second, a1, first, [&] { return walk.emit(); });
    });
    if (!keep_going) return false;
  }
  return true;
}

std::optional<Permutation> tree_isomorphism(const LabeledTree& a, const LabeledTree& b) {
  std::optional<Permutation> result;
  for_each_isomorphism(a, b, [&](const Permutation& f) {
    result = f;
    return false;  // first hit suffices
  });
  return result;
}

}  // namespace csf_forge
