#include "csf_forge/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "csf_forge/rational.hpp"

namespace csf_forge {

namespace {

constexpr int kMaxProductEdges = 20;  // 2^20 terms; well past anything the pipeline needs

void require_same_degree(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string("degree mismatch in ") + what);
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  if (n_ < 1) throw std::invalid_argument("group algebra degree must be positive");
}

GroupAlgebraElement::GroupAlgebraElement(const Permutation& p, std::int64_t c)
    : GroupAlgebraElement(p.degree()) {
  add_term(p, c);
}

std::int64_t GroupAlgebraElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, std::int64_t c) {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch in term");
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
  require_same_degree(n_, other.n_, "group algebra addition");
  GroupAlgebraElement out = *this;
  for (const auto& [p, c] : other.terms_) out.add_term(p, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& other) const {
  return *this + (-other);
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out(n_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, checked_neg(c));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& other) const {
  require_same_degree(n_, other.n_, "group algebra multiplication");
  GroupAlgebraElement out(n_);
  for (const auto& [p, cp] : terms_)
    for (const auto& [q, cq] : other.terms_) out.add_term(compose(p, q), checked_mul(cp, cq));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::int64_t c) const {
  GroupAlgebraElement out(n_);
  if (c == 0) return out;
  for (const auto& [p, coeff] : terms_) out.terms_.emplace(p, checked_mul(coeff, c));
  return out;
}

std::string GroupAlgebraElement::to_text() const {
  std::string s;
  for (const auto& [p, c] : terms_) {
    s += std::to_string(c);
    s += " * ";
    s += p.to_cycle_string();
    s += "\n";
  }
  return s;
}

EdgeOrdering::EdgeOrdering(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second) throw std::invalid_argument("edge ordering contains a self-loop");
    if (e.first < 1) throw std::invalid_argument("edge ordering endpoint out of range");
  }
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate edge in ordering");
}

EdgeOrdering EdgeOrdering::conjugated_by(const Permutation& s) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(make_edge(s.apply(e.first), s.apply(e.second)));
  return EdgeOrdering(std::move(out));
}

bool EdgeOrdering::matches(const LabeledGraph& g) const {
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return sorted == g.edges();
}

std::string EdgeOrdering::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
  }
  return s;
}

EdgeOrdering EdgeOrdering::parse(const std::string& text) {
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    const std::size_t dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      throw std::invalid_argument("ordering parse error: expected i-j in \"" + token + "\"");
    try {
      std::size_t used = 0;
      const int i = std::stoi(token.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument("");
      const int j = std::stoi(token.substr(dash + 1), &used);
      if (used != token.size() - dash - 1) throw std::invalid_argument("");
      edges.push_back(make_edge(i, j));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("ordering parse error: bad endpoint in \"" + token + "\"");
    }
    pos = comma + 1;
  }
  return EdgeOrdering(std::move(edges));
}

GroupAlgebraElement k_product(const LabeledGraph& g, const EdgeOrdering& ordering) {
  if (!g.is_acyclic())
    throw std::invalid_argument("edge-factor product requires an acyclic graph");
  if (!ordering.matches(g))
    throw std::invalid_argument("ordering does not list exactly the graph's edges");
  if (g.edge_count() > kMaxProductEdges)
    throw std::length_error("edge-factor product limited to 20 edges");

  const int n = g.vertex_count();
  GroupAlgebraElement acc = GroupAlgebraElement::unit(n);
  for (const auto& [i, j] : ordering.edges()) {
    const Permutation t = Permutation::transposition(i, j, n);
    GroupAlgebraElement next(n);
    for (const auto& [p, c] : acc.terms()) {
      next.add_term(p, c);
      next.add_term(compose(p, t), checked_neg(c));
    }
    acc = std::move(next);
  }
  return acc;
}

GroupAlgebraElement k_product(const LabeledGraph& g) {
  return k_product(g, EdgeOrdering::of_graph(g));
}

GroupAlgebraElement conjugate_element(const Permutation& s, const GroupAlgebraElement& a) {
  require_same_degree(s.degree(), a.degree(), "element conjugation");
  GroupAlgebraElement out(a.degree());
  for (const auto& [p, c] : a.terms()) out.add_term(conjugate(s, p), c);
  return out;
}

}  // namespace csf_forge
