#include "csf_forge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csf_forge {

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& token) {
  throw std::invalid_argument("permutation parse error: " + what + " in \"" + token + "\"");
}

}  // namespace

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation image out of range");
    if (seen[v]) throw std::invalid_argument("permutation image sequence is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("transposition point out of range");
  if (i == j) throw std::invalid_argument("transposition requires two distinct points");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

int Permutation::apply(int point) const {
  if (point < 1 || point > degree()) throw std::out_of_range("permutation point out of range");
  return images_[point - 1];
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
  const int n = degree();
  std::vector<int> lengths;
  std::vector<bool> visited(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (int x = start; !visited[x]; x = images_[x - 1]) {
      visited[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (visited[start] || images_[start - 1] == start) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[x]; x = images_[x - 1]) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& cycle : cyc) {
    s += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(cycle[i]);
    }
    s += ")";
  }
  return s;
}

std::string Permutation::to_string() const {
  return "n=" + std::to_string(degree()) + ":" + to_cycle_string();
}

Permutation Permutation::parse(const std::string& text) {
  if (text.rfind("n=", 0) != 0) parse_fail("expected \"n=\" prefix", text);
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) parse_fail("expected ':' after degree", text);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(2, colon - 2), &used);
    if (used != colon - 2) parse_fail("bad degree", text.substr(0, colon));
  } catch (const std::invalid_argument&) {
    parse_fail("bad degree", text.substr(0, colon));
  }
  if (n < 1) parse_fail("degree must be positive", text.substr(0, colon));

  Permutation result(n);
  std::vector<bool> used_point(n + 1, false);
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    if (text[pos] != '(') parse_fail("expected '('", text.substr(pos));
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) parse_fail("unterminated cycle", text.substr(pos));
    std::vector<int> cycle;
    std::size_t p = pos + 1;
    while (p < close) {
      while (p < close && text[p] == ' ') ++p;
      if (p == close) break;
      std::size_t q = p;
      while (q < close && text[q] != ' ') ++q;
      const std::string token = text.substr(p, q - p);
      int point = 0;
      try {
        std::size_t used = 0;
        point = std::stoi(token, &used);
        if (used != token.size()) parse_fail("bad point", token);
      } catch (const std::invalid_argument&) {
        parse_fail("bad point", token);
      }
      if (point < 1 || point > n) parse_fail("point out of range", token);
      if (used_point[point]) parse_fail("point repeated across cycles", token);
      used_point[point] = true;
      cycle.push_back(point);
      p = q;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch in composition");
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[x - 1] = p.apply(q.apply(x));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& s, const Permutation& p) {
  if (s.degree() != p.degree())
    throw std::invalid_argument("permutation degree mismatch in conjugation");
  // s p s^{-1} sends s(x) to s(p(x)); build images directly.
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[s.apply(x) - 1] = s.apply(p.apply(x));
  return Permutation(std::move(images));
}

}  // namespace csf_forge
