#include "csf_forge/symmetric_function.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace csf_forge {

namespace {

constexpr int kMaxMonomialDegree = 12;  // Bell-number growth; oracle scale only

// Row of the power-sum -> monomial transition for one lambda: walks set
// partitions of lambda's parts; a block of sum v becomes an exponent v, and
// groupings with block-sum multiset mu contribute (product over distinct
// values v of mult_mu(v)!) ways of placing the blocks onto distinct
// variables.
std::map<Partition, std::int64_t, PartitionLexGreater> transition_row(const Partition& lambda) {
  std::map<Partition, std::int64_t, PartitionLexGreater> row;
  const auto& parts = lambda.parts();
  std::vector<int> block_sums;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == parts.size()) {
      const Partition mu = Partition::from_unsorted(block_sums);
      std::int64_t ways = 1;
      int run = 1;
      const auto& ms = mu.parts();
      for (std::size_t i = 1; i <= ms.size(); ++i) {
        if (i < ms.size() && ms[i] == ms[i - 1]) {
          ways = checked_mul(ways, ++run);
        } else {
          run = 1;
        }
      }
      auto [it, inserted] = row.emplace(mu, ways);
      if (!inserted) it->second = checked_add(it->second, ways);
      return;
    }
    const std::size_t blocks = block_sums.size();  // recursion grows the tail
    for (std::size_t b = 0; b < blocks; ++b) {
      block_sums[b] += parts[idx];
      rec(idx + 1);
      block_sums[b] -= parts[idx];
    }
    block_sums.push_back(parts[idx]);
    rec(idx + 1);
    block_sums.pop_back();
  };
  rec(0);
  return row;
}

const std::map<Partition, std::int64_t, PartitionLexGreater>& cached_transition_row(
    const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::map<Partition, std::int64_t, PartitionLexGreater>,
                  PartitionLexGreater>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, transition_row(lambda)).first;
  return it->second;
}

}  // namespace

SymmetricFunction::SymmetricFunction(int n, Basis basis) : n_(n), basis_(basis) {
  if (n_ < 0) throw std::invalid_argument("symmetric function degree must be nonnegative");
}

SymmetricFunction SymmetricFunction::term(Basis basis, const Partition& lambda,
                                          const Rational& c) {
  SymmetricFunction f(lambda.n(), basis);
  f.add_term(lambda, c);
  return f;
}

Rational SymmetricFunction::coefficient(const Partition& lambda) const {
  const auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool SymmetricFunction::is_homogeneous() const {
  for (const auto& [lambda, c] : coeffs_)
    if (lambda.n() != n_) return false;
  return true;
}

bool SymmetricFunction::has_integer_coefficients() const {
  for (const auto& [lambda, c] : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

void SymmetricFunction::add_term(const Partition& lambda, const Rational& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = coeffs_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymmetricFunction SymmetricFunction::operator+(const SymmetricFunction& other) const {
  if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch in addition");
  if (n_ != other.n_) throw std::invalid_argument("degree mismatch in addition");
  SymmetricFunction out = *this;
  for (const auto& [lambda, c] : other.coeffs_) out.add_term(lambda, c);
  return out;
}

SymmetricFunction SymmetricFunction::operator-(const SymmetricFunction& other) const {
  return *this + other.scaled(Rational(-1));
}

SymmetricFunction SymmetricFunction::scaled(const Rational& c) const {
  SymmetricFunction out(n_, basis_);
  if (c.is_zero()) return out;
  for (const auto& [lambda, coeff] : coeffs_) out.coeffs_.emplace(lambda, coeff * c);
  return out;
}

std::string SymmetricFunction::to_json_string() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : coeffs_) {
    terms.push_back({{"partition", lambda.parts()}, {"coeff", c.to_string()}});
  }
  const nlohmann::json j = {
      {"n", n_}, {"basis", basis_ == Basis::PowerSum ? "p" : "m"}, {"terms", terms}};
  return j.dump();
}

std::string SymmetricFunction::to_text() const {
  if (coeffs_.empty()) return "0";
  const char* letter = basis_ == Basis::PowerSum ? "p" : "m";
  std::string s;
  bool first = true;
  for (const auto& [lambda, c] : coeffs_) {
    const Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) s += "-";
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (!(abs == Rational(1))) s += abs.to_string() + " ";
    s += letter + lambda.to_string();
  }
  return s;
}

SymmetricFunction frobenius_ch(const GroupAlgebraElement& a) {
  SymmetricFunction out(a.degree(), Basis::PowerSum);
  for (const auto& [p, c] : a.terms()) out.add_term(p.cycle_type(), Rational(c));
  return out;
}

SymmetricFunction p_mul(const SymmetricFunction& f, const SymmetricFunction& g) {
  if (f.basis() != Basis::PowerSum || g.basis() != Basis::PowerSum)
    throw std::invalid_argument("power-sum product requires both factors in the p basis");
  SymmetricFunction out(f.n() + g.n(), Basis::PowerSum);
  for (const auto& [lambda, cf] : f.coefficients())
    for (const auto& [mu, cg] : g.coefficients())
      out.add_term(lambda.merged_with(mu), cf * cg);
  return out;
}

SymmetricFunction p_to_m(const SymmetricFunction& f) {
  if (f.basis() != Basis::PowerSum)
    throw std::invalid_argument("monomial conversion expects a power-sum-basis input");
  if (!f.is_homogeneous())
    throw std::invalid_argument("monomial conversion requires a homogeneous input");
  if (f.n() > kMaxMonomialDegree)
    throw std::length_error("monomial conversion limited to degree 12");
  SymmetricFunction out(f.n(), Basis::Monomial);
  for (const auto& [lambda, c] : f.coefficients())
    for (const auto& [mu, count] : cached_transition_row(lambda))
      out.add_term(mu, c * Rational(count));
  return out;
}

Rational coefficient(const SymmetricFunction& f, const Partition& lambda) {
  return f.coefficient(lambda);
}

}  // namespace csf_forge
