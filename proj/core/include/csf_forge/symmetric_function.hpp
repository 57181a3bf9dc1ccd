#ifndef CSF_FORGE_SYMMETRIC_FUNCTION_HPP
#define CSF_FORGE_SYMMETRIC_FUNCTION_HPP

#include <map>
#include <string>

#include "csf_forge/group_algebra.hpp"
#include "csf_forge/partition.hpp"
#include "csf_forge/rational.hpp"

namespace csf_forge {

enum class Basis { PowerSum, Monomial };

/// Symmetric function of a fixed degree in the power-sum or monomial basis:
/// a sparse map from partitions to rational coefficients, zero coefficients
/// never stored, keys iterated lexicographically descending.
class SymmetricFunction {
 public:
  using CoeffMap = std::map<Partition, Rational, PartitionLexGreater>;

  SymmetricFunction(int n, Basis basis);

  static SymmetricFunction zero(int n, Basis basis) { return {n, basis}; }

  /// A single basis element c * p_lambda (or c * m_lambda).
  static SymmetricFunction term(Basis basis, const Partition& lambda, const Rational& c);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }
  const CoeffMap& coefficients() const { return coeffs_; }

  /// Stored coefficient or zero.
  Rational coefficient(const Partition& lambda) const;

  /// True iff every stored partition sums to n.
  bool is_homogeneous() const;

  /// True iff every coefficient is an integer.
  bool has_integer_coefficients() const;

  void add_term(const Partition& lambda, const Rational& c);

  SymmetricFunction operator+(const SymmetricFunction& other) const;
  SymmetricFunction operator-(const SymmetricFunction& other) const;
  SymmetricFunction scaled(const Rational& c) const;

  friend bool operator==(const SymmetricFunction& a, const SymmetricFunction& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SymmetricFunction& a, const SymmetricFunction& b) {
    return !(a == b);
  }

  /// {"n":..,"basis":"p"|"m","terms":[{"partition":[..],"coeff":"..."},..]},
  /// terms in lexicographically descending partition order.
  std::string to_json_string() const;

  /// Human-readable one-liner like "p(1,1,1,1) + 3 p(3,1) - 3 p(2,1,1) - p(4)".
  std::string to_text() const;

 private:
  int n_;
  Basis basis_;
  CoeffMap coeffs_;
};

/// Linear extension of permutation -> p_{cycle type}. Composed with the
/// unscaled edge-factor product this yields the chromatic symmetric
/// function of an acyclic graph directly, with integer coefficients.
SymmetricFunction frobenius_ch(const GroupAlgebraElement& a);

/// Product in the power-sum basis: keys merge as multisets, degrees add.
SymmetricFunction p_mul(const SymmetricFunction& f, const SymmetricFunction& g);

/// Re-expresses a homogeneous power-sum-basis function over the monomial
/// basis by direct expansion; the per-partition transition rows are cached
/// per degree (initialize-once, read-many).
SymmetricFunction p_to_m(const SymmetricFunction& f);

/// Stored coefficient or zero.
Rational coefficient(const SymmetricFunction& f, const Partition& lambda);

}  // namespace csf_forge

#endif
