#include <doctest.h>

#include <random>

#include "csf_forge/csf.hpp"
#include "csf_forge/symmetric_function.hpp"
#include "csf_forge/tree_gen.hpp"
#include "oracles.hpp"

using namespace csf_forge;

namespace {

const LabeledTree kStar4(4, {{1, 2}, {1, 3}, {1, 4}});

SymmetricFunction star4_expected() {
  SymmetricFunction f(4, Basis::PowerSum);
  f.add_term(Partition({1, 1, 1, 1}), 1);
  f.add_term(Partition({3, 1}), 3);
  f.add_term(Partition({2, 1, 1}), -3);
  f.add_term(Partition({4}), -1);
  return f;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(7).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 3).as_integer(), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}

TEST_CASE("frobenius characteristic maps a permutation to its cycle-type power sum") {
  const GroupAlgebraElement single(Permutation::transposition(1, 2, 4), 1);
  CHECK(frobenius_ch(single) ==
        SymmetricFunction::term(Basis::PowerSum, Partition({2, 1, 1}), 1));

  CHECK(frobenius_ch(GroupAlgebraElement::zero(5)).is_zero());

  CHECK(frobenius_ch(k_product(kStar4)) == star4_expected());
}

TEST_CASE("frobenius characteristic is linear and a class function") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + test::rand_below(rng, 5);
    const auto a = test::random_element(n, 5, rng);
    const auto b = test::random_element(n, 5, rng);
    CHECK(frobenius_ch(a + b) == frobenius_ch(a) + frobenius_ch(b));
  }

  // class function: exhaustively over sigma at order <= 5, on tree products
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    for (const auto& tree : generate_free_trees(n)) {
      const auto k = k_product(tree);
      const auto ch = frobenius_ch(k);
      auto s_images = images;
      do {
        CHECK(frobenius_ch(conjugate_element(Permutation(s_images), k)) == ch);
      } while (std::next_permutation(s_images.begin(), s_images.end()));
    }
  }
}

TEST_CASE("power-sum products merge partitions") {
  const auto p2 = SymmetricFunction::term(Basis::PowerSum, Partition({2}), 1);
  const auto p11 = SymmetricFunction::term(Basis::PowerSum, Partition({1, 1}), 1);
  CHECK(p_mul(p2, p11) ==
        SymmetricFunction::term(Basis::PowerSum, Partition({2, 1, 1}), 1));

  CHECK(p_mul(p2, SymmetricFunction::zero(3, Basis::PowerSum)).is_zero());
  CHECK(p_mul(p2, SymmetricFunction::zero(3, Basis::PowerSum)).n() == 5);

  // the square of the single-edge CSF, expanded by hand
  const auto edge = csf(LabeledGraph(2, {{1, 2}}));
  SymmetricFunction expected(4, Basis::PowerSum);
  expected.add_term(Partition({1, 1, 1, 1}), 1);
  expected.add_term(Partition({2, 1, 1}), -2);
  expected.add_term(Partition({2, 2}), 1);
  CHECK(p_mul(edge, edge) == expected);

  CHECK_THROWS_AS(p_mul(edge, p_to_m(edge)), std::invalid_argument);
}

TEST_CASE("power sums expand over the monomial basis") {
  const auto p11 = SymmetricFunction::term(Basis::PowerSum, Partition({1, 1}), 1);
  SymmetricFunction expected(2, Basis::Monomial);
  expected.add_term(Partition({2}), 1);
  expected.add_term(Partition({1, 1}), 2);
  CHECK(p_to_m(p11) == expected);

  for (int n : {1, 3, 6}) {
    CHECK(p_to_m(SymmetricFunction::term(Basis::PowerSum, Partition({n}), 1)) ==
          SymmetricFunction::term(Basis::Monomial, Partition({n}), 1));
  }

  SymmetricFunction star_m(4, Basis::Monomial);
  star_m.add_term(Partition({1, 1, 1, 1}), 24);
  star_m.add_term(Partition({2, 1, 1}), 6);
  star_m.add_term(Partition({3, 1}), 1);
  CHECK(p_to_m(csf(kStar4)) == star_m);

  auto inhomogeneous = SymmetricFunction::zero(3, Basis::PowerSum);
  inhomogeneous.add_term(Partition({2}), 1);
  CHECK_THROWS_AS(p_to_m(inhomogeneous), std::invalid_argument);
  CHECK_THROWS_AS(p_to_m(star_m), std::invalid_argument);
}

TEST_CASE("monomial conversion preserves evaluations, equal to the chromatic polynomial") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& tree : generate_free_trees(n)) {
      const auto x = csf(tree);
      const auto m = p_to_m(x);
      for (int k = 0; k <= 4; ++k) {
        const auto value = test::evaluate_at_ones(x, k);
        CHECK(value == test::evaluate_at_ones(m, k));
        // a tree on n vertices has k(k-1)^(n-1) proper k-colorings
        const std::int64_t chromatic =
            n == 1 ? k : k * test::int_pow(k - 1, n - 1);
        CHECK(value == chromatic);
      }
    }
  }
}

TEST_CASE("coefficient lookups") {
  const auto x = csf(kStar4);
  CHECK(coefficient(x, Partition({3, 1})) == Rational(3));
  CHECK(coefficient(x, Partition({2, 2})) == Rational(0));
  CHECK(coefficient(SymmetricFunction::zero(4, Basis::PowerSum), Partition({4})) == Rational(0));
}

TEST_CASE("tree CSF coefficients: integral, signed by length, summing to 2^(n-1)") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& tree : generate_free_trees(n)) {
      const auto x = csf(tree);
      CHECK(x.has_integer_coefficients());
      CHECK(coefficient(x, Partition(std::vector<int>(n, 1))) == Rational(1));
      std::int64_t total_abs = 0;
      for (const auto& [lambda, c] : x.coefficients()) {
        const auto value = c.as_integer();
        const int expected_sign = (n - lambda.length()) % 2 == 0 ? 1 : -1;
        CHECK(value * expected_sign > 0);
        total_abs += value < 0 ? -value : value;
      }
      CHECK(total_abs == (std::int64_t{1} << (n - 1)));
    }
  }
}

TEST_CASE("JSON serialization is canonical") {
  CHECK(csf(kStar4).to_json_string() ==
        R"({"basis":"p","n":4,"terms":[{"coeff":"-1","partition":[4]},)"
        R"({"coeff":"3","partition":[3,1]},{"coeff":"-3","partition":[2,1,1]},)"
        R"({"coeff":"1","partition":[1,1,1,1]}]})");
  CHECK(SymmetricFunction::zero(2, Basis::Monomial).to_json_string() ==
        R"({"basis":"m","n":2,"terms":[]})");
}

TEST_CASE("plain-text rendering") {
  CHECK(csf(kStar4).to_text() == "-p(4) + 3 p(3,1) - 3 p(2,1,1) + p(1,1,1,1)");
  CHECK(SymmetricFunction::zero(3, Basis::PowerSum).to_text() == "0");
}
