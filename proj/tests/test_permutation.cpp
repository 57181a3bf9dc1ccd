#include <doctest.h>

#include <random>
#include <vector>

#include "csf_forge/permutation.hpp"
#include "oracles.hpp"

using namespace csf_forge;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

TEST_CASE("construction validates bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(0), std::invalid_argument);
  CHECK(Permutation(std::vector<int>{2, 1}) == Permutation::transposition(1, 2, 2));
}

TEST_CASE("compose applies right to left") {
  const auto t12 = Permutation::transposition(1, 2, 3);
  const auto t23 = Permutation::transposition(2, 3, 3);

  CHECK(compose(Permutation::identity(4), Permutation::transposition(1, 2, 4)) ==
        Permutation::transposition(1, 2, 4));
  CHECK(compose(t12, t12) == Permutation::identity(3));

  // (12)(23) maps 1->2, 2->3, 3->1 under p(q(x)).
  const auto three_cycle = compose(t12, t23);
  CHECK(three_cycle.apply(1) == 2);
  CHECK(three_cycle.apply(2) == 3);
  CHECK(three_cycle.apply(3) == 1);

  CHECK_THROWS_AS(compose(t12, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("conjugation relabels points") {
  // (12)(13)(12) = (23)
  CHECK(conjugate(Permutation::transposition(1, 2, 3), Permutation::transposition(1, 3, 3)) ==
        Permutation::transposition(2, 3, 3));
  const auto p = Permutation(std::vector<int>{3, 1, 2, 4});
  CHECK(conjugate(Permutation::identity(4), p) == p);
  CHECK(conjugate(p, Permutation::identity(4)) == Permutation::identity(4));
}

TEST_CASE("cycle type materializes fixed points") {
  CHECK(Permutation::transposition(1, 2, 4).cycle_type() == Partition({2, 1, 1}));
  CHECK(Permutation::identity(5).cycle_type() == Partition({1, 1, 1, 1, 1}));
  const auto p = compose(Permutation::transposition(1, 2, 4), Permutation::transposition(2, 3, 4));
  CHECK(p.cycle_type() == Partition({3, 1}));
  CHECK(Permutation::transposition(1, 3, 5).cycle_type() == Partition({2, 1, 1, 1}));
}

TEST_CASE("transposition validates and ignores endpoint order") {
  CHECK(Permutation::transposition(2, 1, 4) == Permutation::transposition(1, 2, 4));
  CHECK_THROWS_AS(Permutation::transposition(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(1, 5, 4), std::invalid_argument);
}

TEST_CASE("group laws hold exhaustively at small degree") {
  for (int n = 1; n <= 4; ++n) {
    const auto group = symmetric_group(n);
    const auto id = Permutation::identity(n);
    for (const auto& p : group) {
      CHECK(compose(p, p.inverse()) == id);
      CHECK(compose(p.inverse(), p) == id);
      CHECK(compose(p, id) == p);
      CHECK(compose(id, p) == p);
      CHECK(p.cycle_type().n() == n);
    }
    if (n > 3) continue;  // associativity cubes the group size
    for (const auto& p : group)
      for (const auto& q : group)
        for (const auto& r : group)
          CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("group laws hold for random permutations up to degree 10") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + test::rand_below(rng, 10);
    const auto p = test::random_permutation(n, rng);
    const auto q = test::random_permutation(n, rng);
    const auto r = test::random_permutation(n, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, p.inverse()) == Permutation::identity(n));
    CHECK(p.cycle_type().n() == n);
  }
}

TEST_CASE("cycle type is a class function, exhaustively at degree 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto group = symmetric_group(n);
    for (const auto& s : group)
      for (const auto& p : group)
        CHECK(conjugate(s, p).cycle_type() == p.cycle_type());
  }
}

TEST_CASE("cycle-notation text round-trips") {
  CHECK(Permutation::transposition(1, 2, 4).to_string() == "n=4:(1 2)");
  CHECK(Permutation::identity(3).to_string() == "n=3:()");
  CHECK(Permutation::parse("n=4:(1 2)") == Permutation::transposition(1, 2, 4));
  CHECK(Permutation::parse("n=3:()") == Permutation::identity(3));

  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const auto p = test::random_permutation(1 + test::rand_below(rng, 9), rng);
    CHECK(Permutation::parse(p.to_string()) == p);
  }

  CHECK_THROWS_AS(Permutation::parse("4:(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("n=4:(1 5)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("n=4:(1 2)(2 3)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("n=4:(1 x)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("n=0:()"), std::invalid_argument);
}
