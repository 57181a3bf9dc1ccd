#include <doctest.h>

#include <cstdio>
#include <set>
#include <fstream>
#include <random>
#include <sstream>

#include "csf_forge/csf.hpp"
#include "csf_forge/distinguisher.hpp"
#include "csf_forge/tree_canon.hpp"
#include "csf_forge/tree_gen.hpp"
#include "oracles.hpp"

using namespace csf_forge;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/csf_forge_test_" + name) {
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

bool same_verdict(const VerificationReport& a, const VerificationReport& b) {
  return a.n == b.n && a.tree_count == b.tree_count && a.collision_groups == b.collision_groups;
}

}  // namespace

TEST_CASE("the 128-bit digest is stable") {
  // FNV-1a of the empty string is the offset basis
  CHECK(fnv1a128("").to_hex() == "6c62272e07bb014262b821756295c58d");
  CHECK(fnv1a128("a") != fnv1a128("b"));
  CHECK(fnv1a128("ab") == fnv1a128("ab"));
}

TEST_CASE("fingerprints separate and unify the right CSFs") {
  const LabeledTree path4(4, {{1, 2}, {2, 3}, {3, 4}});
  const LabeledTree star4(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(fingerprint(csf(path4)) != fingerprint(csf(star4)));

  std::mt19937_64 rng(83);
  for (int round = 0; round < 20; ++round) {
    const auto t = test::random_tree(2 + test::rand_below(rng, 9), rng);
    const auto s = test::random_permutation(t.vertex_count(), rng);
    CHECK(fingerprint(csf(t)) == fingerprint(csf(t.relabeled(s))));
  }

  CHECK(fingerprint(SymmetricFunction::zero(1, Basis::PowerSum)) !=
        fingerprint(SymmetricFunction::term(Basis::PowerSum, Partition({1}), 1)));
}

TEST_CASE("verify_order counts trees and finds no collisions") {
  const auto r1 = verify_order(1);
  CHECK(r1.tree_count == 1);
  CHECK(r1.conjecture_holds());

  const auto r4 = verify_order(4);
  CHECK(r4.tree_count == 2);
  CHECK(r4.collision_groups.empty());

  const auto r10 = verify_order(10, 2);
  CHECK(r10.tree_count == 106);
  CHECK(r10.collision_groups.empty());
  CHECK(r10.workers == 2);

  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> classes;
    for (const auto& t : test::all_labeled_trees(n)) classes.insert(canonical_code(t).code);
    CHECK(verify_order(n).tree_count == classes.size());
  }
}

TEST_CASE("reports are identical for any worker count") {
  const auto one = verify_order(9, 1);
  const auto two = verify_order(9, 2);
  const auto three = verify_order(9, 3);
  CHECK(same_verdict(one, two));
  CHECK(same_verdict(one, three));
}

TEST_CASE("verification guard and range validation") {
  CHECK_THROWS_AS(verify_order(19), std::length_error);
  CHECK_THROWS_AS(verify_order(3, 1, 2), std::length_error);
  CHECK_THROWS_AS(verify_order(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_range(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_range(0, 3), std::invalid_argument);
}

TEST_CASE("verify_range covers each order") {
  const auto reports = verify_range(1, 8);
  CHECK(reports.size() == 8);
  const std::vector<std::uint64_t> known{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    CHECK(reports[n - 1].n == n);
    CHECK(reports[n - 1].tree_count == known[n - 1]);
    CHECK(reports[n - 1].collision_groups.empty());
  }
}

TEST_CASE("digest collisions are re-verified before being reported") {
  const LabeledTree path4(4, {{1, 2}, {2, 3}, {3, 4}});
  const LabeledTree star4(4, {{1, 2}, {1, 3}, {1, 4}});
  const Digest128 forced{7, 7};

  const auto exact = [](const std::string& text) { return csf(LabeledGraph::parse(text)); };
  const auto code = [](const std::string& text) {
    return canonical_code(LabeledTree::parse(text)).code;
  };

  // equal digests, different CSFs: no group may be reported
  const std::vector<std::pair<Digest128, std::string>> clashing{
      {forced, path4.to_string()}, {forced, star4.to_string()}};
  CHECK(detail::collision_groups(clashing, exact, code).empty());

  // equal digests, equal CSFs: one group of both codes
  const auto relabeled = star4.relabeled(Permutation::transposition(1, 2, 4));
  const std::vector<std::pair<Digest128, std::string>> twins{
      {forced, star4.to_string()}, {forced, relabeled.to_string()}};
  const auto groups = detail::collision_groups(twins, exact, code);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].size() == 2);
}

TEST_CASE("report JSON carries the verdict") {
  const auto report = verify_order(5);
  const auto json = report.to_json_string();
  CHECK(json.find("\"n\":5") != std::string::npos);
  CHECK(json.find("\"treeCount\":3") != std::string::npos);
  CHECK(json.find("\"collisionGroups\":[]") != std::string::npos);
  CHECK(json.find("\"workers\":1") != std::string::npos);
}

TEST_CASE("checkpointed runs resume to identical verdicts") {
  TempFile cp("resume.jsonl");

  // first pass writes shards for orders 1..9
  const auto fresh = verify_range(1, 9, 1, cp.path);
  // second pass must reload every shard and agree
  const auto resumed = verify_range(1, 9, 1, cp.path);
  REQUIRE(fresh.size() == resumed.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) CHECK(same_verdict(fresh[i], resumed[i]));

  // a partially covered range picks up the missing orders
  const auto wider = verify_range(1, 10, 1, cp.path);
  CHECK(wider.back().tree_count == 106);
}

TEST_CASE("interrupted checkpoint writes are tolerated, corruption is not") {
  TempFile cp("corrupt.jsonl");
  verify_range(6, 7, 1, cp.path);

  // a trailing partial line looks like an interrupted write: accepted
  {
    std::ofstream out(cp.path, std::ios::app);
    out << "{\"payload\": \"trunc";
  }
  const auto reports = verify_range(6, 7, 1, cp.path);
  CHECK(reports.size() == 2);

  // flipping a byte inside a record is detected by the integrity digest
  std::ifstream in(cp.path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string contents = buffer.str();
  const auto pos = contents.find("n=6");
  REQUIRE(pos != std::string::npos);
  contents[pos] = 'x';
  {
    std::ofstream out(cp.path, std::ios::trunc);
    out << contents;
  }
  CHECK_THROWS_WITH_AS(verify_range(6, 7, 1, cp.path), doctest::Contains("corrupt"),
                       std::runtime_error);
}

TEST_CASE("multi-shard orders split and reassemble") {
  // order 13 has 1301 trees and spans two shards of 1024
  TempFile cp("shards.jsonl");
  const auto fresh = verify_range(13, 13, 2, cp.path);
  CHECK(fresh[0].tree_count == 1301);

  // drop the second record; the resumed run recomputes only that shard
  std::ifstream in(cp.path);
  std::string first_line;
  std::getline(in, first_line);
  in.close();
  {
    std::ofstream out(cp.path, std::ios::trunc);
    out << first_line << "\n";
  }
  const auto resumed = verify_range(13, 13, 2, cp.path);
  CHECK(same_verdict(fresh[0], resumed[0]));
}
