#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lindnet/error.hpp"
#include "lindnet/network.hpp"
#include "support/generators.hpp"

using namespace lindnet;
using testgen::poly;
using testgen::scalar_space;

namespace {

const Poly s = Poly::shift();
const Poly one = poly({1});

Network circuit() {
  const SignalSpace space({{"V", 1}, {"V_C", 1}, {"I1", 1}, {"I2", 1}});
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix({{one, -one, -s, -s}}));
  comps.emplace_back(space, PolyMatrix({{Poly(), -s, one, Poly()}}));
  comps.emplace_back(space, PolyMatrix({{Poly(), -s, Poly(), one}}));
  return Network(space, std::move(comps));
}

// four block rows realizing the incidence pattern
// [1110; 0101; 0011; 0011]
Network four_component_network() {
  const SignalSpace space = scalar_space(4);
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix({{one, s, poly({1, 1}), Poly()}}));
  comps.emplace_back(space, PolyMatrix({{Poly(), one, Poly(), s}}));
  comps.emplace_back(space, PolyMatrix({{Poly(), Poly(), s, one}}));
  comps.emplace_back(space, PolyMatrix({{Poly(), Poly(), one, poly({1, 1})}}));
  return Network(space, std::move(comps));
}

Network random_network(std::mt19937& rng, std::size_t n, std::size_t q) {
  const SignalSpace space = scalar_space(q);
  std::vector<KernelRep> comps;
  std::uniform_int_distribution<std::size_t> rows(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    comps.emplace_back(space, testgen::random_matrix(rng, rows(rng), q, 2, 40));
  }
  return Network(space, std::move(comps));
}

}  // namespace

TEST_CASE("network construction validates its parts") {
  const SignalSpace space = scalar_space(2);
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix({{s, one}}));
  const Network net(space, comps);
  CHECK(net.names() == std::vector<std::string>{"S1"});

  CHECK_THROWS_AS(Network(space, {}), Error);
  CHECK_THROWS_AS(Network(space, comps, {"a", "b"}), Error);
  std::vector<KernelRep> other;
  other.emplace_back(scalar_space(3), PolyMatrix(1, 3));
  CHECK_THROWS_AS(Network(space, other), Error);
}

TEST_CASE("interconnection stacks the component representations") {
  const Network net = circuit();
  const KernelRep whole = interconnect(net);
  CHECK(whole.r.rows() == 3);
  CHECK(normal_rank(whole.r) == 3);
  CHECK(whole.r.at(0, 0) == one);
  CHECK(whole.r.at(2, 1) == -s);

  const Network single(net.space(), {net.components()[0]});
  CHECK(interconnect(single).r == net.components()[0].r);

  const KernelRep four = interconnect(four_component_network());
  CHECK(four.r.rows() == 4);
  CHECK(four.r.at(1, 3) == s);
}

TEST_CASE("incidence matrices of the worked examples") {
  CHECK(incidence(four_component_network()).s ==
        std::vector<std::vector<int>>{
            {1, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}});

  CHECK(incidence(circuit()).s ==
        std::vector<std::vector<int>>{{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});

  // an all-zero component row stays an all-zero incidence row
  const SignalSpace space = scalar_space(2);
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix(1, 2));
  comps.emplace_back(space, PolyMatrix({{s, Poly()}}));
  CHECK(incidence(Network(space, comps)).s ==
        std::vector<std::vector<int>>{{0, 0}, {1, 0}});
}

TEST_CASE("incidence text export") {
  CHECK(incidence(circuit()).to_text() == "1 1 1 1\n0 1 1 0\n0 1 0 1\n");
}

TEST_CASE("column incidence refines blocks into scalar columns") {
  const SignalSpace space({{"y", 1}, {"u", 2}});
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix({{s, one, Poly()}}));
  const Network net(space, comps);
  CHECK(incidence(net).s == std::vector<std::vector<int>>{{1, 1}});
  CHECK(column_incidence(net).s == std::vector<std::vector<int>>{{1, 1, 0}});
}

TEST_CASE("regularity of the circuit interconnection") {
  const Network net = circuit();
  CHECK(is_regular(net));
  CHECK(!is_regular_feedback(net));
}

TEST_CASE("duplicated components break regularity") {
  const SignalSpace space = scalar_space(2);
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix({{s, one}}));
  comps.emplace_back(space, PolyMatrix({{s, one}}));
  CHECK(!is_regular(Network(space, comps)));

  const Network single(space, {comps[0]});
  CHECK(is_regular(single));
  CHECK(is_regular_feedback(single));
}

TEST_CASE("merging the capacitor components yields regular feedback") {
  const Network net = circuit();
  const Network merged = merge(net, make_partition({{0}, {1, 2}}, 3));
  CHECK(merged.size() == 2);
  CHECK(merged.names() == std::vector<std::string>{"S1", "S2+S3"});
  CHECK(output_cardinality(merged.components()[1]) == 2);
  CHECK(mcmillan_degree(merged.components()[1]) == 1);
  CHECK(is_regular_feedback(merged));
}

TEST_CASE("merge with the singleton partition is the identity") {
  const Network net = circuit();
  const Network merged = merge(net, singleton_partition(3));
  CHECK(merged.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(merged.components()[i].r == net.components()[i].r);
    CHECK(merged.names()[i] == net.names()[i]);
  }
}

TEST_CASE("merging everything gives one trivially regular component") {
  const Network net = circuit();
  const Network merged = merge(net, make_partition({{0, 1, 2}}, 3));
  CHECK(merged.size() == 1);
  CHECK(is_regular_feedback(merged));
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(make_partition({{0}, {1}}, 3), Error);
  CHECK_THROWS_AS(make_partition({{0}, {0, 1}}, 2), Error);
  CHECK_THROWS_AS(make_partition({{0}, {}}, 1), Error);
  CHECK_THROWS_AS(make_partition({{0, 5}}, 2), Error);
  // canonical ordering: groups by smallest member, members ascending
  const ComponentPartition part = make_partition({{2, 1}, {0}}, 3);
  CHECK(part.groups == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
}

TEST_CASE("regularizing partition of a regular-feedback network is discrete") {
  const Network merged = merge(circuit(), make_partition({{0}, {1, 2}}, 3));
  const RegularizingSearch found =
      regularizing_partition(merged, RegularityMode::regular_feedback);
  CHECK(found.exhaustive);
  CHECK(found.partition == singleton_partition(2));
}

TEST_CASE("regularizing partition finds the circuit merge") {
  const RegularizingSearch found =
      regularizing_partition(circuit(), RegularityMode::regular_feedback);
  CHECK(found.exhaustive);
  CHECK(found.partition.groups ==
        std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK(is_regular_feedback(merge(circuit(), found.partition)));

  // mode regular is already satisfied componentwise
  const RegularizingSearch regular =
      regularizing_partition(circuit(), RegularityMode::regular);
  CHECK(regular.partition == singleton_partition(3));
}

TEST_CASE("regularizing partition groups duplicates in regular mode") {
  const SignalSpace space = scalar_space(2);
  std::vector<KernelRep> comps;
  comps.emplace_back(space, PolyMatrix({{s, one}}));
  comps.emplace_back(space, PolyMatrix({{s, one}}));
  const Network net(space, comps);
  const RegularizingSearch found =
      regularizing_partition(net, RegularityMode::regular);
  CHECK(found.partition.groups == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(is_regular(merge(net, found.partition)));
}

TEST_CASE("incidence is invariant under per-component rewriting") {
  std::mt19937 rng(47);
  for (int t = 0; t < 12; ++t) {
    const Network net = random_network(rng, 3, 4);
    std::vector<KernelRep> rewritten;
    for (const auto& c : net.components()) {
      const PolyMatrix u = testgen::random_unimodular(rng, c.r.rows());
      rewritten.emplace_back(net.space(), matmul(u, c.r));
    }
    const Network other(net.space(), std::move(rewritten));
    CHECK(incidence(net) == incidence(other));
    CHECK(column_incidence(net) == column_incidence(other));
    // regularity verdicts of merges only depend on the behaviors
    const ComponentPartition part = make_partition({{0, 2}, {1}}, 3);
    CHECK(is_regular(merge(net, part)) == is_regular(merge(other, part)));
    CHECK(is_regular_feedback(merge(net, part)) ==
          is_regular_feedback(merge(other, part)));
  }
}

TEST_CASE("interconnection invariants bound the component sums") {
  std::mt19937 rng(53);
  for (int t = 0; t < 12; ++t) {
    const Network net = random_network(rng, 3, 4);
    std::size_t p_sum = 0;
    int n_sum = 0;
    for (const auto& c : net.components()) {
      p_sum += output_cardinality(c);
      n_sum += mcmillan_degree(c);
    }
    const KernelRep whole = interconnect(net);
    CHECK(output_cardinality(whole) <= p_sum);
    if (is_regular(net)) {
      CHECK(mcmillan_degree(whole) <= n_sum);
      CHECK((output_cardinality(whole) == p_sum) == is_regular(net));
      CHECK((mcmillan_degree(whole) == n_sum) == is_regular_feedback(net));
    }
  }
}

TEST_CASE("two-stage merges compose") {
  std::mt19937 rng(59);
  for (int t = 0; t < 8; ++t) {
    const Network net = random_network(rng, 4, 3);
    const ComponentPartition fine = make_partition({{0, 3}, {1}, {2}}, 4);
    const ComponentPartition coarse = make_partition({{0, 2}, {1}}, 3);
    const Network two_stage = merge(merge(net, fine), coarse);
    const Network one_stage = merge(net, make_partition({{0, 2, 3}, {1}}, 4));
    REQUIRE(two_stage.size() == one_stage.size());
    for (std::size_t i = 0; i < two_stage.size(); ++i) {
      CHECK(is_behavior_equal(two_stage.components()[i], one_stage.components()[i]));
    }
  }
}

TEST_CASE("regularizing partitions always satisfy their mode") {
  std::mt19937 rng(61);
  for (int t = 0; t < 6; ++t) {
    const Network net = random_network(rng, 3, 3);
    for (RegularityMode mode :
         {RegularityMode::regular, RegularityMode::regular_feedback}) {
      const RegularizingSearch found = regularizing_partition(net, mode);
      const Network merged = merge(net, found.partition);
      if (mode == RegularityMode::regular) {
        CHECK(is_regular(merged));
      } else {
        CHECK(is_regular_feedback(merged));
      }
    }
  }
}
