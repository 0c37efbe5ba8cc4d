#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lindnet/behavior.hpp"
#include "lindnet/error.hpp"
#include "support/generators.hpp"

using namespace lindnet;
using testgen::poly;
using testgen::scalar_space;

namespace {

const Poly s = Poly::shift();
const Poly one = poly({1});

SignalSpace circuit_space() {
  return SignalSpace({{"V", 1}, {"V_C", 1}, {"I1", 1}, {"I2", 1}});
}

KernelRep circuit_interconnection() {
  return KernelRep(circuit_space(),
                   PolyMatrix({{one, -one, -s, -s},
                               {Poly(), -s, one, Poly()},
                               {Poly(), -s, Poly(), one}}));
}

}  // namespace

TEST_CASE("signal space bookkeeping") {
  const SignalSpace space({{"a", 1}, {"b", 2}, {"c", 1}});
  CHECK(space.q() == 4);
  CHECK(space.block_index("b") == 1);
  CHECK(space.block_offset(1) == 1);
  CHECK(space.column_names() ==
        std::vector<std::string>{"a", "b[0]", "b[1]", "c"});
  CHECK_THROWS_AS(space.block_index("nope"), Error);
  CHECK_THROWS_AS(SignalSpace({{"a", 1}, {"a", 1}}), Error);
  CHECK_THROWS_AS(SignalSpace({{"", 1}}), Error);
  CHECK_THROWS_AS(SignalSpace({{"a", 0}}), Error);
  CHECK_THROWS_AS(KernelRep(circuit_space(), PolyMatrix(1, 3)), Error);
}

TEST_CASE("minimal kernel keeps full-row-rank representations") {
  const KernelRep k = circuit_interconnection();
  CHECK(minimal_kernel(k).r.rows() == 3);
}

TEST_CASE("minimal kernel removes dependent rows") {
  const KernelRep k(scalar_space(2), PolyMatrix({{s, one}, {s, one}}));
  const KernelRep minimal = minimal_kernel(k);
  CHECK(minimal.r.rows() == 1);
  CHECK(is_behavior_equal(k, minimal));
}

TEST_CASE("output cardinality") {
  CHECK(output_cardinality(KernelRep(scalar_space(3), PolyMatrix::identity(3))) == 3);
  // a single autoregressive row
  CHECK(output_cardinality(KernelRep(scalar_space(3),
                                     PolyMatrix({{s * s, one, -one}}))) == 1);
  CHECK(output_cardinality(KernelRep(scalar_space(3), PolyMatrix(2, 3))) == 0);
}

TEST_CASE("mcmillan degree of the circuit model") {
  CHECK(mcmillan_degree(circuit_interconnection()) == 2);
  const SignalSpace space = circuit_space();
  CHECK(mcmillan_degree(KernelRep(space, PolyMatrix({{one, -one, -s, -s}}))) == 1);
  CHECK(mcmillan_degree(KernelRep(space, PolyMatrix({{Poly(), -s, one, Poly()}}))) == 1);
  CHECK(mcmillan_degree(KernelRep(space, PolyMatrix({{Poly(), -s, Poly(), one}}))) == 1);
}

TEST_CASE("mcmillan degree of static and empty kernels") {
  PolyMatrix static_full(2, 2);
  static_full.at(0, 0) = one;
  static_full.at(0, 1) = poly({2});
  static_full.at(1, 1) = one;
  CHECK(mcmillan_degree(KernelRep(scalar_space(2), static_full)) == 0);
  CHECK(mcmillan_degree(KernelRep(scalar_space(2), PolyMatrix(0, 2))) == 0);
  CHECK(mcmillan_degree(KernelRep(scalar_space(2), PolyMatrix(2, 2))) == 0);
}

TEST_CASE("unconstrained blocks read off the zero columns") {
  // block row [0 R2 0 R4] over four scalar blocks
  const SignalSpace space = scalar_space(4);
  const KernelRep k(space, PolyMatrix({{Poly(), poly({1, 1}), Poly(), s}}));
  CHECK(is_unconstrained(k, "w1"));
  CHECK(!is_unconstrained(k, "w2"));
  CHECK(is_unconstrained(k, "w3"));
  CHECK(!is_unconstrained(k, "w4"));

  const KernelRep zero(space, PolyMatrix(2, 4));
  for (const auto& b : space.blocks()) {
    CHECK(is_unconstrained(zero, b.name));
  }
  const KernelRep id(space, PolyMatrix::identity(4));
  for (const auto& b : space.blocks()) {
    CHECK(!is_unconstrained(id, b.name));
  }
  CHECK_THROWS_AS(is_unconstrained(k, "nope"), Error);
}

TEST_CASE("unconstrained blocks survive minimal reduction") {
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    PolyMatrix m = testgen::random_matrix(rng, 3, 4, 2, 25, true);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      m.at(i, 2) = Poly();  // block w3 unconstrained
    }
    const KernelRep k(scalar_space(4), m);
    const KernelRep minimal = minimal_kernel(k);
    CHECK(is_unconstrained(k, "w3"));
    CHECK(is_unconstrained(minimal, "w3"));
  }
}

TEST_CASE("io partition recovers a handed-in io form") {
  // rows [P -Q] with P on the first two columns, det(P) of maximal degree
  const KernelRep k(scalar_space(3), PolyMatrix({{poly({1, 1}), one, -one},
                                                 {Poly(), s, poly({-2})}}));
  const IOPartition part = io_partition(k);
  CHECK(part.output_cols == std::vector<std::size_t>{0, 1});
  CHECK(part.input_cols == std::vector<std::size_t>{2});
  CHECK(part.proper);
  CHECK(part.q_part.at(0, 0) == one);
  CHECK(part.q_part.at(1, 0) == poly({2}));
}

TEST_CASE("io partition of the circuit leaves the source free") {
  const IOPartition part = io_partition(circuit_interconnection());
  CHECK(part.output_cols == std::vector<std::size_t>{1, 2, 3});
  CHECK(part.input_cols == std::vector<std::size_t>{0});
  CHECK(!determinant(part.p_part).is_zero());
  // properness witness: the leading row coefficient matrix of the output
  // columns is nonsingular
  CHECK(rank(leading_row_coeff(part.p_part)) == 3);
  for (std::size_t i = 0; i < part.p_part.rows(); ++i) {
    CHECK(part.q_part.row_degree(i) <= part.p_part.row_degree(i));
  }
}

TEST_CASE("io partition of an autonomous system has no inputs") {
  const KernelRep k(scalar_space(2),
                    PolyMatrix({{s, one}, {Poly(), poly({1, 1})}}));
  const IOPartition part = io_partition(k);
  CHECK(part.output_cols == std::vector<std::size_t>{0, 1});
  CHECK(part.input_cols.empty());
  CHECK(part.q_part.cols() == 0);
}

TEST_CASE("io partition needs at least one output") {
  CHECK_THROWS_AS(io_partition(KernelRep(scalar_space(2), PolyMatrix(1, 2))), Error);
}

TEST_CASE("io partition candidates enumerate every maximizer") {
  // both columns tie at determinant degree 0
  const KernelRep k(scalar_space(2), PolyMatrix({{one, one}}));
  const auto candidates = io_partition_candidates(k);
  CHECK(candidates == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(io_partition(k).output_cols == candidates.front());
}

TEST_CASE("behavior equality is invariant under unimodular rewriting") {
  std::mt19937 rng(37);
  for (int t = 0; t < 15; ++t) {
    const PolyMatrix m = testgen::random_matrix(rng, 3, 4, 2, 25, true);
    const PolyMatrix u = testgen::random_unimodular(rng, 3);
    const KernelRep a(scalar_space(4), m);
    const KernelRep b(scalar_space(4), matmul(u, m));
    CHECK(is_behavior_equal(a, b));
    CHECK(output_cardinality(a) == output_cardinality(b));
    CHECK(mcmillan_degree(a) == mcmillan_degree(b));
  }
}

TEST_CASE("distinct behaviors compare unequal") {
  const KernelRep id(scalar_space(2), PolyMatrix::identity(2));
  const KernelRep zero(scalar_space(2), PolyMatrix(2, 2));
  CHECK(!is_behavior_equal(id, zero));
  CHECK(is_behavior_equal(zero, zero));

  // same rank, different kernels
  const KernelRep a(scalar_space(2), PolyMatrix({{s, one}}));
  const KernelRep b(scalar_space(2), PolyMatrix({{one, s}}));
  CHECK(!is_behavior_equal(a, b));

  // equal rank with one-directional span containment only
  const KernelRep low(scalar_space(1), PolyMatrix({{s}}));
  const KernelRep high(scalar_space(1), PolyMatrix({{s * s}}));
  CHECK(!is_behavior_equal(low, high));

  CHECK_THROWS_AS(
      is_behavior_equal(id, KernelRep(scalar_space(3), PolyMatrix(1, 3))), Error);
}

TEST_CASE("io form represents the original behavior") {
  const KernelRep k = circuit_interconnection();
  const IOPartition part = io_partition(k);
  PolyMatrix assembled(part.p_part.rows(), k.space.q());
  for (std::size_t i = 0; i < assembled.rows(); ++i) {
    for (std::size_t c = 0; c < part.output_cols.size(); ++c) {
      assembled.at(i, part.output_cols[c]) = part.p_part.at(i, c);
    }
    for (std::size_t c = 0; c < part.input_cols.size(); ++c) {
      assembled.at(i, part.input_cols[c]) = -part.q_part.at(i, c);
    }
  }
  CHECK(is_behavior_equal(KernelRep(k.space, assembled), k));
}

TEST_CASE("behavior equality is an equivalence relation") {
  std::mt19937 rng(41);
  for (int t = 0; t < 8; ++t) {
    const PolyMatrix m = testgen::random_matrix(rng, 2, 3, 2, 25);
    const KernelRep k1(scalar_space(3), matmul(testgen::random_unimodular(rng, 2), m));
    const KernelRep k2(scalar_space(3), matmul(testgen::random_unimodular(rng, 2), m));
    const KernelRep k3(scalar_space(3), matmul(testgen::random_unimodular(rng, 2), m));
    CHECK(is_behavior_equal(k1, k1));
    const bool ab = is_behavior_equal(k1, k2);
    CHECK(ab == is_behavior_equal(k2, k1));
    if (ab && is_behavior_equal(k2, k3)) {
      CHECK(is_behavior_equal(k1, k3));
    }
  }
}

TEST_CASE("mcmillan degree agrees with the row-degree path") {
  std::mt19937 rng(43);
  for (int t = 0; t < 25; ++t) {
    const PolyMatrix m = testgen::random_matrix(rng, 3, 4, 3, 30, true);
    const KernelRep k(scalar_space(4), m);
    const KernelRep minimal = minimal_kernel(k);
    int sum = 0;
    for (std::size_t i = 0; i < minimal.r.rows(); ++i) {
      sum += minimal.r.row_degree(i);
    }
    CHECK(mcmillan_degree(k) == sum);
  }
}
