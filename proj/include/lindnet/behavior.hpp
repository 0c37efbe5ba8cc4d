#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lindnet/poly_matrix.hpp"

namespace lindnet {

struct SignalBlock {
  std::string name;
  std::size_t dim = 1;

  friend bool operator==(const SignalBlock&, const SignalBlock&) = default;
};

// Ordered, named decomposition of the signal vector into blocks.
class SignalSpace {
 public:
  SignalSpace() = default;
  explicit SignalSpace(std::vector<SignalBlock> blocks);

  std::size_t q() const { return q_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<SignalBlock>& blocks() const { return blocks_; }
  // Throws Error(unknown_block) for names not in the space.
  std::size_t block_index(const std::string& name) const;
  std::size_t block_offset(std::size_t block) const { return offsets_[block]; }
  // Per-column labels: the block name, or "name[k]" inside wider blocks.
  std::vector<std::string> column_names() const;

  friend bool operator==(const SignalSpace&, const SignalSpace&) = default;

 private:
  std::vector<SignalBlock> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t q_ = 0;
};

// Kernel representation r(s)w = 0 of a system over a block-structured
// signal space; the behavior is the set of trajectories annihilated by r.
struct KernelRep {
  KernelRep(SignalSpace space, PolyMatrix r);

  SignalSpace space;
  PolyMatrix r;
};

// A representation of the same behavior with full row rank: row_reduce
// followed by deletion of zero rows. Row count equals normal_rank(k.r).
KernelRep minimal_kernel(const KernelRep& k);

// p: rank of any minimal kernel representation.
std::size_t output_cardinality(const KernelRep& k);

// n: maximum degree over the p x p minors of a minimal kernel
// representation; 0 for the zero-row representation.
int mcmillan_degree(const KernelRep& k);

// True iff every entry of the block's columns is the zero polynomial. The
// zero-column pattern is invariant under left-unimodular multiplication, so
// the given representation decides the property.
bool is_unconstrained(const KernelRep& k, const std::string& block);

// Input-output split of the signal columns with P(s)y = Q(s)u.
struct IOPartition {
  std::vector<std::size_t> output_cols;  // ascending
  std::vector<std::size_t> input_cols;   // ascending
  PolyMatrix p_part;                     // square, det != 0, row-proper
  PolyMatrix q_part;                     // negated input columns
  bool proper = false;
};

// Proper input-output partition of the minimal kernel: the output columns
// are the lexicographically smallest p-subset maximizing deg det(P).
// Throws Error(no_outputs) when p = 0.
IOPartition io_partition(const KernelRep& k);

// Every output-column set achieving the maximal determinant degree, in
// lexicographic order.
std::vector<std::vector<std::size_t>> io_partition_candidates(const KernelRep& k);

// Representation-independent equality: minimal kernels have equal rank and
// each row of either lies in the Q[s]-row-span of the other (the minimal
// kernels then differ by a unimodular left factor).
bool is_behavior_equal(const KernelRep& a, const KernelRep& b);

}  // namespace lindnet
