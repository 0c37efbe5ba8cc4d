#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lindnet/behavior.hpp"

namespace lindnet {

// Interconnection of components over one shared signal space. Components
// are stored individually (never pre-stacked): the incidence matrix is a
// property of the componentwise representation.
class Network {
 public:
  // Throws Error(invalid_network) unless there is at least one component,
  // every component lives over exactly the given space, and names (defaulted
  // to S1..SN when empty) are unique.
  Network(SignalSpace space, std::vector<KernelRep> components,
          std::vector<std::string> names = {});

  const SignalSpace& space() const { return space_; }
  const std::vector<KernelRep>& components() const { return components_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return components_.size(); }

 private:
  SignalSpace space_;
  std::vector<KernelRep> components_;
  std::vector<std::string> names_;
};

// Binary component-by-signal matrix: 0 exactly where the signal block is
// unconstrained in the component.
struct IncidenceMatrix {
  std::vector<std::vector<int>> s;

  std::size_t rows() const { return s.size(); }
  std::size_t cols() const { return s.empty() ? 0 : s.front().size(); }
  // Plain 0/1 grid, one row per line.
  std::string to_text() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

// Vertical stack of all component representations; its kernel is the
// intersection of the component behaviors.
KernelRep interconnect(const Network& net);

IncidenceMatrix incidence(const Network& net);

// Scalar refinement of the incidence matrix: one column per signal
// component rather than per block.
IncidenceMatrix column_incidence(const Network& net);

// p of the interconnection equals the sum of component p's (the stacked
// minimal kernels have full row rank).
bool is_regular(const Network& net);

// Regular and the McMillan degrees are additive across components.
bool is_regular_feedback(const Network& net);

// Disjoint nonempty groups covering {0..N-1}; each group sorted, groups
// ordered by smallest member.
struct ComponentPartition {
  std::vector<std::vector<std::size_t>> groups;

  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

// Validates and canonicalizes; throws Error(invalid_partition).
ComponentPartition make_partition(std::vector<std::vector<std::size_t>> groups,
                                  std::size_t component_count);

ComponentPartition singleton_partition(std::size_t component_count);

// New network whose i-th component stacks the i-th group's representations;
// group names are joined with '+'.
Network merge(const Network& net, const ComponentPartition& part);

enum class RegularityMode { regular, regular_feedback };

struct RegularizingSearch {
  ComponentPartition partition;
  // True when every partition with more groups was ruled out (exhaustive
  // search, N <= 10); the greedy fallback is best-effort only.
  bool exhaustive = true;
};

// A partition whose merge satisfies the requested mode, with the maximum
// group count found by the search. The all-in-one partition always
// qualifies, so the search cannot fail.
RegularizingSearch regularizing_partition(const Network& net, RegularityMode mode);

}  // namespace lindnet
