#include "lindnet/network.hpp"

#include <algorithm>
#include <utility>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

// All set partitions of {0..n-1} as restricted growth strings, bucketed by
// group count; within a bucket the order is the lexicographic order of the
// growth strings. Groups are indexed by first occurrence, so the canonical
// ordering invariant holds by construction.
void gen_partitions(std::size_t pos, std::size_t n, std::size_t used,
                    std::vector<std::size_t>& assign,
                    std::vector<std::vector<ComponentPartition>>& by_count) {
  if (pos == n) {
    ComponentPartition part;
    part.groups.resize(used);
    for (std::size_t i = 0; i < n; ++i) {
      part.groups[assign[i]].push_back(i);
    }
    by_count[used].push_back(std::move(part));
    return;
  }
  for (std::size_t g = 0; g <= used && g < n; ++g) {
    assign[pos] = g;
    gen_partitions(pos + 1, n, std::max(used, g + 1), assign, by_count);
  }
}

void enumerate_partitions(std::size_t n,
                          std::vector<std::vector<ComponentPartition>>& by_count) {
  by_count.assign(n + 1, {});
  std::vector<std::size_t> assign(n, 0);
  gen_partitions(0, n, 0, assign, by_count);
}

bool qualifies(const Network& net, RegularityMode mode) {
  return mode == RegularityMode::regular ? is_regular(net)
                                         : is_regular_feedback(net);
}

}  // namespace

Network::Network(SignalSpace space, std::vector<KernelRep> components,
                 std::vector<std::string> names)
    : space_(std::move(space)),
      components_(std::move(components)),
      names_(std::move(names)) {
  if (components_.empty()) {
    throw Error(Errc::invalid_network, "a network needs at least one component");
  }
  for (const auto& c : components_) {
    if (!(c.space == space_)) {
      throw Error(Errc::invalid_network,
                  "every component must share the network signal space");
    }
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      names_.push_back("S" + std::to_string(i + 1));
    }
  }
  if (names_.size() != components_.size()) {
    throw Error(Errc::invalid_network, "one name per component required");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw Error(Errc::invalid_network,
                    "duplicate component name \"" + names_[i] + "\"");
      }
    }
  }
}

std::string IncidenceMatrix::to_text() const {
  std::string out;
  for (const auto& row : s) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += row[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

KernelRep interconnect(const Network& net) {
  std::vector<PolyMatrix> parts;
  parts.reserve(net.size());
  for (const auto& c : net.components()) {
    parts.push_back(c.r);
  }
  return KernelRep(net.space(), vstack(parts));
}

IncidenceMatrix incidence(const Network& net) {
  IncidenceMatrix out;
  out.s.assign(net.size(),
               std::vector<int>(net.space().block_count(), 0));
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t b = 0; b < net.space().block_count(); ++b) {
      out.s[i][b] =
          is_unconstrained(net.components()[i], net.space().blocks()[b].name)
              ? 0
              : 1;
    }
  }
  return out;
}

IncidenceMatrix column_incidence(const Network& net) {
  IncidenceMatrix out;
  const std::size_t q = net.space().q();
  out.s.assign(net.size(), std::vector<int>(q, 0));
  for (std::size_t i = 0; i < net.size(); ++i) {
    const PolyMatrix& r = net.components()[i].r;
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t row = 0; row < r.rows(); ++row) {
        if (!r.at(row, j).is_zero()) {
          out.s[i][j] = 1;
          break;
        }
      }
    }
  }
  return out;
}

bool is_regular(const Network& net) {
  std::size_t total = 0;
  for (const auto& c : net.components()) {
    total += output_cardinality(c);
  }
  return output_cardinality(interconnect(net)) == total;
}

bool is_regular_feedback(const Network& net) {
  if (!is_regular(net)) {
    return false;
  }
  int total = 0;
  for (const auto& c : net.components()) {
    total += mcmillan_degree(c);
  }
  return mcmillan_degree(interconnect(net)) == total;
}

ComponentPartition make_partition(std::vector<std::vector<std::size_t>> groups,
                                  std::size_t component_count) {
  std::vector<int> seen(component_count, 0);
  for (auto& g : groups) {
    if (g.empty()) {
      throw Error(Errc::invalid_partition, "partition contains an empty group");
    }
    std::sort(g.begin(), g.end());
    for (std::size_t idx : g) {
      if (idx >= component_count || seen[idx]) {
        throw Error(Errc::invalid_partition,
                    "partition does not split the component index set");
      }
      seen[idx] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(Errc::invalid_partition, "partition misses a component");
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return ComponentPartition{std::move(groups)};
}

ComponentPartition singleton_partition(std::size_t component_count) {
  ComponentPartition part;
  part.groups.reserve(component_count);
  for (std::size_t i = 0; i < component_count; ++i) {
    part.groups.push_back({i});
  }
  return part;
}

Network merge(const Network& net, const ComponentPartition& part) {
  const ComponentPartition canonical = make_partition(part.groups, net.size());
  std::vector<KernelRep> merged;
  std::vector<std::string> names;
  merged.reserve(canonical.groups.size());
  for (const auto& group : canonical.groups) {
    std::vector<PolyMatrix> parts;
    std::string name;
    for (std::size_t idx : group) {
      parts.push_back(net.components()[idx].r);
      if (!name.empty()) name += '+';
      name += net.names()[idx];
    }
    merged.emplace_back(net.space(), vstack(parts));
    names.push_back(std::move(name));
  }
  return Network(net.space(), std::move(merged), std::move(names));
}

RegularizingSearch regularizing_partition(const Network& net, RegularityMode mode) {
  const std::size_t n = net.size();
  if (n <= 10) {
    std::vector<std::vector<ComponentPartition>> by_count;
    enumerate_partitions(n, by_count);
    for (std::size_t k = n; k >= 1; --k) {
      for (const auto& part : by_count[k]) {
        if (qualifies(merge(net, part), mode)) {
          return {part, true};
        }
      }
    }
    // unreachable: the one-group partition always qualifies
    return {make_partition({[&] {
              std::vector<std::size_t> all(n);
              for (std::size_t i = 0; i < n; ++i) all[i] = i;
              return all;
            }()},
            n),
            true};
  }

  // greedy agglomerative fallback: repeatedly merge the pair of groups whose
  // merge most reduces the regularity deficit, lowest indices on ties
  ComponentPartition current = singleton_partition(n);
  for (;;) {
    Network merged = merge(net, current);
    if (qualifies(merged, mode)) {
      return {current, false};
    }
    const auto deficit = [&](const ComponentPartition& part) {
      Network m = merge(net, part);
      long p_sum = 0;
      long n_sum = 0;
      for (const auto& c : m.components()) {
        p_sum += static_cast<long>(output_cardinality(c));
        n_sum += mcmillan_degree(c);
      }
      const KernelRep whole = interconnect(m);
      const long p_def = p_sum - static_cast<long>(output_cardinality(whole));
      const long n_def = n_sum - mcmillan_degree(whole);
      return std::pair<long, long>(p_def, n_def);
    };
    std::pair<long, long> best_deficit;
    ComponentPartition best;
    bool have_best = false;
    for (std::size_t a = 0; a < current.groups.size(); ++a) {
      for (std::size_t b = a + 1; b < current.groups.size(); ++b) {
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t g = 0; g < current.groups.size(); ++g) {
          if (g == b) continue;
          groups.push_back(current.groups[g]);
          if (g == a) {
            groups.back().insert(groups.back().end(), current.groups[b].begin(),
                                 current.groups[b].end());
          }
        }
        ComponentPartition candidate = make_partition(std::move(groups), n);
        const auto d = deficit(candidate);
        if (!have_best || d < best_deficit) {
          have_best = true;
          best_deficit = d;
          best = std::move(candidate);
        }
      }
    }
    current = std::move(best);
  }
}

}  // namespace lindnet
