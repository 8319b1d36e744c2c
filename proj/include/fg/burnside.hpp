#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fg/classes.hpp"
#include "fg/group.hpp"
#include "fg/spectrum.hpp"

namespace fg {

// Table of marks over the subgroup conjugacy classes, sorted ascending by
// (order, class size, representative). marks[H][K] = fixed points of K on
// the coset space G/H; lower-triangular under the sort.
struct MarksTable {
  std::vector<SubgroupClassRow> classes;
  std::vector<std::vector<std::uint64_t>> marks;
};

MarksTable table_of_marks(const Group& G, std::uint64_t lattice_cap = kDefaultLatticeCap);

enum class ProbeResult { Absent, FoundSolvable, FoundNonsolvable };
std::string probe_result_name(ProbeResult r);

using ClassMultiset = std::multiset<std::pair<std::uint64_t, std::uint64_t>>;  // (order, class size)

// Everything a Burnside-ring isomorphism would have to preserve, as far as
// this artifact checks it.
struct BurnsideInvariant {
  std::uint64_t group_order = 0;
  std::set<std::uint64_t> spectrum;
  OrderEquation order_eq;
  ClassMultiset cyclic_class_multiset;
  std::map<std::uint64_t, ProbeResult> probes;
  // Present only when the full lattice fits the cap.
  std::optional<ClassMultiset> solvable_classes;
  std::optional<ClassMultiset> nilpotent_classes;
};

BurnsideInvariant burnside_invariants(const Group& G,
                                      const std::vector<std::uint64_t>& probes = {},
                                      std::uint64_t lattice_cap = kDefaultLatticeCap);

struct ObstructionWitness {
  std::string check;   // "order", "spectrum", "order-type", "cyclic-classes",
                       // "solvable-lattice", "nilpotent-lattice", "probe"
  std::string detail;
};

// OBSTRUCTED = some necessary condition for a Burnside-ring isomorphism
// fails; COMPATIBLE claims only that every implemented check passed.
struct ObstructionReport {
  bool obstructed = false;
  std::vector<ObstructionWitness> witnesses;
  BurnsideInvariant a, b;
};

// Runs all checks to completion, in fixed order, collecting every failure.
ObstructionReport burnside_obstruction(const Group& A, const Group& B,
                                       const std::vector<std::uint64_t>& probes = {},
                                       std::uint64_t lattice_cap = kDefaultLatticeCap);

// The comparison half of burnside_obstruction, for callers that assembled
// the invariants themselves (e.g. from cached results).
ObstructionReport compare_invariants(BurnsideInvariant a, BurnsideInvariant b);

}  // namespace fg
