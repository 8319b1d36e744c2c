#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fg/group.hpp"
#include "fg/spectrum.hpp"

namespace fg {

std::uint64_t euler_phi(std::uint64_t n);

// One conjugacy class of cyclic subgroups of order n.
struct CyclicClassRow {
  std::uint64_t n = 0;
  Perm representative;  // canonical-minimum generator across the class
  std::uint64_t class_size = 0;
  std::uint64_t normalizer_order = 0;  // class_size * normalizer_order == |G|
};

struct CyclicClassTable {
  std::vector<CyclicClassRow> rows;  // sorted by (n, representative)
};

CyclicClassTable cyclic_subgroup_classes(const Group& G);

// Per element order n: sum of class_size * phi(n) over the order-n cyclic
// classes, against the element count of order n. Exact integer equality.
struct CountIdentityRow {
  std::uint64_t n = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool ok = false;
};

struct CountIdentityReport {
  std::vector<CountIdentityRow> rows;
  bool all_ok = false;
};

CountIdentityReport verify_cyclic_count_identity(const Group& G);
CountIdentityReport verify_cyclic_count_identity(const CyclicClassTable& table,
                                                 const OrderEquation& eq);

// One conjugacy class of subgroups (small groups only).
struct SubgroupClassRow {
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  bool is_cyclic = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::vector<Perm> representative_gens;
};

inline constexpr std::uint64_t kDefaultLatticeCap = 500;

// All subgroups up to conjugacy, by layered joins of cyclic subgroups.
std::vector<SubgroupClassRow> subgroup_lattice(const Group& G,
                                               std::uint64_t cap = kDefaultLatticeCap);

// Audit trail for the exhaustive order-m search; a NONE verdict is a proof
// of nonexistence and this records why the search was exhaustive.
struct SearchCertificate {
  std::string strategy;  // "divisibility" | "whole-group" | "trivial" | "lattice" | "sylow-closure"
  std::uint64_t target = 0;
  std::uint64_t sylow_prime = 0;
  std::uint64_t cofactor_prime = 0;
  int cofactor_exponent = 0;
  std::vector<std::string> sylow_generators;
  std::uint64_t normalizer_order = 0;
  std::uint64_t single_candidates = 0;         // before normalizer dedup
  std::uint64_t single_candidates_deduped = 0;
  std::map<std::uint64_t, std::uint64_t> single_closure_orders;  // 0 = exceeded cap
  std::uint64_t pair_closures = 0;
  std::map<std::uint64_t, std::uint64_t> pair_closure_orders;
  bool found = false;
};

struct SubgroupSearchResult {
  std::optional<Group> subgroup;  // absent = proven nonexistence
  bool solvable = false;          // meaningful only when subgroup is present
  SearchCertificate certificate;
};

// Exhaustive-correct search for a subgroup of order exactly m. Supported
// shapes: m not dividing |G| (immediate NONE), m in {1, |G|}, |G| within the
// lattice cap, m = p-part(|G|), or m = p-part(|G|) * q^e with q prime and
// e <= 2. Anything else raises UnsupportedSearch.
SubgroupSearchResult find_subgroup_of_order(const Group& G, std::uint64_t m,
                                            std::uint64_t lattice_cap = kDefaultLatticeCap);

}  // namespace fg
