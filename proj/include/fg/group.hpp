#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fg/perm.hpp"

namespace fg {

// Base and strong generating set. Built deterministically: base points are
// the first points moved by remaining generators, in ascending order.
class StabChain {
 public:
  struct Level {
    int base = -1;                       // 0-based base point
    std::vector<Perm> gens;              // strong generators fixing earlier base points
    std::vector<int> orbit;              // discovery order, orbit[0] == base
    std::vector<int> transversal_slot;   // per point: index into transversal, or -1
    std::vector<Perm> transversal;       // transversal[slot(p)] maps base -> p
  };

  explicit StabChain(const std::vector<Perm>& gens, int degree);

  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  const std::vector<Level>& levels() const { return levels_; }

 private:
  int degree_;
  std::vector<Level> levels_;

  void extend_orbit(std::size_t li);
  void complete_level(std::size_t li);
  // Sift starting at level `from`; returns residue and the level it stuck at.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void add_strong_generator(std::size_t from, std::size_t stuck, const Perm& g);
};

struct ConjClass {
  Perm representative;  // canonical minimum of the class
  std::uint64_t size = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// Generator-defined permutation group. Logically immutable; caches (chain,
// element list, conjugacy classes) fill lazily and are shared across copies.
class Group {
 public:
  Group(int degree, std::vector<Perm> gens,
        std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t enumeration_cap() const { return cap_; }

  std::uint64_t order() const;
  bool contains(const Perm& p) const;

  // Sorted full element list; throws EnumerationCapExceeded past the cap.
  const std::vector<Perm>& elements() const;

  // Index of p in the sorted element list, or -1.
  std::int64_t element_index(const Perm& p) const;

  // Sorted by (element order of representative, representative).
  const std::vector<ConjClass>& conjugacy_classes() const;

  const StabChain& chain() const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::uint64_t cap_;

  struct Caches {
    std::mutex mu;
    std::optional<StabChain> chain;
    std::optional<std::vector<Perm>> elements;
    std::optional<std::vector<ConjClass>> classes;
  };
  std::shared_ptr<Caches> caches_;
};

// gens must be members of parent (throws NotAMember).
Group subgroup_of(const Group& parent, std::vector<Perm> gens);

// Every generator of H lies in G.
bool is_subgroup_of(const Group& G, const Group& H);

// Group generated by the given elements with a reduced generating set
// (elements already generated are dropped).
Group group_from_elements(int degree, const std::vector<Perm>& elems,
                          std::uint64_t cap = kDefaultEnumerationCap);

Group centralizer(const Group& G, const Perm& x);
Group normalizer(const Group& G, const Group& H);

// Smallest normal subgroup of G containing the seeds.
Group normal_closure(const Group& G, const std::vector<Perm>& seeds);

// G = G(0) >= G(1) >= ... until stabilization; ends with the trivial group
// when solvable, otherwise repeats the perfect term once.
std::vector<Group> derived_series(const Group& G);

bool is_abelian(const Group& G);
bool is_solvable(const Group& G);
// Implementation definition: every Sylow subgroup is normal.
bool is_nilpotent(const Group& G);

// Subgroup of order p^a where p^a exactly divides |G|; trivial if p does not
// divide |G|. Deterministic normalizer-growth algorithm.
Group sylow(const Group& G, std::uint64_t p);

bool is_normal(const Group& G, const Group& H);

}  // namespace fg
