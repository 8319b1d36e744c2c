#include "fg/burnside.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "fg/errors.hpp"

namespace fg {

MarksTable table_of_marks(const Group& G, std::uint64_t lattice_cap) {
  MarksTable t;
  t.classes = subgroup_lattice(G, lattice_cap);
  const std::vector<Perm>& es = G.elements();
  const std::size_t n = t.classes.size();
  t.marks.assign(n, std::vector<std::uint64_t>(n, 0));

  for (std::size_t hi = 0; hi < n; ++hi) {
    const Group H = subgroup_of(G, t.classes[hi].representative_gens);
    std::unordered_set<Perm, PermHash> h_set(H.elements().begin(), H.elements().end());

    // Right coset representatives of H: the element of minimal index in each
    // coset, found by marking H*g for unmarked g.
    std::vector<Perm> coset_reps;
    std::unordered_set<Perm, PermHash> marked;
    for (const Perm& g : es) {
      if (marked.count(g)) continue;
      coset_reps.push_back(g);
      for (const Perm& h : h_set) marked.insert(compose(h, g));
    }

    // Hg is fixed by k iff g k g^-1 lies in H; a coset fixed by every
    // generator of K is fixed by all of K.
    for (std::size_t ki = 0; ki < n; ++ki) {
      std::uint64_t fixed = 0;
      for (const Perm& g : coset_reps) {
        bool all = true;
        for (const Perm& k : t.classes[ki].representative_gens) {
          if (!h_set.count(conjugate(k, inverse(g)))) {
            all = false;
            break;
          }
        }
        if (all) ++fixed;
      }
      t.marks[hi][ki] = fixed;
    }
  }
  return t;
}

BurnsideInvariant burnside_invariants(const Group& G, const std::vector<std::uint64_t>& probes,
                                      std::uint64_t lattice_cap) {
  BurnsideInvariant inv;
  inv.group_order = G.order();
  inv.order_eq = order_equation(G);
  for (const auto& [n, c] : inv.order_eq.counts) inv.spectrum.insert(n);
  for (const CyclicClassRow& row : cyclic_subgroup_classes(G).rows)
    inv.cyclic_class_multiset.emplace(row.n, row.class_size);
  if (inv.group_order <= lattice_cap) {
    ClassMultiset solvable, nilpotent;
    for (const SubgroupClassRow& row : subgroup_lattice(G, lattice_cap)) {
      if (row.is_solvable) solvable.emplace(row.order, row.class_size);
      if (row.is_nilpotent) nilpotent.emplace(row.order, row.class_size);
    }
    inv.solvable_classes = std::move(solvable);
    inv.nilpotent_classes = std::move(nilpotent);
  }
  for (std::uint64_t m : probes) {
    const SubgroupSearchResult r = find_subgroup_of_order(G, m);
    inv.probes[m] = !r.subgroup           ? ProbeResult::Absent
                    : r.solvable          ? ProbeResult::FoundSolvable
                                          : ProbeResult::FoundNonsolvable;
  }
  return inv;
}

std::string probe_result_name(ProbeResult r) {
  switch (r) {
    case ProbeResult::Absent: return "absent";
    case ProbeResult::FoundSolvable: return "solvable subgroup found";
    case ProbeResult::FoundNonsolvable: return "nonsolvable subgroup found";
  }
  return "?";
}

namespace {

std::string multiset_diff(const ClassMultiset& a, const ClassMultiset& b) {
  std::ostringstream out;
  ClassMultiset only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(only_a, only_a.end()));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::inserter(only_b, only_b.end()));
  auto dump = [&out](const char* tag, const ClassMultiset& s) {
    out << tag << " {";
    bool first = true;
    for (const auto& [o, c] : s) {
      if (!first) out << ", ";
      out << "(" << o << "," << c << ")";
      first = false;
    }
    out << "}";
  };
  dump("only in A:", only_a);
  out << "; ";
  dump("only in B:", only_b);
  return out.str();
}

}  // namespace

ObstructionReport burnside_obstruction(const Group& A, const Group& B,
                                       const std::vector<std::uint64_t>& probes,
                                       std::uint64_t lattice_cap) {
  return compare_invariants(burnside_invariants(A, probes, lattice_cap),
                            burnside_invariants(B, probes, lattice_cap));
}

ObstructionReport compare_invariants(BurnsideInvariant a, BurnsideInvariant b) {
  ObstructionReport rep;
  rep.a = std::move(a);
  rep.b = std::move(b);

  if (rep.a.group_order != rep.b.group_order)
    rep.witnesses.push_back({"order", std::to_string(rep.a.group_order) + " vs " +
                                          std::to_string(rep.b.group_order)});

  if (rep.a.spectrum != rep.b.spectrum) {
    std::ostringstream out;
    out << "element-order sets differ:";
    for (std::uint64_t n : rep.a.spectrum)
      if (!rep.b.spectrum.count(n)) out << " " << n << "(A only)";
    for (std::uint64_t n : rep.b.spectrum)
      if (!rep.a.spectrum.count(n)) out << " " << n << "(B only)";
    rep.witnesses.push_back({"spectrum", out.str()});
  }

  const TypeVerdict ot = same_order_type(rep.a.order_eq, rep.b.order_eq);
  if (!ot.equal && ot.order_type_witness) {
    const auto& w = *ot.order_type_witness;
    rep.witnesses.push_back({"order-type", "d=" + std::to_string(w.d) + " counts " +
                                               std::to_string(w.count_a) + " vs " +
                                               std::to_string(w.count_b)});
  }

  if (rep.a.cyclic_class_multiset != rep.b.cyclic_class_multiset)
    rep.witnesses.push_back(
        {"cyclic-classes", multiset_diff(rep.a.cyclic_class_multiset, rep.b.cyclic_class_multiset)});

  if (rep.a.solvable_classes && rep.b.solvable_classes &&
      *rep.a.solvable_classes != *rep.b.solvable_classes)
    rep.witnesses.push_back(
        {"solvable-lattice", multiset_diff(*rep.a.solvable_classes, *rep.b.solvable_classes)});
  if (rep.a.nilpotent_classes && rep.b.nilpotent_classes &&
      *rep.a.nilpotent_classes != *rep.b.nilpotent_classes)
    rep.witnesses.push_back(
        {"nilpotent-lattice", multiset_diff(*rep.a.nilpotent_classes, *rep.b.nilpotent_classes)});

  for (const auto& [m, ra] : rep.a.probes) {
    if (!rep.b.probes.count(m)) continue;
    const ProbeResult rb = rep.b.probes.at(m);
    // A solvable subgroup of order m on one side with no subgroup of that
    // order at all on the other rules out a class-preserving correspondence
    // of solvable subgroups.
    const bool obstructs = (ra == ProbeResult::FoundSolvable && rb == ProbeResult::Absent) ||
                           (rb == ProbeResult::FoundSolvable && ra == ProbeResult::Absent);
    if (obstructs)
      rep.witnesses.push_back({"probe", "order " + std::to_string(m) + ": A " +
                                            probe_result_name(ra) + ", B " + probe_result_name(rb)});
  }

  rep.obstructed = !rep.witnesses.empty();
  return rep;
}

}  // namespace fg
