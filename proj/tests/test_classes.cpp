#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fg/classes.hpp"
#include "fg/constructions.hpp"
#include "fg/errors.hpp"
#include "oracles.hpp"

using namespace fg;

TEST_CASE("euler_phi") {
  for (std::uint64_t n = 1; n <= 60; ++n) CHECK(euler_phi(n) == oracle::brute_phi(n));
}

TEST_CASE("S3 cyclic class table") {
  CyclicClassTable t = cyclic_subgroup_classes(symmetric(3));
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].n == 1);
  CHECK(t.rows[0].class_size == 1);
  CHECK(t.rows[0].normalizer_order == 6);
  CHECK(t.rows[1].n == 2);
  CHECK(t.rows[1].class_size == 3);
  CHECK(t.rows[1].normalizer_order == 2);
  // Canonical minimum across the class under image-array order is (2,3).
  CHECK(format_cycles(t.rows[1].representative) == "(2,3)");
  CHECK(t.rows[2].n == 3);
  CHECK(t.rows[2].class_size == 1);
  CHECK(t.rows[2].normalizer_order == 6);
}

TEST_CASE("A5 order-5 cyclic classes: one class of six, normalizer order 10") {
  CyclicClassTable t = cyclic_subgroup_classes(alternating(5));
  int found = 0;
  for (const CyclicClassRow& r : t.rows) {
    if (r.n == 5) {
      ++found;
      CHECK(r.class_size == 6);
      CHECK(r.normalizer_order == 10);
    }
  }
  CHECK(found == 1);
}

TEST_CASE("cyclic class tables match the brute subgroup oracle") {
  for (auto& [name, g] : {std::pair<const char*, Group>{"S4", symmetric(4)},
                          {"D8", dihedral(4)},
                          {"Q8", quaternion8()},
                          {"A4", alternating(4)},
                          {"C12", cyclic(12)}}) {
    CAPTURE(name);
    const auto subs = oracle::all_subgroups(g.degree(), g.elements());
    std::set<std::vector<Perm>> cyclic_subs;
    for (const auto& s : subs) {
      bool cyc = false;
      for (const Perm& x : s)
        if (oracle::brute_closure(g.degree(), {x}).size() == s.size()) cyc = true;
      if (cyc) cyclic_subs.insert(s);
    }
    const auto classes = oracle::conjugacy_classes_of_subgroups(cyclic_subs, g.elements());
    CyclicClassTable t = cyclic_subgroup_classes(g);
    CHECK(t.rows.size() == classes.size());
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> got, want;
    for (const CyclicClassRow& r : t.rows) got.emplace(r.n, r.class_size);
    for (const auto& cls : classes) want.emplace(cls[0].size(), cls.size());
    CHECK(got == want);
  }
}

TEST_CASE("cyclic class row invariants") {
  for (auto& [name, g] : {std::pair<const char*, Group>{"S5", symmetric(5)},
                          {"A5", alternating(5)},
                          {"S6", symmetric(6)},
                          {"D14", dihedral(7)}}) {
    CAPTURE(name);
    CyclicClassTable t = cyclic_subgroup_classes(g);
    for (const CyclicClassRow& r : t.rows) {
      CHECK(r.class_size * r.normalizer_order == g.order());
      CHECK(element_order(r.representative) == r.n);
      CHECK(g.contains(r.representative));
    }
    // Rows sorted by (n, representative).
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      CHECK((t.rows[i - 1].n < t.rows[i].n ||
             (t.rows[i - 1].n == t.rows[i].n &&
              t.rows[i - 1].representative < t.rows[i].representative)));
    }
  }
}

TEST_CASE("cyclic class table is invariant under relabeling") {
  Group g = symmetric(5);
  Perm r = parse_cycles("(1,3,5,2,4)", 5);
  std::vector<Perm> conj_gens;
  for (const Perm& x : g.generators()) conj_gens.push_back(conjugate(x, r));
  Group h(5, conj_gens);
  CyclicClassTable tg = cyclic_subgroup_classes(g), th = cyclic_subgroup_classes(h);
  REQUIRE(tg.rows.size() == th.rows.size());
  for (std::size_t i = 0; i < tg.rows.size(); ++i) {
    CHECK(tg.rows[i].n == th.rows[i].n);
    CHECK(tg.rows[i].class_size == th.rows[i].class_size);
    CHECK(tg.rows[i].normalizer_order == th.rows[i].normalizer_order);
  }
}

TEST_CASE("counting identity holds and phi(n) divides each order-n count") {
  for (auto& g : {symmetric(3), symmetric(4), symmetric(5), symmetric(6), alternating(5),
                  alternating(6), dihedral(4), quaternion8(), cyclic(30),
                  direct_product(alternating(5), cyclic(4))}) {
    CountIdentityReport rep = verify_cyclic_count_identity(g);
    CHECK(rep.all_ok);
    OrderEquation eq = order_equation(g);
    CHECK(rep.rows.size() == eq.counts.size());
    for (const CountIdentityRow& row : rep.rows) {
      CHECK(row.ok);
      CHECK(row.lhs == row.rhs);
      CHECK(row.rhs == eq.counts.at(row.n));
      CHECK(row.rhs % euler_phi(row.n) == 0);
    }
  }
}

TEST_CASE("D8 subgroup lattice: 8 classes, 10 subgroups") {
  std::vector<SubgroupClassRow> rows = subgroup_lattice(dihedral(4));
  CHECK(rows.size() == 8);
  std::uint64_t total = 0;
  for (const SubgroupClassRow& r : rows) total += r.class_size;
  CHECK(total == 10);
}

TEST_CASE("Q8 subgroup lattice: 6 classes, all normal") {
  std::vector<SubgroupClassRow> rows = subgroup_lattice(quaternion8());
  CHECK(rows.size() == 6);
  for (const SubgroupClassRow& r : rows) CHECK(r.class_size == 1);
}

TEST_CASE("subgroup lattice matches the subset-closure oracle") {
  for (auto& [name, g] : {std::pair<const char*, Group>{"S4", symmetric(4)},
                          {"D8", dihedral(4)},
                          {"Q8", quaternion8()},
                          {"A4", alternating(4)},
                          {"C12", cyclic(12)},
                          {"S3", symmetric(3)}}) {
    CAPTURE(name);
    const auto subs = oracle::all_subgroups(g.degree(), g.elements());
    const auto classes = oracle::conjugacy_classes_of_subgroups(subs, g.elements());
    std::vector<SubgroupClassRow> rows = subgroup_lattice(g);
    CHECK(rows.size() == classes.size());
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> got, want;
    std::uint64_t got_total = 0, want_total = 0;
    for (const SubgroupClassRow& r : rows) {
      got.emplace(r.order, r.class_size);
      got_total += r.class_size;
    }
    for (const auto& cls : classes) {
      want.emplace(cls[0].size(), cls.size());
      want_total += cls.size();
    }
    CHECK(got == want);
    CHECK(got_total == want_total);
    // Lagrange plus flag sanity.
    for (const SubgroupClassRow& r : rows) {
      CHECK(g.order() % r.order == 0);
      Group h = subgroup_of(g, r.representative_gens);
      CHECK(h.order() == r.order);
      CHECK(r.is_solvable == is_solvable(h));
      CHECK(r.is_nilpotent == is_nilpotent(h));
    }
  }
}

TEST_CASE("subgroup lattice cap") {
  CHECK_THROWS_AS(subgroup_lattice(symmetric(6)), LatticeCapExceeded);
}

TEST_CASE("find_subgroup_of_order: divisibility and trivial shapes") {
  SubgroupSearchResult none = find_subgroup_of_order(symmetric(4), 7);
  CHECK_FALSE(none.subgroup.has_value());
  CHECK(none.certificate.strategy == "divisibility");

  SubgroupSearchResult whole = find_subgroup_of_order(symmetric(4), 24);
  REQUIRE(whole.subgroup.has_value());
  CHECK(whole.certificate.strategy == "whole-group");
  CHECK(whole.solvable);

  SubgroupSearchResult triv = find_subgroup_of_order(symmetric(4), 1);
  REQUIRE(triv.subgroup.has_value());
  CHECK(triv.subgroup->order() == 1);
  CHECK(triv.certificate.strategy == "trivial");
}

TEST_CASE("find_subgroup_of_order: lattice shapes") {
  // A5 has no subgroup of order 15.
  SubgroupSearchResult r15 = find_subgroup_of_order(alternating(5), 15);
  CHECK_FALSE(r15.subgroup.has_value());
  CHECK(r15.certificate.strategy == "lattice");

  // S4 has A4, solvable, of order 12.
  SubgroupSearchResult r12 = find_subgroup_of_order(symmetric(4), 12);
  REQUIRE(r12.subgroup.has_value());
  CHECK(r12.subgroup->order() == 12);
  CHECK(r12.solvable);
}

TEST_CASE("find_subgroup_of_order: sylow-closure shapes on S6") {
  // |S6| = 720 = 2^4 * 3^2 * 5. 144 = 2^4 * 3^2 does not occur.
  SubgroupSearchResult none = find_subgroup_of_order(symmetric(6), 144);
  CHECK_FALSE(none.subgroup.has_value());
  CHECK(none.certificate.strategy == "sylow-closure");
  CHECK(none.certificate.sylow_prime == 2);
  CHECK(none.certificate.cofactor_prime == 3);
  CHECK(none.certificate.cofactor_exponent == 2);

  // 48 = 2^4 * 3 occurs (S2 x S4 embeddings and friends).
  SubgroupSearchResult found = find_subgroup_of_order(symmetric(6), 48);
  REQUIRE(found.subgroup.has_value());
  CHECK(found.subgroup->order() == 48);
  CHECK(found.certificate.strategy == "sylow-closure");
  CHECK(is_subgroup_of(symmetric(6), *found.subgroup));

  // The plain Sylow 2-subgroup, order 16.
  SubgroupSearchResult syl = find_subgroup_of_order(symmetric(6), 16);
  REQUIRE(syl.subgroup.has_value());
  CHECK(syl.subgroup->order() == 16);
  CHECK(syl.solvable);
}

TEST_CASE("find_subgroup_of_order: unsupported shape") {
  // |A5 x A5| = 3600; 60 contains no prime's full part of 3600.
  CHECK_THROWS_AS(find_subgroup_of_order(direct_product(alternating(5), alternating(5)), 60),
                  UnsupportedSearch);
}

TEST_CASE("search is deterministic") {
  SubgroupSearchResult a = find_subgroup_of_order(symmetric(6), 48);
  SubgroupSearchResult b = find_subgroup_of_order(symmetric(6), 48);
  REQUIRE(a.subgroup.has_value());
  REQUIRE(b.subgroup.has_value());
  CHECK(a.subgroup->generators() == b.subgroup->generators());
  CHECK(a.certificate.pair_closures == b.certificate.pair_closures);
}
