#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "fg/constructions.hpp"
#include "fg/spectrum.hpp"
#include "oracles.hpp"

using namespace fg;

TEST_CASE("A5 spectrum is {1,2,3,5}") {
  CHECK(spectrum(alternating(5)) == std::set<std::uint64_t>{1, 2, 3, 5});
}

TEST_CASE("order equations of small groups") {
  OrderEquation s4 = order_equation(symmetric(4));
  CHECK(s4.total == 24);
  CHECK(s4.counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});

  OrderEquation d8 = order_equation(dihedral(4));
  CHECK(d8.counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 5}, {4, 2}});
  OrderEquation q8 = order_equation(quaternion8());
  CHECK(q8.counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("order equation counts sum to the group order") {
  for (auto& g : {symmetric(5), alternating(6), cyclic(30), dihedral(7),
                  direct_product(alternating(5), cyclic(6))}) {
    OrderEquation eq = order_equation(g);
    std::uint64_t sum = 0;
    for (auto& [n, c] : eq.counts) sum += c;
    CHECK(sum == eq.total);
    CHECK(eq.total == g.order());
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(symmetric(4)) == 12);
  CHECK(exponent(alternating(5)) == 30);
  CHECK(exponent(cyclic(12)) == 12);
  CHECK(exponent(quaternion8()) == 4);
}

TEST_CASE("g_of_d equals the direct x^d = 1 count") {
  for (auto& g : {symmetric(4), symmetric(5), alternating(5), dihedral(4), quaternion8(),
                  cyclic(30), direct_product(dihedral(4), cyclic(3))}) {
    const std::uint64_t e = exponent(g);
    const auto direct = oracle::power_identity_counts(g.elements(), e);
    for (std::uint64_t d = 1; d <= e; ++d) CHECK(g_of_d(g, d) == direct[d]);
    CHECK(g_of_d(g, e) == g.order());
  }
}

TEST_CASE("direct product order equation matches the lcm convolution") {
  for (auto& [a, b] : {std::pair<Group, Group>{symmetric(3), cyclic(4)},
                       {alternating(4), dihedral(4)},
                       {cyclic(6), cyclic(10)},
                       {quaternion8(), symmetric(3)}}) {
    OrderEquation ea = order_equation(a), eb = order_equation(b);
    std::map<std::uint64_t, std::uint64_t> conv;
    for (auto& [n, cn] : ea.counts)
      for (auto& [m, cm] : eb.counts) conv[std::lcm(n, m)] += cn * cm;
    OrderEquation prod = order_equation(direct_product(a, b));
    CHECK(prod.counts == conv);
    CHECK(prod.total == ea.total * eb.total);
  }
}

TEST_CASE("same_order_type on equal groups") {
  TypeVerdict v = same_order_type(alternating(5), alternating(5));
  CHECK(v.equal);
  CHECK_FALSE(v.order_type_witness.has_value());
}

TEST_CASE("same_order_type minimal witness for D8 vs Q8") {
  TypeVerdict v = same_order_type(dihedral(4), quaternion8());
  REQUIRE_FALSE(v.equal);
  REQUIRE(v.order_type_witness.has_value());
  CHECK(v.order_type_witness->d == 2);
  CHECK(v.order_type_witness->count_a == 6);
  CHECK(v.order_type_witness->count_b == 2);
}

TEST_CASE("same_order_type witness is the least differing divisor count") {
  // C4 x C4 vs C4 x C2 x C2: same spectrum, same order, first difference at d = 2.
  Group a = direct_product(cyclic(4), cyclic(4));
  Group b = direct_product(cyclic(4), direct_product(cyclic(2), cyclic(2)));
  TypeVerdict v = same_order_type(a, b);
  REQUIRE_FALSE(v.equal);
  REQUIRE(v.order_type_witness.has_value());
  const std::uint64_t d = v.order_type_witness->d;
  CHECK(v.order_type_witness->count_a == g_of_d(a, d));
  CHECK(v.order_type_witness->count_b == g_of_d(b, d));
  for (std::uint64_t k = 1; k < d; ++k) CHECK(g_of_d(a, k) == g_of_d(b, k));
}

TEST_CASE("same_two_orders_type") {
  // Same order, same spectrum, different order equations.
  Group a = dihedral(6);          // order 12, spectrum {1,2,3,6}
  Group b = direct_product(cyclic(6), cyclic(2));
  CHECK(same_two_orders_type(a, b).equal);
  CHECK_FALSE(same_order_type(a, b).equal);

  // Different order.
  TypeVerdict v1 = same_two_orders_type(cyclic(6), cyclic(12));
  REQUIRE_FALSE(v1.equal);
  REQUIRE(v1.total_witness.has_value());
  CHECK(v1.total_witness->first == 6);
  CHECK(v1.total_witness->second == 12);

  // Same order, different spectrum.
  TypeVerdict v2 = same_two_orders_type(cyclic(12), alternating(4));
  REQUIRE_FALSE(v2.equal);
  REQUIRE(v2.spectrum_witness.has_value());
  CHECK(v2.spectrum_witness->first == std::set<std::uint64_t>{4, 6, 12});
  CHECK(v2.spectrum_witness->second == std::set<std::uint64_t>{});
}
