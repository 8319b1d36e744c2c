#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "fg/group.hpp"

namespace fg {

// |G| = sum over n of counts[n], counts[n] = number of elements of order n.
// Zero-count keys are omitted; keys ascend (std::map).
struct OrderEquation {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  friend bool operator==(const OrderEquation& a, const OrderEquation& b) {
    return a.total == b.total && a.counts == b.counts;
  }
};

OrderEquation order_equation(const Group& G);

// Set of element orders; closed under divisors, contains 1.
std::set<std::uint64_t> spectrum(const Group& G);

// lcm of the element orders.
std::uint64_t exponent(const Group& G);

// |{x in G : x^d = 1}| via the divisor sum of the order equation.
std::uint64_t g_of_d(const Group& G, std::uint64_t d);
std::uint64_t g_of_d(const OrderEquation& eq, std::uint64_t d);

struct TypeVerdict {
  bool equal = false;

  // Order-type failure: least d where the counts differ, with both counts.
  struct OrderTypeWitness {
    std::uint64_t d = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
  };
  std::optional<OrderTypeWitness> order_type_witness;

  // Two-orders failures.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> total_witness;
  std::optional<std::pair<std::set<std::uint64_t>, std::set<std::uint64_t>>>
      spectrum_witness;  // orders only in A, orders only in B
};

// Equal order equations; on failure the witness is the minimal failing d.
TypeVerdict same_order_type(const Group& A, const Group& B);
TypeVerdict same_order_type(const OrderEquation& a, const OrderEquation& b);

// Equal group orders and equal spectra.
TypeVerdict same_two_orders_type(const Group& A, const Group& B);

}  // namespace fg
