#include "fg/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace fg {

OrderEquation order_equation(const Group& G) {
  OrderEquation eq;
  for (const Perm& e : G.elements()) ++eq.counts[element_order(e)];
  eq.total = G.order();
  return eq;
}

std::set<std::uint64_t> spectrum(const Group& G) {
  std::set<std::uint64_t> s;
  for (const auto& [n, c] : order_equation(G).counts) s.insert(n);
  return s;
}

std::uint64_t exponent(const Group& G) {
  std::uint64_t e = 1;
  for (std::uint64_t n : spectrum(G)) e = std::lcm(e, n);
  return e;
}

std::uint64_t g_of_d(const OrderEquation& eq, std::uint64_t d) {
  std::uint64_t total = 0;
  for (const auto& [n, c] : eq.counts)
    if (d % n == 0) total += c;
  return total;
}

std::uint64_t g_of_d(const Group& G, std::uint64_t d) {
  return g_of_d(order_equation(G), d);
}

TypeVerdict same_order_type(const OrderEquation& a, const OrderEquation& b) {
  TypeVerdict v;
  if (a == b) {
    v.equal = true;
    return v;
  }
  // Least n with differing counts is also the least d with |A(d)| != |B(d)|:
  // every proper divisor of it contributes equally to both divisor sums.
  std::set<std::uint64_t> keys;
  for (const auto& [n, c] : a.counts) keys.insert(n);
  for (const auto& [n, c] : b.counts) keys.insert(n);
  for (std::uint64_t n : keys) {
    const auto ia = a.counts.find(n);
    const auto ib = b.counts.find(n);
    const std::uint64_t ca = ia == a.counts.end() ? 0 : ia->second;
    const std::uint64_t cb = ib == b.counts.end() ? 0 : ib->second;
    if (ca != cb) {
      v.order_type_witness = {n, g_of_d(a, n), g_of_d(b, n)};
      return v;
    }
  }
  // counts agree but totals differ (impossible when counts sum to totals)
  v.total_witness = {a.total, b.total};
  return v;
}

TypeVerdict same_order_type(const Group& A, const Group& B) {
  return same_order_type(order_equation(A), order_equation(B));
}

TypeVerdict same_two_orders_type(const Group& A, const Group& B) {
  TypeVerdict v;
  const std::uint64_t oa = A.order();
  const std::uint64_t ob = B.order();
  if (oa != ob) {
    v.total_witness = {oa, ob};
    return v;
  }
  const std::set<std::uint64_t> sa = spectrum(A);
  const std::set<std::uint64_t> sb = spectrum(B);
  if (sa != sb) {
    std::set<std::uint64_t> only_a, only_b;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::inserter(only_a, only_a.end()));
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                        std::inserter(only_b, only_b.end()));
    v.spectrum_witness = {std::move(only_a), std::move(only_b)};
    return v;
  }
  v.equal = true;
  return v;
}

}  // namespace fg
