#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include "fg/classes.hpp"
#include "fg/constructions.hpp"
#include "fg/errors.hpp"
#include "fg/spectrum.hpp"
#include "oracles.hpp"

using namespace fg;

TEST_CASE("standard family orders") {
  CHECK(trivial_group().order() == 1);
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(7).order() == 7);
  CHECK(symmetric(1).order() == 1);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(3).order() == 3);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(dihedral(3).order() == 6);
  CHECK(dihedral(4).order() == 8);
  CHECK(dihedral(12).order() == 24);
  CHECK(quaternion8().order() == 8);
}

TEST_CASE("alternating groups contain only even permutations") {
  Group a5 = alternating(5);
  for (const Perm& g : a5.generators()) {
    // Even permutations of 5 points: cycle type (3) or (5) or (2,2).
    std::uint64_t o = element_order(g);
    CHECK((o == 3 || o == 5 || o == 2));
  }
  CHECK_FALSE(a5.contains(parse_cycles("(1,2)", 5)));
}

TEST_CASE("quaternion group has a unique involution") {
  OrderEquation eq = order_equation(quaternion8());
  CHECK(eq.counts.at(2) == 1);
  CHECK(eq.counts.at(4) == 6);
}

TEST_CASE("direct product degree and order") {
  Group p = direct_product(symmetric(3), cyclic(4));
  CHECK(p.degree() == 7);
  CHECK(p.order() == 24);
  Group q = direct_product(p, alternating(4));
  CHECK(q.degree() == 11);
  CHECK(q.order() == 288);
}

TEST_CASE("GF(4) field axioms, exhaustively") {
  for (std::uint8_t a = 0; a < 4; ++a) {
    CHECK(FF4::add(a, 0) == a);
    CHECK(FF4::mul(a, 1) == a);
    CHECK(FF4::mul(a, 0) == 0);
    CHECK(FF4::add(a, a) == 0);  // characteristic 2
    if (a != 0) CHECK(FF4::mul(a, FF4::inv(a)) == 1);
    for (std::uint8_t b = 0; b < 4; ++b) {
      CHECK(FF4::add(a, b) == FF4::add(b, a));
      CHECK(FF4::mul(a, b) == FF4::mul(b, a));
      CHECK(FF4::frobenius(FF4::mul(a, b)) == FF4::mul(FF4::frobenius(a), FF4::frobenius(b)));
      CHECK(FF4::frobenius(FF4::add(a, b)) == FF4::add(FF4::frobenius(a), FF4::frobenius(b)));
      for (std::uint8_t c = 0; c < 4; ++c) {
        CHECK(FF4::mul(a, FF4::add(b, c)) == FF4::add(FF4::mul(a, b), FF4::mul(a, c)));
        CHECK(FF4::mul(a, FF4::mul(b, c)) == FF4::mul(FF4::mul(a, b), c));
      }
    }
  }
  // w^2 = w + 1 and w^3 = 1 under the 0,1,w,w^2 encoding.
  CHECK(FF4::mul(2, 2) == 3);
  CHECK(FF4::mul(2, 3) == 1);
}

TEST_CASE("PG(2,4) incidence") {
  const ProjectivePlane& pl = ProjectivePlane::instance();
  REQUIRE(pl.points.size() == 21);
  REQUIRE(pl.line_points.size() == 21);
  std::vector<int> lines_through(21, 0);
  for (const auto& line : pl.line_points) {
    CHECK(line.size() == 5);
    for (int p : line) lines_through[static_cast<std::size_t>(p)]++;
  }
  for (int c : lines_through) CHECK(c == 5);
  // Every pair of distinct points lies on exactly one line.
  for (int p = 0; p < 21; ++p) {
    for (int q = p + 1; q < 21; ++q) {
      int joining = 0;
      for (const auto& line : pl.line_points) {
        bool hp = false, hq = false;
        for (int x : line) {
          hp |= (x == p);
          hq |= (x == q);
        }
        if (hp && hq) ++joining;
      }
      CHECK(joining == 1);
    }
  }
  // Points are normalized: first nonzero coordinate is 1.
  for (const Vec3GF4& v : pl.points) {
    std::uint8_t first = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
    CHECK(first == 1);
  }
  // point_index handles unnormalized input (scalar multiples).
  for (int i = 0; i < 21; ++i) {
    Vec3GF4 v = pl.points[static_cast<std::size_t>(i)];
    Vec3GF4 w = {FF4::mul(2, v[0]), FF4::mul(2, v[1]), FF4::mul(2, v[2])};
    CHECK(pl.point_index(w) == i);
  }
}

TEST_CASE("GF(4) matrix determinant and product") {
  MatGF4 id = mat_identity_gf4();
  CHECK(det_gf4(id) == 1);
  CHECK(mat_mul_gf4(id, id) == id);
  MatGF4 t = id;
  t[0][1] = 2;  // transvection I + w*E_01
  CHECK(det_gf4(t) == 1);
  MatGF4 t2 = mat_mul_gf4(t, t);
  CHECK(det_gf4(t2) == 1);
  CHECK(t2[0][1] == 0);  // characteristic 2: (I+N)^2 = I when N^2 = 0
}

TEST_CASE("PSL(3,4) on 21 points: order 20160, simple") {
  Group g = psl3_4();
  CHECK(g.degree() == 21);
  CHECK(g.order() == 20160);
  std::vector<Group> series = derived_series(g);
  CHECK(series.size() == 2);
  CHECK(series[1].order() == 20160);  // perfect
  CHECK_FALSE(is_solvable(g));
  CHECK(spectrum(g) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 7});
}

TEST_CASE("degree-42 extensions: order 40320, block behaviour") {
  auto crosses_blocks = [](const Group& g) {
    for (const Perm& x : g.generators())
      for (int p = 0; p < 21; ++p)
        if (x.apply(p) >= 21) return true;
    return false;
  };
  for (ExtensionVariant v :
       {ExtensionVariant::Field, ExtensionVariant::Graph, ExtensionVariant::GraphField}) {
    Group g = l3_4_extension(v);
    CHECK(g.degree() == 42);
    CHECK(g.order() == 40320);
    CHECK(is_subgroup_of(g, l3_4_extension(v)));
  }
  CHECK_FALSE(crosses_blocks(l3_4_extension(ExtensionVariant::Field)));
  CHECK(crosses_blocks(l3_4_extension(ExtensionVariant::Graph)));
  CHECK(crosses_blocks(l3_4_extension(ExtensionVariant::GraphField)));
}

TEST_CASE("identify_2_2 picks the unique matching variant") {
  auto [variant, g] = identify_2_2();
  OrderEquation eq = order_equation(g);
  CHECK(eq.total == 40320);
  CHECK(eq.counts.at(2) == 435);
  CHECK(eq.counts.at(14) == 5760);
  const std::map<std::uint64_t, std::uint64_t> target{{1, 1},    {2, 435},  {3, 2240},
                                                      {4, 6300}, {5, 8064}, {6, 6720},
                                                      {7, 5760}, {8, 5040}, {14, 5760}};
  CHECK(eq.counts == target);
  // The other two variants differ in at least one count.
  for (ExtensionVariant v :
       {ExtensionVariant::Field, ExtensionVariant::Graph, ExtensionVariant::GraphField}) {
    if (v == variant) continue;
    CHECK(order_equation(l3_4_extension(v)).counts != target);
  }
}

TEST_CASE("GF(2) 4x4 matrices") {
  // |GL(4,2)| = 20160 of the 65536 matrices.
  int invertible = 0;
  for (std::uint32_t m = 0; m < 65536; ++m)
    if (gf2_invertible(static_cast<MatGF2>(m))) ++invertible;
  CHECK(invertible == 20160);

  const MatGF2 id = 0x8421;  // diagonal bits
  CHECK(gf2_invertible(id));
  CHECK(gf2_action_on_vectors(id).is_identity());
  // Associativity spot checks on a few invertible matrices.
  std::vector<MatGF2> ms;
  for (std::uint32_t m = 0; m < 65536 && ms.size() < 5; ++m)
    if (gf2_invertible(static_cast<MatGF2>(m))) ms.push_back(static_cast<MatGF2>(m));
  for (MatGF2 a : ms)
    for (MatGF2 b : ms) {
      CHECK(gf2_mul(a, gf2_mul(b, id)) == gf2_mul(gf2_mul(a, b), id));
      // The permutation action is a homomorphism (left-to-right composition
      // pairs with reversed matrix product or the same, fixed convention).
      Perm pa = gf2_action_on_vectors(a), pb = gf2_action_on_vectors(b);
      Perm pab = gf2_action_on_vectors(gf2_mul(a, b));
      CHECK((compose(pa, pb) == pab || compose(pb, pa) == pab));
    }
}

TEST_CASE("a7_in_gl42: order 2520, perfect, matches the degree-7 model") {
  auto [g, h] = a7_in_gl42();
  Perm pg = gf2_action_on_vectors(g), ph = gf2_action_on_vectors(h);
  Group a7(16, {pg, ph});
  CHECK(a7.order() == 2520);
  std::vector<Group> series = derived_series(a7);
  CHECK(series.back().order() == 2520);
  CHECK(order_equation(a7).counts == order_equation(alternating(7)).counts);
}

TEST_CASE("a7_in_gl42 cache round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fg-test-a7cache";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cache = dir / "a7.txt";
  auto first = a7_in_gl42(cache);
  CHECK(fs::exists(cache));
  auto second = a7_in_gl42(cache);
  CHECK(first == second);
  // A corrupt cache is ignored and regenerated.
  {
    std::ofstream out(cache);
    out << "garbage\n";
  }
  auto third = a7_in_gl42(cache);
  CHECK(first == third);
  fs::remove_all(dir);
}

TEST_CASE("affine 2^4:A7") {
  Group g = affine_2_4_a7();
  CHECK(g.degree() == 16);
  CHECK(g.order() == 40320);
  // The translation subgroup is normal, elementary abelian of order 16.
  std::vector<Perm> translations;
  for (int t = 1; t < 16; ++t) {
    std::vector<int> img(16);
    for (int v = 0; v < 16; ++v) img[static_cast<std::size_t>(v)] = (v ^ t) + 1;
    translations.push_back(Perm::from_images(img));
  }
  Group trans = subgroup_of(g, translations);
  CHECK(trans.order() == 16);
  CHECK(is_abelian(trans));
  for (const Perm& x : trans.elements())
    if (!x.is_identity()) CHECK(element_order(x) == 2);
  CHECK(is_normal(g, trans));
  // Headline check: same order equation as the selected 42-point group.
  CHECK(same_order_type(g, identify_2_2().second).equal);
}
