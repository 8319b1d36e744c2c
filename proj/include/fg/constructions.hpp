#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fg/group.hpp"

namespace fg {

// --------------------------------------------------------------------------
// Standard families

Group trivial_group(int degree = 1);
Group cyclic(int n);
Group symmetric(int n);
Group alternating(int n);
// Symmetries of the regular n-gon, order 2n, acting on n points (n >= 3).
Group dihedral(int n);
// Degree-8 regular representation; construction verifies a^4 = 1, a^2 = b^2,
// b a b^-1 = a^-1, order 8, and a unique involution.
Group quaternion8();

// Acts on the disjoint union of the two domains (B shifted past A).
Group direct_product(const Group& A, const Group& B);

// --------------------------------------------------------------------------
// The field of 4 elements: values 0, 1, w, w^2 encoded as 0..3 with
// w^2 = w + 1; addition is bitwise xor of the 2-bit encodings.

struct FF4 {
  static std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
  static std::uint8_t mul(std::uint8_t a, std::uint8_t b);
  static std::uint8_t inv(std::uint8_t a);
  static std::uint8_t frobenius(std::uint8_t a) { return mul(a, a); }
};

using Vec3GF4 = std::array<std::uint8_t, 3>;
using MatGF4 = std::array<std::array<std::uint8_t, 3>, 3>;

MatGF4 mat_identity_gf4();
MatGF4 mat_mul_gf4(const MatGF4& a, const MatGF4& b);
Vec3GF4 mat_apply_gf4(const MatGF4& m, const Vec3GF4& v);
std::uint8_t det_gf4(const MatGF4& m);

// The projective plane over GF(4): 21 points (normalized so the first
// nonzero coordinate is 1), numbered 1..21 by lexicographic enumeration;
// 21 lines numbered 22..42 by sorted point sets. Each line stores the
// normalized functional u with point set {p : u.p = 0}.
struct ProjectivePlane {
  std::vector<Vec3GF4> points;                     // index 0..20
  std::vector<Vec3GF4> line_functionals;           // index 0..20 (point id = index+22)
  std::vector<std::vector<int>> line_points;       // sorted 0-based point indices
  int point_index(const Vec3GF4& v) const;         // v need not be normalized
  int line_index_by_functional(const Vec3GF4& u) const;
  int line_index_by_points(std::vector<int> pts) const;
  static const ProjectivePlane& instance();
};

// Image of SL(3,4) on the 21 projective points, generated by the 18
// transvections I + lambda*E_ij. Order 20160.
Group psl3_4();

enum class ExtensionVariant { Field, Graph, GraphField };
std::string variant_name(ExtensionVariant v);

// PSL(3,4) on the 42 points-plus-lines, extended by one outer involution:
// Field = entrywise Frobenius, Graph = the polarity u -> orthogonal
// complement (swaps the two 21-blocks), GraphField = their composition.
// Each has order 40320.
Group l3_4_extension(ExtensionVariant v);

// Picks the unique degree-42 extension whose order equation is
// {1:1, 2:435, 3:2240, 4:6300, 5:8064, 6:6720, 7:5760, 8:5040, 14:5760}.
std::pair<ExtensionVariant, Group> identify_2_2();

// 4x4 matrix over GF(2), bits row-major (bit 15 = entry (0,0)).
using MatGF2 = std::uint16_t;

bool gf2_invertible(MatGF2 m);
MatGF2 gf2_mul(MatGF2 a, MatGF2 b);
Perm gf2_action_on_vectors(MatGF2 m);  // degree 16, vector v at point v+1

// Deterministic search for a generating pair of an A7 subgroup of GL(4,2):
// first ordered pair, in canonical matrix order, generating a perfect
// subgroup of order 2520. The result is cached at `cache` (two lines of 16
// bits row-major); a present cache is verified and regenerated if invalid.
std::pair<MatGF2, MatGF2> a7_in_gl42(
    const std::optional<std::filesystem::path>& cache = std::nullopt);

// The affine group 2^4 : A7 on the 16 vectors of GF(2)^4: the two matrix
// generators acting linearly plus translation by the first basis vector.
// Order 40320.
Group affine_2_4_a7(const std::optional<std::filesystem::path>& cache = std::nullopt);

}  // namespace fg
