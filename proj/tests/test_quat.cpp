#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qs3/quat.hpp"

using namespace qs3::quat;
using qs3::Int;
using qs3::Matrix;

namespace {

// Oracle: the full basis product table, written out by hand independently of
// the implementation's table. e[a] * e[b] = sign * e[axis].
struct Cell {
  int axis, sign;
};
constexpr Cell kOracle[4][4] = {
    {{0, +1}, {1, +1}, {2, +1}, {3, +1}},  // 1*{1,i,j,k}
    {{1, +1}, {0, -1}, {3, +1}, {2, -1}},  // i*{...}: i, -1, k, -j
    {{2, +1}, {3, -1}, {0, -1}, {1, +1}},  // j*{...}: j, -k, -1, i
    {{3, +1}, {2, +1}, {1, -1}, {0, -1}},  // k*{...}: k, j, -i, -1
};

}  // namespace

TEST_CASE("unit quaternion product table against hand oracle") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int sa : {+1, -1})
        for (int sb : {+1, -1}) {
          const UnitQuat p = UnitQuat{sa, a} * UnitQuat{sb, b};
          CHECK(p.axis == kOracle[a][b].axis);
          CHECK(p.sign == sa * sb * kOracle[a][b].sign);
        }
}

TEST_CASE("unit products agree with generic quaternion arithmetic") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const UnitQuat u{+1, a}, v{+1, b};
      const auto direct = to_quaternion<int>(u * v);
      const auto generic = to_quaternion<int>(u) * to_quaternion<int>(v);
      CHECK(direct == generic);
    }
}

TEST_CASE("spot values") {
  const UnitQuat i = unit_quat_from_string("i");
  const UnitQuat j = unit_quat_from_string("j");
  const UnitQuat k = unit_quat_from_string("k");
  CHECK(j * i == UnitQuat{-1, 3});  // ji = -k
  CHECK(i * j == k);
  CHECK(i * i == UnitQuat{-1, 0});
  CHECK(unit_pow(i, 2) == UnitQuat{-1, 0});
  CHECK(unit_pow(i, 3) == UnitQuat{-1, 1});
  CHECK(unit_pow(i, 4) == UnitQuat{+1, 0});
  CHECK(conjugate(i) == UnitQuat{-1, 1});
  CHECK(conjugate(UnitQuat{+1, 0}) == UnitQuat{+1, 0});
  CHECK(to_string(UnitQuat{-1, 3}) == "-k");
  CHECK_THROWS_AS(unit_quat_from_string("q"), std::invalid_argument);
  CHECK_THROWS_AS(unit_quat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(unit_quat_from_string("ij"), std::invalid_argument);
}

TEST_CASE("frozen 4x4 multiplication matrices") {
  // columns are the images of (1, i, j, k)
  const auto li = left_mult_matrix({+1, 1}, 1);
  CHECK(li == Matrix<Int>::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
  const auto ri = right_mult_matrix({+1, 1}, 1);
  CHECK(ri == Matrix<Int>::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  CHECK(li != ri);
}

TEST_CASE("multiplication matrices are homomorphisms") {
  for (int blocks : {1, 2}) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const UnitQuat p{+1, a}, q{+1, b};
        // left: L_p L_q = L_{pq}; right: R_p R_q = R_{qp}
        CHECK(left_mult_matrix(p, blocks) * left_mult_matrix(q, blocks) ==
              left_mult_matrix(p * q, blocks));
        CHECK(right_mult_matrix(p, blocks) * right_mult_matrix(q, blocks) ==
              right_mult_matrix(q * p, blocks));
      }
  }
}

TEST_CASE("structure matrices are orthogonal with the expected dets and powers") {
  // Determinant oracle: R_i on one block is block-diagonal with two 2x2
  // rotations, so det = (0*0 - (-1)*1) * (0*0 - 1*(-1)) = 1.
  const auto ri = right_mult_matrix({+1, 1}, 1);
  const Int det_2x2_top = ri(0, 0) * ri(1, 1) - ri(0, 1) * ri(1, 0);
  const Int det_2x2_bot = ri(2, 2) * ri(3, 3) - ri(2, 3) * ri(3, 2);
  CHECK(det_2x2_top * det_2x2_bot == 1);
  CHECK(qs3::bareiss_determinant(ri) == 1);

  for (int axis = 1; axis <= 3; ++axis) {
    for (int blocks : {1, 2, 3}) {
      const auto l = AmbientOperator::left_mult({+1, axis}, blocks);
      const auto r = AmbientOperator::right_mult({+1, axis}, blocks);
      CHECK(l.is_orthogonal());
      CHECK(r.is_orthogonal());
      CHECK(l.det() == 1);
      CHECK(r.det() == 1);
      CHECK(pow(l.matrix(), 2) == -Matrix<Int>::identity(4 * blocks));
      CHECK(pow(r.matrix(), 4) == Matrix<Int>::identity(4 * blocks));
    }
  }
}

TEST_CASE("freeness certificates: det(R_{i^k} - Id) for small l") {
  // Frozen values: per block det(R_i - I) = 4, det(R_{-1} - I) = 16,
  // det(R_{-i} - I) = 4; block-diagonal over l+1 blocks.
  const Int expected_k1[3] = {Int(4), Int(16), Int(64)};
  for (int l = 0; l <= 2; ++l) {
    const int blocks = l + 1;
    const auto id = Matrix<Int>::identity(4 * blocks);
    const Int d1 = qs3::bareiss_determinant(right_mult_matrix(unit_pow({+1, 1}, 1), blocks) - id);
    const Int d2 = qs3::bareiss_determinant(right_mult_matrix(unit_pow({+1, 1}, 2), blocks) - id);
    const Int d3 = qs3::bareiss_determinant(right_mult_matrix(unit_pow({+1, 1}, 3), blocks) - id);
    CHECK(d1 == expected_k1[l]);
    CHECK(d2 == pow(Int(16), blocks));
    CHECK(d3 == d1);
    CHECK(d1 != 0);
    CHECK(d2 != 0);
    CHECK(d3 != 0);
  }
}

TEST_CASE("ambient operators compose and apply") {
  const auto l = AmbientOperator::left_mult({+1, 2}, 2);
  const auto r = AmbientOperator::right_mult({+1, 1}, 2);
  const auto c = l * r;
  CHECK(c.matrix() == l.matrix() * r.matrix());
  CHECK(c.is_orthogonal());

  const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
  const auto via_ops = l.apply(r.apply(x));
  const auto via_comp = c.apply(x);
  for (size_t idx = 0; idx < x.size(); ++idx) CHECK(via_ops[idx] == doctest::Approx(via_comp[idx]));

  CHECK(AmbientOperator::identity(2).apply(x) == x);
  CHECK_THROWS_AS(l.apply(std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("left and right multiplications commute") {
  for (int blocks : {1, 2, 3}) {
    CHECK(commutation_check_exact(blocks) == 0);
    CHECK(commutation_check(blocks) < 1e-12);
  }
}
