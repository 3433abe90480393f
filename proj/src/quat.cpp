#include "qs3/quat.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qs3::quat {

namespace {

// Basis product table: e[a] * e[b] = kSign[a][b] * e[kAxis[a][b]].
constexpr int kAxis[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr int kSign[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};

}  // namespace

UnitQuat unit_quat_from_string(const std::string& s) {
  int sign = +1;
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = -1;
    body.erase(0, 1);
  }
  int axis;
  if (body == "1")
    axis = 0;
  else if (body == "i")
    axis = 1;
  else if (body == "j")
    axis = 2;
  else if (body == "k")
    axis = 3;
  else
    throw std::invalid_argument("not a unit quaternion symbol: '" + s + "'");
  return {sign, axis};
}

std::string to_string(UnitQuat q) {
  static const char* names[4] = {"1", "i", "j", "k"};
  return (q.sign < 0 ? std::string("-") : std::string()) + names[q.axis];
}

UnitQuat operator*(UnitQuat a, UnitQuat b) {
  return {a.sign * b.sign * kSign[a.axis][b.axis], kAxis[a.axis][b.axis]};
}

UnitQuat conjugate(UnitQuat q) { return q.axis == 0 ? q : UnitQuat{-q.sign, q.axis}; }

UnitQuat unit_pow(UnitQuat q, int e) {
  if (e < 0) throw std::invalid_argument("unit_pow wants e >= 0");
  UnitQuat r{+1, 0};
  for (int n = 0; n < e; ++n) r = r * q;
  return r;
}

namespace {

Matrix<Int> mult_matrix(UnitQuat q, int blocks, bool left) {
  if (blocks <= 0) throw std::invalid_argument("blocks must be positive");
  const int n = 4 * blocks;
  Matrix<Int> m(n, n);
  for (int b = 0; b < blocks; ++b)
    for (int a = 0; a < 4; ++a) {
      const UnitQuat basis{+1, a};
      const UnitQuat img = left ? q * basis : basis * q;
      m(4 * b + img.axis, 4 * b + a) = img.sign;
    }
  return m;
}

}  // namespace

Matrix<Int> left_mult_matrix(UnitQuat q, int blocks) { return mult_matrix(q, blocks, true); }
Matrix<Int> right_mult_matrix(UnitQuat q, int blocks) { return mult_matrix(q, blocks, false); }

AmbientOperator AmbientOperator::identity(int blocks) {
  return AmbientOperator(blocks, Matrix<Int>::identity(4 * blocks));
}

AmbientOperator AmbientOperator::left_mult(UnitQuat q, int blocks) {
  return AmbientOperator(blocks, left_mult_matrix(q, blocks));
}

AmbientOperator AmbientOperator::right_mult(UnitQuat q, int blocks) {
  return AmbientOperator(blocks, right_mult_matrix(q, blocks));
}

AmbientOperator operator*(const AmbientOperator& a, const AmbientOperator& b) {
  if (a.blocks_ != b.blocks_) throw std::invalid_argument("operator block counts differ");
  return AmbientOperator(a.blocks_, a.mat_ * b.mat_);
}

Int AmbientOperator::det() const { return bareiss_determinant(mat_); }

bool AmbientOperator::is_orthogonal() const {
  return mat_.transpose() * mat_ == Matrix<Int>::identity(mat_.rows());
}

std::vector<double> AmbientOperator::apply(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("vector length mismatch");
  std::vector<double> out(v.size(), 0.0);
  for (int i = 0; i < mat_.rows(); ++i)
    for (int j = 0; j < mat_.cols(); ++j) {
      const Int& e = mat_(i, j);
      if (e == 0) continue;
      out[i] += static_cast<double>(e.convert_to<long>()) * v[j];
    }
  return out;
}

Int commutation_check_exact(int blocks) {
  const Matrix<Int> r = right_mult_matrix({+1, 1}, blocks);
  Int worst(0);
  for (int axis = 1; axis <= 3; ++axis) {
    const Matrix<Int> l = left_mult_matrix({+1, axis}, blocks);
    const Matrix<Int> c = l * r - r * l;
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) {
        const Int a = abs(c(i, j));
        if (a > worst) worst = a;
      }
  }
  return worst;
}

double commutation_check(int blocks, int samples, std::uint64_t seed) {
  const AmbientOperator r = AmbientOperator::right_mult({+1, 1}, blocks);
  std::mt19937_64 eng(seed);
  const auto uniform = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-52 - 1.0; };
  double worst = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    const AmbientOperator l = AmbientOperator::left_mult({+1, axis}, blocks);
    for (int s = 0; s < samples; ++s) {
      std::vector<double> x(static_cast<size_t>(4 * blocks));
      for (auto& v : x) v = uniform();
      const std::vector<double> lr = l.apply(r.apply(x));
      const std::vector<double> rl = r.apply(l.apply(x));
      for (size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(lr[i] - rl[i]));
    }
  }
  return worst;
}

}  // namespace qs3::quat
