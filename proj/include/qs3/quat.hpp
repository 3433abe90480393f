#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qs3/matrix.hpp"

namespace qs3::quat {

// Quaternion over any scalar, component order (1, i, j, k).
// Every R^{4k} in this project is read as H^k through this component order.
template <typename T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  T norm_sq() const { return w * w + x * x + y * y + z * z; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// The eight unit quaternions +-1, +-i, +-j, +-k. axis: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
struct UnitQuat {
  int sign = +1;
  int axis = 0;

  friend bool operator==(UnitQuat a, UnitQuat b) { return a.sign == b.sign && a.axis == b.axis; }
};

// Accepts "1", "-1", "i", "-i", "j", "-j", "k", "-k". Anything else throws.
UnitQuat unit_quat_from_string(const std::string& s);
std::string to_string(UnitQuat q);

UnitQuat operator*(UnitQuat a, UnitQuat b);
UnitQuat conjugate(UnitQuat q);
UnitQuat unit_pow(UnitQuat q, int e);

template <typename T>
Quaternion<T> to_quaternion(UnitQuat q) {
  Quaternion<T> r;
  const T s = T(q.sign);
  switch (q.axis) {
    case 0: r.w = s; break;
    case 1: r.x = s; break;
    case 2: r.y = s; break;
    case 3: r.z = s; break;
    default: throw std::invalid_argument("bad unit quaternion axis");
  }
  return r;
}

// Matrix of v -> q v (resp. v -> v q) on H^k = R^{4k}, acting blockwise.
// Columns hold the images of the basis vectors. Entries are 0, +1, -1.
Matrix<Int> left_mult_matrix(UnitQuat q, int blocks);
Matrix<Int> right_mult_matrix(UnitQuat q, int blocks);

// Blockwise application of a unit multiplication to a coordinate span.
// Works for exact, float, and jet scalars alike.
template <typename T>
void apply_left_unit(UnitQuat q, std::span<const T> in, std::span<T> out) {
  assert(in.size() == out.size() && in.size() % 4 == 0);
  const Quaternion<T> f = to_quaternion<T>(q);
  for (size_t b = 0; b < in.size(); b += 4) {
    const Quaternion<T> v{in[b], in[b + 1], in[b + 2], in[b + 3]};
    const Quaternion<T> r = f * v;
    out[b] = r.w;
    out[b + 1] = r.x;
    out[b + 2] = r.y;
    out[b + 3] = r.z;
  }
}

template <typename T>
void apply_right_unit(UnitQuat q, std::span<const T> in, std::span<T> out) {
  assert(in.size() == out.size() && in.size() % 4 == 0);
  const Quaternion<T> f = to_quaternion<T>(q);
  for (size_t b = 0; b < in.size(); b += 4) {
    const Quaternion<T> v{in[b], in[b + 1], in[b + 2], in[b + 3]};
    const Quaternion<T> r = v * f;
    out[b] = r.w;
    out[b + 1] = r.x;
    out[b + 2] = r.y;
    out[b + 3] = r.z;
  }
}

// An R-linear operator on R^{4k} built from unit-quaternion multiplications.
// The matrix of any such operator is a signed permutation.
class AmbientOperator {
 public:
  static AmbientOperator identity(int blocks);
  static AmbientOperator left_mult(UnitQuat q, int blocks);
  static AmbientOperator right_mult(UnitQuat q, int blocks);

  // Composition a after b.
  friend AmbientOperator operator*(const AmbientOperator& a, const AmbientOperator& b);

  int blocks() const { return blocks_; }
  int dim() const { return 4 * blocks_; }
  const Matrix<Int>& matrix() const { return mat_; }
  Int det() const;
  bool is_orthogonal() const;

  std::vector<double> apply(std::span<const double> v) const;

 private:
  AmbientOperator(int blocks, Matrix<Int> mat) : blocks_(blocks), mat_(std::move(mat)) {}
  int blocks_ = 0;
  Matrix<Int> mat_;
};

// Exact commutation of left and right multiplications: the largest absolute
// entry of L_a R_b - R_b L_a over a in {i, j, k} with b = i. Zero means the
// operator families commute on the nose.
Int commutation_check_exact(int blocks);

// Float counterpart: max residual of (L(R x) - R(L x)) over seeded random x.
double commutation_check(int blocks, int samples = 32, std::uint64_t seed = 1);

}  // namespace qs3::quat
