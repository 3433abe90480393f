#pragma once

#include <Eigen/Dense>
#include <array>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "qs3/jet.hpp"
#include "qs3/quat.hpp"

namespace qs3::geometry {

// Model space: M = S^{4l+3} x T^{4m}, carrying three almost contact metric
// structures (phi_a, xi_a, eta_a, g), a = 1, 2, 3.
//
// Conventions, fixed throughout:
//   * every R^{4k} is a stack of quaternionic blocks with component order
//     (1, i, j, k); J_a is left multiplication by i, j, k on each block;
//   * the sphere S^{4l+3} sits in R^{4(l+1)} with unit normal N(y) = y/|y|;
//     sphere tensors are evaluated through that radial extension, so all
//     formulas make sense on R^{4(l+1)} \ {0} and restrict to the sphere:
//       xi_a  = -J_a N,
//       phi_a u = J_a u - <J_a u, N> N,
//       eta_a(u) = <u, xi_a>;
//   * torus coordinates live in [0,1)^{4m} with the metric of R^{4m}; the
//     torus factor of phi_a is plain J_a, with vanishing xi and eta parts;
//   * g is the induced product (Euclidean) metric;
//   * exterior derivative of a 1-form carries no normalization factor:
//       d eta(X,Y) = X eta(Y) - Y eta(X) - eta([X,Y]),
//     and the 2-form case is the matching 6-term formula.

struct ProductPoint {
  std::vector<double> sphere;  // unit vector in R^{4(l+1)}
  std::vector<double> torus;   // coordinates in [0,1)^{4m}
};

struct TangentVector {
  std::vector<double> sphere;  // ambient component, orthogonal to the base point
  std::vector<double> torus;
};

TangentVector operator+(const TangentVector& a, const TangentVector& b);
TangentVector operator-(const TangentVector& a, const TangentVector& b);
TangentVector operator*(double s, const TangentVector& a);
double dot(const TangentVector& a, const TangentVector& b);
double norm(const TangentVector& a);

// x reduced into [0,1).
double reduce_mod1(double x);

class ProductStructure;

// A vector field given by a small closed recipe rather than a raw callback,
// so the same field can be evaluated on double and on jet coordinates.
// All recipes produce fields tangent to every sphere shell, hence their
// Lie brackets stay tangent.
class VectorField {
 public:
  // y -> (u - <u, N(y)> N(y), w): the constant ambient pair projected to the shell.
  static VectorField constant_projection(std::vector<double> u, std::vector<double> w);
  // y -> xi_alpha(y).
  static VectorField reeb(int alpha);
  // phi_alpha applied pointwise to another field.
  static VectorField phi_of(int alpha, VectorField inner);
  // Inner field scaled by 1 + (coord_c - base); coordinates are indexed
  // sphere-ambient first, then torus. Changes jets but not the value when
  // coord_c = base at the evaluation point.
  static VectorField coordinate_scaled(VectorField inner, int coord, double base);

  template <typename T>
  void eval(const ProductStructure& S, std::span<const T> s, std::span<const T> t,
            std::vector<T>& out_u, std::vector<T>& out_w) const;

 private:
  enum class Kind { ConstantProjection, Reeb, PhiOf, CoordinateScaled };
  VectorField() = default;

  Kind kind_ = Kind::ConstantProjection;
  int alpha_ = 1;
  int coord_ = 0;
  double base_ = 0.0;
  std::vector<double> u_, w_;
  std::shared_ptr<const VectorField> inner_;
};

// Deliberate single-defect corruptions, used to prove the checks can fail.
enum class Fault {
  None,
  // phi reports the first torus component of its output with flipped sign.
  FlipPhiFirstTorusCoord,
};

// Orthonormal frame at a point together with the structure tensors
// expressed in it. Basis order: xi_1, xi_2, xi_3, then horizontal sphere
// directions, then torus directions.
struct StructureFrame {
  std::vector<TangentVector> basis;
  Eigen::MatrixXd metric;                      // Gram matrix of the basis
  std::array<Eigen::VectorXd, 3> xi;           // frame components of xi_a
  std::array<Eigen::VectorXd, 3> eta;          // eta_a(b_i)
  std::array<Eigen::MatrixXd, 3> phi;          // phi_a b_j expanded in the basis
  std::array<Eigen::MatrixXd, 3> fundamental;  // Phi_a(b_i, b_j) = g(b_i, phi_a b_j)
  std::array<Eigen::MatrixXd, 3> d_eta;        // d eta_a(b_i, b_j)
};

class ProductStructure {
 public:
  ProductStructure(int l, int m, Fault fault = Fault::None);

  int l() const { return l_; }
  int m() const { return m_; }
  int sphere_ambient_dim() const { return 4 * (l_ + 1); }
  int sphere_dim() const { return 4 * l_ + 3; }
  int torus_dim() const { return 4 * m_; }
  int dim() const { return sphere_dim() + torus_dim(); }
  Fault fault() const { return fault_; }

  // Validating constructor for points: normalizes the sphere part, reduces
  // torus coordinates mod 1. Rejects wrong sizes and near-zero sphere data.
  ProductPoint make_point(std::vector<double> s, std::vector<double> t) const;

  TangentVector sphere_reeb(int alpha, const ProductPoint& p) const;
  TangentVector phi(int alpha, const ProductPoint& p, const TangentVector& x) const;
  double eta(int alpha, const ProductPoint& p, const TangentVector& x) const;
  double metric(const ProductPoint& p, const TangentVector& x, const TangentVector& y) const;

  StructureFrame structure_frame(const ProductPoint& p) const;

  TangentVector lie_bracket(const ProductPoint& p, const VectorField& x, const VectorField& y) const;
  double d_one_form(int alpha, const ProductPoint& p, const VectorField& x, const VectorField& y) const;
  double d_two_form(int alpha, const ProductPoint& p, const VectorField& x, const VectorField& y,
                    const VectorField& z) const;
  // Normality tensor
  //   N(X,Y) = phi^2 [X,Y] + [phi X, phi Y] - phi [phi X, Y] - phi [X, phi Y]
  //            + d eta_a(X,Y) xi_a,
  // with d as above. Vanishes identically for the uncorrupted structure.
  TangentVector nijenhuis(int alpha, const ProductPoint& p, const VectorField& x, const VectorField& y) const;

  // Generator of the Z_4 action: f multiplies each sphere block by i on the
  // right, h does the same on torus blocks mod 1, diag(k) composes both k
  // times. These are signed coordinate permutations, so diag(4) returns its
  // input bitwise whenever the torus coordinates reduce exactly (dyadic
  // coordinates in [0,1) do).
  ProductPoint action_f(const ProductPoint& p) const;
  ProductPoint action_h(const ProductPoint& p) const;
  ProductPoint action_diag(int k, const ProductPoint& p) const;
  TangentVector pushforward_diag(const TangentVector& x) const;

  // Scalar-generic tensor cores. `s` is an ambient sphere coordinate vector,
  // not necessarily unit; each core works through N(s) = s/|s|.
  template <typename T>
  std::vector<T> normal(std::span<const T> s) const {
    std::vector<T> n(s.begin(), s.end());
    T q = T(0.0);
    for (const T& v : n) q += v * v;
    using std::sqrt;
    const T r = sqrt(q);
    for (T& v : n) v = v / r;
    return n;
  }

  template <typename T>
  std::vector<T> reeb_core(int alpha, std::span<const T> s) const {
    check_alpha(alpha);
    std::vector<T> n = normal<T>(s);
    std::vector<T> out(n.size());
    quat::apply_left_unit<T>({+1, alpha}, n, out);
    for (T& v : out) v = -v;
    return out;
  }

  template <typename T>
  T eta_core(int alpha, std::span<const T> s, std::span<const T> u) const {
    const std::vector<T> xi = reeb_core<T>(alpha, s);
    T acc = T(0.0);
    for (size_t i = 0; i < xi.size(); ++i) acc += u[i] * xi[i];
    return acc;
  }

  template <typename T>
  void phi_core(int alpha, std::span<const T> s, std::span<const T> u, std::span<const T> w,
                std::vector<T>& out_u, std::vector<T>& out_w) const {
    check_alpha(alpha);
    out_u.assign(u.size(), T(0.0));
    quat::apply_left_unit<T>({+1, alpha}, u, out_u);
    const std::vector<T> n = normal<T>(s);
    T c = T(0.0);
    for (size_t i = 0; i < n.size(); ++i) c += out_u[i] * n[i];
    for (size_t i = 0; i < n.size(); ++i) out_u[i] -= c * n[i];
    out_w.assign(w.size(), T(0.0));
    if (!w.empty()) {
      quat::apply_left_unit<T>({+1, alpha}, w, out_w);
      if (fault_ == Fault::FlipPhiFirstTorusCoord) out_w[0] = -out_w[0];
    }
  }

  // Phi_a(U, V) = g(U, phi_a V) at ambient coordinates (s, t-independent).
  template <typename T>
  T two_form_core(int alpha, std::span<const T> s, std::span<const T> uu, std::span<const T> uw,
                  std::span<const T> vu, std::span<const T> vw) const {
    std::vector<T> pu, pw;
    phi_core<T>(alpha, s, vu, vw, pu, pw);
    T acc = T(0.0);
    for (size_t i = 0; i < pu.size(); ++i) acc += uu[i] * pu[i];
    for (size_t i = 0; i < pw.size(); ++i) acc += uw[i] * pw[i];
    return acc;
  }

  void check_point(const ProductPoint& p) const;
  void check_tangent(const ProductPoint& p, const TangentVector& x) const;

 private:
  static void check_alpha(int alpha) {
    if (alpha < 1 || alpha > 3) throw std::invalid_argument("structure index must be 1, 2 or 3");
  }

  int l_;
  int m_;
  Fault fault_;
};

template <typename T>
void VectorField::eval(const ProductStructure& S, std::span<const T> s, std::span<const T> t,
                       std::vector<T>& out_u, std::vector<T>& out_w) const {
  switch (kind_) {
    case Kind::ConstantProjection: {
      out_u.assign(u_.begin(), u_.end());
      const std::vector<T> n = S.normal<T>(s);
      T c = T(0.0);
      for (size_t i = 0; i < n.size(); ++i) c += out_u[i] * n[i];
      for (size_t i = 0; i < n.size(); ++i) out_u[i] -= c * n[i];
      out_w.assign(w_.begin(), w_.end());
      return;
    }
    case Kind::Reeb: {
      out_u = S.reeb_core<T>(alpha_, s);
      out_w.assign(t.size(), T(0.0));
      return;
    }
    case Kind::PhiOf: {
      std::vector<T> iu, iw;
      inner_->eval<T>(S, s, t, iu, iw);
      S.phi_core<T>(alpha_, s, iu, iw, out_u, out_w);
      return;
    }
    case Kind::CoordinateScaled: {
      inner_->eval<T>(S, s, t, out_u, out_w);
      const T c = coord_ < static_cast<int>(s.size()) ? s[coord_] : t[coord_ - static_cast<int>(s.size())];
      const T f = T(1.0) + (c - T(base_));
      for (T& v : out_u) v *= f;
      for (T& v : out_w) v *= f;
      return;
    }
  }
  throw std::logic_error("unreachable vector field kind");
}

}  // namespace qs3::geometry
