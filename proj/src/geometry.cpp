#include "qs3/geometry.hpp"

#include <cmath>
#include <sstream>

namespace qs3::geometry {

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  TangentVector r = a;
  for (size_t i = 0; i < r.sphere.size(); ++i) r.sphere[i] += b.sphere[i];
  for (size_t i = 0; i < r.torus.size(); ++i) r.torus[i] += b.torus[i];
  return r;
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
  TangentVector r = a;
  for (size_t i = 0; i < r.sphere.size(); ++i) r.sphere[i] -= b.sphere[i];
  for (size_t i = 0; i < r.torus.size(); ++i) r.torus[i] -= b.torus[i];
  return r;
}

TangentVector operator*(double s, const TangentVector& a) {
  TangentVector r = a;
  for (auto& v : r.sphere) v *= s;
  for (auto& v : r.torus) v *= s;
  return r;
}

double dot(const TangentVector& a, const TangentVector& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.sphere.size(); ++i) acc += a.sphere[i] * b.sphere[i];
  for (size_t i = 0; i < a.torus.size(); ++i) acc += a.torus[i] * b.torus[i];
  return acc;
}

double norm(const TangentVector& a) { return std::sqrt(dot(a, a)); }

double reduce_mod1(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;  // floor rounding edge for tiny negative x
  return r;
}

VectorField VectorField::constant_projection(std::vector<double> u, std::vector<double> w) {
  VectorField f;
  f.kind_ = Kind::ConstantProjection;
  f.u_ = std::move(u);
  f.w_ = std::move(w);
  return f;
}

VectorField VectorField::reeb(int alpha) {
  VectorField f;
  f.kind_ = Kind::Reeb;
  f.alpha_ = alpha;
  return f;
}

VectorField VectorField::phi_of(int alpha, VectorField inner) {
  VectorField f;
  f.kind_ = Kind::PhiOf;
  f.alpha_ = alpha;
  f.inner_ = std::make_shared<VectorField>(std::move(inner));
  return f;
}

VectorField VectorField::coordinate_scaled(VectorField inner, int coord, double base) {
  VectorField f;
  f.kind_ = Kind::CoordinateScaled;
  f.coord_ = coord;
  f.base_ = base;
  f.inner_ = std::make_shared<VectorField>(std::move(inner));
  return f;
}

ProductStructure::ProductStructure(int l, int m, Fault fault) : l_(l), m_(m), fault_(fault) {
  if (l < 0 || m < 0) throw std::invalid_argument("l and m must be nonnegative");
  if (l == 0 && m == 0) throw std::invalid_argument("need at least one factor of positive dimension");
}

ProductPoint ProductStructure::make_point(std::vector<double> s, std::vector<double> t) const {
  if (static_cast<int>(s.size()) != sphere_ambient_dim() || static_cast<int>(t.size()) != torus_dim())
    throw std::invalid_argument("point coordinate sizes do not match (l, m)");
  double q = 0.0;
  for (double v : s) q += v * v;
  const double r = std::sqrt(q);
  if (!(r > 1e-12)) throw std::invalid_argument("sphere coordinates too close to zero to normalize");
  for (double& v : s) v /= r;
  for (double& v : t) v = reduce_mod1(v);
  return {std::move(s), std::move(t)};
}

void ProductStructure::check_point(const ProductPoint& p) const {
  if (static_cast<int>(p.sphere.size()) != sphere_ambient_dim() ||
      static_cast<int>(p.torus.size()) != torus_dim())
    throw std::invalid_argument("point coordinate sizes do not match (l, m)");
  double q = 0.0;
  for (double v : p.sphere) q += v * v;
  if (std::abs(q - 1.0) > 1e-9) throw std::invalid_argument("sphere coordinates are not unit length");
  for (double v : p.torus)
    if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("torus coordinates must lie in [0,1)");
}

void ProductStructure::check_tangent(const ProductPoint& p, const TangentVector& x) const {
  if (static_cast<int>(x.sphere.size()) != sphere_ambient_dim() ||
      static_cast<int>(x.torus.size()) != torus_dim())
    throw std::invalid_argument("tangent vector sizes do not match (l, m)");
  double radial = 0.0, nsq = 0.0;
  for (size_t i = 0; i < x.sphere.size(); ++i) {
    radial += x.sphere[i] * p.sphere[i];
    nsq += x.sphere[i] * x.sphere[i];
  }
  const double scale = std::max(1.0, std::sqrt(nsq));
  if (std::abs(radial) > 1e-12 * scale) {
    std::ostringstream os;
    os << "vector is not tangent to the sphere factor: radial component " << radial;
    throw std::invalid_argument(os.str());
  }
}

TangentVector ProductStructure::sphere_reeb(int alpha, const ProductPoint& p) const {
  check_point(p);
  return {reeb_core<double>(alpha, p.sphere), std::vector<double>(torus_dim(), 0.0)};
}

TangentVector ProductStructure::phi(int alpha, const ProductPoint& p, const TangentVector& x) const {
  check_point(p);
  check_tangent(p, x);
  TangentVector out;
  phi_core<double>(alpha, p.sphere, x.sphere, x.torus, out.sphere, out.torus);
  return out;
}

double ProductStructure::eta(int alpha, const ProductPoint& p, const TangentVector& x) const {
  check_point(p);
  check_tangent(p, x);
  return eta_core<double>(alpha, p.sphere, x.sphere);
}

double ProductStructure::metric(const ProductPoint& p, const TangentVector& x, const TangentVector& y) const {
  check_point(p);
  check_tangent(p, x);
  check_tangent(p, y);
  return dot(x, y);
}

namespace {

std::vector<Jet> seed_jets(const std::vector<double>& base, const std::vector<double>& dir) {
  std::vector<Jet> out(base.size());
  for (size_t i = 0; i < base.size(); ++i) out[i] = Jet(base[i], dir[i]);
  return out;
}

}  // namespace

TangentVector ProductStructure::lie_bracket(const ProductPoint& p, const VectorField& x,
                                            const VectorField& y) const {
  check_point(p);
  std::vector<double> xu, xw, yu, yw;
  x.eval<double>(*this, p.sphere, p.torus, xu, xw);
  y.eval<double>(*this, p.sphere, p.torus, yu, yw);

  const std::vector<Jet> sx = seed_jets(p.sphere, xu), tx = seed_jets(p.torus, xw);
  std::vector<Jet> dyu, dyw;
  y.eval<Jet>(*this, sx, tx, dyu, dyw);

  const std::vector<Jet> sy = seed_jets(p.sphere, yu), ty = seed_jets(p.torus, yw);
  std::vector<Jet> dxu, dxw;
  x.eval<Jet>(*this, sy, ty, dxu, dxw);

  TangentVector r;
  r.sphere.resize(xu.size());
  r.torus.resize(xw.size());
  for (size_t i = 0; i < r.sphere.size(); ++i) r.sphere[i] = dyu[i].d - dxu[i].d;
  for (size_t i = 0; i < r.torus.size(); ++i) r.torus[i] = dyw[i].d - dxw[i].d;
  return r;
}

double ProductStructure::d_one_form(int alpha, const ProductPoint& p, const VectorField& x,
                                    const VectorField& y) const {
  check_point(p);
  std::vector<double> xu, xw, yu, yw;
  x.eval<double>(*this, p.sphere, p.torus, xu, xw);
  y.eval<double>(*this, p.sphere, p.torus, yu, yw);

  // Directional derivative of eta_alpha(field) along (du, dw).
  const auto deriv_eta = [&](const VectorField& field, const std::vector<double>& du,
                             const std::vector<double>& dw) {
    const std::vector<Jet> sj = seed_jets(p.sphere, du), tj = seed_jets(p.torus, dw);
    std::vector<Jet> fu, fw;
    field.eval<Jet>(*this, sj, tj, fu, fw);
    return eta_core<Jet>(alpha, sj, fu).d;
  };

  const TangentVector br = lie_bracket(p, x, y);
  return deriv_eta(y, xu, xw) - deriv_eta(x, yu, yw) - eta_core<double>(alpha, p.sphere, br.sphere);
}

double ProductStructure::d_two_form(int alpha, const ProductPoint& p, const VectorField& x,
                                    const VectorField& y, const VectorField& z) const {
  check_point(p);
  std::vector<double> xu, xw, yu, yw, zu, zw;
  x.eval<double>(*this, p.sphere, p.torus, xu, xw);
  y.eval<double>(*this, p.sphere, p.torus, yu, yw);
  z.eval<double>(*this, p.sphere, p.torus, zu, zw);

  // Directional derivative of Phi_alpha(a, b) along (du, dw).
  const auto deriv_phi2 = [&](const VectorField& a, const VectorField& b, const std::vector<double>& du,
                              const std::vector<double>& dw) {
    const std::vector<Jet> sj = seed_jets(p.sphere, du), tj = seed_jets(p.torus, dw);
    std::vector<Jet> au, aw, bu, bw;
    a.eval<Jet>(*this, sj, tj, au, aw);
    b.eval<Jet>(*this, sj, tj, bu, bw);
    return two_form_core<Jet>(alpha, sj, au, aw, bu, bw).d;
  };

  const auto phi2_at_p = [&](const TangentVector& a, const std::vector<double>& bu,
                             const std::vector<double>& bw) {
    return two_form_core<double>(alpha, p.sphere, a.sphere, a.torus, bu, bw);
  };

  const TangentVector bxy = lie_bracket(p, x, y);
  const TangentVector byz = lie_bracket(p, y, z);
  const TangentVector bzx = lie_bracket(p, z, x);

  return deriv_phi2(y, z, xu, xw) + deriv_phi2(z, x, yu, yw) + deriv_phi2(x, y, zu, zw) -
         phi2_at_p(bxy, zu, zw) - phi2_at_p(byz, xu, xw) - phi2_at_p(bzx, yu, yw);
}

TangentVector ProductStructure::nijenhuis(int alpha, const ProductPoint& p, const VectorField& x,
                                          const VectorField& y) const {
  check_point(p);
  const VectorField px = VectorField::phi_of(alpha, x);
  const VectorField py = VectorField::phi_of(alpha, y);

  const auto phi_at_p = [&](const TangentVector& v) {
    TangentVector out;
    phi_core<double>(alpha, p.sphere, v.sphere, v.torus, out.sphere, out.torus);
    return out;
  };

  const TangentVector b = lie_bracket(p, x, y);
  TangentVector acc = phi_at_p(phi_at_p(b));
  acc = acc + lie_bracket(p, px, py);
  acc = acc - phi_at_p(lie_bracket(p, px, y));
  acc = acc - phi_at_p(lie_bracket(p, x, py));

  const double de = d_one_form(alpha, p, x, y);
  const TangentVector xi{reeb_core<double>(alpha, p.sphere), std::vector<double>(torus_dim(), 0.0)};
  return acc + de * xi;
}

StructureFrame ProductStructure::structure_frame(const ProductPoint& p) const {
  check_point(p);
  const int n = dim();
  StructureFrame fr;
  fr.basis.reserve(n);

  const auto add_candidate = [&](TangentVector v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : fr.basis) v = v - dot(v, b) * b;
    const double len = norm(v);
    if (len > 1e-6) fr.basis.push_back((1.0 / len) * v);
  };

  for (int alpha = 1; alpha <= 3; ++alpha) add_candidate(sphere_reeb(alpha, p));
  for (int i = 0; i < sphere_ambient_dim(); ++i) {
    TangentVector v{std::vector<double>(sphere_ambient_dim(), 0.0), std::vector<double>(torus_dim(), 0.0)};
    v.sphere[i] = 1.0;
    const double radial = p.sphere[i];
    for (int j = 0; j < sphere_ambient_dim(); ++j) v.sphere[j] -= radial * p.sphere[j];
    add_candidate(v);
  }
  for (int j = 0; j < torus_dim(); ++j) {
    TangentVector v{std::vector<double>(sphere_ambient_dim(), 0.0), std::vector<double>(torus_dim(), 0.0)};
    v.torus[j] = 1.0;
    add_candidate(v);
  }
  if (static_cast<int>(fr.basis.size()) != n) throw std::logic_error("frame construction lost dimensions");

  fr.metric.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fr.metric(i, j) = dot(fr.basis[i], fr.basis[j]);

  for (int alpha = 1; alpha <= 3; ++alpha) {
    const int a = alpha - 1;
    const TangentVector xi = sphere_reeb(alpha, p);
    fr.xi[a].resize(n);
    fr.eta[a].resize(n);
    fr.phi[a].resize(n, n);
    fr.fundamental[a].resize(n, n);
    fr.d_eta[a].resize(n, n);

    for (int i = 0; i < n; ++i) {
      fr.xi[a](i) = dot(xi, fr.basis[i]);
      fr.eta[a](i) = eta_core<double>(alpha, p.sphere, fr.basis[i].sphere);
    }
    for (int j = 0; j < n; ++j) {
      TangentVector pb;
      phi_core<double>(alpha, p.sphere, fr.basis[j].sphere, fr.basis[j].torus, pb.sphere, pb.torus);
      for (int i = 0; i < n; ++i) fr.phi[a](i, j) = dot(pb, fr.basis[i]);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        fr.fundamental[a](i, j) = two_form_core<double>(alpha, p.sphere, fr.basis[i].sphere,
                                                        fr.basis[i].torus, fr.basis[j].sphere,
                                                        fr.basis[j].torus);

    std::vector<VectorField> recipes;
    recipes.reserve(n);
    for (int i = 0; i < n; ++i)
      recipes.push_back(VectorField::constant_projection(fr.basis[i].sphere, fr.basis[i].torus));
    fr.d_eta[a].setZero();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = d_one_form(alpha, p, recipes[i], recipes[j]);
        fr.d_eta[a](i, j) = v;
        fr.d_eta[a](j, i) = -v;
      }
  }
  return fr;
}

ProductPoint ProductStructure::action_f(const ProductPoint& p) const {
  check_point(p);
  ProductPoint q;
  q.sphere.resize(p.sphere.size());
  quat::apply_right_unit<double>({+1, 1}, p.sphere, q.sphere);
  q.torus = p.torus;
  return q;
}

ProductPoint ProductStructure::action_h(const ProductPoint& p) const {
  check_point(p);
  ProductPoint q;
  q.sphere = p.sphere;
  q.torus.resize(p.torus.size());
  quat::apply_right_unit<double>({+1, 1}, p.torus, q.torus);
  for (double& v : q.torus) v = reduce_mod1(v);
  return q;
}

ProductPoint ProductStructure::action_diag(int k, const ProductPoint& p) const {
  if (k < 0) throw std::invalid_argument("action power must be nonnegative");
  ProductPoint q = p;
  for (int n = 0; n < k; ++n) q = action_h(action_f(q));
  return q;
}

TangentVector ProductStructure::pushforward_diag(const TangentVector& x) const {
  TangentVector y;
  y.sphere.resize(x.sphere.size());
  y.torus.resize(x.torus.size());
  quat::apply_right_unit<double>({+1, 1}, x.sphere, y.sphere);
  quat::apply_right_unit<double>({+1, 1}, x.torus, y.torus);
  return y;
}

}  // namespace qs3::geometry
