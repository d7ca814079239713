#pragma once
// Local polynomials anchored at a cell center, stored in the scaled
// coordinate xi = (x - anchor) / scale.

#include <Eigen/Core>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <initializer_list>

namespace wbfv {

template <typename T, int MaxDeg = 10>
class Poly1 {
 public:
  static constexpr int kCapacity = MaxDeg + 1;
  using Coeffs = Eigen::Matrix<T, kCapacity, 1>;

  Poly1() : Poly1(T(0), T(1)) {}
  Poly1(T anchor, T scale) : anchor_(anchor), scale_(scale), degree_(0) { c_.setZero(); }

  static Poly1 constant(T value, T anchor = T(0), T scale = T(1)) {
    Poly1 p(anchor, scale);
    p.c_[0] = value;
    return p;
  }

  /// Coefficients in powers of xi.
  static Poly1 from_coeffs(std::initializer_list<T> coeffs, T anchor = T(0), T scale = T(1)) {
    Poly1 p(anchor, scale);
    int k = 0;
    for (T v : coeffs) p.set_coeff(k++, v);
    return p;
  }

  template <typename Iter>
  static Poly1 from_range(Iter first, int count, T anchor, T scale) {
    Poly1 p(anchor, scale);
    for (int k = 0; k < count; ++k, ++first) p.c_[k] = *first;
    p.degree_ = std::max(count - 1, 0);
    return p;
  }

  T anchor() const { return anchor_; }
  T scale() const { return scale_; }
  int degree() const { return degree_; }
  const Coeffs& coeffs() const { return c_; }

  T coeff(int k) const { return k <= MaxDeg ? c_[k] : T(0); }
  void set_coeff(int k, T v) {
    assert(k >= 0 && k <= MaxDeg);
    c_[k] = v;
    degree_ = std::max(degree_, k);
  }

  T local(T x) const { return (x - anchor_) / scale_; }

  T eval_local(T xi) const {
    T acc = c_[degree_];
    for (int k = degree_ - 1; k >= 0; --k) acc = acc * xi + c_[k];
    return acc;
  }

  T operator()(T x) const { return eval_local(local(x)); }

  /// Antiderivative in x that vanishes at the anchor.
  Poly1 antiderivative() const {
    assert(degree_ < MaxDeg);
    Poly1 a(anchor_, scale_);
    for (int k = 0; k <= degree_; ++k) a.c_[k + 1] = scale_ * c_[k] / T(k + 1);
    a.degree_ = degree_ + 1;
    return a;
  }

  Poly1 derivative() const {
    Poly1 d(anchor_, scale_);
    for (int k = 1; k <= degree_; ++k) d.c_[k - 1] = T(k) * c_[k] / scale_;
    d.degree_ = std::max(degree_ - 1, 0);
    return d;
  }

  /// Exact integral over [a, b]; the interval may lie outside the home cell.
  T integrate(T a, T b) const {
    const T ua = local(a), ub = local(b);
    T pa = T(0), pb = T(0);
    for (int k = degree_; k >= 0; --k) {
      pa = (pa + c_[k] / T(k + 1)) * ua;
      pb = (pb + c_[k] / T(k + 1)) * ub;
    }
    return scale_ * (pb - pa);
  }

  T average(T a, T b) const { return integrate(a, b) / (b - a); }

  Poly1& operator+=(const Poly1& o) {
    assert(same_frame(o));
    c_ += o.c_;
    degree_ = std::max(degree_, o.degree_);
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    assert(same_frame(o));
    c_ -= o.c_;
    degree_ = std::max(degree_, o.degree_);
    return *this;
  }
  Poly1& operator*=(T s) {
    c_ *= s;
    return *this;
  }

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, T s) { return a *= s; }
  friend Poly1 operator*(T s, Poly1 a) { return a *= s; }

  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    assert(a.same_frame(b));
    assert(a.degree_ + b.degree_ <= MaxDeg);
    Poly1 r(a.anchor_, a.scale_);
    for (int i = 0; i <= a.degree_; ++i) {
      const T ai = a.c_[i];
      for (int j = 0; j <= b.degree_; ++j) r.c_[i + j] += ai * b.c_[j];
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  bool same_frame(const Poly1& o) const { return anchor_ == o.anchor_ && scale_ == o.scale_; }

 private:
  Coeffs c_;
  T anchor_;
  T scale_;
  int degree_;
};

/// Bivariate polynomial sum c(a,b) xi^a eta^b with xi = (x-x0)/hx, eta = (y-y0)/hy.
template <typename T, int MaxDeg = 6>
class Poly2 {
 public:
  static constexpr int kCapacity = MaxDeg + 1;
  using Coeffs = Eigen::Matrix<T, kCapacity, kCapacity>;
  using Point = Eigen::Matrix<T, 2, 1>;

  Poly2() : Poly2(Point::Zero(), Point::Ones()) {}
  Poly2(const Point& anchor, const Point& scale) : anchor_(anchor), scale_(scale), degree_(0) {
    c_.setZero();
  }

  static Poly2 constant(T value, const Point& anchor = Point::Zero(), const Point& scale = Point::Ones()) {
    Poly2 p(anchor, scale);
    p.c_(0, 0) = value;
    return p;
  }

  const Point& anchor() const { return anchor_; }
  const Point& scale() const { return scale_; }
  int degree() const { return degree_; }
  const Coeffs& coeffs() const { return c_; }

  T coeff(int a, int b) const { return (a <= MaxDeg && b <= MaxDeg) ? c_(a, b) : T(0); }
  void set_coeff(int a, int b, T v) {
    assert(a + b <= MaxDeg);
    c_(a, b) = v;
    degree_ = std::max(degree_, a + b);
  }

  T eval_local(T xi, T eta) const {
    T acc = T(0);
    for (int a = degree_; a >= 0; --a) {
      T row = c_(a, degree_ - a);
      for (int b = degree_ - a - 1; b >= 0; --b) row = row * eta + c_(a, b);
      acc = acc * xi + row;
    }
    return acc;
  }

  T operator()(T x, T y) const {
    return eval_local((x - anchor_[0]) / scale_[0], (y - anchor_[1]) / scale_[1]);
  }
  T operator()(const Point& x) const { return (*this)(x[0], x[1]); }

  /// Exact integral over the rectangle [x0,x1] x [y0,y1].
  T integrate(T x0, T x1, T y0, T y1) const {
    T mx[kCapacity + 1], my[kCapacity + 1];
    monomial_integrals((x0 - anchor_[0]) / scale_[0], (x1 - anchor_[0]) / scale_[0], mx);
    monomial_integrals((y0 - anchor_[1]) / scale_[1], (y1 - anchor_[1]) / scale_[1], my);
    T acc = T(0);
    for (int a = 0; a <= degree_; ++a)
      for (int b = 0; a + b <= degree_; ++b) acc += c_(a, b) * mx[a] * my[b];
    return acc * scale_[0] * scale_[1];
  }

  T average(T x0, T x1, T y0, T y1) const { return integrate(x0, x1, y0, y1) / ((x1 - x0) * (y1 - y0)); }

  Poly2& operator+=(const Poly2& o) {
    c_ += o.c_;
    degree_ = std::max(degree_, o.degree_);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    c_ -= o.c_;
    degree_ = std::max(degree_, o.degree_);
    return *this;
  }
  Poly2& operator*=(T s) {
    c_ *= s;
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, T s) { return a *= s; }
  friend Poly2 operator*(T s, Poly2 a) { return a *= s; }

  friend Poly2 operator*(const Poly2& p, const Poly2& q) {
    assert(p.degree_ + q.degree_ <= MaxDeg);
    Poly2 r(p.anchor_, p.scale_);
    for (int a = 0; a <= p.degree_; ++a)
      for (int b = 0; a + b <= p.degree_; ++b) {
        const T pc = p.c_(a, b);
        if (pc == T(0)) continue;
        for (int c = 0; c <= q.degree_; ++c)
          for (int d = 0; c + d <= q.degree_; ++d) r.c_(a + c, b + d) += pc * q.c_(c, d);
      }
    r.degree_ = p.degree_ + q.degree_;
    return r;
  }

  /// m[k] = integral of u^k over [u0, u1], k = 0..kCapacity.
  static void monomial_integrals(T u0, T u1, T* m) {
    T p0 = u0, p1 = u1;
    for (int k = 0; k <= kCapacity; ++k) {
      m[k] = (p1 - p0) / T(k + 1);
      p0 *= u0;
      p1 *= u1;
    }
  }

 private:
  Coeffs c_;
  Point anchor_;
  Point scale_;
  int degree_;
};

/// Potential P with P(anchor) = 0 whose value at x is the line integral of
/// (sx, sy) along the straight segment from the anchor to x.
template <typename T, int D>
Poly2<T, D> radial_potential(const Poly2<T, D>& sx, const Poly2<T, D>& sy) {
  Poly2<T, D> p(sx.anchor(), sx.scale());
  const int deg = std::max(sx.degree(), sy.degree());
  assert(deg < D);
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) {
      const T w = T(1) / T(a + b + 1);
      const T cx = sx.coeff(a, b), cy = sy.coeff(a, b);
      if (cx != T(0)) p.set_coeff(a + 1, b, p.coeff(a + 1, b) + cx * sx.scale()[0] * w);
      if (cy != T(0)) p.set_coeff(a, b + 1, p.coeff(a, b + 1) + cy * sy.scale()[1] * w);
    }
  return p;
}

using Poly1d = Poly1<double>;
using Poly2d = Poly2<double>;

}  // namespace wbfv
