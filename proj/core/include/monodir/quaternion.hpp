#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace monodir {

/// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product (ij = k, jk = i, ki = j).
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion qconj(const Quaternion& q) { return conj(q); }

constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z)); }
inline double qnorm(const Quaternion& q) { return norm(q); }

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0) throw std::domain_error("quaternion inverse of zero");
  return conj(q) / n2;
}
inline Quaternion qinv(const Quaternion& q) { return inverse(q); }

/// Real part of q1 q2, symmetric in its arguments.
constexpr double inner(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Pure quaternion of unit norm. Construction validates |v| = 1 to 1e-12.
class PureUnitQuaternion {
 public:
  PureUnitQuaternion(double x, double y, double z) : x_(x), y_(y), z_(z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) ||
        std::abs(x * x + y * y + z * z - 1.0) > 1e-12) {
      throw std::domain_error("pure unit quaternion must have unit norm");
    }
  }

  static PureUnitQuaternion i() { return {1, 0, 0}; }
  static PureUnitQuaternion j() { return {0, 1, 0}; }
  static PureUnitQuaternion k() { return {0, 0, 1}; }

  /// cos(nu) i + sin(nu) j
  static PureUnitQuaternion in_plane(double nu) { return {std::cos(nu), std::sin(nu), 0.0}; }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Quaternion quat() const { return {0.0, x_, y_, z_}; }
  operator Quaternion() const { return quat(); }

 private:
  double x_, y_, z_;
};

/// q^(eta) = -eta q eta.
inline Quaternion involution(const Quaternion& q, const PureUnitQuaternion& eta) {
  const Quaternion e = eta.quat();
  return -(e * q * e);
}

/// Same as above but validates an arbitrary quaternion as pure unit first.
inline Quaternion involution(const Quaternion& q, const Quaternion& eta) {
  if (eta.w != 0.0) throw std::domain_error("involution axis must be a pure quaternion");
  return involution(q, PureUnitQuaternion(eta.x, eta.y, eta.z));
}

/// Orthogonal triple {eta, eta', k} with eta = cos(nu) i + sin(nu) j.
struct PlaneBasis {
  PureUnitQuaternion eta;
  PureUnitQuaternion eta_prime;
  PureUnitQuaternion eta_second;
};

inline PlaneBasis make_plane_basis(double nu) {
  const double c = std::cos(nu), s = std::sin(nu);
  return {PureUnitQuaternion(c, s, 0.0), PureUnitQuaternion(-s, c, 0.0), PureUnitQuaternion::k()};
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

}  // namespace monodir
