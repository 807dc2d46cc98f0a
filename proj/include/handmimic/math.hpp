#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cmath>

namespace handmimic {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using Quat = Eigen::Quaterniond;

inline constexpr double kPi = 3.14159265358979323846;

// Rigid pose: position of the frame origin plus unit orientation quaternion.
struct PoseSE3 {
  Vec3 position{Vec3::Zero()};
  Quat orientation{Quat::Identity()};

  Vec3 apply(const Vec3& p_local) const { return position + orientation * p_local; }
  Vec3 apply_inverse(const Vec3& p_world) const {
    return orientation.conjugate() * (p_world - position);
  }
  PoseSE3 compose(const PoseSE3& child) const {
    return {position + orientation * child.position, (orientation * child.orientation).normalized()};
  }
  PoseSE3 inverse() const {
    Quat qi = orientation.conjugate();
    return {qi * (-position), qi};
  }
};

// World-frame linear + angular velocity.
struct Twist {
  Vec3 linear{Vec3::Zero()};
  Vec3 angular{Vec3::Zero()};
};

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

// exp: rotation vector (axis * angle) -> quaternion. Stable near zero.
inline Quat quat_exp(const Vec3& w) {
  const double angle = w.norm();
  if (angle < 1e-12) {
    Quat q(1.0, 0.5 * w.x(), 0.5 * w.y(), 0.5 * w.z());
    q.normalize();
    return q;
  }
  const double half = 0.5 * angle;
  const double s = std::sin(half) / angle;
  return Quat(std::cos(half), s * w.x(), s * w.y(), s * w.z());
}

// log: quaternion -> rotation vector with angle in [0, pi].
inline Vec3 quat_log(const Quat& q_in) {
  Quat q = q_in.normalized();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  const Vec3 v(q.x(), q.y(), q.z());
  const double vn = v.norm();
  if (vn < 1e-12) return 2.0 * v;
  const double angle = 2.0 * std::atan2(vn, q.w());
  return (angle / vn) * v;
}

// Geodesic angle between two orientations, in [0, pi].
inline double rotation_distance(const Quat& a, const Quat& b) {
  Quat d = a.conjugate() * b;
  double w = std::min(1.0, std::abs(d.w()));
  return 2.0 * std::atan2(Vec3(d.x(), d.y(), d.z()).norm(), w);
}

inline double rotation_distance(const Mat3& a, const Mat3& b) {
  return rotation_distance(Quat(a), Quat(b));
}

// Deterministic tangent basis: pick the world axis with the smallest |n|
// component, cross with n, then complete the right-handed frame.
inline void tangent_frame(const Vec3& n, Vec3& t1, Vec3& t2) {
  int k = 0;
  double best = std::abs(n.x());
  if (std::abs(n.y()) < best) { k = 1; best = std::abs(n.y()); }
  if (std::abs(n.z()) < best) { k = 2; }
  Vec3 e = Vec3::Zero();
  e[k] = 1.0;
  t1 = e.cross(n).normalized();
  t2 = n.cross(t1);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

inline double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

}  // namespace handmimic
