#include "handmimic/primitives.hpp"

#include <algorithm>

namespace handmimic {

namespace {

// Decompose p into the capsule/cylinder axial coordinate and radial offset.
void axial_split(const Primitive& s, const Vec3& p, double& t, Vec3& radial) {
  t = p.dot(s.axis);
  radial = p - t * s.axis;
}

double sdf_box(const Vec3& h, const Vec3& p) {
  const Vec3 d = p.cwiseAbs() - h;
  const Vec3 outside = d.cwiseMax(0.0);
  const double inside = std::min(0.0, d.maxCoeff());
  return outside.norm() + inside;
}

Vec3 sdf_box_grad(const Vec3& h, const Vec3& p) {
  const Vec3 d = p.cwiseAbs() - h;
  const Vec3 sign(p.x() >= 0.0 ? 1.0 : -1.0, p.y() >= 0.0 ? 1.0 : -1.0, p.z() >= 0.0 ? 1.0 : -1.0);
  const Vec3 outside = d.cwiseMax(0.0);
  const double on = outside.norm();
  if (on > 1e-15) {
    return (outside.cwiseProduct(sign) / on).eval();
  }
  // Inside: gradient points through the nearest face.
  int k = 0;
  d.maxCoeff(&k);
  Vec3 g = Vec3::Zero();
  g[k] = sign[k];
  return g;
}

double sdf_capsule(const Primitive& s, const Vec3& p) {
  double t;
  Vec3 radial;
  axial_split(s, p, t, radial);
  const double tc = clamp(t, -s.half_length, s.half_length);
  return (p - tc * s.axis).norm() - s.radius;
}

Vec3 sdf_capsule_grad(const Primitive& s, const Vec3& p) {
  double t;
  Vec3 radial;
  axial_split(s, p, t, radial);
  const double tc = clamp(t, -s.half_length, s.half_length);
  const Vec3 d = p - tc * s.axis;
  const double dn = d.norm();
  if (dn < 1e-15) {
    // On the axis: any radial direction is a valid subgradient.
    Vec3 t1, t2;
    tangent_frame(s.axis, t1, t2);
    return t1;
  }
  return d / dn;
}

double sdf_cylinder(const Primitive& s, const Vec3& p) {
  double t;
  Vec3 radial;
  axial_split(s, p, t, radial);
  const double dr = radial.norm() - s.radius;
  const double dz = std::abs(t) - s.half_length;
  const double ox = std::max(dr, 0.0);
  const double oz = std::max(dz, 0.0);
  return std::sqrt(ox * ox + oz * oz) + std::min(0.0, std::max(dr, dz));
}

Vec3 sdf_cylinder_grad(const Primitive& s, const Vec3& p) {
  double t;
  Vec3 radial;
  axial_split(s, p, t, radial);
  const double rn = radial.norm();
  const double dr = rn - s.radius;
  const double dz = std::abs(t) - s.half_length;
  const double zsign = t >= 0.0 ? 1.0 : -1.0;
  Vec3 rdir;
  if (rn < 1e-15) {
    Vec3 t1, t2;
    tangent_frame(s.axis, t1, t2);
    rdir = t1;
  } else {
    rdir = radial / rn;
  }
  if (dr > 0.0 && dz > 0.0) {
    return (dr * rdir + dz * zsign * s.axis).normalized();
  }
  if (dr > 0.0) return rdir;
  if (dz > 0.0) return zsign * s.axis;
  // Inside: exit through whichever face is nearer.
  return dr > dz ? rdir : Vec3(zsign * s.axis);
}

}  // namespace

double sdf_local(const Primitive& shape, const Vec3& p) {
  switch (shape.type) {
    case ShapeType::Box:
      return sdf_box(shape.half_extents, p);
    case ShapeType::Sphere:
      return p.norm() - shape.radius;
    case ShapeType::Capsule:
      return sdf_capsule(shape, p);
    case ShapeType::Cylinder:
      return sdf_cylinder(shape, p);
  }
  throw std::invalid_argument("sdf_local: unsupported primitive");
}

Vec3 sdf_gradient_local(const Primitive& shape, const Vec3& p) {
  switch (shape.type) {
    case ShapeType::Box:
      return sdf_box_grad(shape.half_extents, p);
    case ShapeType::Sphere: {
      const double n = p.norm();
      return n < 1e-15 ? Vec3::UnitZ() : Vec3(p / n);
    }
    case ShapeType::Capsule:
      return sdf_capsule_grad(shape, p);
    case ShapeType::Cylinder:
      return sdf_cylinder_grad(shape, p);
  }
  throw std::invalid_argument("sdf_gradient_local: unsupported primitive");
}

double sdf(const Primitive& shape, const PoseSE3& pose, const Vec3& p_world) {
  return sdf_local(shape, pose.apply_inverse(p_world));
}

Vec3 sdf_gradient(const Primitive& shape, const PoseSE3& pose, const Vec3& p_world) {
  return pose.orientation * sdf_gradient_local(shape, pose.apply_inverse(p_world));
}

Mat3 primitive_inertia(const Primitive& shape, double mass) {
  switch (shape.type) {
    case ShapeType::Box: {
      const Vec3& h = shape.half_extents;
      const double c = mass / 3.0;
      return Vec3(c * (h.y() * h.y() + h.z() * h.z()), c * (h.x() * h.x() + h.z() * h.z()),
                  c * (h.x() * h.x() + h.y() * h.y()))
          .asDiagonal();
    }
    case ShapeType::Sphere: {
      const double i = 0.4 * mass * shape.radius * shape.radius;
      return Mat3::Identity() * i;
    }
    case ShapeType::Cylinder: {
      const double r2 = shape.radius * shape.radius;
      const double h = 2.0 * shape.half_length;
      const double i_axis = 0.5 * mass * r2;
      const double i_perp = mass * (3.0 * r2 + h * h) / 12.0;
      const Mat3 aa = shape.axis * shape.axis.transpose();
      return i_axis * aa + i_perp * (Mat3::Identity() - aa);
    }
    case ShapeType::Capsule: {
      // Cylinder body plus two hemispherical caps, masses split by volume.
      const double r = shape.radius;
      const double h = 2.0 * shape.half_length;
      const double vol_cyl = kPi * r * r * h;
      const double vol_sph = 4.0 / 3.0 * kPi * r * r * r;
      const double vol = vol_cyl + vol_sph;
      const double m_cyl = vol > 0.0 ? mass * vol_cyl / vol : 0.0;
      const double m_sph = mass - m_cyl;
      const double i_axis = 0.5 * m_cyl * r * r + 0.4 * m_sph * r * r;
      // Hemispheres: inertia about the capsule center via parallel axis.
      const double d = shape.half_length + 3.0 * r / 8.0;
      const double i_hemi_com = 0.4 * m_sph * r * r - m_sph * (3.0 * r / 8.0) * (3.0 * r / 8.0);
      const double i_perp =
          m_cyl * (3.0 * r * r + h * h) / 12.0 + i_hemi_com + m_sph * d * d;
      const Mat3 aa = shape.axis * shape.axis.transpose();
      return i_axis * aa + i_perp * (Mat3::Identity() - aa);
    }
  }
  throw std::invalid_argument("primitive_inertia: unsupported primitive");
}

std::string shape_name(ShapeType type) {
  switch (type) {
    case ShapeType::Box:
      return "box";
    case ShapeType::Sphere:
      return "sphere";
    case ShapeType::Capsule:
      return "capsule";
    case ShapeType::Cylinder:
      return "cylinder";
  }
  return "unknown";
}

ShapeType shape_from_name(const std::string& name) {
  if (name == "box") return ShapeType::Box;
  if (name == "sphere") return ShapeType::Sphere;
  if (name == "capsule") return ShapeType::Capsule;
  if (name == "cylinder") return ShapeType::Cylinder;
  throw std::invalid_argument("unknown shape: " + name);
}

}  // namespace handmimic
