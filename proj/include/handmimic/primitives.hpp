#pragma once

#include <stdexcept>
#include <string>

#include "handmimic/math.hpp"

namespace handmimic {

enum class ShapeType { Box, Sphere, Capsule, Cylinder };

// Convex primitive in its own frame. Boxes use half extents; capsules and
// cylinders are aligned with a unit axis through the center, half_length
// measuring the half height of the straight section.
struct Primitive {
  ShapeType type{ShapeType::Sphere};
  Vec3 half_extents{Vec3::Zero()};  // box
  double radius{0.0};               // sphere, capsule, cylinder
  double half_length{0.0};          // capsule, cylinder
  Vec3 axis{Vec3::UnitZ()};         // capsule, cylinder

  static Primitive box(const Vec3& half_extents) {
    Primitive p;
    p.type = ShapeType::Box;
    p.half_extents = half_extents;
    return p;
  }
  static Primitive sphere(double radius) {
    Primitive p;
    p.type = ShapeType::Sphere;
    p.radius = radius;
    return p;
  }
  static Primitive capsule(double radius, double half_length, const Vec3& axis = Vec3::UnitZ()) {
    Primitive p;
    p.type = ShapeType::Capsule;
    p.radius = radius;
    p.half_length = half_length;
    p.axis = axis.normalized();
    return p;
  }
  static Primitive cylinder(double radius, double half_length, const Vec3& axis = Vec3::UnitZ()) {
    Primitive p;
    p.type = ShapeType::Cylinder;
    p.radius = radius;
    p.half_length = half_length;
    p.axis = axis.normalized();
    return p;
  }
};

// Exact signed distance in the primitive's local frame: negative inside,
// zero on the surface, positive outside.
double sdf_local(const Primitive& shape, const Vec3& p);

// Subgradient of sdf_local, unit norm away from medial-axis ties.
Vec3 sdf_gradient_local(const Primitive& shape, const Vec3& p);

// Signed distance / gradient with the primitive posed in the world.
double sdf(const Primitive& shape, const PoseSE3& pose, const Vec3& p_world);
Vec3 sdf_gradient(const Primitive& shape, const PoseSE3& pose, const Vec3& p_world);

// Inertia tensor about the center of mass for a uniform-density body of the
// given total mass, expressed in the primitive's local frame.
Mat3 primitive_inertia(const Primitive& shape, double mass);

std::string shape_name(ShapeType type);
ShapeType shape_from_name(const std::string& name);

}  // namespace handmimic
