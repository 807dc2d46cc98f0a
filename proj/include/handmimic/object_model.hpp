#pragma once

#include "handmimic/math.hpp"
#include "handmimic/primitives.hpp"

namespace handmimic {

// Free rigid object: one convex primitive with mass properties and a
// friction coefficient shared by the simulator and the contact QP.
struct ObjectModel {
  Primitive shape;
  double mass{0.1};
  Mat3 inertia{Mat3::Identity()};  // body frame, about the COM
  double mu{1.0};

  static ObjectModel make(const Primitive& shape, double mass, double mu = 1.0) {
    ObjectModel m;
    m.shape = shape;
    m.mass = mass;
    m.mu = mu;
    m.inertia = primitive_inertia(shape, mass);
    return m;
  }

  Mat3 world_inertia(const Quat& orientation) const {
    const Mat3 r = orientation.toRotationMatrix();
    return r * inertia * r.transpose();
  }
};

// Pose (COM at the position), world twist, and the accelerations recorded by
// finite difference over the most recent control step.
struct ObjectState {
  PoseSE3 pose;
  Twist twist;
  Vec3 linear_acc{Vec3::Zero()};
  Vec3 angular_acc{Vec3::Zero()};
};

}  // namespace handmimic
