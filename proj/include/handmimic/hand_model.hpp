#pragma once

#include <string>
#include <vector>

#include "handmimic/math.hpp"
#include "handmimic/primitives.hpp"

namespace handmimic {

enum class JointType { FreeRoot, Hinge };

// One joint of the kinematic tree together with the rigid body it drives.
// The joint frame sits at `offset` in the parent joint frame; the body
// primitive is centered at `body_offset` in the joint frame.
struct HandJoint {
  std::string name;
  int parent{-1};  // index into HandModel::joints, -1 for the root
  JointType type{JointType::Hinge};
  Vec3 axis{Vec3::UnitZ()};  // hinge axis, joint frame
  Vec3 offset{Vec3::Zero()};
  Vec3 body_offset{Vec3::Zero()};
  Primitive body;
  double mass{0.05};
  double limit_lower{-kPi};
  double limit_upper{kPi};
  // Per-DoF PD gains and torque bound: 6 entries for the free root
  // (translation xyz then rotation xyz), 1 entry for a hinge.
  VecX kp;
  VecX kd;
  VecX torque_limit;
};

// Articulated hand proxy: tree of capsule/box bodies with one free root.
class HandModel {
 public:
  HandModel() = default;
  explicit HandModel(std::vector<HandJoint> joints);

  int num_bodies() const { return static_cast<int>(joints_.size()); }
  int num_q() const { return n_q_; }
  const std::vector<HandJoint>& joints() const { return joints_; }
  const HandJoint& joint(int i) const { return joints_[i]; }

  // First coordinate index of joint i inside q (root: 0, hinges: 6, 7, ...).
  int q_index(int i) const { return q_index_[i]; }
  int dof(int i) const { return joints_[i].type == JointType::FreeRoot ? 6 : 1; }

  // Stacked per-DoF gain / bound vectors, length num_q().
  const VecX& kp() const { return kp_; }
  const VecX& kd() const { return kd_; }
  const VecX& torque_limit() const { return torque_limit_; }

  // Leaf bodies, used for fingertip positions in the smoothness metric.
  const std::vector<int>& leaves() const { return leaves_; }

 private:
  std::vector<HandJoint> joints_;
  std::vector<int> q_index_;
  std::vector<int> leaves_;
  int n_q_{0};
  VecX kp_, kd_, torque_limit_;
};

// Generalized coordinates: root translation (3) + root exp-map rotation (3)
// + hinge angles. dq holds world-frame root linear and angular velocity
// followed by hinge rates.
struct HandState {
  VecX q;
  VecX dq;

  static HandState zero(const HandModel& model) {
    HandState s;
    s.q = VecX::Zero(model.num_q());
    s.dq = VecX::Zero(model.num_q());
    return s;
  }
};

// World pose of every body/joint frame plus joint-frame origins.
struct FkResult {
  std::vector<PoseSE3> joint_pose;   // joint frames in the world
  std::vector<Vec3> joint_position;  // origins of the above
};

// Per-body world-frame spatial velocity (at the joint origin) for contact
// velocity queries and kinetic-energy oracles.
struct BodyVelocities {
  std::vector<Vec3> linear;   // velocity of the joint-frame origin
  std::vector<Vec3> angular;  // body angular velocity
};

FkResult forward_kinematics(const HandModel& model, const VecX& q);
BodyVelocities body_velocities(const HandModel& model, const FkResult& fk, const VecX& q, const VecX& dq);

// Velocity of the body-fixed point currently at p_world.
Vec3 point_velocity(const FkResult& fk, const BodyVelocities& vel, int body, const Vec3& p_world);

// World position of the far end of a leaf body (capsule tip / box face),
// the "fingertip" used by the smoothness metric.
Vec3 body_tip_position(const HandModel& model, const FkResult& fk, int body);

PoseSE3 root_pose(const VecX& q);

}  // namespace handmimic
