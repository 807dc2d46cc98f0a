#include "handmimic/hand_model.hpp"

#include <stdexcept>

namespace handmimic {

namespace {

VecX expand_gain(const VecX& g, int dof, double fallback) {
  if (g.size() == dof) return g;
  if (g.size() == 1) return VecX::Constant(dof, g[0]);
  if (g.size() == 0) return VecX::Constant(dof, fallback);
  throw std::invalid_argument("gain vector length must be 1 or the joint DoF count");
}

}  // namespace

HandModel::HandModel(std::vector<HandJoint> joints) : joints_(std::move(joints)) {
  if (joints_.empty()) throw std::invalid_argument("HandModel: empty joint list");
  if (joints_[0].type != JointType::FreeRoot || joints_[0].parent != -1)
    throw std::invalid_argument("HandModel: joint 0 must be the free root");

  n_q_ = 0;
  q_index_.resize(joints_.size());
  std::vector<bool> has_child(joints_.size(), false);
  for (size_t i = 0; i < joints_.size(); ++i) {
    const HandJoint& j = joints_[i];
    if (i > 0) {
      if (j.type == JointType::FreeRoot) throw std::invalid_argument("HandModel: multiple free roots");
      if (j.parent < 0 || j.parent >= static_cast<int>(i))
        throw std::invalid_argument("HandModel: parent index must precede the joint");
      has_child[j.parent] = true;
    }
    if (j.mass <= 0.0) throw std::invalid_argument("HandModel: body mass must be positive");
    q_index_[i] = n_q_;
    n_q_ += dof(static_cast<int>(i));
  }

  kp_ = VecX::Zero(n_q_);
  kd_ = VecX::Zero(n_q_);
  torque_limit_ = VecX::Zero(n_q_);
  for (size_t i = 0; i < joints_.size(); ++i) {
    HandJoint& j = joints_[i];
    const int d = dof(static_cast<int>(i));
    j.kp = expand_gain(j.kp, d, 10.0);
    j.kd = expand_gain(j.kd, d, 1.0);
    j.torque_limit = expand_gain(j.torque_limit, d, 1e6);
    if ((j.kp.array() <= 0.0).any() || (j.kd.array() <= 0.0).any())
      throw std::invalid_argument("HandModel: kp and kd must be positive");
    kp_.segment(q_index_[i], d) = j.kp;
    kd_.segment(q_index_[i], d) = j.kd;
    torque_limit_.segment(q_index_[i], d) = j.torque_limit;
    if (j.type == JointType::Hinge) j.axis.normalize();
  }
  for (size_t i = 0; i < joints_.size(); ++i)
    if (!has_child[i]) leaves_.push_back(static_cast<int>(i));
}

PoseSE3 root_pose(const VecX& q) {
  PoseSE3 pose;
  pose.position = q.segment<3>(0);
  pose.orientation = quat_exp(q.segment<3>(3));
  return pose;
}

FkResult forward_kinematics(const HandModel& model, const VecX& q) {
  if (q.size() != model.num_q())
    throw std::invalid_argument("forward_kinematics: coordinate vector has wrong length");
  const int nb = model.num_bodies();
  FkResult out;
  out.joint_pose.resize(nb);
  out.joint_position.resize(nb);
  for (int i = 0; i < nb; ++i) {
    const HandJoint& j = model.joint(i);
    if (j.type == JointType::FreeRoot) {
      out.joint_pose[i] = root_pose(q);
    } else {
      const PoseSE3& parent = out.joint_pose[j.parent];
      PoseSE3 local;
      local.position = j.offset;
      local.orientation = quat_exp(j.axis * q[model.q_index(i)]);
      out.joint_pose[i] = parent.compose(local);
    }
    out.joint_position[i] = out.joint_pose[i].position;
  }
  return out;
}

BodyVelocities body_velocities(const HandModel& model, const FkResult& fk, const VecX& q, const VecX& dq) {
  (void)q;
  const int nb = model.num_bodies();
  BodyVelocities out;
  out.linear.resize(nb);
  out.angular.resize(nb);
  for (int i = 0; i < nb; ++i) {
    const HandJoint& j = model.joint(i);
    if (j.type == JointType::FreeRoot) {
      out.linear[i] = dq.segment<3>(0);
      out.angular[i] = dq.segment<3>(3);
    } else {
      const Vec3& pw = fk.joint_position[i];
      const Vec3& pp = fk.joint_position[j.parent];
      const Vec3 axis_w = fk.joint_pose[i].orientation * j.axis;
      out.angular[i] = out.angular[j.parent] + axis_w * dq[model.q_index(i)];
      out.linear[i] = out.linear[j.parent] + out.angular[j.parent].cross(pw - pp);
    }
  }
  return out;
}

Vec3 point_velocity(const FkResult& fk, const BodyVelocities& vel, int body, const Vec3& p_world) {
  return vel.linear[body] + vel.angular[body].cross(p_world - fk.joint_position[body]);
}

Vec3 body_tip_position(const HandModel& model, const FkResult& fk, int body) {
  const HandJoint& j = model.joint(body);
  Vec3 tip_local = j.body_offset;
  if (j.body.type == ShapeType::Capsule || j.body.type == ShapeType::Cylinder) {
    tip_local += j.body.axis * (j.body.half_length + j.body.radius);
  } else if (j.body.type == ShapeType::Box) {
    tip_local += Vec3(j.body.half_extents.x(), 0.0, 0.0);
  } else {
    tip_local += Vec3(j.body.radius, 0.0, 0.0);
  }
  return fk.joint_pose[body].apply(tip_local);
}

}  // namespace handmimic
