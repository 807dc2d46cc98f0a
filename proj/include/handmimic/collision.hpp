#pragma once

#include <vector>

#include "handmimic/hand_model.hpp"
#include "handmimic/object_model.hpp"

namespace handmimic {

// Hand-object contact. The point is the hand primitive's deepest reference
// point (capsule axis point / box interior minimizer); the normal points from
// the hand body into the object, i.e. along the pressure the hand applies.
struct Contact {
  Vec3 point{Vec3::Zero()};
  Vec3 normal{Vec3::UnitZ()};
  double depth{0.0};
  int hand_body{-1};
  Vec3 v_rel{Vec3::Zero()};  // tangential, object minus hand at the point
};

using ContactSet = std::vector<Contact>;

// Deepest point of one hand primitive against the object, no velocities.
struct PairResult {
  bool hit{false};
  Vec3 point{Vec3::Zero()};
  Vec3 normal{Vec3::UnitZ()};
  double depth{0.0};
};

PairResult test_pair(const HandJoint& joint, const PoseSE3& body_pose, const ObjectModel& object,
                     const PoseSE3& object_pose);

// One contact per overlapping hand body, ordered by body index. Relative
// tangential velocity is filled from the supplied states.
ContactSet detect_contacts(const HandModel& hand, const FkResult& fk, const BodyVelocities& vel,
                           const ObjectModel& object, const ObjectState& object_state);

}  // namespace handmimic
