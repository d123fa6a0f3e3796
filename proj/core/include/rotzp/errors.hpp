#pragma once

#include <stdexcept>
#include <string>

namespace rotzp {

// Input violates a physical constraint (beta >= 1, zero lag on a pole, ...).
class PhysicsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rotation radius too close to the light cylinder for stable evaluation.
class LightCylinderError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// A numerical procedure failed to reach its requested accuracy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rotzp
