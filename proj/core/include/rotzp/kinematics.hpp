#pragma once

// Circular worldline kinematics: the rotating detector's position, four-velocity
// and acceleration, its Frenet-Serret and Fermi-Walker tetrads, and projections of
// lab-frame tensors onto tetrad legs.
//
// Conventions: four-vector components are stored in the order (x, y, z, ct), so
// index 3 is time. The metric is eta = diag(1, 1, 1, -1). Leg a of a tetrad is
// stored at legs[a - 1], i.e. legs[3] is the timelike leg mu_(4) = U / c.

#include <array>

#include "rotzp/vec3.hpp"

namespace rotzp {

// Angular velocity, radius and the speed of light fix the motion. Any consistent
// unit system works; the rest of the library uses Omega = c = 1.
class RotationParams {
 public:
  // Throws PhysicsError unless omega >= 0, radius >= 0, c > 0 and beta < 1.
  static RotationParams make(double omega, double radius, double c = 1.0);
  // Nondimensional parameters: radius = beta * c / omega.
  static RotationParams from_beta(double beta, double omega = 1.0, double c = 1.0);

  double omega() const { return omega_; }
  double radius() const { return radius_; }
  double c() const { return c_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  // Lab-frame rotation angle alpha = Omega * gamma * tau.
  double phase(double tau) const { return omega_ * gamma_ * tau; }

 private:
  RotationParams(double omega, double radius, double c, double beta, double gamma)
      : omega_(omega), radius_(radius), c_(c), beta_(beta), gamma_(gamma) {}

  double omega_;
  double radius_;
  double c_;
  double beta_;
  double gamma_;
};

// gamma = (1 - beta^2)^(-1/2), evaluated as 1/sqrt((1-beta)(1+beta)).
double lorentz_gamma(double beta);

struct FourVector {
  std::array<double, 4> components{};

  constexpr double& operator[](int i) { return components[static_cast<std::size_t>(i)]; }
  constexpr double operator[](int i) const { return components[static_cast<std::size_t>(i)]; }
  Vec3 spatial() const { return {components[0], components[1], components[2]}; }
  double time() const { return components[3]; }
};

// eta_ik a^i b^k with eta = diag(1, 1, 1, -1).
double minkowski_dot(const FourVector& a, const FourVector& b);

enum class TetradKind { frenet_serret, fermi_walker };

struct Tetrad {
  std::array<FourVector, 4> legs{};
  double tau = 0.0;
  TetradKind kind = TetradKind::frenet_serret;
};

// max_{a,b} |mu_(a) . mu_(b) - eta_(ab)|
double orthonormality_residual(const Tetrad& tetrad);

// Tetrad components V_(a) = mu^i_(a) eta_ik V^k.
std::array<double, 4> project_vector(const Tetrad& tetrad, const FourVector& v);

FourVector worldline_position(const RotationParams& params, double tau);
FourVector four_velocity(const RotationParams& params, double tau);
// dU/dtau; purely spatial and centripetal.
FourVector four_acceleration(const RotationParams& params, double tau);

Tetrad frenet_serret_tetrad(const RotationParams& params, double tau);
Tetrad fermi_walker_tetrad(const RotationParams& params, double tau);

// Coefficients of D mu_(4) = b mu_(1), D mu_(1) = c~ mu_(2) + b mu_(4),
// D mu_(2) = d mu_(3) - c~ mu_(1), D mu_(3) = -d mu_(2).
struct FrenetSerretCoefficients {
  double b = 0.0;
  double c_tilde = 0.0;
  double d = 0.0;
};

FrenetSerretCoefficients frenet_serret_coefficients(const RotationParams& params);

struct EmFieldLab {
  Vec3 E;
  Vec3 H;
};

// Fields measured in a tetrad: E_(a) = F_(4a), H_(1,2,3) = F_(23), F_(31), F_(12).
struct EmFieldFrame {
  Vec3 E;
  Vec3 H;

  // Index 0..5 maps to E_(1..3), H_(1..3).
  double component(int i) const { return i < 3 ? E[i] : H[i - 3]; }
};

using Tensor4 = std::array<std::array<double, 4>, 4>;

// Covariant F_ik with F_4j = E_j and (F_23, F_31, F_12) = (H_1, H_2, H_3).
Tensor4 em_tensor_covariant(const EmFieldLab& field);

// Closed-form rows for a Frenet-Serret tetrad. Throws std::invalid_argument for
// any other tetrad kind.
EmFieldFrame project_em_tensor(const Tetrad& tetrad, const EmFieldLab& field);

// F_(ab) = mu^i_(a) mu^k_(b) F_ik by explicit contraction; valid for any tetrad.
EmFieldFrame project_em_tensor_contraction(const Tetrad& tetrad, const EmFieldLab& field);

// T_(44) = mu^i_(4) mu^k_(4) T_ik for a symmetric covariant lab tensor.
double project_scalar_energy(const Tetrad& tetrad, const Tensor4& lab_tensor);

}  // namespace rotzp
