#pragma once

#include <numbers>

// CODATA 2018 values. c, h and k_B are exact by definition of the SI;
// hbar and sigma are derived from them so the defining identities hold
// to the last bit.
namespace rotzp::si {

inline constexpr double pi = std::numbers::pi;

inline constexpr double speed_of_light = 299792458.0;          // m s^-1
inline constexpr double planck = 6.62607015e-34;               // J s
inline constexpr double hbar = planck / (2.0 * pi);            // J s
inline constexpr double boltzmann = 1.380649e-23;              // J K^-1

// sigma = pi^2 k_B^4 / (60 hbar^3 c^2)
inline constexpr double stefan_boltzmann =
    pi * pi * (boltzmann * boltzmann) * (boltzmann * boltzmann) /
    (60.0 * hbar * hbar * hbar * speed_of_light * speed_of_light);

// Tabulated CODATA 2018 value, for cross-checking the derived one.
inline constexpr double stefan_boltzmann_codata = 5.670374419e-8;  // W m^-2 K^-4

}  // namespace rotzp::si
