#pragma once

#include <string>
#include <string_view>

namespace rotzp {

enum class Method { monte_carlo, quadrature, closed_form, discrete_sum };

std::string_view method_name(Method m);
// Accepts "monte-carlo"/"mc", "quadrature", "closed-form"/"closed", "discrete-sum"/"discrete".
Method parse_method(std::string_view s);

struct CFValue {
  double value = 0.0;
  // Zero for deterministic methods; quadrature results keep their own error
  // estimate separately.
  double std_error = 0.0;
  Method method = Method::quadrature;
};

// SS selects the massless scalar field; its indices are ignored.
enum class FieldPair { EE, HH, EH, SS };

struct CFComponentId {
  FieldPair pair = FieldPair::EE;
  int a = 1;
  int b = 1;

  // Index into the 6-vector (E_(1..3), H_(1..3)) of the first and second factor.
  int first_slot() const;
  int second_slot() const;

  // "E11", "H23", "EH12", "S"; throws std::invalid_argument otherwise.
  static CFComponentId parse(std::string_view s);
  std::string name() const;
};

}  // namespace rotzp
