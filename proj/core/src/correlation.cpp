#include "rotzp/correlation.hpp"

#include <stdexcept>

namespace rotzp {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::monte_carlo:
      return "monte-carlo";
    case Method::quadrature:
      return "quadrature";
    case Method::closed_form:
      return "closed-form";
    case Method::discrete_sum:
      return "discrete-sum";
  }
  return "unknown";
}

Method parse_method(std::string_view s) {
  if (s == "monte-carlo" || s == "mc") return Method::monte_carlo;
  if (s == "quadrature") return Method::quadrature;
  if (s == "closed-form" || s == "closed") return Method::closed_form;
  if (s == "discrete-sum" || s == "discrete") return Method::discrete_sum;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

int CFComponentId::first_slot() const {
  return (pair == FieldPair::HH ? 3 : 0) + a - 1;
}

int CFComponentId::second_slot() const {
  return (pair == FieldPair::EE ? 0 : 3) + b - 1;
}

CFComponentId CFComponentId::parse(std::string_view s) {
  if (s == "S" || s == "scalar") return {FieldPair::SS, 1, 1};
  CFComponentId id;
  std::string_view idx;
  if (s.size() == 3 && s[0] == 'E') {
    id.pair = FieldPair::EE;
    idx = s.substr(1);
  } else if (s.size() == 3 && s[0] == 'H') {
    id.pair = FieldPair::HH;
    idx = s.substr(1);
  } else if (s.size() == 4 && s.substr(0, 2) == "EH") {
    id.pair = FieldPair::EH;
    idx = s.substr(2);
  } else {
    throw std::invalid_argument("bad component '" + std::string(s) + "' (expected E11, H23, EH12 or S)");
  }
  if (idx[0] < '1' || idx[0] > '3' || idx[1] < '1' || idx[1] > '3') {
    throw std::invalid_argument("component indices must be 1..3 in '" + std::string(s) + "'");
  }
  id.a = idx[0] - '0';
  id.b = idx[1] - '0';
  return id;
}

std::string CFComponentId::name() const {
  const std::string ij{static_cast<char>('0' + a), static_cast<char>('0' + b)};
  switch (pair) {
    case FieldPair::EE:
      return "E" + ij;
    case FieldPair::HH:
      return "H" + ij;
    case FieldPair::EH:
      return "EH" + ij;
    case FieldPair::SS:
      return "S";
  }
  return "?";
}

}  // namespace rotzp
