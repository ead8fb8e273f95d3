#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace ign {

/// Increasing map of [0,1] onto itself with h(0) = 0 and h(1) = 1, applied
/// componentwise after each normalization.
///
///  - Identity: h(y) = y.
///  - Power{a, t}: h(y) = k1 (y + t)^a + k2 with a > 1, t >= 0 and
///    k1 = 1 / ((1+t)^a - t^a), k2 = -k1 t^a. Strictly convex; h'(0) > 0 iff t > 0.
///  - Sigmoid{a}: the logistic 1/(1+exp(-a z)) centred at 1/2 and rescaled so
///    that h(0) = 0, h(1/2) = 1/2 and h(1) = 1. Convex then concave.
class Activation {
 public:
  struct Identity {};
  struct Power {
    double a;
    double t;
  };
  struct Sigmoid {
    double a;
  };

  Activation() : Activation(Identity{}) {}
  /// Throws InvalidArgument on parameters outside the valid ranges.
  Activation(Identity);
  Activation(Power p);
  Activation(Sigmoid s);

  static Activation identity() { return Activation(Identity{}); }
  static Activation power(double a, double t) { return Activation(Power{a, t}); }
  static Activation sigmoid(double a) { return Activation(Sigmoid{a}); }

  /// Parses "identity", "power:a,t" or "sigmoid:a".
  static Activation parse(std::string_view text);
  std::string to_string() const;

  /// h(y). Throws InvalidArgument if y lies outside [0,1] by more than 1e-9;
  /// values inside the slack are clamped.
  double value(double y) const;
  /// h'(y), evaluated analytically. Same domain rules as value().
  double derivative(double y) const;

  bool is_identity() const noexcept { return std::holds_alternative<Identity>(variant_); }
  const std::variant<Identity, Power, Sigmoid>& variant() const noexcept { return variant_; }

 private:
  std::variant<Identity, Power, Sigmoid> variant_;
  // Power: (1+t)^a - t^a and t^a. Sigmoid: tanh(a/4) and sinh(a/4).
  double scale_ = 1.0;
  double offset_ = 0.0;
};

}  // namespace ign
