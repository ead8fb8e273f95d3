#include "ign/activation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "ign/error.hpp"

namespace ign {

namespace {

constexpr double kDomainSlack = 1e-9;

double clamp_domain(double y) {
  if (!(y >= -kDomainSlack && y <= 1.0 + kDomainSlack))
    throw InvalidArgument("activation argument outside [0, 1]: " + std::to_string(y));
  return y < 0.0 ? 0.0 : (y > 1.0 ? 1.0 : y);
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidArgument("bad activation parameter '" + std::string(token) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Activation::Activation(Identity) : variant_(Identity{}) {}

Activation::Activation(Power p) : variant_(p) {
  if (!(p.a > 1.0) || !std::isfinite(p.a)) throw InvalidArgument("power activation needs exponent a > 1");
  if (!(p.t >= 0.0) || !std::isfinite(p.t)) throw InvalidArgument("power activation needs shift t >= 0");
  offset_ = std::pow(p.t, p.a);
  scale_ = p.t > 0.0 ? offset_ * std::expm1(p.a * std::log1p(1.0 / p.t)) : 1.0;
}

Activation::Activation(Sigmoid s) : variant_(s) {
  if (!(s.a > 0.0) || !std::isfinite(s.a)) throw InvalidArgument("sigmoid activation needs steepness a > 0");
  // s_a(y) = tanh(a (y - 1/2) / 2) / (2 tanh(a/4)) + 1/2, evaluated below in the
  // cancellation free form sinh(a y / 2) / (2 sinh(a/4) cosh(a (y - 1/2) / 2)).
  scale_ = std::tanh(s.a / 4.0);
  offset_ = std::sinh(s.a / 4.0);
}

Activation Activation::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "identity") {
    if (!args.empty()) throw InvalidArgument("identity activation takes no parameters");
    return identity();
  }
  const auto nums = parse_numbers(args);
  if (kind == "power") {
    if (nums.size() != 2) throw InvalidArgument("expected power:a,t");
    return power(nums[0], nums[1]);
  }
  if (kind == "sigmoid") {
    if (nums.size() != 1) throw InvalidArgument("expected sigmoid:a");
    return sigmoid(nums[0]);
  }
  throw InvalidArgument("unknown activation '" + std::string(text) + "'");
}

std::string Activation::to_string() const {
  std::ostringstream os;
  os.precision(17);
  if (const auto* p = std::get_if<Power>(&variant_)) {
    os << "power:" << p->a << ',' << p->t;
  } else if (const auto* s = std::get_if<Sigmoid>(&variant_)) {
    os << "sigmoid:" << s->a;
  } else {
    os << "identity";
  }
  return os.str();
}

// Both non-identity forms keep full relative precision near 0, where the
// textbook expressions cancel to 0 below ~1e-16 and would kill small weights.
double Activation::value(double y) const {
  y = clamp_domain(y);
  if (is_identity() || y == 0.0) return y;
  if (y == 1.0) return 1.0;
  if (const auto* p = std::get_if<Power>(&variant_)) {
    if (p->t == 0.0) return std::pow(y, p->a);
    return std::min(1.0, offset_ * std::expm1(p->a * std::log1p(y / p->t)) / scale_);
  }
  const double a = std::get<Sigmoid>(variant_).a;
  return std::min(1.0, std::sinh(0.5 * a * y) / (2.0 * offset_ * std::cosh(0.5 * a * (y - 0.5))));
}

double Activation::derivative(double y) const {
  y = clamp_domain(y);
  if (const auto* p = std::get_if<Power>(&variant_)) return p->a * std::pow(y + p->t, p->a - 1.0) / scale_;
  if (const auto* s = std::get_if<Sigmoid>(&variant_)) {
    const double c = std::cosh(0.5 * s->a * (y - 0.5));
    return 0.25 * s->a / (c * c * scale_);
  }
  return 1.0;
}

}  // namespace ign
