#include "geoconvex/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geoconvex/errors.hpp"

namespace geoconvex {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidBody: return "InvalidBody";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::UnsupportedStructure: return "UnsupportedStructure";
    case ErrorCode::UnboundedBody: return "UnboundedBody";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

ExtReal::ExtReal(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "ExtReal requires a value in [0, inf], got " + std::to_string(v));
  }
}

ExtReal ExtReal::reciprocal() const {
  if (v_ == 0.0) return infinity();
  if (v_ == kInf) return zero();
  return ExtReal(Raw{}, 1.0 / v_);
}

ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(ExtReal::Raw{}, a.v_ + b.v_); }

ExtReal operator*(double c, ExtReal a) {
  if (std::isnan(c) || c < 0.0) throw Error(ErrorCode::InvalidArgument, "negative scalar on ExtReal");
  return ExtReal(ExtReal::Raw{}, scale0(c, a.v_));
}

ExtReal operator*(ExtReal a, ExtReal b) {
  if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal::zero();
  return ExtReal(ExtReal::Raw{}, a.v_ * b.v_);
}

void Tolerances::validate() const {
  if (!(abs_tol > 0.0 && rel_tol > 0.0 && quad_rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
  }
}

ExtReal p_mean(ExtReal a_in, ExtReal b_in, PMeanWeights w) {
  const double lambda = w.lambda;
  const double p = w.p;
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda outside [0,1]");
  if (std::isnan(p)) throw Error(ErrorCode::InvalidArgument, "p is NaN");
  if (lambda == 0.0) return a_in;
  if (lambda == 1.0) return b_in;

  const double a = a_in.value();
  const double b = b_in.value();
  if (a == b) return a_in;
  if (p == kInf) return std::max(a, b);
  if (p == -kInf) return std::min(a, b);

  if (p == 0.0) {
    if (a == 0.0 || b == 0.0) return 0.0;  // 0 * inf = 0
    if (a == kInf || b == kInf) return kInf;
    return std::exp((1.0 - lambda) * std::log(a) + lambda * std::log(b));
  }
  if (p > 0.0) {
    if (a == kInf || b == kInf) return kInf;
    const double m = std::max(a, b);
    const double s = (1.0 - lambda) * std::pow(a / m, p) + lambda * std::pow(b / m, p);
    return m * std::pow(s, 1.0 / p);
  }
  // p < 0: a zero operand forces the mean to zero, an infinite one drops out.
  if (a == 0.0 || b == 0.0) return 0.0;
  if (a == kInf && b == kInf) return kInf;
  if (a == kInf) return std::pow(lambda, 1.0 / p) * b;
  if (b == kInf) return std::pow(1.0 - lambda, 1.0 / p) * a;
  const double m = std::min(a, b);
  const double s = (1.0 - lambda) * std::pow(a / m, p) + lambda * std::pow(b / m, p);
  return m * std::pow(s, 1.0 / p);
}

}  // namespace geoconvex
