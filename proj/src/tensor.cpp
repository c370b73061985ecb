#include "mrs/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace mrs {

std::string Shape::str() const {
  return "(" + std::to_string(n) + "," + std::to_string(c) + "," +
         std::to_string(h) + "," + std::to_string(w) + ")";
}

double SplitMix64::normal() {
  // Box-Muller; u1 nudged away from zero so log() stays finite.
  double u1 = uniform();
  double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Tensor Tensor::full(Shape s, double v) {
  Tensor t(s);
  t.data.assign(s.numel(), v);
  return t;
}

Tensor Tensor::randn(Shape s, SplitMix64& rng, double scale) {
  Tensor t(s);
  for (double& x : t.data) x = rng.normal() * scale;
  return t;
}

Tensor Tensor::from(Shape s, std::vector<double> values) {
  if (values.size() != s.numel())
    throw std::invalid_argument("Tensor::from: " + std::to_string(values.size()) +
                                " values for shape " + s.str());
  Tensor t(s);
  t.data = std::move(values);
  return t;
}

double Tensor::sum() const {
  double acc = 0.0;
  for (double x : data) acc += x;
  return acc;
}

double Tensor::abs_max() const {
  double m = 0.0;
  for (double x : data) m = std::max(m, std::abs(x));
  return m;
}

bool Tensor::all_finite() const {
  for (double x : data)
    if (!std::isfinite(x)) return false;
  return true;
}

void ensure_finite(const Tensor& t, const char* where) {
  if (!t.all_finite())
    throw std::runtime_error(std::string("non-finite value produced by ") + where);
}

}  // namespace mrs
