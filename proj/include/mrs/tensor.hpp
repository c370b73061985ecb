#ifndef MRS_TENSOR_HPP
#define MRS_TENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mrs {

// Dense rank-4 shape, NCHW order.
struct Shape {
  int n = 1;
  int c = 1;
  int h = 1;
  int w = 1;

  std::size_t numel() const {
    return static_cast<std::size_t>(n) * c * h * w;
  }
  bool operator==(const Shape& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }
  bool operator!=(const Shape& o) const { return !(*this == o); }
  std::string str() const;
};

// Deterministic PRNG used for every random initialization in the project.
// SplitMix64: state advances by 0x9E3779B97F4A7C15 and the output mix uses
// the 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB finalizer constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal via Box-Muller; one uniform pair per draw.
  double normal();
  // Integer in [0, m).
  std::uint64_t below(std::uint64_t m) { return m ? next() % m : 0; }

 private:
  std::uint64_t state_;
};

// Dense 64-bit float tensor with optional gradient storage of the same shape.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape s) : shape(s), data(s.numel(), 0.0) {}

  static Tensor zeros(Shape s) { return Tensor(s); }
  static Tensor full(Shape s, double v);
  static Tensor randn(Shape s, SplitMix64& rng, double scale = 1.0);
  static Tensor from(Shape s, std::vector<double> values);

  std::size_t numel() const { return data.size(); }

  std::size_t index(int in, int ic, int ih, int iw) const {
    return ((static_cast<std::size_t>(in) * shape.c + ic) * shape.h + ih) *
               shape.w +
           iw;
  }
  double& at(int in, int ic, int ih, int iw) { return data[index(in, ic, ih, iw)]; }
  double at(int in, int ic, int ih, int iw) const {
    return data[index(in, ic, ih, iw)];
  }

  bool has_grad() const { return !grad.empty(); }
  void ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
  }
  void zero_grad() { grad.assign(grad.size(), 0.0); }

  double sum() const;
  double abs_max() const;
  bool all_finite() const;

  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // empty when absent
};

// Throws std::runtime_error naming `where` if any element is NaN/Inf.
void ensure_finite(const Tensor& t, const char* where);

}  // namespace mrs

#endif  // MRS_TENSOR_HPP
