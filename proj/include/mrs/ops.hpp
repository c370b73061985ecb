#ifndef MRS_OPS_HPP
#define MRS_OPS_HPP

#include <optional>
#include <vector>

#include "mrs/tape.hpp"

namespace mrs {

// Convolution geometry. Weight layout is (c_out, c_in/groups, k_h, k_w);
// bias, when present, is (1, c_out, 1, 1).
struct ConvSpec {
  int stride_h = 1, stride_w = 1;
  int pad_h = 0, pad_w = 0;
  int groups = 1;
};

Shape conv2d_out_shape(Shape x, Shape w, const ConvSpec& spec);

Var conv2d(Var x, Var weight, std::optional<Var> bias, const ConvSpec& spec);

// Per-channel affine group normalization. gamma/beta are (1, c, 1, 1).
Var group_norm(Var x, int num_groups, Var gamma, Var beta, double eps);

Var max_pool2d(Var x, int k, int stride, int pad);
Var adaptive_avg_pool_1x1(Var x);
Var upsample_nearest2x(Var x);
// Nearest-neighbor resize to an explicit target size.
Var resize_nearest(Var x, int out_h, int out_w);

Var slice_channels(Var x, int c0, int c1);
std::vector<Var> split_channels(Var x, const std::vector<int>& sizes);
Var concat_channels(const std::vector<Var>& parts);

Var sigmoid(Var x);
Var silu(Var x);
Var softplus(Var x);

// Elementwise with broadcast: shapes equal, or b shaped (n,c,1,1) / (1,c,1,1)
// broadcasting over the spatial (and batch) dims of a.
Var add(Var a, Var b);
Var mul(Var a, Var b);
Var add_scalar(Var x, double s);
Var mul_scalar(Var x, double s);

// Softmax normalizing along one NCHW axis (0..3).
Var softmax(Var x, int axis);
// Softmax across g same-sized channel blocks: channels are laid out
// block-major (g blocks of c/g), and position j is normalized over its g
// block copies.
Var softmax_channel_groups(Var x, int g);

// Plain-tensor helpers shared by the ops and the evaluators.
double sigmoid_scalar(double x);
double softplus_scalar(double x);

}  // namespace mrs

#endif  // MRS_OPS_HPP
