#include "mrs/tape.hpp"

#include <stdexcept>

namespace mrs {

Var Tape::constant(Tensor x) {
  nodes_.push_back(Node{std::move(x), {}, nullptr, nullptr});
  return Var{this, static_cast<int>(nodes_.size()) - 1};
}

Var Tape::param(Tensor& p) {
  auto it = param_ids_.find(&p);
  if (it != param_ids_.end()) return Var{this, it->second};
  nodes_.push_back(Node{p, {}, nullptr, &p});
  int id = static_cast<int>(nodes_.size()) - 1;
  param_ids_.emplace(&p, id);
  return Var{this, id};
}

Var Tape::emit(Tensor value, std::vector<int> parents, BackFn back,
               const char* op) {
  ensure_finite(value, op);
  nodes_.push_back(Node{std::move(value), std::move(parents), std::move(back),
                        nullptr});
  return Var{this, static_cast<int>(nodes_.size()) - 1};
}

void Tape::backward(Var out, const Tensor& seed) {
  if (out.tape != this || out.id < 0 ||
      out.id >= static_cast<int>(nodes_.size()))
    throw std::invalid_argument("backward: var does not belong to this tape");
  if (seed.shape != nodes_[out.id].value.shape)
    throw std::invalid_argument("backward: seed shape " + seed.shape.str() +
                                " does not match output shape " +
                                nodes_[out.id].value.shape.str());

  grads_.clear();
  grads_.resize(nodes_.size());

  // Reachability from the output, so unrelated nodes stay untouched.
  std::vector<char> reach(nodes_.size(), 0);
  std::vector<int> stack{out.id};
  reach[out.id] = 1;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    for (int p : nodes_[id].parents)
      if (!reach[p]) {
        reach[p] = 1;
        stack.push_back(p);
      }
  }

  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (reach[i]) grads_[i] = Tensor(nodes_[i].value.shape);

  for (double& g : grads_[out.id].data) g = 0.0;
  grads_[out.id].data = seed.data;

  for (int id = out.id; id >= 0; --id) {
    if (!reach[id] || !nodes_[id].back) continue;
    nodes_[id].back(*this, id);
  }

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!reach[i] || nodes_[i].sink == nullptr) continue;
    Tensor& p = *nodes_[i].sink;
    p.ensure_grad();
    const Tensor& g = grads_[i];
    for (std::size_t j = 0; j < g.data.size(); ++j) p.grad[j] += g.data[j];
  }
}

Tensor Tape::grad_of(Var v) const {
  if (v.tape != this)
    throw std::invalid_argument("grad_of: var does not belong to this tape");
  if (v.id < static_cast<int>(grads_.size()) && !grads_[v.id].data.empty())
    return grads_[v.id];
  return Tensor(nodes_[v.id].value.shape);
}

}  // namespace mrs
