#ifndef MRS_TAPE_HPP
#define MRS_TAPE_HPP

#include <functional>
#include <unordered_map>
#include <vector>

#include "mrs/tensor.hpp"

namespace mrs {

class Tape;

// Handle to a recorded value on a tape.
struct Var {
  Tape* tape = nullptr;
  int id = -1;
  const Tensor& value() const;
  Shape shape() const { return value().shape; }
};

// Recorded composition for reverse-mode differentiation. Values are appended
// as ops run; backward() sweeps the record in reverse. A tape is single-writer;
// independent tapes may run concurrently.
class Tape {
 public:
  using BackFn = std::function<void(Tape&, int self)>;

  // Leaf holding a copy of `x`; gradients stop here but remain queryable.
  Var constant(Tensor x);
  // Leaf bound to external parameter storage: after backward(), the node's
  // gradient is accumulated into p.grad. Repeated calls with the same
  // pointer return the same node.
  Var param(Tensor& p);

  Var emit(Tensor value, std::vector<int> parents, BackFn back, const char* op);

  const Tensor& value(int id) const { return nodes_[id].value; }
  Tensor& grad(int id) { return grads_[id]; }

  // Seeds d(out)/d(out) = seed and accumulates gradients for every node that
  // out depends on; unreached nodes keep zero gradients.
  void backward(Var out, const Tensor& seed);

  // Gradient of a node after backward(); zeros if the node was not reached.
  Tensor grad_of(Var v) const;

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    std::vector<int> parents;
    BackFn back;
    Tensor* sink = nullptr;
  };
  std::vector<Node> nodes_;
  std::vector<Tensor> grads_;
  std::unordered_map<const Tensor*, int> param_ids_;

  friend struct Var;
};

inline const Tensor& Var::value() const { return tape->value(id); }

}  // namespace mrs

#endif  // MRS_TAPE_HPP
