#include "cdw/linop.hpp"

#include <stdexcept>

namespace cdw {

void LinOp::add_term(const BlockKey& key, MatrixC ang, MatrixC rad) {
  if (ang.rows() != 2 * key.l_out + 1 || ang.cols() != 2 * key.l_in + 1)
    throw std::invalid_argument("LinOp::add_term: angular factor shape mismatch");
  if (rad.rows() != rad.cols()) throw std::invalid_argument("LinOp::add_term: radial factor must be square");
  blocks_[key].push_back({std::move(ang), std::move(rad)});
}

StateVector LinOp::apply(const StateVector& v) const {
  StateVector out(v.space());
  for (const auto& [key, terms] : blocks_) {
    const MatrixC& x = v.block(key.cs_in, key.l_in);
    MatrixC& y = out.block(key.cs_out, key.l_out);
    for (const auto& t : terms) y.noalias() += t.ang * x * t.rad.transpose();
  }
  return out;
}

LinOp LinOp::adjoint() const {
  LinOp r(herm_ == Hermiticity::kNone ? Hermiticity::kNone : herm_);
  for (const auto& [key, terms] : blocks_) {
    BlockKey k2{key.cs_in, key.l_in, key.cs_out, key.l_out};
    for (const auto& t : terms) r.add_term(k2, t.ang.adjoint(), t.rad.adjoint());
  }
  return r;
}

LinOp LinOp::scaled(Complex c) const {
  LinOp r;
  for (const auto& [key, terms] : blocks_)
    for (const auto& t : terms) r.add_term(key, c * t.ang, t.rad);
  return r;
}

LinOp LinOp::operator+(const LinOp& o) const {
  LinOp r;
  for (const auto& [key, terms] : blocks_)
    for (const auto& t : terms) r.add_term(key, t.ang, t.rad);
  for (const auto& [key, terms] : o.blocks_)
    for (const auto& t : terms) r.add_term(key, t.ang, t.rad);
  return r;
}

MatrixC LinOp::materialize_block(const BlockKey& key) const {
  const int rows = (2 * key.l_out + 1), cols = (2 * key.l_in + 1);
  auto it = blocks_.find(key);
  if (it == blocks_.end()) return MatrixC();  // empty = structural zero
  const int n = static_cast<int>(it->second.front().rad.rows());
  MatrixC m = MatrixC::Zero(rows * n, cols * n);
  for (const auto& t : it->second)
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.block(r * n, c * n, n, n) += t.ang(r, c) * t.rad;
  return m;
}

OpFn as_fn(const LinOp& op) {
  return [&op](const StateVector& v) { return op.apply(v); };
}

OpFn compose(OpFn a, OpFn b) {
  return [a = std::move(a), b = std::move(b)](const StateVector& v) { return a(b(v)); };
}

OpFn sum(std::vector<OpFn> fs) {
  return [fs = std::move(fs)](const StateVector& v) {
    StateVector out(v.space());
    for (const auto& f : fs) out += f(v);
    return out;
  };
}

OpFn scale_fn(Complex c, OpFn f) {
  return [c, f = std::move(f)](const StateVector& v) {
    StateVector out = f(v);
    out *= c;
    return out;
  };
}

OpFn commutator_i(OpFn a, OpFn b) {
  return [a = std::move(a), b = std::move(b)](const StateVector& v) {
    StateVector out = a(b(v));
    out -= b(a(v));
    out *= kI;
    return out;
  };
}

OpFn zero_fn() {
  return [](const StateVector& v) { return StateVector(v.space()); };
}

OpFn identity_fn() {
  return [](const StateVector& v) { return v; };
}

}  // namespace cdw
