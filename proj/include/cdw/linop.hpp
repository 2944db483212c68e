#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cdw/space.hpp"

namespace cdw {

enum class Hermiticity { kHermitian, kAntiHermitian, kNone };

struct BlockKey {
  int cs_out, l_out, cs_in, l_in;
  auto operator<=>(const BlockKey&) const = default;
};

/// One Kronecker term: angular factor (2*l_out+1 x 2*l_in+1) tensor radial
/// factor (N x N), acting on a sector block as ang * B * rad^T.
struct KronTerm {
  MatrixC ang;
  MatrixC rad;
};

/// Block-sparse operator over StateVector coordinates. Only base operators
/// are stored this way; composites stay expression-level (see OpFn below) so
/// that products of derivative-heavy radial factors are never materialized.
class LinOp {
 public:
  LinOp() = default;
  explicit LinOp(Hermiticity h) : herm_(h) {}

  Hermiticity hermiticity() const { return herm_; }
  void set_hermiticity(Hermiticity h) { herm_ = h; }

  void add_term(const BlockKey& key, MatrixC ang, MatrixC rad);
  bool has_block(const BlockKey& key) const { return blocks_.count(key) > 0; }
  const std::map<BlockKey, std::vector<KronTerm>>& blocks() const { return blocks_; }

  StateVector apply(const StateVector& v) const;
  StateVector operator()(const StateVector& v) const { return apply(v); }

  LinOp adjoint() const;
  LinOp scaled(Complex c) const;
  LinOp operator+(const LinOp& o) const;

  /// Dense form of one block (for structural checks and the cache).
  MatrixC materialize_block(const BlockKey& key) const;

 private:
  std::map<BlockKey, std::vector<KronTerm>> blocks_;
  Hermiticity herm_ = Hermiticity::kNone;
};

/// Operator expression applied to vectors; composites of base LinOps.
using OpFn = std::function<StateVector(const StateVector&)>;

OpFn as_fn(const LinOp& op);  // references op; keep it alive
OpFn compose(OpFn a, OpFn b);
OpFn sum(std::vector<OpFn> fs);
OpFn scale_fn(Complex c, OpFn f);
/// v -> i (A B - B A) v
OpFn commutator_i(OpFn a, OpFn b);
OpFn zero_fn();
OpFn identity_fn();

}  // namespace cdw
