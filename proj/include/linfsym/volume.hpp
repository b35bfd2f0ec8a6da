#pragma once

#include <span>

#include "linfsym/linfty.hpp"

namespace linfsym {

/// R^m, m >= 3, with the volume form mu = dx1^...^dxm.
class VolumeSpace {
 public:
  explicit VolumeSpace(int dim);

  int dim() const { return m_; }
  const DifferentialForm& mu() const { return mu_; }

 private:
  int m_;
  DifferentialForm mu_;
};

/// The exact divergence-free vector field X_alpha with
/// iota_{X_alpha} mu = -d alpha, for an (m-2)-form alpha.
MultiVectorField exact_divfree_vf(const VolumeSpace& v, const DifferentialForm& alpha);

/// l_k(alpha_1..alpha_k) = -(-1)^{k(k+1)/2} iota_{X_k} ... iota_{X_1} mu,
/// for 2 <= k <= m and (m-2)-forms alpha_i.
DifferentialForm rogers_l(const VolumeSpace& v, std::span<const DifferentialForm> alphas);

/// Grounded family on L_{-i} = Omega^{m-2-i}, i = 0..m-2, with l_1 = d
/// (zero on L_0) and the brackets above.
BracketFamily volume_family(const VolumeSpace& v);

}  // namespace linfsym
