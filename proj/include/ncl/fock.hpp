#pragma once

#include "ncl/operator_core.hpp"

#include <vector>

namespace ncl {

/// Truncated bosonic mode: Fock states |0..n_trunc-1>, with a safety
/// margin below the cutoff inside which polynomial identities in the
/// ladder operators hold exactly.
struct ModeSpec {
  int n_trunc = 24;
  int safe_margin = 6;

  void validate() const;
};

struct CompositeSpace {
  std::vector<ModeSpec> modes;
  int dim = 1;  // product of per-mode cutoffs
};

CompositeSpace make_space(std::vector<ModeSpec> modes);

/// <n-1|a|n> = sqrt(n); a|0> = 0.
Matrix annihilation(const ModeSpec& mode);
Matrix creation(const ModeSpec& mode);
Matrix number_operator(const ModeSpec& mode);

/// Kronecker embedding of a single-mode operator at `slot`, identities
/// elsewhere. Slot 0 varies slowest in the composite basis ordering.
Matrix embed(const Matrix& op, int slot, const CompositeSpace& space);

/// Orthogonal projector onto basis states with every mode occupancy
/// <= n_trunc - safe_margin - 1. Idempotent and self-adjoint exactly.
Matrix safe_projector(const CompositeSpace& space);

/// ||P(A-B)P|| / max(1, ||PAP||) in spectral norm.
double assert_on_safe(const Matrix& a, const Matrix& b,
                      const CompositeSpace& space);

}  // namespace ncl
