#include "ncl/fock.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ncl {

void ModeSpec::validate() const {
  if (n_trunc < 4) {
    throw DomainError("ModeSpec: n_trunc must be >= 4");
  }
  if (safe_margin < 0 || safe_margin > n_trunc / 2) {
    throw DomainError("ModeSpec: safe_margin must be in [0, n_trunc/2]");
  }
}

CompositeSpace make_space(std::vector<ModeSpec> modes) {
  CompositeSpace space;
  space.dim = 1;
  for (const auto& m : modes) {
    m.validate();
    space.dim *= m.n_trunc;
  }
  space.modes = std::move(modes);
  return space;
}

Matrix annihilation(const ModeSpec& mode) {
  mode.validate();
  Matrix a = Matrix::Zero(mode.n_trunc, mode.n_trunc);
  for (int n = 1; n < mode.n_trunc; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Matrix creation(const ModeSpec& mode) { return annihilation(mode).adjoint(); }

Matrix number_operator(const ModeSpec& mode) {
  mode.validate();
  Matrix n = Matrix::Zero(mode.n_trunc, mode.n_trunc);
  for (int k = 0; k < mode.n_trunc; ++k) n(k, k) = k;
  return n;
}

Matrix embed(const Matrix& op, int slot, const CompositeSpace& space) {
  if (slot < 0 || slot >= static_cast<int>(space.modes.size())) {
    throw DomainError("embed: slot out of range");
  }
  if (op.rows() != space.modes[slot].n_trunc) {
    throw DimensionMismatch("embed: operator does not match mode cutoff");
  }
  // slot 0 varies slowest: composite = kron(slot0, slot1, ...)
  Matrix out = Matrix::Identity(1, 1);
  for (int s = 0; s < static_cast<int>(space.modes.size()); ++s) {
    if (s == slot) {
      out = kron(out, op);
    } else {
      const int n = space.modes[s].n_trunc;
      out = kron(out, Matrix::Identity(n, n));
    }
  }
  return out;
}

Matrix safe_projector(const CompositeSpace& space) {
  Matrix p = Matrix::Zero(space.dim, space.dim);
  const int nmodes = static_cast<int>(space.modes.size());
  for (int idx = 0; idx < space.dim; ++idx) {
    int rem = idx;
    bool safe = true;
    for (int s = nmodes - 1; s >= 0; --s) {
      const auto& m = space.modes[s];
      const int occ = rem % m.n_trunc;
      rem /= m.n_trunc;
      if (occ > m.n_trunc - m.safe_margin - 1) {
        safe = false;
        break;
      }
    }
    if (safe) p(idx, idx) = 1.0;
  }
  return p;
}

double assert_on_safe(const Matrix& a, const Matrix& b,
                      const CompositeSpace& space) {
  if (a.rows() != space.dim || b.rows() != space.dim) {
    throw DimensionMismatch("assert_on_safe: operators do not match space");
  }
  const Matrix p = safe_projector(space);
  const double num = spectral_norm(p * (a - b) * p);
  const double den = std::max(1.0, spectral_norm(p * a * p));
  return num / den;
}

}  // namespace ncl
