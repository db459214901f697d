#pragma once

#include "hillspectra/types.hpp"

namespace hillspectra {

struct Eigensystem {
  Vector values;   // sorted by (Re, Im)
  Matrix vectors;  // unit right eigenvectors, column i for values(i)
};

// dense nonsymmetric eigenvalues, sorted by (Re, Im)
Vector eigenvalues(const Matrix& a);

Eigensystem eigensystem(const Matrix& a);

}  // namespace hillspectra
