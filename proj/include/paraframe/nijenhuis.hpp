#pragma once

#include "paraframe/frame_calculus.hpp"
#include "paraframe/structure.hpp"

namespace paraframe {

/// N(x,y,z) = g(N(x,y), z) written through the fundamental tensor F.
Tensor3 nijenhuis_from_F(const Tensor3& f, const AprStructure& s);

/// Associated Nijenhuis tensor N^(x,y,z) written through F.
Tensor3 assoc_nijenhuis_from_F(const Tensor3& f, const AprStructure& s);

struct NijenhuisPair {
  Tensor3 n;
  Tensor3 n_hat;
};

/// Evaluates N = [phi,phi] - d eta ⊗ xi and N^ = {phi,phi} - (L_xi g) ⊗ xi
/// straight from brackets and covariant derivatives of the frame. Serves as an
/// independent check on the F-based formulas.
NijenhuisPair nijenhuis_direct(const ConnectionCoeffs& conn, const StructureField& sf,
                               const AprStructure& s);

}  // namespace paraframe
