#pragma once

// The dual prebialgebra H* on the dual basis e^a.
//
// Multiplication is the opposite convolution <h* k*, h> = <h*, h_(2)> <k*, h_(1)>,
// comultiplication is determined by <h*, hk> = <h*_(1), k> <h*_(2), h>,
// the unit is eps and the counit is evaluation at 1.

#include "wbalg/prebialgebra.hpp"

namespace wbalg {

/// mult*(a,b,i) = comult(i,b,a); comult*(c,a,b) = mult(b,a,c).
StructureConstants dual_constants(const StructureConstants& sc);
Prebialgebra dual(const Prebialgebra& p);

/// H* with the standard convolution <h* k*, h> = <h*, h_(1)> <k*, h_(2)> and the
/// comultiplication <h*, hk> = <h*_(1), h> <h*_(2), k>; that is dual(p) with
/// opposite multiplication and comultiplication. Right p-comodules are the
/// same thing as left modules over it.
Prebialgebra convolution_dual(const Prebialgebra& p);

/// Entries "Lemma 00 lm", "Lemma 00 rm", "Lemma 00 lc", "Lemma 00 rc".
VerificationReport verify_lemma_00(const Prebialgebra& p);

/// dual(dual(p)) has the structure constants of p.
bool double_dual_identity(const Prebialgebra& p);

/// "double dual", "f_{H*} = g_H", "f'_{H*} = g'_H", plus the Lemma 00 entries.
VerificationReport verify_duality(const Prebialgebra& p);

}  // namespace wbalg
