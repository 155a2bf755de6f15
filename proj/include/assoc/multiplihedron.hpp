#pragma once

#include "assoc/bracketing.hpp"
#include "assoc/expression.hpp"
#include "assoc/painted_tree.hpp"
#include "assoc/poset.hpp"
#include "assoc/report.hpp"

namespace assoc::multiplihedron {

/// Reads a painted tree as an expression: a U node over X1..Xm is (X1...Xm),
/// a T node is f(X1.....Xm), a P node over Y1..Ym is (Y1...Ym).
Expression Phi(const PaintedTree& t);

/// All expressions over a1..an ordered by the coarsening moves, ranked by
/// height.
poset::FacePoset build_frakJ(int n);

/// Flat expressions ordered by the flat coarsening moves, ranked by height.
poset::FacePoset build_Jprime(int n);

Report verify_Phi(int n);

/// Bracketing of a1..a(n+1): block i contributes its segments (dotted) or one
/// bracketed word (dot-free, unbracketed when a single atom), and every block
/// after the first opens a bracket that runs to a(n+1).
associahedron::Bracketing phi_map(const FlatExpression& e);
FlatExpression phi_inverse(const associahedron::Bracketing& b);

/// Order isomorphism, f-vectors, round trip, and monotonicity of
/// collapse_codomain.
Report verify_phi(int n);

}  // namespace assoc::multiplihedron
