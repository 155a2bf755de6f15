#pragma once

#include <string>
#include <vector>

#include "assoc/bracketing.hpp"
#include "assoc/complex.hpp"
#include "assoc/poset.hpp"
#include "assoc/report.hpp"

namespace assoc::associahedron {

/// Face poset of K_n: all bracketings of n letters, B <= B' iff B contains B',
/// rank n-2-|B|.  Labels are the canonical bracketing strings.
poset::FacePoset build_K(int n);

struct FacetSignature {
  int p = 0;
  int q = 0;
  int r = 0;
  bool operator==(const FacetSignature&) const = default;
};

/// The single bracket [l,m] of a facet read as K_p x_r K_q.
FacetSignature facet_signature(const Bracketing& b);
Bracket facet_bracket(int n, const FacetSignature& s);

/// Substitutes `inner` into slot k of `outer`.
Bracketing embed(const Bracketing& outer, int k, const Bracketing& inner);

/// Deletes letter j, dropping brackets that become trivial.
Bracketing degeneracy(const Bracketing& b, int j);

/// a1(a2(...(an-1 an)))
Bracketing right_comb_vertex(int n);

/// Brackets of b that contain the last letter.
Bracketing suffix_part(const Bracketing& b);

/// Downward closure in K_{n+1} of the facets whose bracket avoids letter n+1.
/// Empty for n = 1.
poset::CellComplex enlarged_complex(int n);

/// Block key merging boundary cells of enlarged_complex(n-1) that carry the
/// same suffix brackets in K_n.
poset::BlockKey suffix_key();

Report verify_theorem_A(int n);
Report verify_Q(int p, int q);

/// C(X) x C(Y) against C(X x C(Y) u C(X) x Y), both directions of the order
/// checked through an explicit search.
Report verify_cross_cone(const std::string& name, const poset::CellComplex& x, const poset::BlockKey& kx,
                         const poset::CellComplex& y, const poset::BlockKey& ky);
/// The cross-cone check with X = K^_{p-1} and Y = K^_{q-1}.
Report verify_cross_cone_Q(int p, int q);
/// The cross-cone check with X = Y = point.
Report verify_cross_cone_points();

/// Loday points of all binary trees with n leaves.
std::vector<std::vector<long long>> loday_realization(int n);
/// Hyperplane sums, and optionally extremality of every point.
Report verify_loday(int n, bool extremality = true);

/// Substitution identities for all inputs whose result has at most
/// `max_letters` letters.
Report verify_operator_identities(int max_letters);
/// Relations between degeneracies and substitutions, and s_j s_k = s_k s_{j+1}.
Report verify_degeneracy_relations(int max_n);

}  // namespace assoc::associahedron
