#pragma once

// Test-side oracles, deliberately independent of the library's own
// computation paths: minors instead of elimination, grid search instead of
// certificates, lattice counting instead of reflection closure, and a full
// adjoint trace instead of the sparse Killing table.

#include "lieforms/chevalley.hpp"
#include "lieforms/root_system.hpp"

namespace oracles {

/// Determinant by cofactor expansion. Exponential; keep dim small.
lieforms::Rational det_cofactor(const lieforms::RationalMatrix& m);

/// Sylvester test: negative definite iff (-1)^k det(leading k x k) > 0 for
/// every k. Complete second route for the definiteness decision.
bool sylvester_negative_definite(const lieforms::SymMatrix& m);

/// Searches nonzero integer vectors with entries in {-2..2} for a witness
/// x with x^T m x >= 0. Returns true if one exists (so m is certainly not
/// negative definite); finding none is only necessary evidence.
bool grid_finds_nonnegative(const lieforms::SymMatrix& m);

/// Number of norm-2 vectors of the even unimodular rank-8 lattice, counted
/// by direct enumeration (integer vectors +-e_i +- e_j and half-integer
/// sign patterns with an even number of minus signs).
int e8_lattice_root_count();

/// Order of the group generated by the simple reflections, by closure over
/// permutations of the root list. Only sensible for small rank.
long long weyl_order_by_enumeration(const lieforms::RootSystem& rs);

/// tr(ad a . ad b) summed basis vector by basis vector, using only the
/// bracket. Cross-checks the sparse Killing table.
lieforms::GaussianRational killing_by_trace(const lieforms::StructureConstants& sc,
                                            const lieforms::AlgebraElement& a,
                                            const lieforms::AlgebraElement& b);

/// [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] == 0, evaluated with
/// integer accumulation over the basis table.
bool jacobi_holds(const lieforms::StructureConstants& sc, int i, int j, int k);

/// f([b_i, b_j]) == [f(b_i), f(b_j)] on every basis pair.
bool is_bracket_automorphism(const lieforms::StructureConstants& sc,
                             const lieforms::BasisAutomorphism& f);

} // namespace oracles
