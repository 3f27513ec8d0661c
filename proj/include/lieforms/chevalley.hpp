#pragma once

#include <cstdint>
#include <vector>

#include "lieforms/arith.hpp"
#include "lieforms/root_system.hpp"
#include "lieforms/weyl.hpp"

namespace lieforms {

/// One summand of a bracket of basis vectors: (basis index, integer
/// coefficient). Basis indices 0..rank-1 are the Cartan generators H_i;
/// rank + r is the root vector X of root index r.
using BasisTerm = std::pair<int, int>;

/// The signed integer table N with [X_a, X_b] = N(a,b) X_{a+b}, built with
/// the extraspecial-pair convention: positive roots are ordered by (height,
/// node-1-first); for each non-simple positive g the pair (alpha_i, g -
/// alpha_i) with minimal i gets N = +(down + 1), where down counts the
/// string steps below; every other constant is derived from antisymmetry,
/// N(-a,-b) = -N(a,b), and the Jacobi relations. The derived table
/// satisfies |N(a,b)| = down + 1 throughout; build() verifies this.
class StructureConstants {
public:
    static StructureConstants build(const RootSystem& rs);

    const RootSystem& rs() const { return rs_; }
    int rank() const { return rs_.rank(); }
    /// Dimension of the algebra: rank + number of roots.
    int dim() const { return rs_.rank() + rs_.size(); }

    /// N(a, b) for root indices; 0 when a + b is not a root.
    int n(int a_idx, int b_idx) const { return n_(a_idx, b_idx); }
    /// Root index of root(a) + root(b), or -1.
    int sum_index(int a_idx, int b_idx) const { return sum_(a_idx, b_idx); }

    /// H_alpha = [X_alpha, X_-alpha] expanded over the simple coroots:
    /// the list of (simple index, integer coefficient).
    const std::vector<BasisTerm>& coroot_terms(int root_idx) const { return coroot_[root_idx]; }

    /// [basis_i, basis_j] as a short list of integer basis terms.
    std::vector<BasisTerm> basis_bracket(int bi, int bj) const;

    std::uint64_t fingerprint() const { return rs_.fingerprint(); }

private:
    RootSystem rs_;
    Eigen::MatrixXi n_;
    Eigen::MatrixXi sum_;
    std::vector<std::vector<BasisTerm>> coroot_;
};

/// Convenience alias for the spec-level operation name.
inline StructureConstants build_constants(const RootSystem& rs) { return StructureConstants::build(rs); }

/// Element of the algebra in Chevalley coordinates: h over {H_i}, x over
/// {X_root}. Coordinates are Gaussian rationals; values are immutable in
/// spirit (all operations return fresh elements).
struct AlgebraElement {
    GaussianVector h; // length rank
    GaussianVector x; // length = number of roots
    std::uint64_t fingerprint = 0;

    static AlgebraElement zero(const StructureConstants& sc);
    /// H_i for a simple index.
    static AlgebraElement cartan(const StructureConstants& sc, int i);
    /// X of the given root index.
    static AlgebraElement root_vector(const StructureConstants& sc, int root_idx);

    bool is_zero() const;

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator*(const GaussianRational& c, AlgebraElement a);
    AlgebraElement operator-() const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
};

/// The Lie bracket, extended bilinearly from the basis table.
/// Throws on elements built over a different root system.
AlgebraElement bracket(const StructureConstants& sc, const AlgebraElement& a, const AlgebraElement& b);

/// A basis-aligned algebra automorphism: X_r -> sign[r] X_{root_perm[r]}
/// and H_i -> sum_j h_map(j, i) H_j. Closed under composition; all
/// automorphisms used here (Chevalley involution, diagram actions, the
/// longest-element involution) are of this shape.
struct BasisAutomorphism {
    std::vector<int> root_perm;
    std::vector<int> sign;
    Eigen::MatrixXi h_map;
    std::uint64_t fingerprint = 0;

    AlgebraElement apply(const AlgebraElement& a) const;

    static BasisAutomorphism identity(const StructureConstants& sc);
    bool is_identity() const;
    /// f.compose(g) applies g first.
    BasisAutomorphism compose(const BasisAutomorphism& g) const;
    /// Multiplicative order; throws past a small bound (none of ours exceeds 6).
    int order() const;

    friend bool operator==(const BasisAutomorphism& a, const BasisAutomorphism& b) {
        return a.root_perm == b.root_perm && a.sign == b.sign && a.h_map == b.h_map;
    }
};

/// X_alpha -> -X_{-alpha}, H_i -> -H_i, extended complex-linearly.
/// An order-2 bracket automorphism.
BasisAutomorphism chevalley_involution(const StructureConstants& sc);
AlgebraElement chevalley_involution(const StructureConstants& sc, const AlgebraElement& a);

/// The algebra automorphism induced by a diagram automorphism psi:
/// X_{+-alpha_i} -> X_{+-alpha_psi(i)}, H_i -> H_psi(i); on the remaining
/// root vectors the sign is dictated by the structure constants, computed
/// along each root's stored decomposition.
BasisAutomorphism diagram_action(const StructureConstants& sc, const DiagramAutomorphism& psi);
AlgebraElement diagram_action(const StructureConstants& sc, const DiagramAutomorphism& psi,
                              const AlgebraElement& a);

/// The involution w* with w*(X_alpha) = -X_{w0(alpha)} on simple roots,
/// realized as chevalley_involution composed with the inverse diagram
/// action. Defined only when w0 composed with psi acts as -1 on all roots;
/// otherwise throws PredictedAbsenceError pointing at the classification.
/// Postconditions (checked): order 2, commutes with diagram_action(psi).
BasisAutomorphism weyl_involution(const StructureConstants& sc, const DiagramAutomorphism& psi);

} // namespace lieforms
