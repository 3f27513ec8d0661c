#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>

#include "lieforms/errors.hpp"

namespace lieforms {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type plus an optional diagram twist. The twist selects an inner
/// (1), quasi-split outer (2) or triality (3, type D4 only) form.
///
/// Rank conventions: A n>=1, B n>=2, C n>=3, D n>=3, E n in {6,7,8}, F4, G2.
/// The low-rank coincidences are resolved by fiat: B2 is canonical (C2 is
/// rejected), D3 is accepted (isomorphic to A3), D2 is rejected.
struct DynkinType {
    Family family = Family::A;
    int rank = 1;
    int twist = 1;

    /// "A2", "D4^3". Twist 1 has no suffix.
    std::string name() const;

    friend bool operator==(const DynkinType& a, const DynkinType& b) {
        return a.family == b.family && a.rank == b.rank && a.twist == b.twist;
    }
};

/// Whether (family, rank) is an accepted simple type.
bool rank_valid(Family family, int rank);

/// Whether the diagram admits an automorphism of the given order:
/// twist 1 always; twist 2 for A_n (n>=2), D_n (n>=3) and E6; twist 3 for D4.
bool twist_valid(Family family, int rank, int twist);

/// Parses FAMILY RANK ["^" TWIST], e.g. "A2", "D4^3", "E6^2".
/// Throws ParseError with a kind describing the exact failure.
DynkinType parse_type(std::string_view text);

/// Cartan matrix in Bourbaki node numbering, entry (i, j) = <alpha_i, alpha_j^v>.
/// The twist is ignored; it does not affect the underlying diagram.
Eigen::MatrixXi cartan_matrix(const DynkinType& t);

/// Minimal positive integer diagonal d with (alpha_i, alpha_j) = A(i,j) d_j
/// symmetric. Requires a connected (irreducible) Cartan matrix.
Eigen::VectorXi symmetrizer(const Eigen::MatrixXi& cartan);

/// Permutation of simple-root indices preserving the Cartan matrix.
struct DiagramAutomorphism {
    Eigen::VectorXi perm; // 0-based image of each node
    int order = 1;

    static DiagramAutomorphism identity(int rank);

    /// Validates Cartan-matrix preservation and computes the order.
    static DiagramAutomorphism from_perm(Eigen::VectorXi perm, const Eigen::MatrixXi& cartan);

    friend bool operator==(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
        return a.perm.size() == b.perm.size() && a.perm == b.perm;
    }
};

/// The automorphism selected by t.twist: identity for 1; the unique
/// order-2 diagram symmetry for 2 (A_n reversal, D_n tail swap, the E6 flip);
/// the 3-cycle on the outer D4 nodes for 3.
DiagramAutomorphism standard_twist(const DynkinType& t, const Eigen::MatrixXi& cartan);

} // namespace lieforms
