#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieforms/chevalley.hpp"

namespace lieforms {

/// Label of a compact-basis element: Y(alpha) = X_alpha - X_-alpha and
/// Z(alpha) = i(X_alpha + X_-alpha) for positive alpha, W(i) = i H_i for
/// simple i. The basis lists all Y's, then all Z's, then the W's.
struct CompactLabel {
    enum class Kind { Y, Z, W };
    Kind kind = Kind::Y;
    int index = 0; // positive-root index for Y/Z, simple index for W

    std::string str(const RootSystem& rs) const;
};

struct CompactBasis {
    std::vector<AlgebraElement> elements;
    std::vector<CompactLabel> labels;

    int dim() const { return static_cast<int>(elements.size()); }
};

/// The rank + 2 |pos| basis spanning the compact real form.
CompactBasis compact_basis(const StructureConstants& sc);

/// Killing form values on the Chevalley basis, computed as exact traces of
/// composed adjoint maps (each adjoint map of a basis vector is sparse).
/// B vanishes off the Cartan block and the X_alpha, X_-alpha pairs.
struct KillingTable {
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> h_block; // B(H_i, H_j)
    std::vector<long long> x_pair;                                    // B(X_a, X_-a), positive index
};

KillingTable build_killing_table(const StructureConstants& sc);

/// B(a, b), bilinear over the table.
GaussianRational killing_form(const StructureConstants& sc, const KillingTable& kt,
                              const AlgebraElement& a, const AlgebraElement& b);

/// Gram matrix of the Killing form over the compact basis. Every entry must
/// come out real; a nonzero imaginary part is a fatal invariant violation.
SymMatrix killing_gram(const StructureConstants& sc, const CompactBasis& cb);

/// Coordinates of a over the compact basis (Y block, Z block, W block).
/// The change of basis is exact and always solvable.
GaussianVector express_in_compact(const StructureConstants& sc, const AlgebraElement& a);

/// The antilinear involution theta: conjugate coordinates, then apply the
/// Chevalley involution. Its fixed points are exactly the real span of the
/// compact basis.
AlgebraElement antilinear_theta(const StructureConstants& sc, const AlgebraElement& a);

/// Exact certificate that the compact basis spans a real form on which the
/// Killing form is negative definite:
///   closure            - brackets of basis elements have real compact coordinates,
///   negative_definite  - the Killing gram passes the signed-pivot test,
///   antilinear_fixed   - theta fixes every basis element.
struct Certificate {
    DynkinType dynkin;
    bool closure = false;
    bool negative_definite = false;
    bool antilinear_fixed = false;
    std::vector<Rational> gram_diagonal_sample; // first few diagonal entries

    bool all_passed() const { return closure && negative_definite && antilinear_fixed; }
};

Certificate certify_compact(const StructureConstants& sc);

} // namespace lieforms
