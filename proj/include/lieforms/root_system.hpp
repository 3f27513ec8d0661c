#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lieforms/dynkin.hpp"
#include "lieforms/errors.hpp"

namespace lieforms {

/// A root in simple-root coordinates. Entries are uniformly >= 0 (positive
/// root) or uniformly <= 0 (negative root).
using Root = Eigen::VectorXi;

inline int height(const Root& r) { return r.sum(); }

/// The alpha-string through beta: beta - down*alpha, ..., beta + up*alpha.
struct RootString {
    int down = 0; // max k with beta - k*alpha a root
    int up = 0;   // max k with beta + k*alpha a root
};

/// All roots of a simple type, generated by closing the simple roots under
/// the simple reflections. Positive roots come first, sorted by (height,
/// node-1-first lexicographic order); the negative of roots[k] sits at
/// index k + num_positive(). Immutable once built.
class RootSystem {
public:
    static RootSystem build(const DynkinType& t);

    const DynkinType& dynkin() const { return dynkin_; }
    const Eigen::MatrixXi& cartan() const { return cartan_; }
    const Eigen::VectorXi& symmetrizer() const { return symm_; }

    int rank() const { return static_cast<int>(cartan_.rows()); }
    int num_positive() const { return num_positive_; }
    /// Total number of roots, 2 * num_positive().
    int size() const { return static_cast<int>(roots_.size()); }

    const Root& root(int idx) const { return roots_[idx]; }
    const std::vector<Root>& roots() const { return roots_; }

    /// Index of the given coordinate vector, or -1 if it is not a root.
    int index_of(const Root& coords) const;
    bool contains(const Root& coords) const { return index_of(coords) >= 0; }

    int negative_of(int idx) const {
        return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
    }
    bool is_positive(int idx) const { return idx < num_positive_; }
    int height_of(int idx) const { return heights_[idx]; }

    /// <root(idx), alpha_i^v> for a simple index i.
    int pairing(int idx, int i) const { return pairing_(idx, i); }
    /// <coords, alpha_i^v> for an arbitrary integer vector.
    int pairing_coords(const Root& coords, int i) const;
    /// <root(beta_idx), root(alpha_idx)^v> for arbitrary roots.
    int pairing_with_coroot(int beta_idx, int alpha_idx) const;

    /// (root, root) in the minimal integer normalization of the symmetrizer.
    int norm2(int idx) const { return norm2_[idx]; }

    /// For a non-simple positive root g: (i, b) with g = alpha_i + root(b),
    /// i the smallest such simple index and b positive. Simple roots get
    /// (-1, -1). This is also the extraspecial decomposition of g.
    std::pair<int, int> parent(int pos_idx) const { return parents_[pos_idx]; }

    /// String data through beta in direction alpha. Throws for beta = +-alpha.
    RootString root_string(int alpha_idx, int beta_idx) const;

    /// Fingerprint of the underlying Cartan matrix; used to reject mixing
    /// elements of different algebras.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    DynkinType dynkin_;
    Eigen::MatrixXi cartan_;
    Eigen::VectorXi symm_;
    std::vector<Root> roots_;
    std::vector<int> heights_;
    std::vector<int> norm2_;
    Eigen::MatrixXi pairing_; // size() x rank
    std::vector<std::pair<int, int>> parents_;
    std::map<std::vector<int>, int> index_;
    int num_positive_ = 0;
    std::uint64_t fingerprint_ = 0;
};

/// Closure of the simple roots under all simple reflections. Throws
/// InvariantViolation if the input fails basic Cartan-matrix checks or the
/// closure exceeds 16 * rank^2 roots (non-Cartan input guard).
std::vector<Root> enumerate_roots(const Eigen::MatrixXi& cartan);

} // namespace lieforms
