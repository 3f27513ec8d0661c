#pragma once

#include <vector>

#include "lieforms/root_system.hpp"

namespace lieforms {

/// A Weyl-group element given by a reduced word in the simple reflections
/// together with its action on the full root list. word = (i_1, ..., i_N)
/// represents s_{i_1} ... s_{i_N} (0-based indices), acting as
/// action[r] = index of w(root r).
struct WeylElement {
    std::vector<int> word;
    std::vector<int> action;

    int length() const { return static_cast<int>(word.size()); }
    int apply(int root_idx) const { return action[root_idx]; }
};

/// s_i(beta) = beta - <beta, alpha_i^v> alpha_i, as a root index.
int reflect(const RootSystem& rs, int i, int beta_idx);

/// Same reflection on raw coordinates; the result need not be looked up.
Root reflect_root(const RootSystem& rs, int i, const Root& beta);

/// The longest element: the unique w with w(pos) = neg. Built greedily by
/// appending, at each step, the smallest simple reflection that still
/// lengthens the word; the resulting reduced word is deterministic.
WeylElement longest_element(const RootSystem& rs);

/// The diagram automorphism i -> j with -w0(alpha_i) = alpha_j. Trivial
/// exactly when the longest element acts as -1.
DiagramAutomorphism minus_w0(const RootSystem& rs);

} // namespace lieforms
