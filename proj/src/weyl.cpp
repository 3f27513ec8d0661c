#include "lieforms/weyl.hpp"

#include <numeric>

namespace lieforms {

Root reflect_root(const RootSystem& rs, int i, const Root& beta) {
    Root img = beta;
    img[i] -= rs.pairing_coords(beta, i);
    return img;
}

int reflect(const RootSystem& rs, int i, int beta_idx) {
    const int idx = rs.index_of(reflect_root(rs, i, rs.root(beta_idx)));
    if (idx < 0) throw InvariantViolation("reflect: image is not a root");
    return idx;
}

WeylElement longest_element(const RootSystem& rs) {
    const int n = rs.rank();
    const int total = rs.size();

    // Simple reflections as permutations of the root list.
    std::vector<std::vector<int>> refl(n, std::vector<int>(total));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < total; ++r) refl[i][r] = reflect(rs, i, r);

    WeylElement w;
    w.action.resize(total);
    std::iota(w.action.begin(), w.action.end(), 0);

    for (;;) {
        int pick = -1;
        for (int i = 0; i < n; ++i) {
            if (rs.is_positive(w.action[i])) { // simple root alpha_i sits at index i
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        // w <- w s_pick, i.e. new_action(r) = w(s_pick(r))
        std::vector<int> next(total);
        for (int r = 0; r < total; ++r) next[r] = w.action[refl[pick][r]];
        w.action = std::move(next);
        w.word.push_back(pick);
        if (w.length() > rs.num_positive())
            throw InvariantViolation("longest_element: word exceeded the number of positive roots");
    }
    if (w.length() != rs.num_positive())
        throw InvariantViolation("longest_element: terminated at the wrong length");
    return w;
}

DiagramAutomorphism minus_w0(const RootSystem& rs) {
    const WeylElement w = longest_element(rs);
    Eigen::VectorXi perm(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        const int img = rs.negative_of(w.apply(i)); // -w0(alpha_i)
        if (!rs.is_positive(img) || rs.height_of(img) != 1)
            throw InvariantViolation("minus_w0: -w0(alpha_i) is not a simple root");
        perm[i] = img; // simple roots occupy indices 0..rank-1
    }
    return DiagramAutomorphism::from_perm(std::move(perm), rs.cartan());
}

} // namespace lieforms
