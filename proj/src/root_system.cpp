#include "lieforms/root_system.hpp"

#include <algorithm>

namespace lieforms {

namespace {

std::vector<int> to_key(const Root& r) { return {r.data(), r.data() + r.size()}; }

// Height first, then "node-1-first": among equal heights the root with the
// larger entry at the first differing coordinate comes first, which orders
// the simple roots as alpha_1 < alpha_2 < ... .
bool root_less(const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    for (Eigen::Index j = 0; j < a.size(); ++j)
        if (a[j] != b[j]) return a[j] > b[j];
    return false;
}

void validate_cartan(const Eigen::MatrixXi& cartan) {
    const int n = static_cast<int>(cartan.rows());
    if (n == 0 || cartan.cols() != n) throw InvariantViolation("cartan: matrix must be square and nonempty");
    for (int i = 0; i < n; ++i) {
        if (cartan(i, i) != 2) throw InvariantViolation("cartan: diagonal entry is not 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan(i, j) > 0 || cartan(i, j) < -3)
                throw InvariantViolation("cartan: off-diagonal entry outside {0,-1,-2,-3}");
            if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
                throw InvariantViolation("cartan: zero pattern is not symmetric");
        }
    }
}

} // namespace

std::vector<Root> enumerate_roots(const Eigen::MatrixXi& cartan) {
    validate_cartan(cartan);
    const int n = static_cast<int>(cartan.rows());
    const std::size_t guard = 16u * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

    std::map<std::vector<int>, int> seen;
    std::vector<Root> roots;
    std::vector<int> work;
    for (int i = 0; i < n; ++i) {
        Root r = Root::Zero(n);
        r[i] = 1;
        seen.emplace(to_key(r), static_cast<int>(roots.size()));
        roots.push_back(std::move(r));
        work.push_back(i);
    }
    while (!work.empty()) {
        const Root r = roots[work.back()];
        work.pop_back();
        for (int i = 0; i < n; ++i) {
            // s_i(r) = r - <r, alpha_i^v> alpha_i
            int pair = 0;
            for (int j = 0; j < n; ++j) pair += r[j] * cartan(j, i);
            if (pair == 0) continue;
            Root img = r;
            img[i] -= pair;
            auto key = to_key(img);
            if (seen.count(key)) continue;
            seen.emplace(std::move(key), static_cast<int>(roots.size()));
            roots.push_back(std::move(img));
            work.push_back(static_cast<int>(roots.size()) - 1);
            if (roots.size() > guard)
                throw InvariantViolation("enumerate_roots: closure exceeded 16*rank^2 roots; "
                                         "input is not a Cartan matrix of finite type");
        }
    }
    return roots;
}

RootSystem RootSystem::build(const DynkinType& t) {
    RootSystem rs;
    rs.dynkin_ = t;
    rs.cartan_ = cartan_matrix(t);
    rs.symm_ = ::lieforms::symmetrizer(rs.cartan_); // the free function, not the accessor
    const int n = rs.rank();

    std::vector<Root> all = enumerate_roots(rs.cartan_);
    std::vector<Root> positives;
    for (const Root& r : all) {
        const bool pos = (r.array() >= 0).all();
        const bool neg = (r.array() <= 0).all();
        if (pos == neg) throw InvariantViolation("root with mixed-sign coordinates generated");
        if (pos) positives.push_back(r);
    }
    if (2 * positives.size() != all.size())
        throw InvariantViolation("root system is not closed under negation");

    std::sort(positives.begin(), positives.end(), root_less);
    rs.num_positive_ = static_cast<int>(positives.size());
    rs.roots_ = std::move(positives);
    rs.roots_.reserve(2 * rs.num_positive_);
    for (int k = 0; k < rs.num_positive_; ++k) rs.roots_.push_back(-rs.roots_[k]);

    for (int idx = 0; idx < rs.size(); ++idx) rs.index_.emplace(to_key(rs.roots_[idx]), idx);

    rs.heights_.resize(rs.size());
    rs.norm2_.resize(rs.size());
    rs.pairing_.resize(rs.size(), n);
    for (int idx = 0; idx < rs.size(); ++idx) {
        const Root& r = rs.roots_[idx];
        rs.heights_[idx] = height(r);
        for (int i = 0; i < n; ++i) {
            int p = 0;
            for (int j = 0; j < n; ++j) p += r[j] * rs.cartan_(j, i);
            rs.pairing_(idx, i) = p;
        }
        long long norm = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm += static_cast<long long>(r[i]) * r[j] * rs.cartan_(i, j) * rs.symm_[j];
        rs.norm2_[idx] = static_cast<int>(norm);
        if (rs.norm2_[idx] <= 0) throw InvariantViolation("root with non-positive norm");
    }

    rs.parents_.assign(rs.num_positive_, {-1, -1});
    for (int idx = 0; idx < rs.num_positive_; ++idx) {
        if (rs.heights_[idx] == 1) continue;
        for (int i = 0; i < n; ++i) {
            Root rest = rs.roots_[idx];
            rest[i] -= 1;
            const int b = rs.index_of(rest);
            if (b >= 0 && b < rs.num_positive_) {
                rs.parents_[idx] = {i, b};
                break;
            }
        }
        if (rs.parents_[idx].first < 0)
            throw InvariantViolation("positive root with no simple-root decomposition");
    }

    std::uint64_t fp = 1469598103934665603ull;
    auto mix = [&fp](long long v) {
        fp ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        fp *= 1099511628211ull;
    };
    mix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mix(rs.cartan_(i, j));
    rs.fingerprint_ = fp;
    return rs;
}

int RootSystem::index_of(const Root& coords) const {
    const auto it = index_.find(to_key(coords));
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing_coords(const Root& coords, int i) const {
    int p = 0;
    for (int j = 0; j < rank(); ++j) p += coords[j] * cartan_(j, i);
    return p;
}

int RootSystem::pairing_with_coroot(int beta_idx, int alpha_idx) const {
    // <beta, alpha^v> = 2 (beta, alpha) / (alpha, alpha)
    const Root& b = roots_[beta_idx];
    const Root& a = roots_[alpha_idx];
    long long inner = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            inner += static_cast<long long>(b[i]) * a[j] * cartan_(i, j) * symm_[j];
    const long long num = 2 * inner;
    if (num % norm2_[alpha_idx] != 0) throw InvariantViolation("coroot pairing is not integral");
    return static_cast<int>(num / norm2_[alpha_idx]);
}

RootString RootSystem::root_string(int alpha_idx, int beta_idx) const {
    if (beta_idx == alpha_idx || beta_idx == negative_of(alpha_idx))
        throw Error("root_string: beta must differ from +-alpha");
    const Root& a = roots_[alpha_idx];
    RootString s;
    Root probe = roots_[beta_idx] - a;
    while (contains(probe)) {
        ++s.down;
        probe -= a;
    }
    probe = roots_[beta_idx] + a;
    while (contains(probe)) {
        ++s.up;
        probe += a;
    }
    return s;
}

} // namespace lieforms
