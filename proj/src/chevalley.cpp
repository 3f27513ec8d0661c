#include "lieforms/chevalley.hpp"

#include <algorithm>
#include <numeric>

namespace lieforms {

namespace {

// Fills one entry together with the three companions forced by
// antisymmetry and N(-a,-b) = -N(a,b). Conflicting rewrites are the
// "derived values disagree" failure mode and are fatal.
struct TableBuilder {
    const RootSystem& rs;
    Eigen::MatrixXi& n;
    const Eigen::MatrixXi& sum;

    void set(int a, int b, int v) {
        if (v == 0) throw InvariantViolation("structure constants: derived value is zero");
        put(a, b, v);
        put(b, a, -v);
        put(rs.negative_of(a), rs.negative_of(b), -v);
        put(rs.negative_of(b), rs.negative_of(a), v);
    }

    void put(int a, int b, int v) {
        if (n(a, b) != 0 && n(a, b) != v)
            throw InvariantViolation("structure constants: derived values conflict");
        n(a, b) = v;
    }

    // N(a, b) for a summable pair, deriving mixed and negative pairs from
    // the positive table on demand.
    int get(int a, int b) {
        if (n(a, b) != 0) return n(a, b);
        const bool pa = rs.is_positive(a);
        const bool pb = rs.is_positive(b);
        int v = 0;
        if (pa && pb) {
            throw InvariantViolation("structure constants: positive pair requested before derivation");
        } else if (!pa && !pb) {
            v = -get(rs.negative_of(a), rs.negative_of(b));
        } else if (!pa) {
            v = -get(b, a);
        } else {
            // a positive, b = -m with m positive, a - m a root.
            const int m = rs.negative_of(b);
            const Root delta = rs.root(a) - rs.root(m);
            const int di = rs.index_of(delta);
            if (di < 0) throw InvariantViolation("structure constants: difference is not a root");
            if (rs.is_positive(di)) {
                // invariance of the Killing form: N(a,-m) (a,a) = -N(m,d) (d,d), m + d = a
                v = scaled(-rs.norm2(di), rs.norm2(a), get(m, di));
            } else {
                const int ei = rs.negative_of(di); // e = m - a, a + e = m
                v = scaled(-rs.norm2(ei), rs.norm2(m), get(a, ei));
            }
        }
        set(a, b, v);
        return v;
    }

    static int scaled(long long num, long long den, long long value) {
        const long long t = num * value;
        if (t % den != 0) throw InvariantViolation("structure constants: non-integral derived value");
        return static_cast<int>(t / den);
    }
};

} // namespace

StructureConstants StructureConstants::build(const RootSystem& rs) {
    StructureConstants sc;
    sc.rs_ = rs;
    const int m = rs.num_positive();
    const int total = rs.size();
    const int rank = rs.rank();

    sc.sum_.setConstant(total, total, -1);
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b) {
            if (a == b) continue;
            sc.sum_(a, b) = rs.index_of(rs.root(a) + rs.root(b));
        }

    sc.n_.setZero(total, total);
    TableBuilder tb{rs, sc.n_, sc.sum_};

    // Positive roots are index-ordered by height, so each derivation only
    // consumes constants whose root sums sit strictly lower.
    for (int g = rank; g < m; ++g) {
        const auto [eps, eta] = rs.parent(g); // extraspecial pair: eps simple, minimal
        tb.set(eps, eta, rs.root_string(eps, eta).down + 1);

        for (int c = 0; c < m; ++c) {
            if (c == eps) continue;
            const int d_idx = rs.index_of(rs.root(g) - rs.root(c));
            if (d_idx < 0 || d_idx >= m || c >= d_idx) continue;

            // Jacobi on (X_{-c}, X_eps, X_eta), all three brackets landing in
            // the d-root space:
            //   N(eps,eta) N(g,-c) = -N(-c,eps) N(eps-c,eta) - N(eta,-c) N(eta-c,eps)
            // then N(c,d) = -(g,g)/(d,d) N(g,-c) / ... combined below.
            long long t = 0;
            const int emi = rs.index_of(rs.root(eps) - rs.root(c));
            if (emi >= 0) t += static_cast<long long>(tb.get(rs.negative_of(c), eps)) * tb.get(emi, eta);
            const int hmi = rs.index_of(rs.root(eta) - rs.root(c));
            if (hmi >= 0) t += static_cast<long long>(tb.get(eta, rs.negative_of(c))) * tb.get(hmi, eps);

            const long long den = static_cast<long long>(rs.norm2(d_idx)) * sc.n_(eps, eta);
            const long long num = static_cast<long long>(rs.norm2(g)) * t;
            if (den == 0 || num % den != 0)
                throw InvariantViolation("structure constants: non-integral special-pair value");
            tb.set(c, d_idx, static_cast<int>(num / den));
        }
    }

    // Complete the mixed and negative sectors.
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b)
            if (sc.sum_(a, b) >= 0 && sc.n_(a, b) == 0) tb.get(a, b);

    // Consistency sweep: antisymmetry, the sign rule, |N| = down + 1.
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b) {
            if (sc.sum_(a, b) < 0) {
                if (sc.n_(a, b) != 0) throw InvariantViolation("structure constants: entry on non-summable pair");
                continue;
            }
            const int v = sc.n_(a, b);
            if (v == 0 || v != -sc.n_(b, a) ||
                v != -sc.n_(rs.negative_of(a), rs.negative_of(b)) ||
                std::abs(v) != rs.root_string(a, b).down + 1)
                throw InvariantViolation("structure constants: table fails a Chevalley identity");
        }

    // H_alpha over the simple coroots: coefficients c_j d_j / d_alpha.
    sc.coroot_.resize(total);
    for (int r = 0; r < total; ++r) {
        const Root& root = rs.root(r);
        for (int j = 0; j < rank; ++j) {
            if (root[j] == 0) continue;
            const long long num = 2ll * root[j] * rs.symmetrizer()[j];
            if (num % rs.norm2(r) != 0)
                throw InvariantViolation("structure constants: non-integral coroot coefficient");
            sc.coroot_[r].emplace_back(j, static_cast<int>(num / rs.norm2(r)));
        }
    }
    return sc;
}

std::vector<BasisTerm> StructureConstants::basis_bracket(int bi, int bj) const {
    const int rank = rs_.rank();
    std::vector<BasisTerm> out;
    if (bi < rank && bj < rank) return out; // Cartan subalgebra is abelian
    if (bi < rank) {
        const int r = bj - rank;
        const int c = rs_.pairing(r, bi);
        if (c != 0) out.emplace_back(bj, c);
        return out;
    }
    if (bj < rank) {
        const int r = bi - rank;
        const int c = rs_.pairing(r, bj);
        if (c != 0) out.emplace_back(bi, -c);
        return out;
    }
    const int r = bi - rank;
    const int s = bj - rank;
    if (s == rs_.negative_of(r)) return coroot_[r];
    const int t = sum_(r, s);
    if (t >= 0) out.emplace_back(rank + t, n_(r, s));
    return out;
}

AlgebraElement AlgebraElement::zero(const StructureConstants& sc) {
    AlgebraElement a;
    a.h = GaussianVector::Constant(sc.rank(), GaussianRational(0));
    a.x = GaussianVector::Constant(sc.rs().size(), GaussianRational(0));
    a.fingerprint = sc.fingerprint();
    return a;
}

AlgebraElement AlgebraElement::cartan(const StructureConstants& sc, int i) {
    AlgebraElement a = zero(sc);
    a.h[i] = GaussianRational(1);
    return a;
}

AlgebraElement AlgebraElement::root_vector(const StructureConstants& sc, int root_idx) {
    AlgebraElement a = zero(sc);
    a.x[root_idx] = GaussianRational(1);
    return a;
}

bool AlgebraElement::is_zero() const {
    for (Eigen::Index i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) return false;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) return false;
    return true;
}

namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.fingerprint != b.fingerprint || a.h.size() != b.h.size() || a.x.size() != b.x.size())
        throw Error("algebra elements belong to different root systems");
}

void require_same(const StructureConstants& sc, const AlgebraElement& a) {
    if (sc.fingerprint() != a.fingerprint || a.h.size() != sc.rank() ||
        a.x.size() != sc.rs().size())
        throw Error("algebra element does not belong to this root system");
}

} // namespace

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    require_same(a, b);
    for (Eigen::Index i = 0; i < a.h.size(); ++i) a.h[i] += b.h[i];
    for (Eigen::Index i = 0; i < a.x.size(); ++i) a.x[i] += b.x[i];
    return a;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    require_same(a, b);
    for (Eigen::Index i = 0; i < a.h.size(); ++i) a.h[i] -= b.h[i];
    for (Eigen::Index i = 0; i < a.x.size(); ++i) a.x[i] -= b.x[i];
    return a;
}

AlgebraElement operator*(const GaussianRational& c, AlgebraElement a) {
    for (Eigen::Index i = 0; i < a.h.size(); ++i) a.h[i] *= c;
    for (Eigen::Index i = 0; i < a.x.size(); ++i) a.x[i] *= c;
    return a;
}

AlgebraElement AlgebraElement::operator-() const { return GaussianRational(-1) * (*this); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.fingerprint != b.fingerprint || a.h.size() != b.h.size() || a.x.size() != b.x.size())
        return false;
    for (Eigen::Index i = 0; i < a.h.size(); ++i)
        if (a.h[i] != b.h[i]) return false;
    for (Eigen::Index i = 0; i < a.x.size(); ++i)
        if (a.x[i] != b.x[i]) return false;
    return true;
}

AlgebraElement bracket(const StructureConstants& sc, const AlgebraElement& a, const AlgebraElement& b) {
    require_same(sc, a);
    require_same(sc, b);
    const int rank = sc.rank();

    std::vector<std::pair<int, const GaussianRational*>> ta, tb;
    auto collect = [rank](const AlgebraElement& e, std::vector<std::pair<int, const GaussianRational*>>& out) {
        for (Eigen::Index i = 0; i < e.h.size(); ++i)
            if (!e.h[i].is_zero()) out.emplace_back(static_cast<int>(i), &e.h[i]);
        for (Eigen::Index i = 0; i < e.x.size(); ++i)
            if (!e.x[i].is_zero()) out.emplace_back(rank + static_cast<int>(i), &e.x[i]);
    };
    collect(a, ta);
    collect(b, tb);

    AlgebraElement res = AlgebraElement::zero(sc);
    for (const auto& [ia, ca] : ta)
        for (const auto& [ib, cb] : tb) {
            const auto terms = sc.basis_bracket(ia, ib);
            if (terms.empty()) continue;
            const GaussianRational prod = *ca * *cb;
            for (const auto& [t, k] : terms) {
                GaussianRational add = prod * GaussianRational(k);
                if (t < rank)
                    res.h[t] += add;
                else
                    res.x[t - rank] += add;
            }
        }
    return res;
}

AlgebraElement BasisAutomorphism::apply(const AlgebraElement& a) const {
    if (a.fingerprint != fingerprint) throw Error("automorphism applied to a foreign element");
    AlgebraElement res = a;
    for (Eigen::Index i = 0; i < res.h.size(); ++i) res.h[i] = GaussianRational(0);
    for (Eigen::Index i = 0; i < res.x.size(); ++i) res.x[i] = GaussianRational(0);
    for (Eigen::Index r = 0; r < a.x.size(); ++r) {
        if (a.x[r].is_zero()) continue;
        res.x[root_perm[r]] = GaussianRational(sign[r]) * a.x[r];
    }
    for (Eigen::Index i = 0; i < a.h.size(); ++i) {
        if (a.h[i].is_zero()) continue;
        for (Eigen::Index j = 0; j < a.h.size(); ++j)
            if (h_map(j, i) != 0) res.h[j] += GaussianRational(h_map(j, i)) * a.h[i];
    }
    return res;
}

BasisAutomorphism BasisAutomorphism::identity(const StructureConstants& sc) {
    BasisAutomorphism f;
    f.root_perm.resize(sc.rs().size());
    std::iota(f.root_perm.begin(), f.root_perm.end(), 0);
    f.sign.assign(sc.rs().size(), 1);
    f.h_map = Eigen::MatrixXi::Identity(sc.rank(), sc.rank());
    f.fingerprint = sc.fingerprint();
    return f;
}

bool BasisAutomorphism::is_identity() const {
    for (std::size_t r = 0; r < root_perm.size(); ++r)
        if (root_perm[r] != static_cast<int>(r) || sign[r] != 1) return false;
    return h_map == Eigen::MatrixXi::Identity(h_map.rows(), h_map.cols());
}

BasisAutomorphism BasisAutomorphism::compose(const BasisAutomorphism& g) const {
    if (fingerprint != g.fingerprint) throw Error("composing automorphisms of different algebras");
    BasisAutomorphism f;
    f.fingerprint = fingerprint;
    f.root_perm.resize(root_perm.size());
    f.sign.resize(sign.size());
    for (std::size_t r = 0; r < root_perm.size(); ++r) {
        f.root_perm[r] = root_perm[g.root_perm[r]];
        f.sign[r] = g.sign[r] * sign[g.root_perm[r]];
    }
    f.h_map = h_map * g.h_map;
    return f;
}

int BasisAutomorphism::order() const {
    BasisAutomorphism acc = *this;
    int k = 1;
    while (!acc.is_identity()) {
        acc = acc.compose(*this);
        if (++k > 12) throw InvariantViolation("automorphism order exceeds expected bound");
    }
    return k;
}

BasisAutomorphism chevalley_involution(const StructureConstants& sc) {
    BasisAutomorphism f = BasisAutomorphism::identity(sc);
    for (int r = 0; r < sc.rs().size(); ++r) {
        f.root_perm[r] = sc.rs().negative_of(r);
        f.sign[r] = -1;
    }
    f.h_map = -Eigen::MatrixXi::Identity(sc.rank(), sc.rank());
    return f;
}

AlgebraElement chevalley_involution(const StructureConstants& sc, const AlgebraElement& a) {
    return chevalley_involution(sc).apply(a);
}

BasisAutomorphism diagram_action(const StructureConstants& sc, const DiagramAutomorphism& psi) {
    const RootSystem& rs = sc.rs();
    const int rank = rs.rank();
    const int m = rs.num_positive();
    if (psi.perm.size() != rank) throw Error("diagram action: rank mismatch");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (rs.cartan()(psi.perm[i], psi.perm[j]) != rs.cartan()(i, j))
                throw Error("diagram action: automorphism does not preserve the Cartan matrix");

    BasisAutomorphism f;
    f.fingerprint = sc.fingerprint();
    f.root_perm.resize(rs.size());
    f.sign.assign(rs.size(), 0);
    for (int r = 0; r < rs.size(); ++r) {
        const Root& c = rs.root(r);
        Root img(rank);
        for (int j = 0; j < rank; ++j) img[psi.perm[j]] = c[j];
        f.root_perm[r] = rs.index_of(img);
        if (f.root_perm[r] < 0) throw InvariantViolation("diagram action: image is not a root");
    }
    for (int i = 0; i < rank; ++i) {
        f.sign[i] = 1;
        f.sign[rs.negative_of(i)] = 1;
    }
    // Signs propagate along each positive root's stored decomposition
    // g = alpha_i + b: psi(X_g) = [psi X_{alpha_i}, psi X_b] / N(alpha_i, b).
    for (int g = rank; g < m; ++g) {
        const auto [i, b] = rs.parent(g);
        const int num = sc.n(f.root_perm[i], f.root_perm[b]);
        const int den = sc.n(i, b);
        if (den == 0 || num % den != 0 || std::abs(num) != std::abs(den))
            throw InvariantViolation("diagram action: sign ratio is not a unit");
        f.sign[g] = f.sign[i] * f.sign[b] * (num / den);

        const int ni = rs.negative_of(i);
        const int nb = rs.negative_of(b);
        const int nnum = sc.n(f.root_perm[ni], f.root_perm[nb]);
        const int nden = sc.n(ni, nb);
        f.sign[rs.negative_of(g)] = f.sign[ni] * f.sign[nb] * (nnum / nden);
    }
    f.h_map = Eigen::MatrixXi::Zero(rank, rank);
    for (int i = 0; i < rank; ++i) f.h_map(psi.perm[i], i) = 1;
    return f;
}

AlgebraElement diagram_action(const StructureConstants& sc, const DiagramAutomorphism& psi,
                              const AlgebraElement& a) {
    return diagram_action(sc, psi).apply(a);
}

BasisAutomorphism weyl_involution(const StructureConstants& sc, const DiagramAutomorphism& psi) {
    const RootSystem& rs = sc.rs();
    const WeylElement w = longest_element(rs);

    // Defined only when w0 . psi = -1 on the roots (checked on the simple
    // roots, which suffices by linearity).
    for (int i = 0; i < rs.rank(); ++i)
        if (w.apply(psi.perm[i]) != rs.negative_of(i))
            throw PredictedAbsenceError(
                "no Cartan-type involution for " + rs.dynkin().name() +
                ": the longest Weyl element composed with this twist does not act as -1 "
                "on the root system (see `classify`)");

    const BasisAutomorphism phi = chevalley_involution(sc);
    const BasisAutomorphism psistar = diagram_action(sc, psi);
    BasisAutomorphism psinv = BasisAutomorphism::identity(sc);
    for (int k = 1; k < psistar.order(); ++k) psinv = psinv.compose(psistar);

    BasisAutomorphism wstar = phi.compose(psinv);

    for (int i = 0; i < rs.rank(); ++i)
        if (wstar.root_perm[i] != w.apply(i) || wstar.sign[i] != -1)
            throw InvariantViolation("weyl involution: wrong action on a simple root vector");
    if (!wstar.compose(wstar).is_identity())
        throw InvariantViolation("weyl involution: order is not 2");
    if (!(wstar.compose(psistar) == psistar.compose(wstar)))
        throw InvariantViolation("weyl involution: does not commute with the diagram action");
    return wstar;
}

} // namespace lieforms
