#include "lieforms/compact_form.hpp"

#include <thread>

namespace lieforms {

namespace {

std::string root_label(const RootSystem& rs, int idx) {
    std::string s;
    const Root& r = rs.root(idx);
    for (Eigen::Index j = 0; j < r.size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(r[j]);
    }
    return s;
}

// Runs fn(begin, end) over [0, n) in disjoint chunks. Each worker writes to
// its own slots only, so results are independent of scheduling.
template <typename F>
void parallel_chunks(int n, F&& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 64) {
        fn(0, n);
        return;
    }
    const int workers = static_cast<int>(std::min<unsigned>(hw, 8));
    const int chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace

std::string CompactLabel::str(const RootSystem& rs) const {
    switch (kind) {
        case Kind::Y: return "Y[" + root_label(rs, index) + "]";
        case Kind::Z: return "Z[" + root_label(rs, index) + "]";
        case Kind::W: return "W[" + std::to_string(index + 1) + "]";
    }
    return {};
}

CompactBasis compact_basis(const StructureConstants& sc) {
    const RootSystem& rs = sc.rs();
    const int m = rs.num_positive();
    CompactBasis cb;
    cb.elements.reserve(rs.rank() + 2 * m);
    cb.labels.reserve(rs.rank() + 2 * m);
    const GaussianRational i = GaussianRational::i();

    for (int r = 0; r < m; ++r) {
        cb.elements.push_back(AlgebraElement::root_vector(sc, r) -
                              AlgebraElement::root_vector(sc, rs.negative_of(r)));
        cb.labels.push_back({CompactLabel::Kind::Y, r});
    }
    for (int r = 0; r < m; ++r) {
        cb.elements.push_back(i * (AlgebraElement::root_vector(sc, r) +
                                   AlgebraElement::root_vector(sc, rs.negative_of(r))));
        cb.labels.push_back({CompactLabel::Kind::Z, r});
    }
    for (int j = 0; j < rs.rank(); ++j) {
        cb.elements.push_back(i * AlgebraElement::cartan(sc, j));
        cb.labels.push_back({CompactLabel::Kind::W, j});
    }
    return cb;
}

KillingTable build_killing_table(const StructureConstants& sc) {
    const RootSystem& rs = sc.rs();
    const int rank = rs.rank();
    const int dim = sc.dim();

    KillingTable kt;
    kt.h_block.setZero(rank, rank);
    // ad H_i is diagonal on the root vectors: B(H_i, H_j) = sum over roots
    // of the pairing products.
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j <= i; ++j) {
            long long acc = 0;
            for (int r = 0; r < rs.size(); ++r)
                acc += static_cast<long long>(rs.pairing(r, i)) * rs.pairing(r, j);
            kt.h_block(i, j) = acc;
            kt.h_block(j, i) = acc;
        }

    // B(X_a, X_-a) = tr(ad X_a . ad X_-a), basis vector by basis vector.
    kt.x_pair.assign(rs.num_positive(), 0);
    for (int r = 0; r < rs.num_positive(); ++r) {
        const int xa = rank + r;
        const int xna = rank + rs.negative_of(r);
        long long trace = 0;
        for (int b = 0; b < dim; ++b) {
            for (const auto& [t1, c1] : sc.basis_bracket(xna, b))
                for (const auto& [t2, c2] : sc.basis_bracket(xa, t1))
                    if (t2 == b) trace += static_cast<long long>(c1) * c2;
        }
        kt.x_pair[r] = trace;
    }
    return kt;
}

GaussianRational killing_form(const StructureConstants& sc, const KillingTable& kt,
                              const AlgebraElement& a, const AlgebraElement& b) {
    const RootSystem& rs = sc.rs();
    GaussianRational acc;
    for (int i = 0; i < rs.rank(); ++i) {
        if (a.h[i].is_zero()) continue;
        for (int j = 0; j < rs.rank(); ++j) {
            if (b.h[j].is_zero() || kt.h_block(i, j) == 0) continue;
            acc += a.h[i] * b.h[j] * GaussianRational(static_cast<Rational>(kt.h_block(i, j)));
        }
    }
    for (int r = 0; r < rs.size(); ++r) {
        if (a.x[r].is_zero()) continue;
        const int nr = rs.negative_of(r);
        if (b.x[nr].is_zero()) continue;
        const long long v = kt.x_pair[rs.is_positive(r) ? r : nr];
        acc += a.x[r] * b.x[nr] * GaussianRational(static_cast<Rational>(v));
    }
    return acc;
}

SymMatrix killing_gram(const StructureConstants& sc, const CompactBasis& cb) {
    const int dim = cb.dim();
    const KillingTable kt = build_killing_table(sc);
    Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic> raw(dim, dim);

    // Rows are computed independently; validation happens after the join so
    // no exception crosses a thread boundary.
    parallel_chunks(dim, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            for (int j = 0; j <= i; ++j)
                raw(i, j) = killing_form(sc, kt, cb.elements[i], cb.elements[j]);
    });

    RationalMatrix gram(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j) {
            if (!raw(i, j).is_real())
                throw InvariantViolation("killing_gram: entry with nonzero imaginary part");
            gram(i, j) = raw(i, j).re;
            gram(j, i) = raw(i, j).re;
        }
    return SymMatrix(std::move(gram));
}

GaussianVector express_in_compact(const StructureConstants& sc, const AlgebraElement& a) {
    const RootSystem& rs = sc.rs();
    const int m = rs.num_positive();
    GaussianVector out = GaussianVector::Constant(rs.rank() + 2 * m, GaussianRational(0));
    const GaussianRational half(Rational(1, 2));
    const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));
    const GaussianRational minus_i(Rational(0), Rational(-1));

    // a Y_r + b Z_r = (a + ib) X_r + (-a + ib) X_-r, so a and b come from a
    // 2x2 inversion of the paired coordinates; W coordinates divide by i.
    for (int r = 0; r < m; ++r) {
        const GaussianRational& cp = a.x[r];
        const GaussianRational& cm = a.x[rs.negative_of(r)];
        if (cp.is_zero() && cm.is_zero()) continue;
        out[r] = half * (cp - cm);
        out[m + r] = minus_half_i * (cp + cm);
    }
    for (int j = 0; j < rs.rank(); ++j) {
        if (a.h[j].is_zero()) continue;
        out[2 * m + j] = minus_i * a.h[j];
    }
    return out;
}

AlgebraElement antilinear_theta(const StructureConstants& sc, const AlgebraElement& a) {
    AlgebraElement conj_a = a;
    for (Eigen::Index i = 0; i < conj_a.h.size(); ++i) conj_a.h[i] = conj(conj_a.h[i]);
    for (Eigen::Index i = 0; i < conj_a.x.size(); ++i) conj_a.x[i] = conj(conj_a.x[i]);
    return chevalley_involution(sc, conj_a);
}

Certificate certify_compact(const StructureConstants& sc) {
    const RootSystem& rs = sc.rs();
    Certificate cert;
    cert.dynkin = rs.dynkin();

    const CompactBasis cb = compact_basis(sc);
    const int dim = cb.dim();
    if (dim != sc.dim()) throw InvariantViolation("compact basis has the wrong size");

    // (1) closure: real structure constants over the compact basis.
    bool closed = true;
    for (int i = 0; i < dim && closed; ++i)
        for (int j = 0; j < i && closed; ++j) {
            const GaussianVector coords =
                express_in_compact(sc, bracket(sc, cb.elements[i], cb.elements[j]));
            for (Eigen::Index k = 0; k < coords.size(); ++k)
                if (!coords[k].is_real()) {
                    closed = false;
                    break;
                }
        }
    cert.closure = closed;

    // (2) the Killing form is negative definite on the span.
    const SymMatrix gram = killing_gram(sc, cb);
    cert.negative_definite = is_negative_definite(gram);
    const int sample = std::min<int>(8, dim);
    for (int k = 0; k < sample; ++k) cert.gram_diagonal_sample.push_back(gram(k, k));

    // (3) every basis element is a fixed point of theta.
    bool fixed = true;
    for (int i = 0; i < dim; ++i)
        if (!(antilinear_theta(sc, cb.elements[i]) == cb.elements[i])) {
            fixed = false;
            break;
        }
    cert.antilinear_fixed = fixed;
    return cert;
}

} // namespace lieforms
