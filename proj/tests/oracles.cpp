#include "oracles.hpp"

#include <set>
#include <vector>

namespace oracles {

using namespace lieforms;

Rational det_cofactor(const RationalMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational det(0);
    int sign = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!m(0, k).is_zero()) {
            RationalMatrix minor(n - 1, n - 1);
            for (Eigen::Index i = 1; i < n; ++i) {
                Eigen::Index cc = 0;
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (j == k) continue;
                    minor(i - 1, cc++) = m(i, j);
                }
            }
            const Rational term = m(0, k) * det_cofactor(minor);
            det += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    return det;
}

bool sylvester_negative_definite(const SymMatrix& m) {
    for (Eigen::Index k = 1; k <= m.dim(); ++k) {
        const Rational d = det_cofactor(m.matrix().topLeftCorner(k, k));
        const bool want_positive = (k % 2 == 0);
        if (want_positive ? !(d > 0) : !(d < 0)) return false;
    }
    return true;
}

bool grid_finds_nonnegative(const SymMatrix& m) {
    const int n = static_cast<int>(m.dim());
    std::vector<int> x(n, -2);
    for (;;) {
        bool nonzero = false;
        for (int v : x) nonzero |= (v != 0);
        if (nonzero) {
            Rational q(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (x[i] != 0 && x[j] != 0) q += Rational(x[i]) * Rational(x[j]) * m(i, j);
            if (!(q < 0)) return true;
        }
        int k = 0;
        while (k < n && x[k] == 2) x[k++] = -2;
        if (k == n) return false;
        ++x[k];
    }
}

int e8_lattice_root_count() {
    int count = 0;
    // integer vectors of norm 2: +-e_i +- e_j, i < j
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) count += 4;
    // half-integer vectors (+-1/2)^8 with an even number of minus signs
    for (int mask = 0; mask < 256; ++mask) {
        int minus = 0;
        for (int b = 0; b < 8; ++b) minus += (mask >> b) & 1;
        if (minus % 2 == 0) ++count; // norm = 8 * 1/4 = 2 for all of them
    }
    return count;
}

long long weyl_order_by_enumeration(const RootSystem& rs) {
    const int total = rs.size();
    std::vector<std::vector<int>> gens(rs.rank(), std::vector<int>(total));
    for (int i = 0; i < rs.rank(); ++i)
        for (int r = 0; r < total; ++r) gens[i][r] = reflect(rs, i, r);

    std::vector<int> id(total);
    for (int r = 0; r < total; ++r) id[r] = r;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (const auto& s : gens) {
                std::vector<int> ws(total);
                for (int r = 0; r < total; ++r) ws[r] = w[s[r]];
                if (seen.insert(ws).second) next.push_back(std::move(ws));
            }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

GaussianRational killing_by_trace(const StructureConstants& sc, const AlgebraElement& a,
                                  const AlgebraElement& b) {
    GaussianRational trace;
    const int rank = sc.rank();
    for (int k = 0; k < sc.dim(); ++k) {
        AlgebraElement basis = k < rank ? AlgebraElement::cartan(sc, k)
                                        : AlgebraElement::root_vector(sc, k - rank);
        const AlgebraElement image = bracket(sc, a, bracket(sc, b, basis));
        trace += k < rank ? image.h[k] : image.x[k - rank];
    }
    return trace;
}

namespace {

// acc += c * [b_i, [b_j, b_k]]
void add_double_bracket(const StructureConstants& sc, int i, int j, int k, long long c,
                        std::vector<long long>& acc) {
    for (const auto& [t, ct] : sc.basis_bracket(j, k))
        for (const auto& [u, cu] : sc.basis_bracket(i, t)) acc[u] += c * ct * cu;
}

// image of basis vector b under f, as (basis index, coefficient) terms
std::vector<std::pair<int, long long>> apply_basis(const StructureConstants& sc,
                                                   const BasisAutomorphism& f, int b) {
    std::vector<std::pair<int, long long>> out;
    const int rank = sc.rank();
    if (b < rank) {
        for (int j = 0; j < rank; ++j)
            if (f.h_map(j, b) != 0) out.emplace_back(j, f.h_map(j, b));
    } else {
        out.emplace_back(rank + f.root_perm[b - rank], f.sign[b - rank]);
    }
    return out;
}

} // namespace

bool jacobi_holds(const StructureConstants& sc, int i, int j, int k) {
    std::vector<long long> acc(sc.dim(), 0);
    add_double_bracket(sc, i, j, k, 1, acc);
    add_double_bracket(sc, j, k, i, 1, acc);
    add_double_bracket(sc, k, i, j, 1, acc);
    for (long long v : acc)
        if (v != 0) return false;
    return true;
}

bool is_bracket_automorphism(const StructureConstants& sc, const BasisAutomorphism& f) {
    const int dim = sc.dim();
    std::vector<long long> lhs(dim), rhs(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::fill(lhs.begin(), lhs.end(), 0);
            std::fill(rhs.begin(), rhs.end(), 0);
            for (const auto& [t, c] : sc.basis_bracket(i, j))
                for (const auto& [u, s] : apply_basis(sc, f, t)) lhs[u] += c * s;
            for (const auto& [u1, s1] : apply_basis(sc, f, i))
                for (const auto& [u2, s2] : apply_basis(sc, f, j))
                    for (const auto& [t, c] : sc.basis_bracket(u1, u2)) rhs[t] += s1 * s2 * c;
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace oracles
