#include "lieforms/dynkin.hpp"

#include <cctype>
#include <numeric>

#include "lieforms/arith.hpp"

namespace lieforms {

std::string DynkinType::name() const {
    std::string s(1, static_cast<char>(family));
    s += std::to_string(rank);
    if (twist != 1) s += "^" + std::to_string(twist);
    return s;
}

bool rank_valid(Family family, int rank) {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 3;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

bool twist_valid(Family family, int rank, int twist) {
    if (twist == 1) return true;
    if (twist == 2) {
        switch (family) {
            case Family::A: return rank >= 2;
            case Family::D: return rank >= 3;
            case Family::E: return rank == 6;
            default: return false;
        }
    }
    if (twist == 3) return family == Family::D && rank == 4;
    return false;
}

DynkinType parse_type(std::string_view text) {
    if (text.empty()) throw ParseError(ParseError::Kind::Malformed, "empty type string");

    const char fam_char = text[0];
    if (fam_char < 'A' || fam_char > 'G')
        throw ParseError(ParseError::Kind::Malformed,
                         std::string("unknown family '") + fam_char + "': expected A-G");
    const Family family = static_cast<Family>(fam_char);

    std::size_t pos = 1;
    std::size_t digits = 0;
    long rank = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        rank = rank * 10 + (text[pos] - '0');
        if (rank > 1000) throw ParseError(ParseError::Kind::RankOutOfRange, "rank too large");
        ++pos;
        ++digits;
    }
    if (digits == 0)
        throw ParseError(ParseError::Kind::Malformed, "missing rank in type string '" + std::string(text) + "'");

    int twist = 1;
    if (pos < text.size()) {
        if (text[pos] != '^' || pos + 1 >= text.size())
            throw ParseError(ParseError::Kind::Malformed,
                             "trailing characters in type string '" + std::string(text) + "'");
        ++pos;
        if (pos + 1 != text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(ParseError::Kind::Malformed,
                             "twist must be a single digit in '" + std::string(text) + "'");
        twist = text[pos] - '0';
    }

    if (!rank_valid(family, static_cast<int>(rank))) {
        std::string msg = "rank " + std::to_string(rank) + " is not valid for family " +
                          std::string(1, fam_char);
        if (family == Family::C && rank == 2) msg += " (B2 is the canonical rank-2 form; C starts at rank 3)";
        if (family == Family::D && rank == 2) msg += " (D2 is not simple)";
        throw ParseError(ParseError::Kind::RankOutOfRange, msg);
    }
    if (twist != 1 && !twist_valid(family, static_cast<int>(rank), twist))
        throw ParseError(ParseError::Kind::TwistUnavailable,
                         "twist " + std::to_string(twist) + " is not available for " +
                             std::string(1, fam_char) + std::to_string(rank));

    return DynkinType{family, static_cast<int>(rank), twist};
}

namespace {

void chain(Eigen::MatrixXi& a, int i, int j) {
    a(i, j) = -1;
    a(j, i) = -1;
}

} // namespace

Eigen::MatrixXi cartan_matrix(const DynkinType& t) {
    if (!rank_valid(t.family, t.rank)) throw ParseError(ParseError::Kind::RankOutOfRange, "invalid type");
    const int n = t.rank;
    Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);

    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain(a, i, i + 1);
            break;
        case Family::B:
            // alpha_n short: <alpha_{n-1}, alpha_n^v> = -2
            for (int i = 0; i + 2 < n; ++i) chain(a, i, i + 1);
            a(n - 2, n - 1) = -2;
            a(n - 1, n - 2) = -1;
            break;
        case Family::C:
            // alpha_n long: <alpha_n, alpha_{n-1}^v> = -2
            for (int i = 0; i + 2 < n; ++i) chain(a, i, i + 1);
            a(n - 2, n - 1) = -1;
            a(n - 1, n - 2) = -2;
            break;
        case Family::D:
            for (int i = 0; i + 3 < n; ++i) chain(a, i, i + 1);
            chain(a, n - 3, n - 2);
            chain(a, n - 3, n - 1);
            break;
        case Family::E:
            // 1-3-4-5-6(-7(-8)) with 2 attached to 4
            chain(a, 0, 2);
            chain(a, 2, 3);
            chain(a, 3, 4);
            chain(a, 4, 5);
            chain(a, 1, 3);
            if (n >= 7) chain(a, 5, 6);
            if (n >= 8) chain(a, 6, 7);
            break;
        case Family::F:
            chain(a, 0, 1);
            a(1, 2) = -2; // alpha_2 long, alpha_3 short
            a(2, 1) = -1;
            chain(a, 2, 3);
            break;
        case Family::G:
            a(0, 1) = -1; // alpha_1 short, alpha_2 long
            a(1, 0) = -3;
            break;
    }
    return a;
}

Eigen::VectorXi symmetrizer(const Eigen::MatrixXi& cartan) {
    const int n = static_cast<int>(cartan.rows());
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    // Propagate the ratio d_j / d_i = A(j,i) / A(i,j) along diagram edges.
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan(i, j) == 0 || !d[j].is_zero()) continue;
            d[j] = d[i] * Rational(cartan(j, i)) / Rational(cartan(i, j));
            stack.push_back(j);
        }
    }
    BigInt mult = 1;
    for (const auto& v : d) {
        if (v.is_zero()) throw InvariantViolation("symmetrizer: Cartan matrix is not connected");
        mult = boost::multiprecision::lcm(mult, denominator(v));
    }
    std::vector<BigInt> ints(n);
    BigInt g = 0;
    for (int i = 0; i < n; ++i) {
        ints[i] = numerator(d[i]) * (mult / denominator(d[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    Eigen::VectorXi out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>(ints[i] / g);
    if ((out.array() <= 0).any()) throw InvariantViolation("symmetrizer: non-positive entry");
    return out;
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
    DiagramAutomorphism psi;
    psi.perm = Eigen::VectorXi::LinSpaced(rank, 0, rank - 1);
    psi.order = 1;
    return psi;
}

DiagramAutomorphism DiagramAutomorphism::from_perm(Eigen::VectorXi perm, const Eigen::MatrixXi& cartan) {
    const int n = static_cast<int>(cartan.rows());
    if (perm.size() != n) throw InvariantViolation("diagram automorphism: size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cartan(perm[i], perm[j]) != cartan(i, j))
                throw InvariantViolation("diagram automorphism: Cartan matrix not preserved");

    DiagramAutomorphism psi;
    psi.perm = std::move(perm);
    Eigen::VectorXi power = psi.perm;
    psi.order = 1;
    while ([&] {
        for (int i = 0; i < n; ++i)
            if (power[i] != i) return true;
        return false;
    }()) {
        for (int i = 0; i < n; ++i) power[i] = psi.perm[power[i]];
        if (++psi.order > n + 1) throw InvariantViolation("diagram automorphism: order overflow");
    }
    return psi;
}

DiagramAutomorphism standard_twist(const DynkinType& t, const Eigen::MatrixXi& cartan) {
    const int n = t.rank;
    if (!twist_valid(t.family, t.rank, t.twist))
        throw ParseError(ParseError::Kind::TwistUnavailable,
                         "twist " + std::to_string(t.twist) + " is not available for " + t.name());
    if (t.twist == 1) return DiagramAutomorphism::identity(n);

    Eigen::VectorXi perm = Eigen::VectorXi::LinSpaced(n, 0, n - 1);
    if (t.twist == 2) {
        switch (t.family) {
            case Family::A:
                for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
                break;
            case Family::D:
                std::swap(perm[n - 2], perm[n - 1]);
                break;
            case Family::E: // nodes 1<->6, 3<->5
                perm[0] = 5;
                perm[5] = 0;
                perm[2] = 4;
                perm[4] = 2;
                break;
            default: break;
        }
    } else { // triality on D4: 1 -> 3 -> 4 -> 1, node 2 fixed
        perm[0] = 2;
        perm[2] = 3;
        perm[3] = 0;
    }
    return DiagramAutomorphism::from_perm(std::move(perm), cartan);
}

} // namespace lieforms
