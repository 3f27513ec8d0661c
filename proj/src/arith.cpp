#include "lieforms/arith.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lieforms {

std::string to_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

std::string to_string(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (!z.re.is_zero()) out += to_string(z.re);
    if (!z.im.is_zero()) {
        if (!out.empty() && z.im > 0) out += "+";
        if (z.im == 1)
            out += "i";
        else if (z.im == -1)
            out += "-i";
        else
            out += to_string(z.im) + "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

SymMatrix::SymMatrix(RationalMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
        for (Eigen::Index j = 0; j < i; ++j)
            if (m_(i, j) != m_(j, i)) throw std::invalid_argument("SymMatrix: matrix is not symmetric");
}

bool is_negative_definite(const SymMatrix& m) {
    const Eigen::Index n = m.dim();
    RationalMatrix w = m.matrix();
    for (Eigen::Index k = 0; k < n; ++k) {
        const Rational& pivot = w(k, k);
        if (!(pivot < 0)) return false; // zero pivot: singular leading block, not definite
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (w(i, k).is_zero()) continue;
            const Rational factor = w(i, k) / pivot;
            for (Eigen::Index j = k + 1; j <= i; ++j) {
                if (w(k, j).is_zero()) continue;
                w(i, j) -= factor * w(k, j);
                if (i != j) w(j, i) = w(i, j);
            }
        }
    }
    return true;
}

} // namespace lieforms
