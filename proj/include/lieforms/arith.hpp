#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <utility>

namespace lieforms {

// Exact scalars. Expression templates are switched off so that every
// operation yields a concrete value; Eigen and our own value types rely
// on that.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// "12", "-3/4". Never emits a denominator of 1.
std::string to_string(const Rational& r);

/// Whether r is an integer (denominator 1).
bool is_integer(const Rational& r);

/// Element of Q(i). Coordinates are exact; the usual field operations are
/// available, division excepted for zero divisors.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}               // NOLINT(google-explicit-constructor)
    GaussianRational(Rational v) : re(std::move(v)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Complex conjugation; an involution fixing exactly the real subfield.
inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

/// "0", "3/2", "-i", "1/2-5i".
std::string to_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using GaussianVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

/// Symmetric matrix with exact rational entries. Symmetry is checked at
/// construction, so downstream code may rely on it unconditionally.
class SymMatrix {
public:
    /// Throws std::invalid_argument unless m is square and exactly symmetric.
    explicit SymMatrix(RationalMatrix m);

    /// Builds from the lower triangle: f(i, j) is evaluated for i >= j only.
    template <typename F>
    static SymMatrix from_lower(Eigen::Index dim, F&& f) {
        RationalMatrix m(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j <= i; ++j) {
                m(i, j) = f(i, j);
                m(j, i) = m(i, j);
            }
        return SymMatrix(std::move(m), unchecked_tag{});
    }

    Eigen::Index dim() const { return m_.rows(); }
    const Rational& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
    const RationalMatrix& matrix() const { return m_; }

private:
    struct unchecked_tag {};
    SymMatrix(RationalMatrix m, unchecked_tag) : m_(std::move(m)) {}

    RationalMatrix m_;
};

/// Exact test for x^T m x < 0 on all nonzero x, by symmetric signed-pivot
/// elimination: the matrix is negative definite iff every pivot that the
/// elimination produces is strictly negative (Sylvester's criterion in
/// pivot form). A zero or positive pivot ends the scan with "false".
bool is_negative_definite(const SymMatrix& m);

} // namespace lieforms

namespace Eigen {

template <>
struct NumTraits<lieforms::GaussianRational> : GenericNumTraits<lieforms::GaussianRational> {
    using Real = lieforms::Rational;
    using NonInteger = lieforms::GaussianRational;
    using Literal = lieforms::GaussianRational;
    using Nested = lieforms::GaussianRational;

    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 100,
    };

    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen
