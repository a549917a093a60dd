#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdio>
#include <string>

#include "cliffkit/rational.hpp"

namespace cliffkit {

/// Coefficient traits: the handful of hooks Multivector needs beyond
/// ordinary field arithmetic. Exact backends (Rational, GaussianRational)
/// set is_exact, so structural theorems can be tested with no tolerance.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long v) { return Rational(v); }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational conj(const Rational& v) { return v; }
    static double abs_value(const Rational& v) { return std::fabs(v.to_double()); }
    static std::string str(const Rational& v) { return v.str(); }
};

template <>
struct ScalarTraits<GaussianRational> {
    static constexpr bool is_exact = true;
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_int(long long v) { return GaussianRational(v); }
    static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
    static GaussianRational conj(const GaussianRational& v) { return v.conj(); }
    static double abs_value(const GaussianRational& v) {
        return std::hypot(v.re().to_double(), v.im().to_double());
    }
    static std::string str(const GaussianRational& v) { return v.str(); }
};

namespace detail {
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace detail

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long long v) { return static_cast<double>(v); }
    static bool is_zero(double v) { return v == 0.0; }
    static double conj(double v) { return v; }
    static double abs_value(double v) { return std::fabs(v); }
    static std::string str(double v) { return detail::format_double(v); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr bool is_exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_int(long long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const std::complex<double>& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
    static double abs_value(const std::complex<double>& v) { return std::abs(v); }
    static std::string str(const std::complex<double>& v) {
        return "(" + detail::format_double(v.real()) + "," + detail::format_double(v.imag()) + ")";
    }
};

template <class T>
concept CoefficientField = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a* b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { ScalarTraits<T>::zero() } -> std::convertible_to<T>;
    { ScalarTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

}  // namespace cliffkit
