#pragma once

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cliffkit/multivector.hpp"

namespace cliffkit {

/// Raised on malformed multivector text.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class T>
struct CoeffText;

template <>
struct CoeffText<Rational> {
    // digits with optional /digits
    static bool looks_like(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
    static Rational parse(std::string_view s, std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw FormatError("expected number");
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) throw FormatError("expected denominator");
            return Rational::parse(s.substr(start, pos - start));
        }
        return Rational::parse(s.substr(start, pos - start));
    }
    static bool negative(const Rational& v) { return v < Rational(0); }
    static Rational magnitude(const Rational& v) { return negative(v) ? -v : v; }
    static bool is_one(const Rational& v) { return v == Rational(1); }
};

template <>
struct CoeffText<double> {
    static bool looks_like(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }
    static double parse(std::string_view s, std::size_t& pos) {
        std::string buf(s.substr(pos));
        char* end = nullptr;
        double v = std::strtod(buf.c_str(), &end);
        if (end == buf.c_str()) throw FormatError("expected number");
        pos += static_cast<std::size_t>(end - buf.c_str());
        return v;
    }
    static bool negative(double v) { return v < 0; }
    static double magnitude(double v) { return negative(v) ? -v : v; }
    static bool is_one(double v) { return v == 1.0; }
};

inline void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

/// e<idx>(^e<idx>)* with strictly ascending 1-based indices.
inline BladeMask parse_blade(std::string_view s, std::size_t& pos, const Signature& sig) {
    BladeMask mask = 0;
    int last = 0;
    for (;;) {
        if (pos >= s.size() || s[pos] != 'e') throw FormatError("expected generator 'e<k>'");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw FormatError("expected generator index");
        int idx = std::atoi(std::string(s.substr(start, pos - start)).c_str());
        if (idx < 1 || idx > sig.dimension())
            throw FormatError("generator index out of range for " + sig.str());
        if (idx <= last) throw FormatError("generator indices must be strictly ascending");
        last = idx;
        mask |= BladeMask{1} << (idx - 1);
        std::size_t save = pos;
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws(s, pos);
            continue;
        }
        pos = save;
        return mask;
    }
}

}  // namespace detail

/// Parses the textual form `c0 + c1*e1 + c12*e1^e2 + ...`.
/// Round-trips exactly against print_multivector on the rational backend.
template <class T>
Multivector<T> parse_multivector(std::string_view text, Signature sig) {
    using CT = detail::CoeffText<T>;
    Multivector<T> out(sig);
    std::size_t pos = 0;
    detail::skip_ws(text, pos);
    if (pos == text.size()) throw FormatError("empty multivector text");
    bool first = true;
    while (pos < text.size()) {
        bool neg = false;
        detail::skip_ws(text, pos);
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
            detail::skip_ws(text, pos);
        } else if (!first) {
            throw FormatError("expected '+' or '-' between terms");
        }
        if (pos >= text.size()) throw FormatError("dangling sign");

        T coeff = ScalarTraits<T>::one();
        bool have_coeff = false;
        if (CT::looks_like(text[pos])) {
            coeff = CT::parse(text, pos);
            have_coeff = true;
        }
        BladeMask mask = 0;
        detail::skip_ws(text, pos);
        if (pos < text.size() && text[pos] == '*') {
            if (!have_coeff) throw FormatError("'*' without coefficient");
            ++pos;
            detail::skip_ws(text, pos);
            mask = detail::parse_blade(text, pos, sig);
        } else if (pos < text.size() && text[pos] == 'e') {
            if (have_coeff) throw FormatError("missing '*' between coefficient and blade");
            mask = detail::parse_blade(text, pos, sig);
        } else if (!have_coeff) {
            throw FormatError("expected term");
        }
        out.add(mask, neg ? -coeff : coeff);
        first = false;
        detail::skip_ws(text, pos);
    }
    return out;
}

inline std::string blade_text(BladeMask mask, const char* symbol = "e") {
    if (mask == 0) return "1";
    std::string s;
    for (int i = 0; mask; ++i, mask >>= 1) {
        if (!(mask & 1)) continue;
        if (!s.empty()) s += "^";
        s += symbol + std::to_string(i + 1);
    }
    return s;
}

template <class T>
std::string print_multivector(const Multivector<T>& x, const char* symbol = "e") {
    using CT = detail::CoeffText<T>;
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [mask, c] : x.terms()) {
        bool neg = CT::negative(c);
        T mag = CT::magnitude(c);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (mask == 0) {
            s += ScalarTraits<T>::str(mag);
        } else if (CT::is_one(mag)) {
            s += blade_text(mask, symbol);
        } else {
            s += ScalarTraits<T>::str(mag) + "*" + blade_text(mask, symbol);
        }
    }
    return s;
}

/// Printer for exact complex (Gaussian-rational) coefficients, used by the
/// symbolic audits; not meant to be parsed back.
inline std::string print_multivector(const Multivector<GaussianRational>& x,
                                     const char* symbol = "t") {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [mask, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (mask != 0) s += "*" + blade_text(mask, symbol);
    }
    return s;
}

}  // namespace cliffkit
