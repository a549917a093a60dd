#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cliffkit/scalar.hpp"
#include "cliffkit/signature.hpp"

namespace cliffkit {

using BladeMask = std::uint32_t;

namespace blade {

inline int grade(BladeMask m) { return std::popcount(m); }

/// Sign picked up reordering the concatenation of two ascending blades into
/// ascending order: counts pairs (i in a, j in b) with i > j.
inline int reorder_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

/// Product of basis blades: resulting mask is a^b, sign combines the
/// reordering transpositions with one metric factor per repeated generator.
/// Returns sign 0 when a null generator is squared.
struct BladeProduct {
    BladeMask mask;
    int sign;
};

inline BladeProduct product(BladeMask a, BladeMask b, const Signature& sig) {
    int sign = reorder_sign(a, b);
    BladeMask common = a & b;
    while (common) {
        int bit = std::countr_zero(common);
        sign *= sig.metric(bit + 1);
        common &= common - 1;
    }
    return {a ^ b, sign};
}

/// (-1)^k: grade involution sign.
inline int involution_sign(BladeMask m) { return (grade(m) & 1) ? -1 : 1; }

/// (-1)^{k(k-1)/2}: reversal of factor order.
inline int reversion_sign(BladeMask m) {
    int k = grade(m);
    return ((k * (k - 1) / 2) & 1) ? -1 : 1;
}

/// (-1)^{k(k+1)/2}: reversal composed with v -> -v on each factor.
inline int conjugation_sign(BladeMask m) {
    int k = grade(m);
    return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

}  // namespace blade

/// Sparse multivector over an arbitrary coefficient field.
///
/// Terms map basis-blade bitmasks (bit i-1 set <=> e_i present) to nonzero
/// coefficients; zero coefficients are pruned on every write so equality is
/// structural. Values are immutable in spirit: every operation returns a new
/// multivector and nothing here touches shared state.
template <CoefficientField T>
class Multivector {
public:
    using Traits = ScalarTraits<T>;
    using TermMap = std::map<BladeMask, T>;

    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector zero(Signature sig) { return Multivector(sig); }

    static Multivector scalar(Signature sig, T value) {
        Multivector r(sig);
        r.set(0, std::move(value));
        return r;
    }

    static Multivector unit(Signature sig) { return scalar(sig, Traits::one()); }

    /// Basis vector e_i, 1-based.
    static Multivector generator(Signature sig, int i) {
        if (i < 1 || i > sig.dimension())
            throw std::out_of_range("Multivector: generator index out of range");
        Multivector r(sig);
        r.set(BladeMask{1} << (i - 1), Traits::one());
        return r;
    }

    static Multivector basis_blade(Signature sig, BladeMask mask, T coeff) {
        if (mask >= sig.blade_count()) throw std::out_of_range("Multivector: blade mask");
        Multivector r(sig);
        r.set(mask, std::move(coeff));
        return r;
    }

    const Signature& sig() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    T coeff(BladeMask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    T scalar_part() const { return coeff(0); }

    /// Grades carrying a nonzero term.
    std::set<int> grades() const {
        std::set<int> g;
        for (const auto& [m, c] : terms_) g.insert(blade::grade(m));
        return g;
    }

    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    bool is_homogeneous(int k) const {
        for (const auto& [m, c] : terms_)
            if (blade::grade(m) != k) return false;
        return true;
    }

    Multivector grade_part(int k) const {
        Multivector r(sig_);
        for (const auto& [m, c] : terms_)
            if (blade::grade(m) == k) r.set(m, c);
        return r;
    }

    friend Multivector operator-(const Multivector& a) {
        Multivector r(a.sig_);
        for (const auto& [m, c] : a.terms_) r.set(m, -c);
        return r;
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        a.require_same_signature(b);
        Multivector r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, c);
        return r;
    }

    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        a.require_same_signature(b);
        Multivector r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, -c);
        return r;
    }

    friend Multivector operator*(const T& s, const Multivector& a) {
        Multivector r(a.sig_);
        for (const auto& [m, c] : a.terms_) r.set(m, s * c);
        return r;
    }
    friend Multivector operator*(const Multivector& a, const T& s) { return s * a; }

    /// Geometric (Clifford) product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.require_same_signature(b);
        Multivector r(a.sig_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                auto bp = blade::product(ma, mb, a.sig_);
                if (bp.sign == 0) continue;
                T term = ca * cb;
                if (bp.sign < 0) term = -term;
                r.add(bp.mask, term);
            }
        }
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    /// Sum of coefficient magnitudes; cheap series/convergence gauge.
    double one_norm() const {
        double s = 0;
        for (const auto& [m, c] : terms_) s += Traits::abs_value(c);
        return s;
    }

    double max_abs_coeff() const {
        double s = 0;
        for (const auto& [m, c] : terms_) s = std::max(s, Traits::abs_value(c));
        return s;
    }

    template <class U, class Fn>
    Multivector<U> map_coeffs(Fn&& fn) const {
        Multivector<U> r(sig_);
        for (const auto& [m, c] : terms_) r.set(m, fn(c));
        return r;
    }

    // internal/raw write access (normalizes by pruning zeros)
    void set(BladeMask mask, T value) {
        if (ScalarTraits<T>::is_zero(value))
            terms_.erase(mask);
        else
            terms_[mask] = std::move(value);
    }

    void add(BladeMask mask, const T& value) {
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            if (!Traits::is_zero(value)) terms_.emplace(mask, value);
            return;
        }
        it->second = it->second + value;
        if (Traits::is_zero(it->second)) terms_.erase(it);
    }

private:
    void require_same_signature(const Multivector& o) const {
        if (sig_ != o.sig_)
            throw std::invalid_argument("Multivector: signature mismatch " + sig_.str() + " vs " +
                                        o.sig_.str());
    }

    Signature sig_;
    TermMap terms_;
};

/// Grade involution alpha: multiplies each grade-k part by (-1)^k.
template <CoefficientField T>
Multivector<T> grade_involution(const Multivector<T>& x) {
    Multivector<T> r(x.sig());
    for (const auto& [m, c] : x.terms())
        r.set(m, blade::involution_sign(m) < 0 ? -c : c);
    return r;
}

/// Reversion: antiautomorphism fixing vectors, (xy)~ = y~x~.
template <CoefficientField T>
Multivector<T> reverse(const Multivector<T>& x) {
    Multivector<T> r(x.sig());
    for (const auto& [m, c] : x.terms())
        r.set(m, blade::reversion_sign(m) < 0 ? -c : c);
    return r;
}

/// Conjugation (dagger): the antihomomorphism with v -> -v on vectors.
/// Antilinear on complex coefficient backends.
template <CoefficientField T>
Multivector<T> conjugate(const Multivector<T>& x) {
    Multivector<T> r(x.sig());
    for (const auto& [m, c] : x.terms()) {
        T v = ScalarTraits<T>::conj(c);
        r.set(m, blade::conjugation_sign(m) < 0 ? -v : v);
    }
    return r;
}

/// N(x) = x x†. A multivector in general; a scalar on the Lipschitz group.
template <CoefficientField T>
Multivector<T> norm(const Multivector<T>& x) {
    return x * conjugate(x);
}

/// Coxeter (pseudoscalar) element e_1 e_2 ... e_n.
template <CoefficientField T>
Multivector<T> coxeter_element(Signature sig) {
    return Multivector<T>::basis_blade(sig, sig.blade_count() - 1, ScalarTraits<T>::one());
}

/// Closed form (-1)^{(p-q)(p-q-1)/2} for the square of the Coxeter element.
inline int coxeter_square_sign(const Signature& sig) {
    long long d = sig.p() - sig.q();
    long long e = d * (d - 1) / 2;
    return (e % 2 == 0) ? 1 : -1;
}

/// Brute-force commutant: basis blades commuting with every generator.
/// For a nondegenerate form this is {1} for even n and {1, omega} for odd n.
template <CoefficientField T>
std::vector<Multivector<T>> center_basis(Signature sig) {
    std::vector<Multivector<T>> out;
    const int n = sig.dimension();
    for (BladeMask m = 0; m < sig.blade_count(); ++m) {
        Multivector<T> b = Multivector<T>::basis_blade(sig, m, ScalarTraits<T>::one());
        bool central = true;
        for (int i = 1; i <= n && central; ++i) {
            Multivector<T> g = Multivector<T>::generator(sig, i);
            central = (g * b == b * g);
        }
        if (central) out.push_back(std::move(b));
    }
    return out;
}

/// Inverse through the norm: defined whenever N(x) = x x† is a nonzero
/// scalar and x† N(x)^{-1} is a genuine two-sided inverse. That covers the
/// Lipschitz group, which is all the callers need.
template <CoefficientField T>
std::optional<Multivector<T>> inverse_by_norm(const Multivector<T>& x) {
    Multivector<T> n = norm(x);
    if (!n.is_scalar() || n.is_zero()) return std::nullopt;
    T s = n.scalar_part();
    Multivector<T> candidate = conjugate(x) * (ScalarTraits<T>::one() / s);
    if (!(candidate * x == Multivector<T>::unit(x.sig()))) {
        if constexpr (ScalarTraits<T>::is_exact) return std::nullopt;
        Multivector<T> resid = candidate * x - Multivector<T>::unit(x.sig());
        if (resid.max_abs_coeff() > 1e-9) return std::nullopt;
    }
    return candidate;
}

/// Termwise comparison with tolerance, for the numeric backends.
template <CoefficientField T>
bool approx_equal(const Multivector<T>& a, const Multivector<T>& b, double tol = 1e-12) {
    if (a.sig() != b.sig()) return false;
    return (a - b).max_abs_coeff() <= tol;
}

/// Coefficient conversions between backends.
inline Multivector<double> to_double(const Multivector<Rational>& x) {
    return x.map_coeffs<double>([](const Rational& c) { return c.to_double(); });
}

inline Multivector<std::complex<double>> to_complex(const Multivector<GaussianRational>& x) {
    return x.map_coeffs<std::complex<double>>([](const GaussianRational& c) {
        return std::complex<double>(c.re().to_double(), c.im().to_double());
    });
}

}  // namespace cliffkit
