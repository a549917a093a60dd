#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffkit/multivector.hpp"

namespace cliffkit {

enum class BaseRing { R, C, H };

inline const char* ring_name(BaseRing r) {
    switch (r) {
        case BaseRing::R: return "R";
        case BaseRing::C: return "C";
        case BaseRing::H: return "H";
    }
    return "?";
}

/// One row of the mod-8 classification: Cl(p,q) as (a sum of) matrix
/// algebra(s) over R, C or H, together with the sign of the squared
/// Coxeter element.
struct ClassificationRecord {
    BaseRing base_ring = BaseRing::R;
    std::int64_t matrix_size = 1;   // N in K[N]
    int summands = 1;               // 1 or 2
    int omega_sq = 1;               // +1 or -1
    std::int64_t total_real_dim = 1;  // 2^(p+q)

    std::string str() const {
        std::string a = std::string(ring_name(base_ring)) + "[" + std::to_string(matrix_size) + "]";
        if (summands == 2) a += " + " + a;
        return a;
    }

    friend bool operator==(const ClassificationRecord& a, const ClassificationRecord& b) {
        return a.base_ring == b.base_ring && a.matrix_size == b.matrix_size &&
               a.summands == b.summands && a.omega_sq == b.omega_sq &&
               a.total_real_dim == b.total_real_dim;
    }
};

/// Mod-8 table lookup keyed on (p-q) mod 8 and the parity of n = p+q.
inline ClassificationRecord classify(const Signature& sig) {
    if (sig.is_degenerate())
        throw std::invalid_argument("classify: degenerate signatures are not classified");
    const int n = sig.dimension();
    const int m = n / 2;  // n = 2m or 2m+1
    const int key = ((sig.p() - sig.q()) % 8 + 8) % 8;

    ClassificationRecord rec;
    rec.total_real_dim = std::int64_t{1} << n;
    rec.omega_sq = coxeter_square_sign(sig);
    switch (key) {
        case 0: rec = {BaseRing::R, std::int64_t{1} << m, 1, +1, rec.total_real_dim}; break;
        case 1: rec = {BaseRing::R, std::int64_t{1} << m, 2, +1, rec.total_real_dim}; break;
        case 2: rec = {BaseRing::R, std::int64_t{1} << m, 1, -1, rec.total_real_dim}; break;
        case 3: rec = {BaseRing::C, std::int64_t{1} << m, 1, -1, rec.total_real_dim}; break;
        case 4: rec = {BaseRing::H, std::int64_t{1} << (m - 1), 1, +1, rec.total_real_dim}; break;
        case 5: rec = {BaseRing::H, std::int64_t{1} << (m - 1), 2, +1, rec.total_real_dim}; break;
        case 6: rec = {BaseRing::H, std::int64_t{1} << (m - 1), 1, -1, rec.total_real_dim}; break;
        case 7: rec = {BaseRing::C, std::int64_t{1} << m, 1, -1, rec.total_real_dim}; break;
        default: break;
    }
    return rec;
}

/// Real dimension of the matrix algebra(s) in a record; must equal 2^(p+q).
inline std::int64_t record_algebra_dim(const ClassificationRecord& rec) {
    std::int64_t ring_dim = rec.base_ring == BaseRing::R ? 1 : (rec.base_ring == BaseRing::C ? 2 : 4);
    return rec.summands * ring_dim * rec.matrix_size * rec.matrix_size;
}

/// Even-subalgebra witness: the target signature plus explicit generators
/// eta_i = e_n e_i (i = 1..n-1) living in the even part of Cl(p,q), which
/// satisfy the target Clifford relations.
template <CoefficientField T>
struct EvenSubalgebraWitness {
    Signature target;
    std::vector<Multivector<T>> generators;
};

template <CoefficientField T>
EvenSubalgebraWitness<T> even_subalgebra(const Signature& sig) {
    const int n = sig.dimension();
    if (n < 1) throw std::invalid_argument("even_subalgebra: Cl(0,0) has no smaller signature");
    if (sig.is_degenerate())
        throw std::invalid_argument("even_subalgebra: nondegenerate signatures only");
    Signature target = sig.q() > 0 ? Signature(sig.p(), sig.q() - 1)
                                   : Signature(0, sig.p() - 1);
    EvenSubalgebraWitness<T> w{target, {}};
    Multivector<T> last = Multivector<T>::generator(sig, n);
    for (int i = 1; i < n; ++i)
        w.generators.push_back(last * Multivector<T>::generator(sig, i));
    return w;
}

/// Checks that witness generators obey the target anticommutation relations
/// exactly: g_i g_j + g_j g_i = 2 eta_ii delta_ij.
template <CoefficientField T>
bool verify_even_witness(const EvenSubalgebraWitness<T>& w, const Signature& parent) {
    const auto& g = w.generators;
    if (static_cast<int>(g.size()) != w.target.dimension()) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_homogeneous(2)) return false;  // must live in the even part
        for (std::size_t j = i; j < g.size(); ++j) {
            Multivector<T> anti = g[i] * g[j] + g[j] * g[i];
            T expect = ScalarTraits<T>::from_int(
                i == j ? 2 * w.target.metric(static_cast<int>(i) + 1) : 0);
            if (!(anti == Multivector<T>::scalar(parent, expect))) return false;
        }
    }
    return true;
}

/// One periodicity cross-check between two table rows.
struct PeriodicityCheck {
    std::string name;
    Signature lhs_sig{0, 0};
    Signature rhs_sig{0, 0};
    bool skipped = false;  // shifted signature exceeded the cap
    bool ok = false;
};

struct PeriodicityReport {
    Signature base{0, 0};
    std::vector<PeriodicityCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.ok) return false;
        return true;
    }
    bool any_skipped() const {
        for (const auto& c : checks)
            if (c.skipped) return true;
        return false;
    }
};

/// Verifies, at table level, the index shifts that generate the mod-8
/// structure: Cl(p+1,q+1) = Cl(p,q)[2], Cl(p+4,q) = Cl(p,q+4), and
/// Cl(p+8,q) = Cl(p,q)[16].
inline PeriodicityReport verify_periodicity(const Signature& sig) {
    PeriodicityReport rep;
    rep.base = sig;
    const int p = sig.p();
    const int q = sig.q();
    ClassificationRecord base = classify(sig);

    auto add_check = [&](const std::string& name, int lp, int lq, auto&& predicate) {
        PeriodicityCheck c;
        c.name = name;
        if (lp + lq > kMaxGenerators) {
            c.skipped = true;
            rep.checks.push_back(c);
            return;
        }
        c.lhs_sig = Signature(lp, lq);
        c.ok = predicate(classify(c.lhs_sig));
        rep.checks.push_back(c);
    };

    add_check("Cl(p+1,q+1) = Cl(p,q)[2]", p + 1, q + 1, [&](const ClassificationRecord& r) {
        return r.base_ring == base.base_ring && r.summands == base.summands &&
               r.matrix_size == 2 * base.matrix_size;
    });
    rep.checks.back().rhs_sig = sig;

    if (p + 4 + q <= kMaxGenerators) {
        PeriodicityCheck c;
        c.name = "Cl(p+4,q) = Cl(p,q+4)";
        c.lhs_sig = Signature(p + 4, q);
        c.rhs_sig = Signature(p, q + 4);
        c.ok = classify(c.lhs_sig) == classify(c.rhs_sig);
        rep.checks.push_back(c);
    } else {
        rep.checks.push_back({"Cl(p+4,q) = Cl(p,q+4)", sig, sig, true, false});
    }

    add_check("Cl(p+8,q) = Cl(p,q)[16]", p + 8, q, [&](const ClassificationRecord& r) {
        return r.base_ring == base.base_ring && r.summands == base.summands &&
               r.matrix_size == 16 * base.matrix_size;
    });
    rep.checks.back().rhs_sig = sig;

    return rep;
}

}  // namespace cliffkit
