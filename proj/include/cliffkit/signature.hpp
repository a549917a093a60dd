#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffkit {

/// Hard cap on generator count: 2^12 basis blades keeps the brute-force
/// commutant and classification sweeps cheap.
inline constexpr int kMaxGenerators = 12;

/// Quadratic-form signature (p, q, null): generators e_1..e_p square to +1,
/// the next q to -1, and an optional trailing null block to 0 (the exterior
/// algebra is the all-null case). Generator indices are 1-based.
class Signature {
public:
    Signature() = default;

    Signature(int p, int q, int null_count = 0) : p_(p), q_(q), null_(null_count) {
        if (p < 0 || q < 0 || null_count < 0)
            throw std::invalid_argument("Signature: negative generator count");
        if (dimension() > kMaxGenerators)
            throw std::invalid_argument("Signature: p+q+null exceeds cap " +
                                        std::to_string(kMaxGenerators));
    }

    /// Exterior (Grassmann) algebra on g anticommuting nilpotent generators.
    static Signature grassmann(int g) { return Signature(0, 0, g); }

    int p() const { return p_; }
    int q() const { return q_; }
    int null_count() const { return null_; }
    int dimension() const { return p_ + q_ + null_; }
    bool is_degenerate() const { return null_ > 0; }

    std::uint32_t blade_count() const { return std::uint32_t{1} << dimension(); }

    /// Square of generator e_i (1-based): +1, -1 or 0.
    int metric(int i) const {
        if (i < 1 || i > dimension()) throw std::out_of_range("Signature: generator index");
        if (i <= p_) return 1;
        if (i <= p_ + q_) return -1;
        return 0;
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.null_ == b.null_;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    std::string str() const {
        std::string s = "Cl(" + std::to_string(p_) + "," + std::to_string(q_);
        if (null_ > 0) s += ";null=" + std::to_string(null_);
        return s + ")";
    }

private:
    int p_ = 0;
    int q_ = 0;
    int null_ = 0;
};

}  // namespace cliffkit
