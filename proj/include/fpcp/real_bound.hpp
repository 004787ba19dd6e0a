#pragma once

#include "fpcp/fp.hpp"

namespace fpcp {

/// Rounding direction for bound arithmetic.
enum class Dir : uint8_t { Down, Up };

inline Dir flip(Dir d) { return d == Dir::Down ? Dir::Up : Dir::Down; }

/// An extended-real bound used transiently inside inverse projections.
/// Finite values are dyadic: magnitude = sig * 2^exp with sig kept at <= 64
/// significant bits; every operation rounds in a caller-chosen direction, so
/// composed computations stay outward-sound. Indeterminate forms (inf - inf,
/// 0 * inf, 0/0, inf/inf) saturate to the conservative extreme for the
/// requested direction.
struct RealBound {
    enum class Kind : uint8_t { Finite, NegInf, PosInf };

    Kind kind = Kind::Finite;
    bool neg = false;
    u128 sig = 0;
    int64_t exp = 0;

    static RealBound zero() { return {}; }
    static RealBound pos_inf() {
        RealBound r;
        r.kind = Kind::PosInf;
        return r;
    }
    static RealBound neg_inf() {
        RealBound r;
        r.kind = Kind::NegInf;
        return r;
    }
    static RealBound from_fp(const FpValue& v);  // exact; v must not be NaN
    static RealBound from_int(int64_t n);

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_zero() const { return kind == Kind::Finite && sig == 0; }
    /// -1, 0, +1 by sign (infinities are signed).
    int sgn() const;
};

RealBound rb_neg(const RealBound& a);
RealBound rb_add(const RealBound& a, const RealBound& b, Dir d);
RealBound rb_sub(const RealBound& a, const RealBound& b, Dir d);
RealBound rb_mul(const RealBound& a, const RealBound& b, Dir d);
RealBound rb_div(const RealBound& a, const RealBound& b, Dir d);
/// Square root; negative input saturates per direction (callers clip first).
RealBound rb_sqrt(const RealBound& a, Dir d);
/// Exact division by two.
RealBound rb_half(const RealBound& a);
/// Exact comparison: -1, 0, +1.
int rb_cmp(const RealBound& a, const RealBound& b);

/// Exact midpoint of two finite format values.
RealBound rb_midpoint(const FpValue& a, const FpValue& b);

/// Directed conversion into a format: Down gives the largest value <= bound,
/// Up the smallest value >= bound (saturating at the infinities).
FpValue rb_to_fp(const RealBound& r, FpFormat fmt, Dir d);

}  // namespace fpcp
