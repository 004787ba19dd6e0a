#include "fpcp/fp.hpp"

#include <cmath>

namespace fpcp {

const char* to_string(RoundingMode m) {
    switch (m) {
        case RoundingMode::RNE: return "RNE";
        case RoundingMode::RNA: return "RNA";
        case RoundingMode::RTP: return "RTP";
        case RoundingMode::RTN: return "RTN";
        case RoundingMode::RTZ: return "RTZ";
    }
    return "?";
}

FpValue FpValue::zero(FpFormat fmt, bool negative) {
    return FpValue(fmt, negative ? fmt.sign_mask() : 0);
}

FpValue FpValue::inf(FpFormat fmt, bool negative) {
    uint64_t bits = fmt.exp_field_max() << fmt.mant_bits();
    if (negative) bits |= fmt.sign_mask();
    return FpValue(fmt, bits);
}

FpValue FpValue::nan(FpFormat fmt) {
    // quiet NaN: exponent all ones, top mantissa bit set
    uint64_t bits = (fmt.exp_field_max() << fmt.mant_bits()) |
                    (uint64_t(1) << (fmt.mant_bits() - 1));
    return FpValue(fmt, bits);
}

FpValue FpValue::max_finite(FpFormat fmt, bool negative) {
    uint64_t bits = ((fmt.exp_field_max() - 1) << fmt.mant_bits()) | fmt.mant_mask();
    if (negative) bits |= fmt.sign_mask();
    return FpValue(fmt, bits);
}

FpValue FpValue::min_subnormal(FpFormat fmt, bool negative) {
    uint64_t bits = 1;
    if (negative) bits |= fmt.sign_mask();
    return FpValue(fmt, bits);
}

FpValue FpValue::from_ordinal(FpFormat fmt, int64_t ord) {
    if (ord >= 0) {
        assert(uint64_t(ord) <= (fmt.exp_field_max() << fmt.mant_bits()));
        return FpValue(fmt, uint64_t(ord));
    }
    uint64_t mag = uint64_t(-(ord + 1));
    assert(mag <= (fmt.exp_field_max() << fmt.mant_bits()));
    return FpValue(fmt, mag | fmt.sign_mask());
}

FpValue FpValue::from_int(FpFormat fmt, int64_t n) {
    if (n == 0) return zero(fmt, false);
    bool neg = n < 0;
    u128 mag = neg ? u128(-(n + 1)) + 1 : u128(n);
    FpValue v = fp_from_exact(fmt, neg, 0, mag, false, RoundingMode::RNE);
    // exactness check: the integer must round-trip
    FpValue v2 = fp_from_exact(fmt, neg, 0, mag, false, RoundingMode::RTZ);
    assert(v == v2);
    (void)v2;
    return v;
}

void FpValue::decompose(u128& sig, int64_t& exp) const {
    assert(is_finite());
    uint64_t be = biased_exp();
    uint64_t m = mantissa();
    if (be == 0) {
        sig = m;
        exp = fmt_.emin() - fmt_.mant_bits();
    } else {
        sig = m | (uint64_t(1) << fmt_.mant_bits());
        exp = int64_t(be) - fmt_.bias() - fmt_.mant_bits();
    }
}

double FpValue::to_double() const {
    if (is_nan()) return std::nan("");
    if (is_inf()) return sign() ? -HUGE_VAL : HUGE_VAL;
    u128 sig;
    int64_t exp;
    decompose(sig, exp);
    double d = std::ldexp(double(uint64_t(sig)), int(exp));
    return sign() ? -d : d;
}

int fp_cmp_ord(const FpValue& a, const FpValue& b) {
    assert(a.format() == b.format());
    int64_t oa = a.ordinal(), ob = b.ordinal();
    return oa < ob ? -1 : oa > ob ? 1 : 0;
}

bool fp_has_succ(const FpValue& v) {
    return !v.is_nan() && !(v.is_inf() && !v.sign());
}

bool fp_has_pred(const FpValue& v) {
    return !v.is_nan() && !(v.is_inf() && v.sign());
}

FpValue fp_succ(const FpValue& v) {
    assert(fp_has_succ(v));
    return FpValue::from_ordinal(v.format(), v.ordinal() + 1);
}

FpValue fp_pred(const FpValue& v) {
    assert(fp_has_pred(v));
    return FpValue::from_ordinal(v.format(), v.ordinal() - 1);
}

bool fp_ieee_eq(const FpValue& a, const FpValue& b) {
    if (a.is_nan() || b.is_nan()) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.bits() == b.bits();
}

bool fp_ieee_lt(const FpValue& a, const FpValue& b) {
    if (a.is_nan() || b.is_nan()) return false;
    if (a.is_zero() && b.is_zero()) return false;
    return a.ordinal() < b.ordinal();
}

bool fp_ieee_le(const FpValue& a, const FpValue& b) {
    if (a.is_nan() || b.is_nan()) return false;
    return fp_ieee_eq(a, b) || fp_ieee_lt(a, b);
}

bool fp_obj_eq(const FpValue& a, const FpValue& b) {
    if (a.is_nan() && b.is_nan()) return true;
    if (a.is_nan() || b.is_nan()) return false;
    return a.bits() == b.bits();
}

namespace {

FpValue overflow_result(FpFormat fmt, bool negative, RoundingMode mode) {
    switch (mode) {
        case RoundingMode::RNE:
        case RoundingMode::RNA:
            return FpValue::inf(fmt, negative);
        case RoundingMode::RTZ:
            return FpValue::max_finite(fmt, negative);
        case RoundingMode::RTP:
            return negative ? FpValue::max_finite(fmt, true) : FpValue::inf(fmt, false);
        case RoundingMode::RTN:
            return negative ? FpValue::inf(fmt, true) : FpValue::max_finite(fmt, false);
    }
    return FpValue::inf(fmt, negative);
}

bool round_increments(RoundingMode mode, bool negative, bool lsb, bool round, bool sticky) {
    switch (mode) {
        case RoundingMode::RNE: return round && (sticky || lsb);
        case RoundingMode::RNA: return round;
        case RoundingMode::RTZ: return false;
        case RoundingMode::RTP: return !negative && (round || sticky);
        case RoundingMode::RTN: return negative && (round || sticky);
    }
    return false;
}

}  // namespace

FpValue fp_from_exact(FpFormat fmt, bool negative, int64_t exp, u128 sig, bool sticky,
                      RoundingMode mode) {
    assert(sig != 0 || !sticky);
    if (sig == 0) return FpValue::zero(fmt, negative);

    const int p = fmt.sbits;
    int len = bit_length(sig);
    int64_t msb_exp = exp + len - 1;  // value in [2^msb_exp, 2^(msb_exp+1))
    // exponent of the least kept significand bit
    int64_t quantum = msb_exp - (p - 1);
    int64_t min_quantum = fmt.emin() - (p - 1);
    if (quantum < min_quantum) quantum = min_quantum;

    int64_t shift = quantum - exp;
    u128 m;
    bool round = false;
    if (shift > 0) {
        if (shift > 127) {
            m = 0;
            round = false;
            sticky = true;  // sig != 0
        } else {
            m = sig >> shift;
            round = (sig >> (shift - 1)) & 1;
            if (shift > 1) {
                u128 low_mask = (u128(1) << (shift - 1)) - 1;
                sticky = sticky || (sig & low_mask) != 0;
            }
        }
    } else {
        m = sig << (-shift);
    }

    if (round_increments(mode, negative, (m & 1) != 0, round, sticky)) {
        m += 1;
        if (m == (u128(1) << p)) {
            m >>= 1;
            quantum += 1;
        }
    }

    if (m == 0) return FpValue::zero(fmt, negative);

    if (m >= (u128(1) << (p - 1))) {
        int64_t e = quantum + (p - 1);  // unbiased exponent of the hidden bit
        if (e > fmt.emax()) return overflow_result(fmt, negative, mode);
        uint64_t biased = uint64_t(e + fmt.bias());
        uint64_t bits = (biased << fmt.mant_bits()) | (uint64_t(m) & fmt.mant_mask());
        if (negative) bits |= fmt.sign_mask();
        return FpValue(fmt, bits);
    }
    // subnormal (quantum pinned at min_quantum)
    uint64_t bits = uint64_t(m);
    if (negative) bits |= fmt.sign_mask();
    return FpValue(fmt, bits);
}

namespace {

struct Unpacked {
    bool neg;
    u128 sig;     // 0 iff zero
    int64_t exp;  // value = sig * 2^exp
};

Unpacked unpack(const FpValue& v) {
    Unpacked u;
    u.neg = v.sign();
    v.decompose(u.sig, u.exp);
    return u;
}

// Add/sub of finite magnitudes; returns rounded result.
FpValue add_magnitudes(FpFormat fmt, Unpacked a, Unpacked b, RoundingMode mode) {
    const int p = fmt.sbits;
    // Align to a common quantum, clamping huge gaps into a sticky tail.
    if (a.sig == 0 && b.sig == 0) {
        bool neg = (a.neg == b.neg) ? a.neg : (mode == RoundingMode::RTN);
        return FpValue::zero(fmt, neg);
    }
    if (a.sig == 0) return fp_from_exact(fmt, b.neg, b.exp, b.sig, false, mode);
    if (b.sig == 0) return fp_from_exact(fmt, a.neg, a.exp, a.sig, false, mode);

    // Make a the operand with the larger quantum exponent, then open a guard
    // window below it so b can align (or fall into the sticky tail).
    if (a.exp < b.exp) std::swap(a, b);
    const int64_t window = p + 3;
    a.sig <<= window;
    a.exp -= window;
    const int64_t target = a.exp;

    bool b_sticky = false;
    int64_t bshift = b.exp - target;
    if (bshift >= 0) {
        // bshift <= window and b.sig < 2^p, so this always fits in 128 bits
        assert(bshift + bit_length(b.sig) <= 126);
        b.sig <<= bshift;
    } else {
        int64_t down = -bshift;
        if (down > 127) {
            b_sticky = b.sig != 0;
            b.sig = 0;
        } else {
            u128 mask = (u128(1) << down) - 1;
            b_sticky = (b.sig & mask) != 0;
            b.sig >>= down;
        }
    }

    if (a.neg == b.neg) {
        u128 m = a.sig + b.sig;
        return fp_from_exact(fmt, a.neg, target, m, b_sticky, mode);
    }
    // effective subtraction: |a| vs |b| on the aligned significands
    if (b_sticky) {
        // b was shifted down, so a is normal and dominates: a.sig has at least
        // p-1+window bits while the truncated b.sig has at most p.
        assert(a.sig > b.sig + 1);
        // exact result = a.sig - b.sig - epsilon with epsilon in (0,1)
        u128 m = a.sig - b.sig - 1;
        return fp_from_exact(fmt, a.neg, target, m, true, mode);
    }
    if (a.sig == b.sig) return FpValue::zero(fmt, mode == RoundingMode::RTN);
    if (a.sig > b.sig) {
        return fp_from_exact(fmt, a.neg, target, a.sig - b.sig, false, mode);
    }
    return fp_from_exact(fmt, b.neg, target, b.sig - a.sig, false, mode);
}

}  // namespace

FpValue fp_add(const FpValue& a, const FpValue& b, RoundingMode mode) {
    FpFormat fmt = a.format();
    assert(fmt == b.format());
    if (a.is_nan() || b.is_nan()) return FpValue::nan(fmt);
    if (a.is_inf() && b.is_inf()) {
        if (a.sign() != b.sign()) return FpValue::nan(fmt);
        return a;
    }
    if (a.is_inf()) return a;
    if (b.is_inf()) return b;
    return add_magnitudes(fmt, unpack(a), unpack(b), mode);
}

FpValue fp_sub(const FpValue& a, const FpValue& b, RoundingMode mode) {
    return fp_add(a, fp_neg(b), mode);
}

FpValue fp_mul(const FpValue& a, const FpValue& b, RoundingMode mode) {
    FpFormat fmt = a.format();
    assert(fmt == b.format());
    if (a.is_nan() || b.is_nan()) return FpValue::nan(fmt);
    bool neg = a.sign() != b.sign();
    if (a.is_inf() || b.is_inf()) {
        if (a.is_zero() || b.is_zero()) return FpValue::nan(fmt);
        return FpValue::inf(fmt, neg);
    }
    if (a.is_zero() || b.is_zero()) return FpValue::zero(fmt, neg);
    Unpacked ua = unpack(a), ub = unpack(b);
    return fp_from_exact(fmt, neg, ua.exp + ub.exp, ua.sig * ub.sig, false, mode);
}

FpValue fp_div(const FpValue& a, const FpValue& b, RoundingMode mode) {
    FpFormat fmt = a.format();
    assert(fmt == b.format());
    if (a.is_nan() || b.is_nan()) return FpValue::nan(fmt);
    bool neg = a.sign() != b.sign();
    if (a.is_inf()) {
        if (b.is_inf()) return FpValue::nan(fmt);
        return FpValue::inf(fmt, neg);
    }
    if (b.is_inf()) return FpValue::zero(fmt, neg);
    if (b.is_zero()) {
        if (a.is_zero()) return FpValue::nan(fmt);
        return FpValue::inf(fmt, neg);
    }
    if (a.is_zero()) return FpValue::zero(fmt, neg);

    Unpacked ua = unpack(a), ub = unpack(b);
    // Normalize so both significands have their leading bit at position p-1.
    const int p = fmt.sbits;
    int la = bit_length(ua.sig), lb = bit_length(ub.sig);
    ua.sig <<= (p - la);
    ua.exp -= (p - la);
    ub.sig <<= (p - lb);
    ub.exp -= (p - lb);

    int k = p + 2;
    u128 n = ua.sig << k;
    u128 q = n / ub.sig;
    u128 r = n % ub.sig;
    return fp_from_exact(fmt, neg, ua.exp - ub.exp - k, q, r != 0, mode);
}

FpValue fp_neg(const FpValue& a) {
    if (a.is_nan()) return FpValue::nan(a.format());
    return FpValue(a.format(), a.bits() ^ a.format().sign_mask());
}

FpValue fp_abs(const FpValue& a) {
    if (a.is_nan()) return FpValue::nan(a.format());
    return FpValue(a.format(), a.bits() & ~a.format().sign_mask());
}

FpValue fp_min(const FpValue& a, const FpValue& b) {
    if (a.is_nan()) return b.is_nan() ? FpValue::nan(a.format()) : b;
    if (b.is_nan()) return a;
    return a.ordinal() <= b.ordinal() ? a : b;
}

FpValue fp_max(const FpValue& a, const FpValue& b) {
    if (a.is_nan()) return b.is_nan() ? FpValue::nan(a.format()) : b;
    if (b.is_nan()) return a;
    return a.ordinal() >= b.ordinal() ? a : b;
}

}  // namespace fpcp
