#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace fpcp {

using u128 = unsigned __int128;

/// IEEE-754 rounding modes (SMT-LIB RoundingMode vocabulary).
enum class RoundingMode : uint8_t { RNE, RNA, RTP, RTN, RTZ };

const char* to_string(RoundingMode m);

/// A parametric IEEE-754 binary interchange format.
/// `sbits` counts the full significand including the hidden bit, so
/// binary32 = (8, 24) and binary64 = (11, 53). Total width 1+ebits+(sbits-1)
/// must fit in 64 bits.
struct FpFormat {
    int ebits = 0;
    int sbits = 0;

    constexpr FpFormat() = default;
    constexpr FpFormat(int e, int s) : ebits(e), sbits(s) {}

    static constexpr FpFormat binary32() { return {8, 24}; }
    static constexpr FpFormat binary64() { return {11, 53}; }

    bool valid() const { return ebits >= 2 && sbits >= 2 && ebits + sbits <= 64; }

    int mant_bits() const { return sbits - 1; }
    int total_bits() const { return 1 + ebits + sbits - 1; }
    int64_t bias() const { return (int64_t(1) << (ebits - 1)) - 1; }
    int64_t emax() const { return bias(); }
    int64_t emin() const { return 1 - bias(); }

    uint64_t sign_mask() const { return uint64_t(1) << (total_bits() - 1); }
    uint64_t mant_mask() const { return (uint64_t(1) << mant_bits()) - 1; }
    uint64_t exp_field_max() const { return (uint64_t(1) << ebits) - 1; }

    friend bool operator==(const FpFormat& a, const FpFormat& b) {
        return a.ebits == b.ebits && a.sbits == b.sbits;
    }
    friend bool operator!=(const FpFormat& a, const FpFormat& b) { return !(a == b); }
};

/// A floating-point value: a bit pattern interpreted in a given format.
class FpValue {
public:
    FpValue() = default;
    FpValue(FpFormat fmt, uint64_t bits) : fmt_(fmt), bits_(bits) {
        assert(fmt.valid());
        assert(fmt.total_bits() == 64 || bits < (uint64_t(1) << fmt.total_bits()));
    }

    static FpValue zero(FpFormat fmt, bool negative = false);
    static FpValue inf(FpFormat fmt, bool negative);
    static FpValue nan(FpFormat fmt);  // canonical quiet NaN
    static FpValue max_finite(FpFormat fmt, bool negative);
    static FpValue min_subnormal(FpFormat fmt, bool negative);
    static FpValue from_ordinal(FpFormat fmt, int64_t ord);
    /// Exact small-integer constant; n must be representable (|n| < 2^sbits).
    static FpValue from_int(FpFormat fmt, int64_t n);

    FpFormat format() const { return fmt_; }
    uint64_t bits() const { return bits_; }

    bool sign() const { return (bits_ & fmt_.sign_mask()) != 0; }
    uint64_t biased_exp() const { return (bits_ >> fmt_.mant_bits()) & fmt_.exp_field_max(); }
    uint64_t mantissa() const { return bits_ & fmt_.mant_mask(); }

    bool is_nan() const { return biased_exp() == fmt_.exp_field_max() && mantissa() != 0; }
    bool is_inf() const { return biased_exp() == fmt_.exp_field_max() && mantissa() == 0; }
    bool is_zero() const { return biased_exp() == 0 && mantissa() == 0; }
    bool is_subnormal() const { return biased_exp() == 0 && mantissa() != 0; }
    bool is_finite() const { return biased_exp() != fmt_.exp_field_max(); }

    /// Rank in the total order over non-NaN values. Consecutive values differ
    /// by exactly 1, and ordinal(+0) = ordinal(-0) + 1.
    int64_t ordinal() const {
        assert(!is_nan());
        int64_t mag = int64_t(bits_ & ~fmt_.sign_mask());
        return sign() ? -mag - 1 : mag;
    }

    /// Exact decomposition of a finite value: |v| = sig * 2^exp (sig = 0 iff zero).
    void decompose(u128& sig, int64_t& exp) const;

    double to_double() const;  // nearest double; exact for narrow formats

    friend bool operator==(const FpValue& a, const FpValue& b) {
        return a.fmt_ == b.fmt_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const FpValue& a, const FpValue& b) { return !(a == b); }

private:
    FpFormat fmt_;
    uint64_t bits_ = 0;
};

/// Total-order comparison (ordinal order); both non-NaN, same format.
int fp_cmp_ord(const FpValue& a, const FpValue& b);

FpValue fp_succ(const FpValue& v);  // requires a successor in the extended order
FpValue fp_pred(const FpValue& v);
bool fp_has_succ(const FpValue& v);
bool fp_has_pred(const FpValue& v);

// IEEE comparison semantics: false on NaN, +0 = -0.
bool fp_ieee_eq(const FpValue& a, const FpValue& b);
bool fp_ieee_lt(const FpValue& a, const FpValue& b);
bool fp_ieee_le(const FpValue& a, const FpValue& b);
/// SMT object equality: identical bit patterns, with all NaNs identified.
bool fp_obj_eq(const FpValue& a, const FpValue& b);

// Correctly rounded arithmetic in the operands' format.
FpValue fp_add(const FpValue& a, const FpValue& b, RoundingMode m);
FpValue fp_sub(const FpValue& a, const FpValue& b, RoundingMode m);
FpValue fp_mul(const FpValue& a, const FpValue& b, RoundingMode m);
FpValue fp_div(const FpValue& a, const FpValue& b, RoundingMode m);
FpValue fp_neg(const FpValue& a);
FpValue fp_abs(const FpValue& a);
// min/max drop a NaN operand; zeros are ordered -0 < +0 for determinism.
FpValue fp_min(const FpValue& a, const FpValue& b);
FpValue fp_max(const FpValue& a, const FpValue& b);

/// Round the exact magnitude sig * 2^exp (plus a tiny positive epsilon when
/// sticky is set) into fmt with the given sign and mode.
FpValue fp_from_exact(FpFormat fmt, bool negative, int64_t exp, u128 sig, bool sticky,
                      RoundingMode mode);

inline int bit_length(u128 v) {
    uint64_t hi = uint64_t(v >> 64);
    if (hi != 0) return 128 - __builtin_clzll(hi);
    uint64_t lo = uint64_t(v);
    return lo == 0 ? 0 : 64 - __builtin_clzll(lo);
}

}  // namespace fpcp
