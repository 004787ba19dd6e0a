#include "oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

namespace oracle {

using namespace fpcp;

std::vector<FpValue> all_values(FpFormat fmt) {
    std::vector<FpValue> out;
    int64_t lo = FpValue::inf(fmt, true).ordinal();
    int64_t hi = FpValue::inf(fmt, false).ordinal();
    out.reserve(size_t(hi - lo + 1));
    for (int64_t o = lo; o <= hi; ++o) out.push_back(FpValue::from_ordinal(fmt, o));
    return out;
}

std::vector<FpValue> all_values_with_nan(FpFormat fmt) {
    auto out = all_values(fmt);
    out.push_back(FpValue::nan(fmt));
    return out;
}

long double exact(const FpValue& v) {
    assert(!v.is_nan());
    if (v.is_inf()) return v.sign() ? -HUGE_VALL : HUGE_VALL;
    // Recompute from the raw fields rather than FpValue::decompose, so the
    // oracle does not depend on it.
    int mant_bits = v.format().sbits - 1;
    long double m;
    int64_t e;
    if (v.biased_exp() == 0) {
        m = (long double)v.mantissa();
        e = v.format().emin() - mant_bits;
    } else {
        m = (long double)(v.mantissa() | (uint64_t(1) << mant_bits));
        e = int64_t(v.biased_exp()) - v.format().bias() - mant_bits;
    }
    long double r = ldexpl(m, (int)e);
    return v.sign() ? -r : r;
}

namespace {

// Positive finite magnitudes in increasing order, with 0 first.
struct MagTable {
    std::vector<FpValue> vals;
    std::vector<long double> mags;
    long double maxf = 0;
    long double half_ulp_top = 0;  // half the spacing below max finite
};

const MagTable& mag_table(FpFormat fmt) {
    static std::map<std::pair<int, int>, MagTable> cache;
    auto key = std::make_pair(fmt.ebits, fmt.sbits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MagTable t;
    t.vals.push_back(FpValue::zero(fmt, false));
    t.mags.push_back(0.0L);
    int64_t hi = FpValue::inf(fmt, false).ordinal();
    for (int64_t o = 1; o < hi; ++o) {
        FpValue v = FpValue::from_ordinal(fmt, o);
        t.vals.push_back(v);
        t.mags.push_back(exact(v));
    }
    t.maxf = t.mags.back();
    t.half_ulp_top = (t.mags.back() - t.mags[t.mags.size() - 2]) / 2.0L;
    return cache.emplace(key, std::move(t)).first->second;
}

bool mantissa_even(const FpValue& v) { return (v.bits() & 1) == 0; }

FpValue with_sign(FpFormat fmt, const FpValue& mag, bool neg) {
    return FpValue(fmt, mag.bits() | (neg ? fmt.sign_mask() : 0));
}

}  // namespace

FpValue ref_round(FpFormat fmt, long double r, bool negative_zero_sign, RoundingMode mode) {
    if (r == 0.0L) return FpValue::zero(fmt, negative_zero_sign);
    bool neg = r < 0.0L;
    long double m = fabsl(r);
    const MagTable& t = mag_table(fmt);

    if (m > t.maxf) {
        bool to_inf;
        switch (mode) {
            case RoundingMode::RNE:
            case RoundingMode::RNA: to_inf = m >= t.maxf + t.half_ulp_top; break;
            case RoundingMode::RTZ: to_inf = false; break;
            case RoundingMode::RTP: to_inf = !neg; break;
            case RoundingMode::RTN: to_inf = neg; break;
            default: to_inf = false;
        }
        if (to_inf) return FpValue::inf(fmt, neg);
        return with_sign(fmt, t.vals.back(), neg);
    }

    auto it = std::lower_bound(t.mags.begin(), t.mags.end(), m);
    size_t hi_idx = size_t(it - t.mags.begin());
    if (hi_idx < t.mags.size() && t.mags[hi_idx] == m)
        return with_sign(fmt, t.vals[hi_idx], neg);
    size_t lo_idx = hi_idx - 1;

    bool pick_hi;
    switch (mode) {
        case RoundingMode::RTZ: pick_hi = false; break;
        case RoundingMode::RTP: pick_hi = !neg; break;
        case RoundingMode::RTN: pick_hi = neg; break;
        case RoundingMode::RNE:
        case RoundingMode::RNA: {
            long double mid = t.mags[lo_idx] / 2.0L + t.mags[hi_idx] / 2.0L;
            if (m < mid) pick_hi = false;
            else if (m > mid) pick_hi = true;
            else if (mode == RoundingMode::RNA) pick_hi = true;  // away from zero
            else pick_hi = !mantissa_even(t.vals[lo_idx]);
            break;
        }
        default: pick_hi = false;
    }
    FpValue v = pick_hi ? t.vals[hi_idx] : t.vals[lo_idx];
    return with_sign(fmt, v, neg);
}

FpValue ref_add(const FpValue& a, const FpValue& b, RoundingMode m) {
    FpFormat fmt = a.format();
    if (a.is_nan() || b.is_nan()) return FpValue::nan(fmt);
    if (a.is_inf() && b.is_inf())
        return a.sign() == b.sign() ? a : FpValue::nan(fmt);
    if (a.is_inf()) return a;
    if (b.is_inf()) return b;
    if (a.is_zero() && b.is_zero()) {
        bool neg = a.sign() == b.sign() ? a.sign() : (m == RoundingMode::RTN);
        return FpValue::zero(fmt, neg);
    }
    long double s = exact(a) + exact(b);  // exact for narrow formats
    return ref_round(fmt, s, m == RoundingMode::RTN, m);
}

FpValue ref_sub(const FpValue& a, const FpValue& b, RoundingMode m) {
    FpFormat fmt = b.format();
    FpValue nb = b.is_nan() ? b : FpValue(fmt, b.bits() ^ fmt.sign_mask());
    return ref_add(a, nb, m);
}

FpValue ref_mul(const FpValue& a, const FpValue& b, RoundingMode m) {
    FpFormat fmt = a.format();
    if (a.is_nan() || b.is_nan()) return FpValue::nan(fmt);
    bool neg = a.sign() != b.sign();
    if (a.is_inf() || b.is_inf()) {
        if (a.is_zero() || b.is_zero()) return FpValue::nan(fmt);
        return FpValue::inf(fmt, neg);
    }
    if (a.is_zero() || b.is_zero()) return FpValue::zero(fmt, neg);
    long double p = exact(a) * exact(b);  // exact for narrow formats
    return ref_round(fmt, p, neg, m);
}

FpValue ref_div(const FpValue& a, const FpValue& b, RoundingMode m) {
    FpFormat fmt = a.format();
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

    // Quotient A/B of positive magnitudes: bracket by exact comparisons of
    // A against c*B (products of table values are exact long doubles).
    long double A = fabsl(exact(a));
    long double B = fabsl(exact(b));
    const MagTable& t = mag_table(fmt);

    if (A > t.maxf * B) {
        bool to_inf;
        switch (m) {
            case RoundingMode::RNE:
            case RoundingMode::RNA: to_inf = A >= (t.maxf + t.half_ulp_top) * B; break;
            case RoundingMode::RTZ: to_inf = false; break;
            case RoundingMode::RTP: to_inf = !neg; break;
            case RoundingMode::RTN: to_inf = neg; break;
            default: to_inf = false;
        }
        if (to_inf) return FpValue::inf(fmt, neg);
        return with_sign(fmt, t.vals.back(), neg);
    }

    // largest lo_idx with mags[lo_idx]*B <= A
    size_t lo_idx = 0, hi_bound = t.mags.size() - 1;
    while (lo_idx < hi_bound) {
        size_t mid = (lo_idx + hi_bound + 1) / 2;
        if (t.mags[mid] * B <= A) lo_idx = mid;
        else hi_bound = mid - 1;
    }
    if (t.mags[lo_idx] * B == A) return with_sign(fmt, t.vals[lo_idx], neg);
    size_t up_idx = lo_idx + 1;
    assert(up_idx < t.mags.size());

    bool pick_hi;
    switch (m) {
        case RoundingMode::RTZ: pick_hi = false; break;
        case RoundingMode::RTP: pick_hi = !neg; break;
        case RoundingMode::RTN: pick_hi = neg; break;
        case RoundingMode::RNE:
        case RoundingMode::RNA: {
            long double mid = t.mags[lo_idx] / 2.0L + t.mags[up_idx] / 2.0L;
            long double rhs = mid * B;  // exact: mid has one extra bit at most
            if (A < rhs) pick_hi = false;
            else if (A > rhs) pick_hi = true;
            else if (m == RoundingMode::RNA) pick_hi = true;
            else pick_hi = !mantissa_even(t.vals[lo_idx]);
            break;
        }
        default: pick_hi = false;
    }
    return with_sign(fmt, pick_hi ? t.vals[up_idx] : t.vals[lo_idx], neg);
}

}  // namespace oracle
