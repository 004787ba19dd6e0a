#include "fpcp/domain.hpp"

#include <cmath>

namespace fpcp {

FpDomain FpDomain::full(FpFormat fmt) {
    FpDomain d;
    d.fmt = fmt;
    d.lb = FpValue::inf(fmt, true);
    d.ub = FpValue::inf(fmt, false);
    d.may_nan = true;
    d.has_numeric = true;
    return d;
}

FpDomain FpDomain::singleton(const FpValue& v) {
    FpDomain d;
    d.fmt = v.format();
    if (v.is_nan()) {
        d.may_nan = true;
        d.has_numeric = false;
    } else {
        d.lb = d.ub = v;
        d.has_numeric = true;
    }
    return d;
}

FpDomain FpDomain::interval(const FpValue& lo, const FpValue& hi, bool may_nan) {
    assert(lo.format() == hi.format());
    FpDomain d;
    d.fmt = lo.format();
    d.may_nan = may_nan;
    if (fp_cmp_ord(lo, hi) <= 0) {
        d.lb = lo;
        d.ub = hi;
        d.has_numeric = true;
    }
    return d;
}

FpDomain FpDomain::nan_only(FpFormat fmt) {
    FpDomain d;
    d.fmt = fmt;
    d.may_nan = true;
    return d;
}

FpDomain FpDomain::empty(FpFormat fmt) {
    FpDomain d;
    d.fmt = fmt;
    return d;
}

bool FpDomain::is_instantiated() const {
    if (!has_numeric) return may_nan;
    return !may_nan && lb.ordinal() == ub.ordinal();
}

bool FpDomain::contains(const FpValue& v) const {
    if (v.is_nan()) return may_nan;
    return has_numeric && lb.ordinal() <= v.ordinal() && v.ordinal() <= ub.ordinal();
}

bool FpDomain::contains_zero() const {
    if (!has_numeric) return false;
    return contains(FpValue::zero(fmt, false)) || contains(FpValue::zero(fmt, true));
}

uint64_t FpDomain::cardinality() const {
    assert(!is_empty());
    uint64_t n = may_nan ? 1 : 0;
    if (has_numeric) {
        n += uint64_t(ub.ordinal()) - uint64_t(lb.ordinal()) + 1;
    }
    return n;
}

bool operator==(const FpDomain& a, const FpDomain& b) {
    if (a.fmt != b.fmt || a.may_nan != b.may_nan || a.has_numeric != b.has_numeric)
        return false;
    if (!a.has_numeric) return true;
    return a.lb == b.lb && a.ub == b.ub;
}

FpDomain domain_intersect(const FpDomain& a, const FpDomain& b) {
    assert(a.fmt == b.fmt);
    FpDomain d;
    d.fmt = a.fmt;
    d.may_nan = a.may_nan && b.may_nan;
    if (a.has_numeric && b.has_numeric) {
        FpValue lo = fp_cmp_ord(a.lb, b.lb) >= 0 ? a.lb : b.lb;
        FpValue hi = fp_cmp_ord(a.ub, b.ub) <= 0 ? a.ub : b.ub;
        if (fp_cmp_ord(lo, hi) <= 0) {
            d.lb = lo;
            d.ub = hi;
            d.has_numeric = true;
        }
    }
    return d;
}

FpDomain domain_hull(const FpDomain& a, const FpDomain& b) {
    assert(a.fmt == b.fmt);
    FpDomain d;
    d.fmt = a.fmt;
    d.may_nan = a.may_nan || b.may_nan;
    if (a.has_numeric && b.has_numeric) {
        d.lb = fp_cmp_ord(a.lb, b.lb) <= 0 ? a.lb : b.lb;
        d.ub = fp_cmp_ord(a.ub, b.ub) >= 0 ? a.ub : b.ub;
        d.has_numeric = true;
    } else if (a.has_numeric) {
        d.lb = a.lb;
        d.ub = a.ub;
        d.has_numeric = true;
    } else if (b.has_numeric) {
        d.lb = b.lb;
        d.ub = b.ub;
        d.has_numeric = true;
    }
    return d;
}

FpFormat width_format() { return FpFormat(15, 49); }

namespace {

FpValue to_width_fmt(const FpValue& v, RoundingMode dir) {
    if (v.is_inf()) return FpValue::inf(width_format(), v.sign());
    u128 sig;
    int64_t exp;
    v.decompose(sig, exp);
    if (sig == 0) return FpValue::zero(width_format(), v.sign());
    return fp_from_exact(width_format(), v.sign(), exp, sig, false, dir);
}

long double to_long_double(const FpValue& v) {
    if (v.is_inf()) return v.sign() ? -HUGE_VALL : HUGE_VALL;
    u128 sig;
    int64_t exp;
    v.decompose(sig, exp);
    long double d = ldexpl((long double)(uint64_t)sig, (int)exp);
    return v.sign() ? -d : d;
}

}  // namespace

FpValue domain_width(const FpDomain& d) {
    assert(d.has_numeric);
    if (d.lb.is_inf() || d.ub.is_inf()) return FpValue::inf(width_format(), false);
    FpValue hi = to_width_fmt(d.ub, RoundingMode::RTP);
    FpValue lo = to_width_fmt(d.lb, RoundingMode::RTN);
    return fp_sub(hi, lo, RoundingMode::RTP);
}

FpValue max_width(FpFormat fmt) {
    FpValue m = to_width_fmt(FpValue::max_finite(fmt, false), RoundingMode::RTP);
    return fp_add(m, m, RoundingMode::RTP);
}

long double density(const FpDomain& d) {
    assert(!d.is_empty());
    if (!d.has_numeric) return HUGE_VALL;  // NaN-only: instantiated
    uint64_t card = d.cardinality();
    FpValue w = domain_width(d);
    long double wd = w.is_inf() ? to_long_double(max_width(d.fmt)) : to_long_double(w);
    if (wd == 0.0L) return HUGE_VALL;  // numeric singleton
    return (long double)card / wd;
}

FpValue middle(const FpValue& L, const FpValue& U) {
    assert(L.format() == U.format());
    assert(fp_cmp_ord(L, U) < 0);
    FpFormat fmt = L.format();
    int64_t lo = L.ordinal(), hi = U.ordinal();
    auto in_range = [&](const FpValue& v) {
        int64_t o = v.ordinal();
        return lo <= o && o <= hi;
    };

    FpValue m = FpValue::zero(fmt, false);
    FpValue nz = FpValue::zero(fmt, true);
    FpValue one = FpValue::from_int(fmt, 1);
    FpValue mone = FpValue::from_int(fmt, -1);
    if (in_range(m)) {
        // prefer the zero that is interior
        if (m.ordinal() == hi && in_range(nz)) m = nz;
    } else if (in_range(nz)) {
        m = nz;
    } else if (in_range(one)) {
        m = one;
    } else if (in_range(mone)) {
        m = mone;
    } else {
        FpValue two = FpValue::from_int(fmt, 2);
        m = fp_add(fp_div(L, two, RoundingMode::RNE), fp_div(U, two, RoundingMode::RNE),
                   RoundingMode::RNE);
        assert(!m.is_nan());
        if (fp_cmp_ord(m, L) < 0) m = L;
        if (fp_cmp_ord(m, U) > 0) m = U;
    }
    // clamp into the open interval whenever it is non-empty
    if (hi - lo >= 2) {
        if (m.ordinal() == lo) m = fp_succ(L);
        else if (m.ordinal() == hi) m = fp_pred(U);
    }
    return m;
}

}  // namespace fpcp
