#include "fpcp/real_bound.hpp"

namespace fpcp {

namespace {

constexpr int kPrec = 64;  // significand bits kept after normalization

RealBound saturate(Dir d) {
    return d == Dir::Down ? RealBound::neg_inf() : RealBound::pos_inf();
}

// True magnitude is sig*2^exp, plus epsilon in (0, 2^exp) when sticky.
// Rounds outward per (neg, d) and renormalizes to kPrec bits.
RealBound finish(bool neg, u128 sig, int64_t exp, bool sticky, Dir d) {
    if (sig == 0 && !sticky) return RealBound::zero();
    int len = bit_length(sig);
    if (len > kPrec) {
        int shift = len - kPrec;
        u128 mask = (u128(1) << shift) - 1;
        sticky = sticky || (sig & mask) != 0;
        sig >>= shift;
        exp += shift;
    }
    if (sticky) {
        // outward = away from zero for Up/positive and Down/negative
        bool away = neg ? (d == Dir::Down) : (d == Dir::Up);
        if (away) {
            sig += 1;
            if (bit_length(sig) > kPrec) {
                sig >>= 1;
                exp += 1;
            }
        }
        if (sig == 0) return RealBound::zero();  // inward-rounded epsilon
    }
    RealBound r;
    r.neg = neg;
    r.sig = sig;
    r.exp = exp;
    return r;
}

u128 isqrt128(u128 n, u128& rem) {
    u128 root = 0;
    rem = 0;
    for (int i = 63; i >= 0; --i) {
        rem = (rem << 2) | ((n >> (2 * i)) & 3);
        u128 cand = (root << 2) | 1;
        root <<= 1;
        if (rem >= cand) {
            rem -= cand;
            root |= 1;
        }
    }
    return root;
}

}  // namespace

RealBound RealBound::from_fp(const FpValue& v) {
    assert(!v.is_nan());
    if (v.is_inf()) return v.sign() ? neg_inf() : pos_inf();
    u128 sig;
    int64_t exp;
    v.decompose(sig, exp);
    if (sig == 0) return zero();
    RealBound r;
    r.neg = v.sign();
    r.sig = sig;
    r.exp = exp;
    return r;
}

RealBound RealBound::from_int(int64_t n) {
    if (n == 0) return zero();
    RealBound r;
    r.neg = n < 0;
    r.sig = r.neg ? u128(-(n + 1)) + 1 : u128(n);
    return r;
}

int RealBound::sgn() const {
    if (kind == Kind::NegInf) return -1;
    if (kind == Kind::PosInf) return 1;
    if (sig == 0) return 0;
    return neg ? -1 : 1;
}

RealBound rb_neg(const RealBound& a) {
    if (a.kind == RealBound::Kind::NegInf) return RealBound::pos_inf();
    if (a.kind == RealBound::Kind::PosInf) return RealBound::neg_inf();
    RealBound r = a;
    r.neg = !r.neg;
    return r;
}

RealBound rb_add(const RealBound& a, const RealBound& b, Dir d) {
    using K = RealBound::Kind;
    if (a.kind != K::Finite || b.kind != K::Finite) {
        if (a.kind == K::Finite) return b;
        if (b.kind == K::Finite) return a;
        if (a.kind == b.kind) return a;
        return saturate(d);  // inf - inf
    }
    if (a.sig == 0) return b;
    if (b.sig == 0) return a;

    RealBound x = a, y = b;
    if (x.exp < y.exp) std::swap(x, y);
    int64_t diff = x.exp - y.exp;
    bool sticky = false;
    if (diff > 0) {
        int64_t room = 127 - bit_length(x.sig);
        int64_t up = diff <= room ? diff : room;
        x.sig <<= up;
        x.exp -= up;
        int64_t down = diff - up;
        if (down > 0) {
            if (down > 127) {
                sticky = y.sig != 0;
                y.sig = 0;
            } else {
                u128 mask = (u128(1) << down) - 1;
                sticky = (y.sig & mask) != 0;
                y.sig >>= down;
            }
            y.exp += down;
        }
    }
    // x.exp == y.exp now (y truncated toward zero, remainder in sticky)
    if (x.neg == y.neg) {
        return finish(x.neg, x.sig + y.sig, x.exp, sticky, d);
    }
    // effective subtraction; sticky belongs to y, i.e. |y| = y.sig + eps
    if (x.sig > y.sig) {
        if (sticky) return finish(x.neg, x.sig - y.sig - 1, x.exp, true, d);
        return finish(x.neg, x.sig - y.sig, x.exp, false, d);
    }
    if (x.sig == y.sig) {
        if (!sticky) return RealBound::zero();
        return finish(y.neg, 0, x.exp, true, d);  // result = -(eps) with y's sign
    }
    return finish(y.neg, y.sig - x.sig, x.exp, sticky, d);
}

RealBound rb_sub(const RealBound& a, const RealBound& b, Dir d) {
    return rb_add(a, rb_neg(b), d);
}

RealBound rb_mul(const RealBound& a, const RealBound& b, Dir d) {
    using K = RealBound::Kind;
    bool neg = (a.sgn() < 0) != (b.sgn() < 0);
    if (a.kind != K::Finite || b.kind != K::Finite) {
        if (a.is_zero() || b.is_zero()) return saturate(d);  // 0 * inf
        return neg ? RealBound::neg_inf() : RealBound::pos_inf();
    }
    if (a.sig == 0 || b.sig == 0) return RealBound::zero();
    // both sigs <= 2^64, product fits 128 bits
    return finish(neg, a.sig * b.sig, a.exp + b.exp, false, d);
}

RealBound rb_div(const RealBound& a, const RealBound& b, Dir d) {
    using K = RealBound::Kind;
    bool neg = (a.sgn() < 0) != (b.sgn() < 0);
    if (a.kind != K::Finite || b.kind != K::Finite) {
        if (a.kind != K::Finite && b.kind != K::Finite) return saturate(d);  // inf/inf
        if (a.kind != K::Finite) return neg ? RealBound::neg_inf() : RealBound::pos_inf();
        return RealBound::zero();  // finite / inf
    }
    if (b.sig == 0) {
        if (a.sig == 0) return saturate(d);  // 0/0
        return neg ? RealBound::neg_inf() : RealBound::pos_inf();
    }
    if (a.sig == 0) return RealBound::zero();

    RealBound x = a, y = b;
    // normalize numerator to 63 bits so the shifted dividend fits
    int lx = bit_length(x.sig);
    if (lx < 63) {
        x.sig <<= (63 - lx);
        x.exp -= (63 - lx);
    }
    u128 n = x.sig << 64;
    int64_t nexp = x.exp - 64;
    u128 q = n / y.sig;
    u128 r = n % y.sig;
    return finish(neg, q, nexp - y.exp, r != 0, d);
}

RealBound rb_sqrt(const RealBound& a, Dir d) {
    using K = RealBound::Kind;
    if (a.kind == K::PosInf) return a;
    if (a.sgn() < 0) return d == Dir::Down ? RealBound::zero() : saturate(d);
    if (a.is_zero()) return RealBound::zero();

    RealBound x = a;
    // shift so the significand has ~126 bits and the exponent stays even
    int lx = bit_length(x.sig);
    int up = 126 - lx;
    if (((x.exp - up) & 1) != 0) up -= 1;
    if (up > 0) {
        x.sig <<= up;
        x.exp -= up;
    }
    u128 rem;
    u128 root = isqrt128(x.sig, rem);
    return finish(false, root, x.exp / 2, rem != 0, d);
}

RealBound rb_half(const RealBound& a) {
    if (a.kind != RealBound::Kind::Finite || a.sig == 0) return a;
    RealBound r = a;
    r.exp -= 1;
    return r;
}

int rb_cmp(const RealBound& a, const RealBound& b) {
    int sa = a.sgn(), sb = b.sgn();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    using K = RealBound::Kind;
    if (a.kind != K::Finite || b.kind != K::Finite) {
        if (a.kind == b.kind) return 0;
        if (a.kind == K::PosInf) return 1;
        if (a.kind == K::NegInf) return -1;
        return b.kind == K::PosInf ? -1 : 1;
    }
    // compare magnitudes, then apply sign
    int mag;
    int64_t ma = a.exp + bit_length(a.sig);
    int64_t mb = b.exp + bit_length(b.sig);
    if (ma != mb) {
        mag = ma < mb ? -1 : 1;
    } else {
        // align to the smaller exponent; the gap is at most the bit-length gap
        u128 x = a.sig, y = b.sig;
        if (a.exp > b.exp) x <<= (a.exp - b.exp);
        else y <<= (b.exp - a.exp);
        mag = x < y ? -1 : x > y ? 1 : 0;
    }
    return sa < 0 ? -mag : mag;
}

RealBound rb_midpoint(const FpValue& a, const FpValue& b) {
    RealBound s = rb_add(RealBound::from_fp(a), RealBound::from_fp(b), Dir::Down);
    RealBound s2 = rb_add(RealBound::from_fp(a), RealBound::from_fp(b), Dir::Up);
    assert(rb_cmp(s, s2) == 0);  // midpoints of format values are exact
    (void)s2;
    return rb_half(s);
}

FpValue rb_to_fp(const RealBound& r, FpFormat fmt, Dir d) {
    using K = RealBound::Kind;
    if (r.kind == K::NegInf) return FpValue::inf(fmt, true);
    if (r.kind == K::PosInf) return FpValue::inf(fmt, false);
    if (r.sig == 0) return FpValue::zero(fmt, d == Dir::Down);
    RoundingMode m = d == Dir::Down ? RoundingMode::RTN : RoundingMode::RTP;
    return fp_from_exact(fmt, r.neg, r.exp, r.sig, false, m);
}

}  // namespace fpcp
