#include "doctest.h"
#include "oracle.hpp"

#include "fpcp/fp.hpp"

#include <cfenv>
#include <cstring>
#include <random>

using namespace fpcp;

namespace {

const FpFormat kMini33(3, 3);
const FpFormat kMini44(4, 4);
const FpFormat kMini45(4, 5);

uint32_t f2b(float f) {
    uint32_t b;
    std::memcpy(&b, &f, 4);
    return b;
}
float b2f(uint32_t b) {
    float f;
    std::memcpy(&f, &b, 4);
    return f;
}
uint64_t d2b(double d) {
    uint64_t b;
    std::memcpy(&b, &d, 8);
    return b;
}
double b2d(uint64_t b) {
    double d;
    std::memcpy(&d, &b, 8);
    return d;
}

bool same_value(const FpValue& a, const FpValue& b) {
    if (a.is_nan() || b.is_nan()) return a.is_nan() && b.is_nan();
    return a.bits() == b.bits();
}

}  // namespace

TEST_CASE("ordinal is a monotone bijection on mini formats") {
    for (FpFormat fmt : {kMini33, kMini44, kMini45}) {
        auto vals = oracle::all_values(fmt);
        // contiguous range, strictly increasing real order (except the zero pair)
        for (size_t i = 0; i + 1 < vals.size(); ++i) {
            CHECK(vals[i + 1].ordinal() == vals[i].ordinal() + 1);
            if (!(vals[i].is_zero() && vals[i + 1].is_zero())) {
                CHECK(oracle::exact(vals[i]) < oracle::exact(vals[i + 1]));
            }
        }
        // round trip
        for (const FpValue& v : vals) {
            CHECK(FpValue::from_ordinal(fmt, v.ordinal()).bits() == v.bits());
        }
    }
}

TEST_CASE("zero pair ordinals are adjacent") {
    FpValue nz = FpValue::zero(kMini44, true), pz = FpValue::zero(kMini44, false);
    CHECK(pz.ordinal() == nz.ordinal() + 1);
    CHECK(fp_succ(nz) == pz);
    CHECK(fp_pred(pz) == nz);
}

TEST_CASE("succ and pred are inverse where defined") {
    auto vals = oracle::all_values(kMini44);
    for (const FpValue& v : vals) {
        if (fp_has_succ(v)) CHECK(fp_pred(fp_succ(v)) == v);
        if (fp_has_pred(v)) CHECK(fp_succ(fp_pred(v)) == v);
    }
    CHECK(!fp_has_succ(FpValue::inf(kMini44, false)));
    CHECK(!fp_has_pred(FpValue::inf(kMini44, true)));
}

TEST_CASE("binary32 spacing examples") {
    FpFormat b32 = FpFormat::binary32();
    FpValue one(b32, f2b(1.0f));
    CHECK(fp_succ(one).bits() == f2b(std::nextafterf(1.0f, 2.0f)));
    CHECK(fp_pred(FpValue::inf(b32, false)).bits() == f2b(std::numeric_limits<float>::max()));

    FpValue a(b32, f2b(100000.0f));
    FpValue b(b32, f2b(100001.0f));
    CHECK(b.ordinal() - a.ordinal() == 128);
}

TEST_CASE("from_int produces the Figure-style constants") {
    FpFormat b32 = FpFormat::binary32();
    CHECK(FpValue::from_int(b32, 1).bits() == 0x3f800000u);
    CHECK(FpValue::from_int(b32, 2).bits() == 0x40000000u);
    CHECK(FpValue::from_int(b32, 6).bits() == 0x40c00000u);
    CHECK(FpValue::from_int(b32, -1).bits() == 0xbf800000u);
}

TEST_CASE("ieee comparisons identify zeros and reject NaN") {
    FpValue nz = FpValue::zero(kMini44, true), pz = FpValue::zero(kMini44, false);
    FpValue nan = FpValue::nan(kMini44);
    CHECK(fp_ieee_eq(nz, pz));
    CHECK(!fp_ieee_lt(nz, pz));
    CHECK(fp_ieee_le(nz, pz));
    CHECK(!fp_ieee_eq(nan, nan));
    CHECK(!fp_ieee_lt(nan, nan));
    CHECK(fp_obj_eq(nan, nan));
    CHECK(!fp_obj_eq(nz, pz));
}

TEST_CASE("arithmetic matches the oracle exhaustively on mini formats") {
    for (FpFormat fmt : {kMini33, kMini44}) {
        auto vals = oracle::all_values_with_nan(fmt);
        for (RoundingMode m : {RoundingMode::RNE, RoundingMode::RNA, RoundingMode::RTP,
                               RoundingMode::RTN, RoundingMode::RTZ}) {
            size_t bad = 0;
            for (const FpValue& a : vals) {
                for (const FpValue& b : vals) {
                    if (!same_value(fp_add(a, b, m), oracle::ref_add(a, b, m))) ++bad;
                    if (!same_value(fp_sub(a, b, m), oracle::ref_sub(a, b, m))) ++bad;
                    if (!same_value(fp_mul(a, b, m), oracle::ref_mul(a, b, m))) ++bad;
                    if (!same_value(fp_div(a, b, m), oracle::ref_div(a, b, m))) ++bad;
                }
            }
            CHECK_MESSAGE(bad == 0, "format (", fmt.ebits, ",", fmt.sbits, ") mode ",
                          to_string(m), ": ", bad, " mismatches");
        }
    }
}

TEST_CASE("arithmetic matches the oracle on sampled (4,5) pairs") {
    auto vals = oracle::all_values_with_nan(kMini45);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, vals.size() - 1);
    for (int i = 0; i < 40000; ++i) {
        FpValue a = vals[pick(rng)], b = vals[pick(rng)];
        RoundingMode m = RoundingMode(i % 5);
        CHECK(same_value(fp_add(a, b, m), oracle::ref_add(a, b, m)));
        CHECK(same_value(fp_mul(a, b, m), oracle::ref_mul(a, b, m)));
        CHECK(same_value(fp_div(a, b, m), oracle::ref_div(a, b, m)));
    }
}

namespace {

int to_fe(RoundingMode m) {
    switch (m) {
        case RoundingMode::RTP: return FE_UPWARD;
        case RoundingMode::RTN: return FE_DOWNWARD;
        case RoundingMode::RTZ: return FE_TOWARDZERO;
        default: return FE_TONEAREST;
    }
}

template <typename F>
auto with_rounding(RoundingMode m, F f) {
    std::fesetround(to_fe(m));
    auto r = f();
    std::fesetround(FE_TONEAREST);
    return r;
}

uint32_t rand_f32_bits(std::mt19937& rng) {
    switch (rng() % 8) {
        case 0: return rng() & 0x807fffffu;                    // subnormal-ish
        case 1: return (rng() & 0x80ffffffu) | 0x7e000000u;    // huge
        case 2: return f2b(1.0f) + (rng() % 64) - 32;
        default: return rng();
    }
}

uint64_t rand_f64_bits(std::mt19937& rng) {
    uint64_t x = (uint64_t(rng()) << 32) | rng();
    switch (rng() % 8) {
        case 0: return x & 0x800fffffffffffffull;
        case 1: return (x & 0x80ffffffffffffffull) | 0x7f80000000000000ull;
        case 2: return d2b(1.0) + (x % 128) - 64;
        default: return x;
    }
}

}  // namespace

TEST_CASE("binary32 arithmetic matches hardware") {
    FpFormat b32 = FpFormat::binary32();
    std::mt19937 rng(99);
    for (int i = 0; i < 200000; ++i) {
        uint32_t xb = rand_f32_bits(rng), yb = rand_f32_bits(rng);
        FpValue x(b32, xb), y(b32, yb);
        RoundingMode m = RoundingMode((i % 4 < 3) ? (i % 4) + 2 : 0);  // RNE/RTP/RTN/RTZ
        volatile float fx = b2f(xb), fy = b2f(yb);
        float sum = with_rounding(m, [&] { return float(fx + fy); });
        float dif = with_rounding(m, [&] { return float(fx - fy); });
        float prd = with_rounding(m, [&] { return float(fx * fy); });
        float quo = with_rounding(m, [&] { return float(fx / fy); });
        CHECK(same_value(fp_add(x, y, m), FpValue(b32, f2b(sum))));
        CHECK(same_value(fp_sub(x, y, m), FpValue(b32, f2b(dif))));
        CHECK(same_value(fp_mul(x, y, m), FpValue(b32, f2b(prd))));
        CHECK(same_value(fp_div(x, y, m), FpValue(b32, f2b(quo))));
    }
}

TEST_CASE("binary64 arithmetic matches hardware") {
    FpFormat b64 = FpFormat::binary64();
    std::mt19937 rng(7);
    for (int i = 0; i < 200000; ++i) {
        uint64_t xb = rand_f64_bits(rng), yb = rand_f64_bits(rng);
        FpValue x(b64, xb), y(b64, yb);
        RoundingMode m = RoundingMode((i % 4 < 3) ? (i % 4) + 2 : 0);
        volatile double fx = b2d(xb), fy = b2d(yb);
        double sum = with_rounding(m, [&] { return double(fx + fy); });
        double dif = with_rounding(m, [&] { return double(fx - fy); });
        double prd = with_rounding(m, [&] { return double(fx * fy); });
        double quo = with_rounding(m, [&] { return double(fx / fy); });
        CHECK(same_value(fp_add(x, y, m), FpValue(b64, d2b(sum))));
        CHECK(same_value(fp_sub(x, y, m), FpValue(b64, d2b(dif))));
        CHECK(same_value(fp_mul(x, y, m), FpValue(b64, d2b(prd))));
        CHECK(same_value(fp_div(x, y, m), FpValue(b64, d2b(quo))));
    }
}

TEST_CASE("min and max drop NaNs and order the zeros") {
    FpValue nan = FpValue::nan(kMini44);
    FpValue one = FpValue::from_int(kMini44, 1);
    FpValue nz = FpValue::zero(kMini44, true), pz = FpValue::zero(kMini44, false);
    CHECK(fp_min(nan, one) == one);
    CHECK(fp_max(one, nan) == one);
    CHECK(fp_min(nan, nan).is_nan());
    CHECK(fp_min(pz, nz) == nz);
    CHECK(fp_max(nz, pz) == pz);
}

TEST_CASE("neg and abs are exact bit operations") {
    auto vals = oracle::all_values(kMini44);
    for (const FpValue& v : vals) {
        CHECK(fp_neg(v).sign() == !v.sign());
        CHECK(!fp_abs(v).sign());
        CHECK(fp_neg(fp_neg(v)) == v);
    }
    CHECK(fp_neg(FpValue::nan(kMini44)).is_nan());
}
