#pragma once

#include "fpcp/fp.hpp"

#include <cstdint>

namespace fpcp {

/// Interval domain over a floating-point format: a numeric part [lb..ub] in
/// the total ordinal order (-0 and +0 are distinct, adjacent values) plus a
/// NaN membership flag. NaN is never inside the interval.
struct FpDomain {
    FpFormat fmt;
    FpValue lb, ub;  // meaningful only when has_numeric
    bool may_nan = false;
    bool has_numeric = false;

    static FpDomain full(FpFormat fmt);
    static FpDomain singleton(const FpValue& v);
    static FpDomain interval(const FpValue& lo, const FpValue& hi, bool may_nan = false);
    static FpDomain nan_only(FpFormat fmt);
    static FpDomain empty(FpFormat fmt);

    bool is_empty() const { return !has_numeric && !may_nan; }
    bool is_instantiated() const;
    bool contains(const FpValue& v) const;
    bool contains_zero() const;
    bool contains_pos_inf() const { return has_numeric && ub.is_inf() && !ub.sign(); }
    bool contains_neg_inf() const { return has_numeric && lb.is_inf() && lb.sign(); }

    /// Number of values in the domain (numeric part plus NaN if present).
    uint64_t cardinality() const;

    friend bool operator==(const FpDomain& a, const FpDomain& b);
    friend bool operator!=(const FpDomain& a, const FpDomain& b) { return !(a == b); }
};

/// Intersection of the numeric parts; NaN flag is ANDed.
FpDomain domain_intersect(const FpDomain& a, const FpDomain& b);
/// Hull of the numeric parts; NaN flag is ORed.
FpDomain domain_hull(const FpDomain& a, const FpDomain& b);

/// The format used to carry interval widths: wide exponent range so that no
/// supported solver format overflows it.
FpFormat width_format();

/// ub - lb rounded upward in width_format(); +inf when a bound is infinite.
/// Precondition: numeric part non-empty.
FpValue domain_width(const FpDomain& d);

/// Width of the full finite range of fmt, used to normalize the density of
/// unbounded domains.
FpValue max_width(FpFormat fmt);

/// cardinality / width. Singleton numeric parts (and NaN-only domains) give
/// +inf, which variable selection treats as "bound, never selected".
long double density(const FpDomain& d);

/// Split point of the 5-way branching scheme. Requires L < U in ordinal
/// order. Prefers the interesting values 0, 1, -1 when inside [L..U]; falls
/// back to L/2 + U/2 (round-to-nearest-even), clamped into (L, U).
FpValue middle(const FpValue& L, const FpValue& U);

/// Tri-state boolean domain.
struct BoolDomain {
    bool can_false = true;
    bool can_true = true;

    static BoolDomain unknown() { return {true, true}; }
    static BoolDomain of(bool b) { return {!b, b}; }
    bool is_empty() const { return !can_false && !can_true; }
    bool is_fixed() const { return can_false != can_true; }
    bool value() const { return can_true; }  // pre: is_fixed

    friend bool operator==(const BoolDomain& a, const BoolDomain& b) {
        return a.can_false == b.can_false && a.can_true == b.can_true;
    }
    friend bool operator!=(const BoolDomain& a, const BoolDomain& b) { return !(a == b); }
};

}  // namespace fpcp
