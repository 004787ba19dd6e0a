// Shared test inputs.
#pragma once

namespace fixtures {

// SSA-style encoding of one Newton-method step over binary32, in the shape
// produced by bounded model checkers: one define-fun temporary per program
// operation, with a reified equality asserted at the end.
inline const char* kNewtonScript = R"((set-logic QF_FP)
(declare-fun x () (_ FloatingPoint 8 24))
(declare-fun r () (_ FloatingPoint 8 24))
(define-fun _t_3 () RoundingMode RNE)
(define-fun _t_9 () (_ FloatingPoint 8 24) x)
(define-fun _t_10 () (_ FloatingPoint 8 24) r)
(define-fun _t_11 () (_ FloatingPoint 8 24) (fp.mul _t_3 _t_9 _t_9))
(define-fun _t_12 () (_ FloatingPoint 8 24) (fp #b0 #b10000000 #b00000000000000000000000))
(define-fun _t_13 () (_ FloatingPoint 8 24) (fp.div _t_3 _t_11 _t_12))
(define-fun _t_14 () (_ FloatingPoint 8 24) (fp.neg _t_13))
(define-fun _t_15 () (_ FloatingPoint 8 24) (fp #b0 #b01111111 #b00000000000000000000000))
(define-fun _t_16 () (_ FloatingPoint 8 24) (fp.add _t_3 _t_15 _t_14))
(define-fun _t_17 () (_ FloatingPoint 8 24) (fp.mul _t_3 _t_11 _t_9))
(define-fun _t_18 () (_ FloatingPoint 8 24) (fp #b0 #b10000001 #b10000000000000000000000))
(define-fun _t_19 () (_ FloatingPoint 8 24) (fp.div _t_3 _t_17 _t_18))
(define-fun _t_20 () (_ FloatingPoint 8 24) (fp.neg _t_19))
(define-fun _t_21 () (_ FloatingPoint 8 24) (fp.add _t_3 _t_9 _t_20))
(define-fun _t_22 () (_ FloatingPoint 8 24) (fp.div _t_3 _t_16 _t_21))
(define-fun _t_23 () (_ FloatingPoint 8 24) (fp.neg _t_22))
(define-fun _t_24 () (_ FloatingPoint 8 24) (fp.add _t_3 _t_9 _t_23))
(define-fun _t_25 () Bool (= _t_10 _t_24))
(assert _t_25)
(check-sat)
(exit)
)";

}  // namespace fixtures
