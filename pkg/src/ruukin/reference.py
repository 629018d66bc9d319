"""Hand transcriptions of the reference polynomials.

These strings are the independent oracles the generated objects are
checked against.  They are kept in factored, human-readable shape where the
source shows one and are parsed on demand with :func:`ruukin.algebra.parse`.
``s3`` stands for sqrt(3).
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import MPoly, parse

# Canonical limb constraints in the limb's own frames.
F1 = (
    "((x0*x1-x2*x3)*(t^2-1)-(2*x0*x2+2*x1*x3)*t)*a1"
    "+2*(t^2+1)*(x0*y0+x3*y3)"
)
F2 = (
    "-(x0^2+x1^2+x2^2+x3^2)*(t^2+1)*a1^2"
    "+(4*(x0*y1-x1*y0+x2*y3-x3*y2)*t^2"
    "+8*(-x0*y2+x1*y3+x2*y0-x3*y1)*t"
    "-4*(x0*y1-x1*y0+x2*y3-x3*y2))*a1"
    "+((x0^2+x1^2+x2^2+x3^2)*a3^2-4*(y0^2+y1^2+y2^2+y3^2))*(t^2+1)"
)

# Translational system, one quadratic per limb.
WT_G2 = (
    "(a1^2-a3^2+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3+r0*y1-r1*y1))*t1^2"
    "+4*a1*(r0-r1+2*y1)*t1"
    "+(r0-r1)^2+4*(y1^2+y2^2+y3^2+a1*y3+r0*y1-r1*y1)+a1^2-a3^2"
)
WT_G4 = (
    "(2*(r0-r1)*(s3*y2-y1)+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3)+a1^2-a3^2)*t2^2"
    "+4*a1*(s3*y2+r0-r1-y1)*t2"
    "+2*(r0-r1)*(s3*y2-y1)+(r0-r1)^2+4*(y1^2+y2^2+y3^2+a1*y3)+a1^2-a3^2"
)
WT_G6 = (
    "(-2*(r0-r1)*(s3*y2+y1)+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3)+a1^2-a3^2)*t3^2"
    "+4*a1*(-s3*y2+r0-r1-y1)*t3"
    "-2*(r0-r1)*(s3*y2+y1)+(r0-r1)^2+4*(y1^2+y2^2+y3^2+a1*y3)+a1^2-a3^2"
)

# Input-singularity factors, one per limb (linear in the limb input).
P1 = (
    "(a1^2-a3^2+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3+r0*y1-r1*y1))*t1"
    "+2*a1*(r0-r1+2*y1)"
)
P2 = (
    "(2*(r0-r1)*(s3*y2-y1)+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3)+a1^2-a3^2)*t2"
    "+2*a1*(s3*y2+r0-r1-y1)"
)
P3 = (
    "(-2*(r0-r1)*(s3*y2+y1)+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3)+a1^2-a3^2)*t3"
    "+2*a1*(-s3*y2+r0-r1-y1)"
)

# Root of p1 as numerator / denominator.
ROOT_P1_NUM = "2*a1*(r1-r0-2*y1)"
ROOT_P1_DEN = "a1^2-a3^2+(r0-r1)^2+4*(y1^2+y2^2+y3^2-a1*y3+r0*y1-r1*y1)"

# Expanded leading coefficient of p1 in t1.
LEADCOEFF_P1 = (
    "a1^2-4*a1*y3-a3^2+r0^2-2*r0*r1+4*r0*y1+r1^2-4*r1*y1+4*y1^2+4*y2^2+4*y3^2"
)

# Circle factor of the self-motion, arbitrary design.
SELF_MOTION_FACTOR = "a1^2-a3^2-(r0-r1)^2+4*(y1^2+y2^2)"

# Factored limb equations on the self-motion circle of design (3, 5, 11, 7).
CIRCLE_CONDITION_PARS = (
    "(t1^2+3/2*t1+1)*(y1+2)",
    "(t2^2+3/2*t2+1)*(-s3*y2+y1-4)",
    "(t3^2+3/2*t3+1)*(s3*y2+y1-4)",
    "y1^2+y2^2-8",
    "y3",
)

# Input-singularity torus of limb 1 (numerator after substituting the p1 root).
TORUS_LIMB1 = (
    "a1^4-2*a3^2*a1^2-2*r0^2*a1^2+4*r0*r1*a1^2-8*r0*a1^2*y1-2*r1^2*a1^2"
    "+8*r1*a1^2*y1-8*a1^2*y1^2+8*a1^2*y2^2-8*a1^2*y3^2+a3^4-2*a3^2*r0^2"
    "+4*a3^2*r0*r1-8*a3^2*r0*y1-2*a3^2*r1^2+8*a3^2*r1*y1-8*a3^2*y1^2"
    "-8*a3^2*y2^2-8*a3^2*y3^2+r0^4-4*r0^3*r1+8*r0^3*y1+6*r0^2*r1^2"
    "-24*r0^2*r1*y1+24*r0^2*y1^2+8*r0^2*y2^2+8*r0^2*y3^2-4*r0*r1^3"
    "+24*r0*r1^2*y1-48*r0*r1*y1^2-16*r0*r1*y2^2-16*r0*r1*y3^2+32*r0*y1^3"
    "+32*r0*y1*y2^2+32*r0*y1*y3^2+r1^4-8*r1^3*y1+24*r1^2*y1^2+8*r1^2*y2^2"
    "+8*r1^2*y3^2-32*r1*y1^3-32*r1*y1*y2^2-32*r1*y1*y3^2+16*y1^4+32*y1^2*y2^2"
    "+32*y1^2*y3^2+16*y2^4+32*y2^2*y3^2+16*y3^4"
)

# Factors of the translational output determinant.
S1 = (
    "18*r0^2*t1^2*t2^2*y3+18*r0^2*t1^2*t3^2*y3+18*r0^2*t2^2*t3^2*y3"
    "+18*r1^2*t1^2*t2^2*y3+18*r1^2*t1^2*t3^2*y3+18*r1^2*t2^2*t3^2*y3"
    "+24*a1^2*t1*t2*y3+24*a1^2*t1*t3*y3+24*a1^2*t2*t3*y3-36*r0*r1*t1^2*y3"
    "-36*r0*r1*t2^2*y3-36*r0*r1*t3^2*y3+24*a1*r0*t1*y3+24*a1*r0*t2*y3"
    "+24*a1*r0*t3*y3-24*a1*r1*t1*y3-24*a1*r1*t2*y3-24*a1*r1*t3*y3"
    "+12*a1^3*t1*t3+12*a1^3*t2*t3-6*a1*r0*r1*t3^2-3*a1*r0^2*t1^2*t3^2"
    "-3*a1*r0^2*t2^2*t3^2-3*a1*r1^2*t1^2*t3^2-3*a1*r1^2*t2^2*t3^2"
    "+12*a1*r0*t1^2*t2^2*y2*s3-12*a1*r0*t1^2*t3^2*y2*s3"
    "-12*a1*r1*t1^2*t2^2*y2*s3+12*a1*r1*t1^2*t3^2*y2*s3"
    "-36*r0*r1*t1^2*t2^2*t3^2*y3+24*a1*r0*t1^2*t2^2*t3*y3"
    "+24*a1*r0*t1^2*t2*t3^2*y3+24*a1*r0*t1*t2^2*t3^2*y3"
    "-24*a1*r1*t1^2*t2^2*t3*y3-24*a1*r1*t1^2*t2*t3^2*y3"
    "-24*a1*r1*t1*t2^2*t3^2*y3+18*r0^2*y3+18*r1^2*y3+12*a1*r0*t2^2*y2*s3"
    "-12*a1*r0*t3^2*y2*s3-12*a1*r1*t2^2*y2*s3+12*a1*r1*t3^2*y2*s3"
    "+8*a1^2*t1^2*t2*y2*s3-8*a1^2*t1^2*t3*y2*s3+16*a1^2*s3*t1*t2^2*y2"
    "-16*a1^2*s3*t1*t3^2*y2+8*a1^2*t3*t2^2*y2*s3+18*a1*r0*r1*t1^2*t2^2*t3^2"
    "+9*a1*r1^2+12*a1^3*t1*t2+6*a1*r0*r1*t1^2*t2^2+6*a1*r0*r1*t1^2*t3^2"
    "-12*a1^2*r0*t1^2*t2^2*t3-12*a1^2*r0*t1^2*t2*t3^2-12*a1^2*r0*t1*t2^2*t3^2"
    "+6*a1*r0*r1*t2^2*t3^2+9*a1*r0^2-12*a1^2*r1*t2-12*a1^2*r1*t1"
    "+12*a1^2*r1*t1^2*t2^2*t3+12*a1^2*r1*t1^2*t2*t3^2+12*a1^2*r1*t1*t2^2*t3^2"
    "+18*r0^2*t1^2*t2^2*t3^2*y3+18*r1^2*t1^2*t2^2*t3^2*y3"
    "+24*a1^2*t1^2*t2*t3*y3+24*a1^2*t1*t2^2*t3*y3+24*a1^2*t1*t2*t3^2*y3"
    "-36*r0*r1*t1^2*t2^2*y3-36*r0*r1*t1^2*t3^2*y3-36*r0*r1*t2^2*t3^2*y3"
    "+24*a1*r0*t1^2*t2*y3+24*a1*r0*t1^2*t3*y3+24*a1*r0*t1*t2^2*y3"
    "+24*a1*r0*t1*t3^2*y3+24*a1*r0*t2^2*t3*y3+24*a1*r0*t2*t3^2*y3"
    "-24*a1*r1*t1^2*t2*y3-24*a1*r1*t1^2*t3*y3-24*a1*r1*t1*t2^2*y3"
    "-24*a1*r1*t1*t3^2*y3-24*a1*r1*t2^2*t3*y3-24*a1*r1*t2*t3^2*y3"
    "+18*r0^2*t1^2*y3+18*r0^2*t2^2*y3+18*r0^2*t3^2*y3+18*r1^2*t1^2*y3"
    "+18*r1^2*t2^2*y3+18*r1^2*t3^2*y3-36*r0*r1*y3-12*a1*r1*t1^2*t2^2*y1"
    "-12*a1*r1*t1^2*t3^2*y1+24*a1*r1*t2^2*t3^2*y1+12*a1*r0*t1^2*t2^2*y1"
    "+12*a1*r0*t1^2*t3^2*y1-24*a1*r0*t2^2*t3^2*y1+3*a1*r0^2*t1^2"
    "+3*a1*r0^2*t2^2+3*a1*r0^2*t3^2+3*a1*r1^2*t1^2+3*a1*r1^2*t2^2"
    "+3*a1*r1^2*t3^2-9*a1*r0^2*t1^2*t2^2*t3^2-9*a1*r1^2*t1^2*t2^2*t3^2"
    "-18*a1*r0*r1+12*a1^2*r0*t1+12*a1^2*r0*t2+12*a1^2*r0*t3-12*a1^2*r1*t3"
    "+24*a1^2*t1^2*t2*y1+24*a1^2*t1^2*t3*y1-24*a1^2*t2^2*t3*y1"
    "-24*a1^2*t2*t3^2*y1+24*a1*r0*t1^2*y1-12*a1*r0*t2^2*y1-12*a1*r0*t3^2*y1"
    "-24*a1*r1*t1^2*y1+12*a1*r1*t2^2*y1+12*a1*r1*t3^2*y1-8*a1^2*t2*t3^2*y2*s3"
    "-3*a1*r0^2*t1^2*t2^2-3*a1*r1^2*t1^2*t2^2-6*a1*r0*r1*t1^2-6*a1*r0*r1*t2^2"
    "-12*a1^3*t1^2*t2*t3-12*a1^3*t1*t2^2*t3-12*a1^3*t1*t2*t3^2"
)

S2 = (
    "a1*t1^2*t2^2*y1^2+a1*t1^2*t3^2*y1^2-5*a1*t2^2*t3^2*y1^2"
    "-6*r0^2*t1^2*t2^2*y3-6*r0^2*t1^2*t3^2*y3-6*r0^2*t2^2*t3^2*y3"
    "-6*r1^2*t1^2*t2^2*y3-6*r1^2*t1^2*t3^2*y3-6*r1^2*t2^2*t3^2*y3"
    "-8*a1^2*t1*t2*y3-8*a1^2*t1*t3*y3-8*a1^2*t2*t3*y3+12*r0*r1*t1^2*y3"
    "+12*r0*r1*t2^2*y3+12*r0*r1*t3^2*y3-8*a1*r0*t1*y3-8*a1*r0*t2*y3"
    "-8*a1*r0*t3*y3+8*a1*r1*t1*y3+8*a1*r1*t2*y3+8*a1*r1*t3*y3"
    "+6*t1^2*t2^2*y1^2*y3+6*t1^2*t2^2*y2^2*y3+6*t1^2*t3^2*y1^2*y3"
    "+6*t1^2*t3^2*y2^2*y3+6*t2^2*t3^2*y1^2*y3+6*t2^2*t3^2*y2^2*y3"
    "+8*a1*t1*y1*y3-4*a1*t2*y1*y3-4*a1*t3*y1*y3-4*a1^3*t1*t3-4*a1^3*t2*t3"
    "+2*a1*r0*r1*t3^2+a1*r0^2*t1^2*t3^2+a1*r0^2*t2^2*t3^2+a1*r1^2*t1^2*t3^2"
    "+a1*r1^2*t2^2*t3^2+2*a1^2*t1^2*t3*t2^2*y2*s3-2*a1^2*t1^2*t2*t3^2*y2*s3"
    "-2*a1*r0*t1^2*t2^2*y2*s3+2*a1*r0*t1^2*t3^2*y2*s3+2*a1*r1*t1^2*t2^2*y2*s3"
    "-2*a1*r1*t1^2*t3^2*y2*s3-4*a1*t1^2*t2^2*y1*y2*s3+4*a1*t1^2*t3^2*y1*y2*s3"
    "+4*a1*t1^2*s3*t2*y2*y3-4*a1*t1^2*s3*t3*y2*y3-4*a1*t2^2*s3*t3*y2*y3"
    "+4*a1*s3*t2*t3^2*y2*y3+2*a1^2*t2*y2*s3-2*a1^2*t3*y2*s3"
    "+12*r0*r1*t1^2*t2^2*t3^2*y3-8*a1*r0*t1^2*t2^2*t3*y3"
    "-8*a1*r0*t1^2*t2*t3^2*y3-8*a1*r0*t1*t2^2*t3^2*y3+8*a1*r1*t1^2*t2^2*t3*y3"
    "+8*a1*r1*t1^2*t2*t3^2*y3+8*a1*r1*t1*t2^2*t3^2*y3-4*a1*t1^2*t2^2*t3*y1*y3"
    "-4*a1*t1^2*t2*t3^2*y1*y3+8*a1*t1*t2^2*t3^2*y1*y3"
    "-4*a1*t1^2*t2^2*s3*t3*y2*y3+4*a1*t1^2*s3*t2*t3^2*y2*y3+3*a1*y1^2"
    "-6*r0^2*y3-6*r1^2*y3+6*y1^2*y3+6*y2^2*y3-2*a1*r0*t2^2*y2*s3"
    "+2*a1*r0*t3^2*y2*s3+2*a1*r1*t2^2*y2*s3-2*a1*r1*t3^2*y2*s3"
    "-4*a1*t2^2*y1*y2*s3+4*a1*t3^2*y1*y2*s3+4*a1*s3*t2*y2*y3-4*a1*s3*t3*y2*y3"
    "-2*a1^2*t1^2*t2*y2*s3+2*a1^2*t1^2*t3*y2*s3-4*a1^2*s3*t1*t2^2*y2"
    "+4*a1^2*s3*t1*t3^2*y2-2*a1^2*t3*t2^2*y2*s3-6*a1*r0*r1*t1^2*t2^2*t3^2"
    "-3*a1*r1^2-4*a1^3*t1*t2-3*a1*t1^2*t2^2*y2^2-3*a1*t1^2*t3^2*y2^2"
    "+3*a1*t2^2*t3^2*y2^2+3*a1*y2^2-3*a1*t1^2*t2^2*t3^2*y1^2"
    "+2*a1^2*t1^2*t2^2*t3*y1+2*a1^2*t1^2*t2*t3^2*y1-4*a1^2*t1*t2^2*t3^2*y1"
    "-2*a1*r0*r1*t1^2*t2^2-2*a1*r0*r1*t1^2*t3^2+4*a1^2*r0*t1^2*t2^2*t3"
    "+4*a1^2*r0*t1^2*t2*t3^2+4*a1^2*r0*t1*t2^2*t3^2-3*a1*t1^2*t2^2*t3^2*y2^2"
    "-2*a1*r0*r1*t2^2*t3^2-3*a1*r0^2+4*a1^2*r1*t2+4*a1^2*r1*t1"
    "-4*a1^2*r1*t1^2*t2^2*t3-4*a1^2*r1*t1^2*t2*t3^2-4*a1^2*r1*t1*t2^2*t3^2"
    "-6*r0^2*t1^2*t2^2*t3^2*y3-6*r1^2*t1^2*t2^2*t3^2*y3-8*a1^2*t1^2*t2*t3*y3"
    "-8*a1^2*t1*t2^2*t3*y3-8*a1^2*t1*t2*t3^2*y3+12*r0*r1*t1^2*t2^2*y3"
    "+12*r0*r1*t1^2*t3^2*y3+12*r0*r1*t2^2*t3^2*y3-8*a1*r0*t1^2*t2*y3"
    "-8*a1*r0*t1^2*t3*y3-8*a1*r0*t1*t2^2*y3-8*a1*r0*t1*t3^2*y3"
    "-8*a1*r0*t2^2*t3*y3-8*a1*r0*t2*t3^2*y3+8*a1*r1*t1^2*t2*y3"
    "+8*a1*r1*t1^2*t3*y3+8*a1*r1*t1*t2^2*y3+8*a1*r1*t1*t3^2*y3"
    "+8*a1*r1*t2^2*t3*y3+8*a1*r1*t2*t3^2*y3+6*t1^2*t2^2*t3^2*y1^2*y3"
    "+6*t1^2*t2^2*t3^2*y2^2*y3-4*a1*t1^2*t2*y1*y3-4*a1*t1^2*t3*y1*y3"
    "+8*a1*t1*t2^2*y1*y3+8*a1*t1*t3^2*y1*y3-4*a1*t2^2*t3*y1*y3"
    "-4*a1*t2*t3^2*y1*y3+6*t1^2*y1^2*y3+6*t1^2*y2^2*y3+6*t2^2*y1^2*y3"
    "+6*t2^2*y2^2*y3+6*t3^2*y1^2*y3+6*t3^2*y2^2*y3-6*r0^2*t1^2*y3"
    "-6*r0^2*t2^2*y3-6*r0^2*t3^2*y3-6*r1^2*t1^2*y3-6*r1^2*t2^2*y3"
    "-6*r1^2*t3^2*y3+12*r0*r1*y3+2*a1*r1*t1^2*t2^2*y1+2*a1*r1*t1^2*t3^2*y1"
    "-4*a1*r1*t2^2*t3^2*y1-2*a1*r0*t1^2*t2^2*y1-2*a1*r0*t1^2*t3^2*y1"
    "+4*a1*r0*t2^2*t3^2*y1+4*a1^2*t1*y1-2*a1^2*t2*y1-2*a1^2*t3*y1"
    "+5*a1*t1^2*y1^2-a1*t2^2*y1^2-a1*t3^2*y1^2-a1*r0^2*t1^2-a1*r0^2*t2^2"
    "-a1*r0^2*t3^2-a1*r1^2*t1^2-a1*r1^2*t2^2-a1*r1^2*t3^2"
    "+3*a1*r0^2*t1^2*t2^2*t3^2+3*a1*r1^2*t1^2*t2^2*t3^2+6*a1*r0*r1"
    "-4*a1^2*r0*t1-4*a1^2*r0*t2-4*a1^2*r0*t3+4*a1^2*r1*t3-6*a1^2*t1^2*t2*y1"
    "-6*a1^2*t1^2*t3*y1+6*a1^2*t2^2*t3*y1+6*a1^2*t2*t3^2*y1-4*a1*r0*t1^2*y1"
    "+2*a1*r0*t2^2*y1+2*a1*r0*t3^2*y1+4*a1*r1*t1^2*y1-2*a1*r1*t2^2*y1"
    "-2*a1*r1*t3^2*y1+2*a1^2*t2*t3^2*y2*s3+a1*r0^2*t1^2*t2^2"
    "+a1*r1^2*t1^2*t2^2+2*a1*r0*r1*t1^2+2*a1*r0*r1*t2^2+4*a1^3*t1^2*t2*t3"
    "+4*a1^3*t1*t2^2*t3+4*a1^3*t1*t2*t3^2-3*a1*t1^2*y2^2+3*a1*t2^2*y2^2"
    "+3*a1*t3^2*y2^2"
)

# Degree-12 joint-space polynomials for design (3, 5, 11, 7).
JOINT_INPUT_PARS = (
    "32*t1^4*t2^4*t3^4+96*t1^4*t2^4*t3^3+96*t1^4*t2^3*t3^4+96*t1^3*t2^4*t3^4"
    "-16*t1^4*t2^4*t3^2+240*t1^4*t2^3*t3^3+160*t1^4*t2^2*t3^4"
    "+240*t1^3*t2^4*t3^3+288*t1^3*t2^3*t3^4+160*t1^2*t2^4*t3^4"
    "-32*t1^4*t2^4*t3+44*t1^4*t2^3*t3^2+272*t1^4*t2^2*t3^3+132*t1^4*t2*t3^4"
    "+44*t1^3*t2^4*t3^2+576*t1^3*t2^3*t3^3+480*t1^3*t2^2*t3^4"
    "+272*t1^2*t2^4*t3^3+480*t1^2*t2^3*t3^4+132*t1*t2^4*t3^4+48*t1^4*t2^4"
    "+16*t1^4*t2^3*t3+102*t1^4*t2^2*t3^2+80*t1^4*t2*t3^3+72*t1^4*t3^4"
    "+16*t1^3*t2^4*t3+152*t1^3*t2^3*t3^2+740*t1^3*t2^2*t3^3+396*t1^3*t2*t3^4"
    "+102*t1^2*t2^4*t3^2+740*t1^2*t2^3*t3^3+718*t1^2*t2^2*t3^4"
    "+80*t1*t2^4*t3^3+396*t1*t2^3*t3^4+72*t2^4*t3^4+156*t1^4*t2^3"
    "+192*t1^4*t2^2*t3-52*t1^4*t2*t3^2+32*t1^4*t3^3+156*t1^3*t2^4"
    "+409*t1^3*t2^2*t3^2+288*t1^3*t2*t3^3+216*t1^3*t3^4+192*t1^2*t2^4*t3"
    "+409*t1^2*t2^3*t3^2+962*t1^2*t2^2*t3^3+537*t1^2*t2*t3^4-52*t1*t2^4*t3^2"
    "+288*t1*t2^3*t3^3+537*t1*t2^2*t3^4+32*t2^4*t3^3+216*t2^3*t3^4"
    "+266*t1^4*t2^2+176*t1^4*t2*t3-80*t1^4*t3^2+360*t1^3*t2^3"
    "+348*t1^3*t2^2*t3+8*t1^3*t2*t3^2+176*t1^3*t3^3+266*t1^2*t2^4"
    "+348*t1^2*t2^3*t3+996*t1^2*t2^2*t3^2+348*t1^2*t2*t3^3+266*t1^2*t3^4"
    "+176*t1*t2^4*t3+8*t1*t2^3*t3^2+348*t1*t2^2*t3^3+360*t1*t2*t3^4"
    "-80*t2^4*t3^2+176*t2^3*t3^3+266*t2^2*t3^4+216*t1^4*t2+32*t1^4*t3"
    "+537*t1^3*t2^2+288*t1^3*t2*t3-52*t1^3*t3^2+537*t1^2*t2^3"
    "+962*t1^2*t2^2*t3+409*t1^2*t2*t3^2+192*t1^2*t3^3+216*t1*t2^4"
    "+288*t1*t2^3*t3+409*t1*t2^2*t3^2+156*t1*t3^4+32*t2^4*t3-52*t2^3*t3^2"
    "+192*t2^2*t3^3+156*t2*t3^4+72*t1^4+396*t1^3*t2+80*t1^3*t3+718*t1^2*t2^2"
    "+740*t1^2*t2*t3+102*t1^2*t3^2+396*t1*t2^3+740*t1*t2^2*t3+152*t1*t2*t3^2"
    "+16*t1*t3^3+72*t2^4+80*t2^3*t3+102*t2^2*t3^2+16*t2*t3^3+48*t3^4+132*t1^3"
    "+480*t1^2*t2+272*t1^2*t3+480*t1*t2^2+576*t1*t2*t3+44*t1*t3^2+132*t2^3"
    "+272*t2^2*t3+44*t2*t3^2-32*t3^3+160*t1^2+288*t1*t2+240*t1*t3+160*t2^2"
    "+240*t2*t3-16*t3^2+96*t1+96*t2+96*t3+32"
)

JOINT_OUTPUT_PARS = (
    "144*t1^4*t2^4*t3^4+32*t1^4*t2^4*t3^3+32*t1^4*t2^3*t3^4+32*t1^3*t2^4*t3^4"
    "-272*t1^4*t2^4*t3^2-520*t1^4*t2^3*t3^3-272*t1^4*t2^2*t3^4"
    "-520*t1^3*t2^4*t3^3-520*t1^3*t2^3*t3^4-272*t1^2*t2^4*t3^4"
    "-544*t1^4*t2^4*t3-1352*t1^4*t2^3*t3^2-1352*t1^4*t2^2*t3^3"
    "-544*t1^4*t2*t3^4-1352*t1^3*t2^4*t3^2-1656*t1^3*t2^3*t3^3"
    "-1352*t1^3*t2^2*t3^4-1352*t1^2*t2^4*t3^3-1352*t1^2*t2^3*t3^4"
    "-544*t1*t2^4*t3^4+16*t1^4*t2^4-1528*t1^4*t2^3*t3-3183*t1^4*t2^2*t3^2"
    "-1528*t1^4*t2*t3^3+16*t1^4*t3^4-1528*t1^3*t2^4*t3-3182*t1^3*t2^3*t3^2"
    "-3182*t1^3*t2^2*t3^3-1528*t1^3*t2*t3^4-3183*t1^2*t2^4*t3^2"
    "-3182*t1^2*t2^3*t3^3-3183*t1^2*t2^2*t3^4-1528*t1*t2^4*t3^3"
    "-1528*t1*t2^3*t3^4+16*t2^4*t3^4-448*t1^4*t2^3-2576*t1^4*t2^2*t3"
    "-2576*t1^4*t2*t3^2-448*t1^4*t3^3-448*t1^3*t2^4-2520*t1^3*t2^3*t3"
    "-6880*t1^3*t2^2*t3^2-2520*t1^3*t2*t3^3-448*t1^3*t3^4-2576*t1^2*t2^4*t3"
    "-6880*t1^2*t2^3*t3^2-6880*t1^2*t2^2*t3^3-2576*t1^2*t2*t3^4"
    "-2576*t1*t2^4*t3^2-2520*t1*t2^3*t3^3-2576*t1*t2^2*t3^4-448*t2^4*t3^3"
    "-448*t2^3*t3^4-928*t1^4*t2^2-1480*t1^4*t2*t3-928*t1^4*t3^2"
    "-1480*t1^3*t2^3-4562*t1^3*t2^2*t3-4562*t1^3*t2*t3^2-1480*t1^3*t3^3"
    "-928*t1^2*t2^4-4562*t1^2*t2^3*t3-12486*t1^2*t2^2*t3^2-4562*t1^2*t2*t3^3"
    "-928*t1^2*t3^4-1480*t1*t2^4*t3-4562*t1*t2^3*t3^2-4562*t1*t2^2*t3^3"
    "-1480*t1*t2*t3^4-928*t2^4*t3^2-1480*t2^3*t3^3-928*t2^2*t3^4-448*t1^4*t2"
    "-448*t1^4*t3-2576*t1^3*t2^2-2520*t1^3*t2*t3-2576*t1^3*t3^2"
    "-2576*t1^2*t2^3-6880*t1^2*t2^2*t3-6880*t1^2*t2*t3^2-2576*t1^2*t3^3"
    "-448*t1*t2^4-2520*t1*t2^3*t3-6880*t1*t2^2*t3^2-2520*t1*t2*t3^3"
    "-448*t1*t3^4-448*t2^4*t3-2576*t2^3*t3^2-2576*t2^2*t3^3-448*t2*t3^4"
    "+16*t1^4-1528*t1^3*t2-1528*t1^3*t3-3183*t1^2*t2^2-3182*t1^2*t2*t3"
    "-3183*t1^2*t3^2-1528*t1*t2^3-3182*t1*t2^2*t3-3182*t1*t2*t3^2"
    "-1528*t1*t3^3+16*t2^4-1528*t2^3*t3-3183*t2^2*t3^2-1528*t2*t3^3+16*t3^4"
    "-544*t1^3-1352*t1^2*t2-1352*t1^2*t3-1352*t1*t2^2-1656*t1*t2*t3"
    "-1352*t1*t3^2-544*t2^3-1352*t2^2*t3-1352*t2*t3^2-544*t3^3-272*t1^2"
    "-520*t1*t2-520*t1*t3-272*t2^2-520*t2*t3-272*t3^2+32*t1+32*t2+32*t3+144"
)


_TABLE = {
    "f1": F1, "f2": F2,
    "g2": WT_G2, "g4": WT_G4, "g6": WT_G6,
    "p1": P1, "p2": P2, "p3": P3,
    "root_p1_num": ROOT_P1_NUM, "root_p1_den": ROOT_P1_DEN,
    "leadcoeff_p1": LEADCOEFF_P1,
    "torus1": TORUS_LIMB1,
    "s1": S1, "s2": S2,
    "joint_input": JOINT_INPUT_PARS, "joint_output": JOINT_OUTPUT_PARS,
    "self_motion_factor": SELF_MOTION_FACTOR,
}

NAMES = tuple(_TABLE)


@lru_cache(maxsize=None)
def reference(name: str) -> MPoly:
    """Parsed reference polynomial (symbolic design where applicable)."""
    try:
        return parse(_TABLE[name])
    except KeyError:
        raise KeyError(f"no reference polynomial {name!r}; known: {', '.join(NAMES)}") from None


def circle_condition_pars() -> tuple[MPoly, ...]:
    return tuple(parse(e) for e in CIRCLE_CONDITION_PARS)
