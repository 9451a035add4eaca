"""Machine-generated closed-form partial derivatives. DO NOT EDIT.

Produced by tools/gen_partials.py (sympy differentiation + CSE). Each
fill_* function writes the nonzero entries of a preallocated, pre-zeroed
array; trailing-index-symmetric entries are written at every permutation
so the tensors are exactly symmetric. All inputs are nondimensional.
"""

import math

from ._jit import njit

@njit(cache=True)
def fill_jac_cons(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    ze = x[6]
    J2 = prm[0]
    Om = prm[1]
    cD = prm[2]
    LD = prm[3]
    csg = prm[4]
    ssg = prm[5]
    Hfac = prm[6]
    zref = prm[7]
    t0 = math.sin(ga)
    t1 = math.cos(ga)
    t2 = V*t1
    t3 = math.cos(ph)
    t4 = 1/t3
    t5 = math.sin(ps)
    t6 = t4*t5
    t7 = r**(-2)
    t8 = t2*t7
    t9 = math.sin(ph)
    t10 = t3**2
    t11 = 1/t10
    t12 = 1/r
    t13 = t12*t2
    t14 = t13*t5
    t15 = t1*t12
    t16 = V*t0
    t17 = math.cos(ps)
    t18 = t12*t17
    t19 = t0*t3
    t20 = t1*t9
    t21 = t17*t20
    t22 = t19 - t21
    t23 = Om**2
    t24 = t23*t3
    t25 = t9**2
    t26 = J2*(3/2 - 9/2*t25)
    t27 = t26*t7 + 1
    t28 = 2*t27/r**3
    t29 = r**(-5)
    t30 = 2*t26*t29
    t31 = t1*t3
    t32 = t17*t31
    t33 = t32*t9
    t34 = 12*J2*t29
    t35 = t0*t9
    t36 = r*t24
    t37 = r*t23
    t38 = t37*t9
    t39 = r**(-4)
    t40 = J2*t39
    t41 = 3*t40
    t42 = t17*t41
    t43 = t1*t42
    t44 = t19*t9
    t45 = t27*t7
    t46 = t17*t35
    t47 = t31 + t46
    t48 = t24*t47
    t49 = t17*t19
    t50 = t49*t9
    t51 = r*t48 + t41*t50
    t52 = t38*t5
    t53 = t41*t5
    t54 = 1/V
    t55 = V**2
    t56 = t55*t7
    t57 = 2*Om
    t58 = t5*t57
    t59 = V*t58
    t60 = t3*t58
    t61 = 1/t55
    t62 = t12*t55
    t63 = -t45 + t62
    t64 = t19*t52
    t65 = t44*t53
    t66 = 1/t1
    t67 = t20*t6
    t68 = t5*t66
    t69 = t68*t9
    t70 = t3*t69
    t71 = V*t57
    t72 = t1*t5*t62
    t73 = t37*t68
    t74 = t41*t68
    t75 = t57*(t49*t66 - t9)
    t76 = t17*t3
    t77 = t1**(-2)
    t78 = t66*t76
    out[0, 3] = t0
    out[0, 4] = t2
    out[1, 0] = -t6*t8
    out[1, 2] = t11*t14*t9
    out[1, 3] = t15*t6
    out[1, 4] = -t12*t16*t6
    out[1, 5] = t18*t2*t4
    out[2, 0] = -t17*t8
    out[2, 3] = t15*t17
    out[2, 4] = -t16*t18
    out[2, 5] = -t14
    out[3, 0] = t0*t28 + t0*t30 + t22*t24 + t33*t34
    out[3, 2] = -t10*t43 - t22*t38 + t25*t43 + t36*(-t32 - t35) + 9*t40*t44
    out[3, 4] = -t1*t45 + t51
    out[3, 5] = t31*t52 + t31*t53*t9
    out[4, 0] = t54*(t1*(t28 + t30 - t56) - t34*t50 + t48)
    out[4, 2] = t54*(3*J2*t0*t10*t17*t39 + 9*J2*t1*t3*t39*t9 + r*t23*t3*(-t20 + t49) - t0*t25*t42 - t38*t47 - t59*t9)
    out[4, 3] = t54*(2*t13 + t60) - t61*(V*t60 + t1*t63 + t51)
    out[4, 4] = t54*(-t0*t63 - t22*t36 + t33*t41)
    out[4, 5] = t54*(2*Om*V*t17*t3 - t64 - t65)
    out[5, 0] = t54*(t23*t3*t5*t66*t9 - t34*t70 - t56*t67)
    out[5, 2] = t54*(t10*t73 + t10*t74 + t11*t25*t72 - t25*t73 - t25*t74 - t71*(-t3 - t46*t66) + t72)
    out[5, 3] = t54*(2*V*t1*t12*t4*t5*t9 - t75) - t61*(-V*t75 + t36*t69 + t41*t70 + t62*t67)
    out[5, 4] = t54*(-t35*t6*t62 + t64*t77 + t65*t77 - t71*(t0**2*t76*t77 + t76))
    out[5, 5] = t54*(t19*t59*t66 + t21*t4*t62 + t38*t78 + t41*t78*t9)

@njit(cache=True)
def fill_hess_cons(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    ze = x[6]
    J2 = prm[0]
    Om = prm[1]
    cD = prm[2]
    LD = prm[3]
    csg = prm[4]
    ssg = prm[5]
    Hfac = prm[6]
    zref = prm[7]
    t0 = math.cos(ga)
    t1 = math.sin(ga)
    t2 = V*t1
    t3 = math.sin(ps)
    t4 = math.cos(ph)
    t5 = 1/t4
    t6 = t3*t5
    t7 = r**(-3)
    t8 = 2*t7
    t9 = V*t8
    t10 = r**(-2)
    t11 = V*t3
    t12 = t4**2
    t13 = 1/t12
    t14 = math.sin(ph)
    t15 = t0*t14
    t16 = t13*t15
    t17 = t0*t10
    t18 = t10*t2
    t19 = math.cos(ps)
    t20 = t17*t19
    t21 = V*t5
    t22 = 1/r
    t23 = t0*t22
    t24 = t23*t3
    t25 = t21*t24
    t26 = t14**2
    t27 = t4**(-3)
    t28 = 2*V*t24
    t29 = t22*t3
    t30 = t2*t29
    t31 = t15*t19
    t32 = t22*t31
    t33 = t1*t22
    t34 = t19*t23
    t35 = -t25
    t36 = t2*t22
    t37 = t0*t19
    t38 = -V*t34
    t39 = J2*(3/2 - 9/2*t26)
    t40 = t10*t39 + 1
    t41 = r**(-4)
    t42 = 6*t41
    t43 = t40*t42
    t44 = r**(-6)
    t45 = 14*t39*t44
    t46 = t0*t4
    t47 = t14*t19
    t48 = t46*t47
    t49 = 60*t44
    t50 = t1*t4
    t51 = -t31 + t50
    t52 = Om**2
    t53 = t14*t52
    t54 = t1*t14
    t55 = t19*t46 + t54
    t56 = -t55
    t57 = r**(-5)
    t58 = J2*t26
    t59 = t4*t54
    t60 = J2*t57
    t61 = 36*t60
    t62 = t40*t8
    t63 = 2*t39*t57
    t64 = t19*t54
    t65 = t46 + t64
    t66 = t4*t52
    t67 = t65*t66
    t68 = 12*t60
    t69 = t19*t4
    t70 = t54*t69
    t71 = t67 - t68*t70
    t72 = t3*t46
    t73 = t14*t72
    t74 = r*t66
    t75 = -t51
    t76 = r*t53
    t77 = 2*t76
    t78 = 9*t41
    t79 = t1*t58
    t80 = t19*t50
    t81 = -t15 + t80
    t82 = t53*t65
    t83 = r*t82
    t84 = 3*t41
    t85 = t19*t79*t84
    t86 = J2*t84
    t87 = t1*t12
    t88 = t19*t87
    t89 = J2*t78
    t90 = t14*t46
    t91 = t3*t52
    t92 = t26*t91
    t93 = t0*t3
    t94 = t58*t84
    t95 = t10*t40
    t96 = t48*t86
    t97 = r*t66*t75 + t96
    t98 = t3*t4
    t99 = t52*t54
    t100 = t98*t99
    t101 = r*t100
    t102 = t54*t98
    t103 = t102*t86
    t104 = t101 + t103
    t105 = r*t52
    t106 = 1/V
    t107 = V**2
    t108 = J2*t70
    t109 = 1/t107
    t110 = t10*t107
    t111 = -t110 + t62 + t63
    t112 = t102*t68
    t113 = r*t4*t52*t65
    t114 = 12*t41
    t115 = 2*Om
    t116 = t115*t98
    t117 = V*t116
    t118 = r*t67 + t117
    t119 = t115*t14
    t120 = t119*t3
    t121 = V*t115
    t122 = t1*t3
    t123 = 2*t23
    t124 = 2*t109
    t125 = t107*t22
    t126 = t125 - t95
    t127 = t70*t86
    t128 = t0*t126 + t127
    t129 = 2/V**3
    t130 = r*t69*t99
    t131 = t15*t6
    t132 = 1/t0
    t133 = t132*t98
    t134 = t133*t14
    t135 = J2*t134
    t136 = t132*t92
    t137 = t110*t93
    t138 = t12*t132
    t139 = t138*t3
    t140 = t13*t26
    t141 = 2*t131
    t142 = t0**(-2)
    t143 = t54*t6
    t144 = t31*t5
    t145 = t132*t47
    t146 = t145*t4
    t147 = t132*t80
    t148 = -t14 + t147
    t149 = t133*t76
    t150 = t115*(-t132*t64 - t4)
    t151 = t125*t93
    t152 = t132*t3
    t153 = t1**2
    t154 = t142*t153
    t155 = t122*t125
    t156 = t125*t37
    t157 = t138*t19
    t158 = t132*t19
    t159 = t132*t2
    t160 = t115*t148
    t161 = t125*t131
    t162 = t134*t86 + t149
    t163 = t161 + t162
    t164 = t115*(t154*t69 + t69)
    t165 = t0**(-3)
    t166 = t153*t165*t98
    v = t0
    out[0, 3, 4] = v
    out[0, 4, 3] = v
    out[0, 4, 4] = -t2
    out[1, 0, 0] = t0*t6*t9
    v = -t10*t11*t16
    out[1, 0, 2] = v
    out[1, 2, 0] = v
    v = -t17*t6
    out[1, 0, 3] = v
    out[1, 3, 0] = v
    v = t18*t6
    out[1, 0, 4] = v
    out[1, 4, 0] = v
    v = -t20*t21
    out[1, 0, 5] = v
    out[1, 5, 0] = v
    out[1, 2, 2] = t25 + t26*t27*t28
    v = t16*t29
    out[1, 2, 3] = v
    out[1, 3, 2] = v
    v = -t13*t14*t30
    out[1, 2, 4] = v
    out[1, 4, 2] = v
    v = V*t13*t32
    out[1, 2, 5] = v
    out[1, 5, 2] = v
    v = -t33*t6
    out[1, 3, 4] = v
    out[1, 4, 3] = v
    v = t34*t5
    out[1, 3, 5] = v
    out[1, 5, 3] = v
    out[1, 4, 4] = t35
    v = -t19*t36*t5
    out[1, 4, 5] = v
    out[1, 5, 4] = v
    out[1, 5, 5] = t35
    out[2, 0, 0] = t37*t9
    v = -t20
    out[2, 0, 3] = v
    out[2, 3, 0] = v
    v = t18*t19
    out[2, 0, 4] = v
    out[2, 4, 0] = v
    v = t11*t17
    out[2, 0, 5] = v
    out[2, 5, 0] = v
    v = -t19*t33
    out[2, 3, 4] = v
    out[2, 4, 3] = v
    v = -t24
    out[2, 3, 5] = v
    out[2, 5, 3] = v
    out[2, 4, 4] = t38
    v = t30
    out[2, 4, 5] = v
    out[2, 5, 4] = v
    out[2, 5, 5] = t38
    out[3, 0, 0] = -J2*t48*t49 - t1*t43 - t1*t45
    v = 12*J2*t0*t12*t19*t57 - 12*t37*t57*t58 + t4*t52*t56 - t51*t53 - t59*t61
    out[3, 0, 2] = v
    out[3, 2, 0] = v
    v = t0*t62 + t0*t63 + t71
    out[3, 0, 4] = v
    out[3, 4, 0] = v
    v = t0*t14*t3*t4*t52 - t68*t73
    out[3, 0, 5] = v
    out[3, 5, 0] = v
    out[3, 2, 2] = 12*J2*t0*t14*t19*t4*t41 + 9*J2*t1*t12*t41 + r*t4*t52*t75 - t51*t74 - t56*t77 - t78*t79
    v = r*t66*t81 - t83 - t85 + t86*t88 + t89*t90
    out[3, 2, 4] = v
    out[3, 4, 2] = v
    v = 3*J2*t0*t12*t3*t41 + r*t0*t12*t3*t52 - r*t0*t92 - t93*t94
    out[3, 2, 5] = v
    out[3, 5, 2] = v
    out[3, 4, 4] = t1*t95 + t97
    v = -t104
    out[3, 4, 5] = v
    out[3, 5, 4] = v
    out[3, 5, 5] = t105*t48 + t96
    out[4, 0, 0] = t106*(t0*(2*t107*t7 - t43 - t45) + t108*t49)
    v = t106*(12*J2*t1*t19*t26*t57 + t4*t52*t81 - t61*t90 - t68*t88 - t82)
    out[4, 0, 2] = v
    out[4, 2, 0] = v
    v = -t109*(t0*t111 + t71) - 2*t17
    out[4, 0, 3] = v
    out[4, 3, 0] = v
    v = t106*(-t1*t111 + t4*t52*t75 - t48*t68)
    out[4, 0, 4] = v
    out[4, 4, 0] = v
    v = t106*(-t100 + t112)
    out[4, 0, 5] = v
    out[4, 5, 0] = v
    out[4, 2, 2] = t106*(9*J2*t0*t12*t41 - t0*t58*t78 - t108*t114 - t113 - t118 - t77*t81)
    v = -t106*t120 - t109*(9*J2*t0*t14*t4*t41 + 3*J2*t1*t12*t19*t41 + r*t4*t52*t81 - t11*t119 - t83 - t85)
    out[4, 2, 3] = v
    out[4, 3, 2] = v
    v = t106*(3*J2*t0*t12*t19*t41 + r*t4*t52*t55 - t37*t94 - t59*t89 - t75*t76)
    out[4, 2, 4] = v
    out[4, 4, 2] = v
    v = t106*(3*J2*t1*t26*t3*t41 + r*t1*t26*t3*t52 - r*t87*t91 - t12*t122*t86 - t121*t47)
    out[4, 2, 5] = v
    out[4, 5, 2] = v
    out[4, 3, 3] = t106*t123 - t124*(V*t123 + t116) + t129*(t118 + t128)
    v = -t109*(-t1*t126 + t97) - 2*t33
    out[4, 3, 4] = v
    out[4, 4, 3] = v
    v = t106*t115*t69 - t109*(2*Om*V*t19*t4 - t104)
    out[4, 3, 5] = v
    out[4, 5, 3] = v
    out[4, 4, 4] = t106*(-t113 - t128)
    v = t106*(-t72*t76 - t73*t86)
    out[4, 4, 5] = v
    out[4, 5, 4] = v
    out[4, 5, 5] = t106*(-t117 - t127 - t130)
    out[5, 0, 0] = t106*(t107*t131*t8 + t135*t49)
    v = t106*(12*J2*t132*t26*t3*t57 + t12*t132*t3*t52 - t136 - t137*t140 - t137 - t139*t68)
    out[5, 0, 2] = v
    out[5, 2, 0] = v
    v = -t10*t141 - t109*(-t110*t131 + t132*t14*t3*t4*t52 - t134*t68)
    out[5, 0, 3] = v
    out[5, 3, 0] = v
    v = t106*(t100*t142 + t110*t143 - t112*t142)
    out[5, 0, 4] = v
    out[5, 4, 0] = v
    v = t106*(-t110*t144 + t132*t14*t19*t4*t52 - t146*t68)
    out[5, 0, 5] = v
    out[5, 5, 0] = v
    out[5, 2, 2] = t106*(2*t0*t107*t14**3*t22*t27*t3 + 2*t0*t107*t14*t22*t3*t5 - t114*t135 + t121*t148 - 4*t149)
    v = t106*(t140*t28 - t150 + t28) - t109*(-V*t150 - r*t136 + r*t138*t91 + t139*t86 + t140*t151 + t151 - t152*t94)
    out[5, 2, 3] = v
    out[5, 3, 2] = v
    v = t106*(3*J2*t1*t12*t142*t3*t41 + r*t1*t12*t142*t3*t52 - r*t1*t142*t92 - t121*(-t154*t47 - t47) - t122*t142*t94 - t140*t155 - t155)
    out[5, 2, 4] = v
    out[5, 4, 2] = v
    v = t106*(t105*t157 - t105*t158*t26 - t120*t159 + t140*t156 + t156 + t157*t86 - t158*t94)
    out[5, 2, 5] = v
    out[5, 5, 2] = v
    out[5, 3, 3] = t106*t141*t22 - t124*(2*V*t0*t14*t22*t3*t5 - t160) + t129*(-V*t160 + t163)
    v = t106*(-2*t14*t36*t6 - t164) - t109*(-V*t164 + t101*t142 + t103*t142 - t125*t143)
    out[5, 3, 4] = v
    out[5, 4, 3] = v
    v = t106*(t115*t152*t50 + 2*t21*t32) - t109*(t116*t159 + t125*t144 + t145*t74 + t146*t86)
    out[5, 3, 5] = v
    out[5, 5, 3] = v
    out[5, 4, 4] = t106*(J2*t14*t166*t42 - t121*(2*t1**3*t165*t69 + 2*t147) - t161 + t162 + t166*t77)
    v = t106*(-t121*(-t154*t98 - t98) - t125*t5*t64 + t127*t142 + t130*t142)
    out[5, 4, 5] = v
    out[5, 5, 4] = v
    out[5, 5, 5] = t106*(2*Om*V*t1*t132*t19*t4 - t163)

@njit(cache=True)
def fill_cubic_cons(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    ze = x[6]
    J2 = prm[0]
    Om = prm[1]
    cD = prm[2]
    LD = prm[3]
    csg = prm[4]
    ssg = prm[5]
    Hfac = prm[6]
    zref = prm[7]
    t0 = math.sin(ga)
    t1 = math.cos(ga)
    t2 = V*t1
    t3 = math.sin(ps)
    t4 = math.cos(ph)
    t5 = 1/t4
    t6 = t3*t5
    t7 = r**(-4)
    t8 = 6*t7
    t9 = t2*t8
    t10 = r**(-3)
    t11 = 2*t10
    t12 = t11*t2
    t13 = t4**2
    t14 = 1/t13
    t15 = math.sin(ph)
    t16 = t15*t3
    t17 = t14*t16
    t18 = t11*t6
    t19 = math.cos(ps)
    t20 = t19*t5
    t21 = r**(-2)
    t22 = t2*t21
    t23 = t22*t6
    t24 = 2*t3
    t25 = t22*t24
    t26 = t15**2
    t27 = t4**(-3)
    t28 = t26*t27
    t29 = t14*t3
    t30 = t1*t15
    t31 = t21*t30
    t32 = V*t3
    t33 = t0*t15
    t34 = t21*t33
    t35 = t15*t19
    t36 = t0*t21
    t37 = t1*t21
    t38 = t19*t36
    t39 = V*t5
    t40 = 1/r
    t41 = t2*t40
    t42 = t17*t41
    t43 = 6/t4**4
    t44 = t15**3
    t45 = t3*t41
    t46 = t44*t45
    t47 = t1*t40
    t48 = t47*t6
    t49 = 2*t47
    t50 = t3*t49
    t51 = t26*t50
    t52 = t0*t40
    t53 = t3*t52
    t54 = t39*t53
    t55 = 2*V
    t56 = t53*t55
    t57 = t20*t41
    t58 = 2*t41
    t59 = t19*t58
    t60 = t33*t40
    t61 = t19*t30
    t62 = t14*t40
    t63 = -t42
    t64 = t19*t33
    t65 = -t48
    t66 = -t57
    t67 = t1*t19
    t68 = V*t19
    t69 = t19*t22
    t70 = -t19*t47
    t71 = t52*t68
    t72 = J2*(3/2 - 9/2*t26)
    t73 = t21*t72 + 1
    t74 = r**(-5)
    t75 = 24*t74
    t76 = t73*t75
    t77 = r**(-7)
    t78 = 96*t72*t77
    t79 = t19*t4
    t80 = t30*t79
    t81 = J2*t80
    t82 = 360*t77
    t83 = t13*t67
    t84 = r**(-6)
    t85 = J2*t84
    t86 = 60*t85
    t87 = t26*t67
    t88 = t0*t4
    t89 = t15*t88
    t90 = 180*t85
    t91 = t73*t8
    t92 = 14*t72*t84
    t93 = t3*t4
    t94 = t30*t93
    t95 = -t1*t15*t19 + t88
    t96 = Om**2
    t97 = t4*t96
    t98 = t95*t97
    t99 = -t95
    t100 = -t4*t96*t99
    t101 = t1*t4
    t102 = t101*t19 + t33
    t103 = -t102
    t104 = t15*t96
    t105 = 2*t104
    t106 = 36*t74
    t107 = J2*t0
    t108 = t107*t13
    t109 = 48*t74
    t110 = t101 + t64
    t111 = t104*t110
    t112 = t19*t88
    t113 = t112 - t30
    t114 = t0*t19
    t115 = t114*t13
    t116 = 12*t74
    t117 = J2*t116
    t118 = t30*t4
    t119 = J2*t106
    t120 = 12*J2*t0*t19*t26*t74 - t111 + t113*t4*t96 - t115*t117 - t118*t119
    t121 = t3*t96
    t122 = t1*t13
    t123 = t121*t122
    t124 = t121*t26
    t125 = t1*t124
    t126 = J2*t122
    t127 = t116*t3
    t128 = J2*t1
    t129 = t127*t26
    t130 = t11*t73
    t131 = 2*t72*t74
    t132 = t117*t80
    t133 = t100 + t132
    t134 = t88*t96
    t135 = t134*t16
    t136 = t16*t88
    t137 = t117*t136
    t138 = -t135 + t137
    t139 = -r*t102*t4*t96
    t140 = t104*t99
    t141 = r*t140
    t142 = r*t97
    t143 = J2*t7
    t144 = 12*t143
    t145 = 36*t143
    t146 = t110*t97
    t147 = r*t146
    t148 = -t110
    t149 = -r*t148*t4*t96
    t150 = t105*t113
    t151 = 9*t7
    t152 = t35*t88
    t153 = -9*J2*t1*t13*t7 + r*t150 + t128*t151*t26 + t144*t152 + t149
    t154 = t30*t96
    t155 = t154*t93
    t156 = r*t155
    t157 = J2*t151
    t158 = 3*t143
    t159 = -3*J2*t1*t13*t19*t7 + t158*t87
    t160 = -t139 - t141 - t157*t89 - t159
    t161 = t0*t124
    t162 = r*t161
    t163 = t121*t13
    t164 = t0*t163
    t165 = r*t164
    t166 = 3*t3*t7
    t167 = t108*t166
    t168 = t166*t26
    t169 = t107*t168
    t170 = t26*t96
    t171 = t21*t73
    t172 = t148*t97
    t173 = t152*t158
    t174 = -t156 - t158*t94
    t175 = t134*t35
    t176 = r*t175
    t177 = t173 + t176
    t178 = 1/V
    t179 = V**2
    t180 = t179*t8
    t181 = J2*t152
    t182 = t114*t26
    t183 = 1/t179
    t184 = 2*t10*t179 - t91 - t92
    t185 = 4*t10
    t186 = t136*t86
    t187 = t107*t129
    t188 = t179*t21
    t189 = t130 + t131 - t188
    t190 = t1*t189
    t191 = t117*t152
    t192 = V**(-3)
    t193 = 2*t192
    t194 = 2*t178
    t195 = r*t111
    t196 = -t113
    t197 = r*t104
    t198 = t148*t197
    t199 = 2*Om
    t200 = V*t199
    t201 = t16*t200
    t202 = t199*t93
    t203 = V*t202
    t204 = t147 + t203
    t205 = t178*t202
    t206 = r*t97*t99
    t207 = -t200*t79
    t208 = r*t135
    t209 = 4*t208
    t210 = t136*t144
    t211 = t118*t157
    t212 = t115*t158
    t213 = t158*t182
    t214 = t201 - t212 + t213
    t215 = 4*t16
    t216 = Om*t183
    t217 = r*t114
    t218 = t170*t217
    t219 = t13*t96
    t220 = t179*t40
    t221 = -t171 + t220
    t222 = t1*t221 + t173
    t223 = 6/V**4
    t224 = 6*t183
    t225 = t0*t221
    t226 = t158*t80
    t227 = t136*t158
    t228 = t208 + t227
    t229 = t207 + t228
    t230 = 4*t79
    t231 = t30*t6
    t232 = 1/t1
    t233 = t16*t232
    t234 = t233*t4
    t235 = t11*t179
    t236 = t1*t235
    t237 = t232*t3
    t238 = t237*t86
    t239 = t26*t29
    t240 = t33*t6
    t241 = t1**(-2)
    t242 = t5*t61
    t243 = t232*t79
    t244 = t15*t243
    t245 = t232*t97
    t246 = t188*t231
    t247 = t188*t3
    t248 = t1*t247
    t249 = 2*t27*t44
    t250 = t124*t232
    t251 = t14*t26
    t252 = t0*t247
    t253 = t19*t232
    t254 = t170*t253
    t255 = t188*t67
    t256 = t117*t234
    t257 = -t15*t232*t3*t4*t96 + t246 + t256
    t258 = t194*t6
    t259 = t0**2
    t260 = t1**(-3)
    t261 = t259*t260
    t262 = 2*t261
    t263 = t16*t262
    t264 = J2*t261
    t265 = t16*t4
    t266 = t5*t64
    t267 = t232*t64
    t268 = t267 + t4
    t269 = t220*t3
    t270 = t1*t269
    t271 = t144*t237
    t272 = r*t163*t232
    t273 = r*t250
    t274 = t251*t270
    t275 = t112*t232
    t276 = -t15 + t275
    t277 = -t199*t276
    t278 = t241*t259
    t279 = t278*t79
    t280 = t279 + t79
    t281 = -t200*t280
    t282 = t220*t240
    t283 = t0*t269
    t284 = t232*t88
    t285 = t199*t284
    t286 = t285*t32
    t287 = -t199*t268
    t288 = 2*t45
    t289 = 2*t183
    t290 = t158*t237
    t291 = t26*t290
    t292 = t13*t290
    t293 = t270 + t274
    t294 = t272 - t273 - t291 + t292 + t293
    t295 = t199*(-t278*t35 - t35)
    t296 = t199*t33
    t297 = t220*t67
    t298 = t158*t253
    t299 = t0**3
    t300 = t260*t299
    t301 = 2*t300
    t302 = t264*t8
    t303 = t114*t220
    t304 = t199*t276
    t305 = t5*t58
    t306 = t16*t305
    t307 = -t306
    t308 = t220*t231
    t309 = t142*t233 + t158*t234
    t310 = t308 + t309
    t311 = t199*t280
    t312 = t208*t241
    t313 = t227*t241 - t282 + t312
    t314 = t220*t242
    t315 = t158*t244 + t197*t243
    t316 = t286 + t314 + t315
    t317 = 2*t79
    t318 = t199*(2*t275 + t300*t317)
    t319 = t199*(-t278*t93 - t93)
    t320 = t1**(-4)
    t321 = 6*t320
    v = -t0
    out[0, 3, 4, 4] = v
    out[0, 4, 3, 4] = v
    out[0, 4, 4, 3] = v
    out[0, 4, 4, 4] = -t2
    out[1, 0, 0, 0] = -t6*t9
    v = t12*t17
    out[1, 0, 0, 2] = v
    out[1, 0, 2, 0] = v
    out[1, 2, 0, 0] = v
    v = t1*t18
    out[1, 0, 0, 3] = v
    out[1, 0, 3, 0] = v
    out[1, 3, 0, 0] = v
    v = -V*t0*t18
    out[1, 0, 0, 4] = v
    out[1, 0, 4, 0] = v
    out[1, 4, 0, 0] = v
    v = t12*t20
    out[1, 0, 0, 5] = v
    out[1, 0, 5, 0] = v
    out[1, 5, 0, 0] = v
    v = -t23 - t25*t28
    out[1, 0, 2, 2] = v
    out[1, 2, 0, 2] = v
    out[1, 2, 2, 0] = v
    v = -t29*t31
    out[1, 0, 2, 3] = v
    out[1, 0, 3, 2] = v
    out[1, 2, 0, 3] = v
    out[1, 2, 3, 0] = v
    out[1, 3, 0, 2] = v
    out[1, 3, 2, 0] = v
    v = t14*t32*t34
    out[1, 0, 2, 4] = v
    out[1, 0, 4, 2] = v
    out[1, 2, 0, 4] = v
    out[1, 2, 4, 0] = v
    out[1, 4, 0, 2] = v
    out[1, 4, 2, 0] = v
    v = -t14*t22*t35
    out[1, 0, 2, 5] = v
    out[1, 0, 5, 2] = v
    out[1, 2, 0, 5] = v
    out[1, 2, 5, 0] = v
    out[1, 5, 0, 2] = v
    out[1, 5, 2, 0] = v
    v = t36*t6
    out[1, 0, 3, 4] = v
    out[1, 0, 4, 3] = v
    out[1, 3, 0, 4] = v
    out[1, 3, 4, 0] = v
    out[1, 4, 0, 3] = v
    out[1, 4, 3, 0] = v
    v = -t20*t37
    out[1, 0, 3, 5] = v
    out[1, 0, 5, 3] = v
    out[1, 3, 0, 5] = v
    out[1, 3, 5, 0] = v
    out[1, 5, 0, 3] = v
    out[1, 5, 3, 0] = v
    v = t23
    out[1, 0, 4, 4] = v
    out[1, 4, 0, 4] = v
    out[1, 4, 4, 0] = v
    v = t38*t39
    out[1, 0, 4, 5] = v
    out[1, 0, 5, 4] = v
    out[1, 4, 0, 5] = v
    out[1, 4, 5, 0] = v
    out[1, 5, 0, 4] = v
    out[1, 5, 4, 0] = v
    v = t23
    out[1, 0, 5, 5] = v
    out[1, 5, 0, 5] = v
    out[1, 5, 5, 0] = v
    out[1, 2, 2, 2] = 5*t42 + t43*t46
    v = t27*t51 + t48
    out[1, 2, 2, 3] = v
    out[1, 2, 3, 2] = v
    out[1, 3, 2, 2] = v
    v = -t28*t56 - t54
    out[1, 2, 2, 4] = v
    out[1, 2, 4, 2] = v
    out[1, 4, 2, 2] = v
    v = t28*t59 + t57
    out[1, 2, 2, 5] = v
    out[1, 2, 5, 2] = v
    out[1, 5, 2, 2] = v
    v = -t29*t60
    out[1, 2, 3, 4] = v
    out[1, 2, 4, 3] = v
    out[1, 3, 2, 4] = v
    out[1, 3, 4, 2] = v
    out[1, 4, 2, 3] = v
    out[1, 4, 3, 2] = v
    v = t61*t62
    out[1, 2, 3, 5] = v
    out[1, 2, 5, 3] = v
    out[1, 3, 2, 5] = v
    out[1, 3, 5, 2] = v
    out[1, 5, 2, 3] = v
    out[1, 5, 3, 2] = v
    v = t63
    out[1, 2, 4, 4] = v
    out[1, 4, 2, 4] = v
    out[1, 4, 4, 2] = v
    v = -V*t62*t64
    out[1, 2, 4, 5] = v
    out[1, 2, 5, 4] = v
    out[1, 4, 2, 5] = v
    out[1, 4, 5, 2] = v
    out[1, 5, 2, 4] = v
    out[1, 5, 4, 2] = v
    v = t63
    out[1, 2, 5, 5] = v
    out[1, 5, 2, 5] = v
    out[1, 5, 5, 2] = v
    v = t65
    out[1, 3, 4, 4] = v
    out[1, 4, 3, 4] = v
    out[1, 4, 4, 3] = v
    v = -t20*t52
    out[1, 3, 4, 5] = v
    out[1, 3, 5, 4] = v
    out[1, 4, 3, 5] = v
    out[1, 4, 5, 3] = v
    out[1, 5, 3, 4] = v
    out[1, 5, 4, 3] = v
    v = t65
    out[1, 3, 5, 5] = v
    out[1, 5, 3, 5] = v
    out[1, 5, 5, 3] = v
    out[1, 4, 4, 4] = t54
    v = t66
    out[1, 4, 4, 5] = v
    out[1, 4, 5, 4] = v
    out[1, 5, 4, 4] = v
    v = t54
    out[1, 4, 5, 5] = v
    out[1, 5, 4, 5] = v
    out[1, 5, 5, 4] = v
    out[1, 5, 5, 5] = t66
    out[2, 0, 0, 0] = -t19*t9
    v = t11*t67
    out[2, 0, 0, 3] = v
    out[2, 0, 3, 0] = v
    out[2, 3, 0, 0] = v
    v = -t0*t11*t68
    out[2, 0, 0, 4] = v
    out[2, 0, 4, 0] = v
    out[2, 4, 0, 0] = v
    v = -t12*t3
    out[2, 0, 0, 5] = v
    out[2, 0, 5, 0] = v
    out[2, 5, 0, 0] = v
    v = t38
    out[2, 0, 3, 4] = v
    out[2, 0, 4, 3] = v
    out[2, 3, 0, 4] = v
    out[2, 3, 4, 0] = v
    out[2, 4, 0, 3] = v
    out[2, 4, 3, 0] = v
    v = t3*t37
    out[2, 0, 3, 5] = v
    out[2, 0, 5, 3] = v
    out[2, 3, 0, 5] = v
    out[2, 3, 5, 0] = v
    out[2, 5, 0, 3] = v
    out[2, 5, 3, 0] = v
    v = t69
    out[2, 0, 4, 4] = v
    out[2, 4, 0, 4] = v
    out[2, 4, 4, 0] = v
    v = -t32*t36
    out[2, 0, 4, 5] = v
    out[2, 0, 5, 4] = v
    out[2, 4, 0, 5] = v
    out[2, 4, 5, 0] = v
    out[2, 5, 0, 4] = v
    out[2, 5, 4, 0] = v
    v = t69
    out[2, 0, 5, 5] = v
    out[2, 5, 0, 5] = v
    out[2, 5, 5, 0] = v
    v = t70
    out[2, 3, 4, 4] = v
    out[2, 4, 3, 4] = v
    out[2, 4, 4, 3] = v
    v = t53
    out[2, 3, 4, 5] = v
    out[2, 3, 5, 4] = v
    out[2, 4, 3, 5] = v
    out[2, 4, 5, 3] = v
    out[2, 5, 3, 4] = v
    out[2, 5, 4, 3] = v
    v = t70
    out[2, 3, 5, 5] = v
    out[2, 5, 3, 5] = v
    out[2, 5, 5, 3] = v
    out[2, 4, 4, 4] = t71
    v = t45
    out[2, 4, 4, 5] = v
    out[2, 4, 5, 4] = v
    out[2, 5, 4, 4] = v
    v = t71
    out[2, 4, 5, 5] = v
    out[2, 5, 4, 5] = v
    out[2, 5, 5, 4] = v
    out[2, 5, 5, 5] = t45
    out[3, 0, 0, 0] = t0*t76 + t0*t78 + t81*t82
    v = -t83*t86 + t86*t87 + t89*t90
    out[3, 0, 0, 2] = v
    out[3, 0, 2, 0] = v
    out[3, 2, 0, 0] = v
    v = 60*J2*t0*t15*t19*t4*t84 - t1*t91 - t1*t92
    out[3, 0, 0, 4] = v
    out[3, 0, 4, 0] = v
    out[3, 4, 0, 0] = v
    v = t86*t94
    out[3, 0, 0, 5] = v
    out[3, 0, 5, 0] = v
    out[3, 5, 0, 0] = v
    v = 36*J2*t0*t26*t74 - t100 - t103*t105 - t106*t108 - t109*t81 - t98
    out[3, 0, 2, 2] = v
    out[3, 2, 0, 2] = v
    out[3, 2, 2, 0] = v
    v = t120
    out[3, 0, 2, 4] = v
    out[3, 0, 4, 2] = v
    out[3, 2, 0, 4] = v
    out[3, 2, 4, 0] = v
    out[3, 4, 0, 2] = v
    out[3, 4, 2, 0] = v
    v = t123 - t125 - t126*t127 + t128*t129
    out[3, 0, 2, 5] = v
    out[3, 0, 5, 2] = v
    out[3, 2, 0, 5] = v
    out[3, 2, 5, 0] = v
    out[3, 5, 0, 2] = v
    out[3, 5, 2, 0] = v
    v = -t0*t130 - t0*t131 - t133
    out[3, 0, 4, 4] = v
    out[3, 4, 0, 4] = v
    out[3, 4, 4, 0] = v
    v = t138
    out[3, 0, 4, 5] = v
    out[3, 0, 5, 4] = v
    out[3, 4, 0, 5] = v
    out[3, 4, 5, 0] = v
    out[3, 5, 0, 4] = v
    out[3, 5, 4, 0] = v
    v = t1*t15*t19*t4*t96 - t132
    out[3, 0, 5, 5] = v
    out[3, 5, 0, 5] = v
    out[3, 5, 5, 0] = v
    out[3, 2, 2, 2] = 12*J2*t1*t13*t19*t7 + r*t15*t95*t96 - 3*t103*t142 - t139 - 3*t141 - t144*t87 - t145*t89
    v = -t147 - t153
    out[3, 2, 2, 4] = v
    out[3, 2, 4, 2] = v
    out[3, 4, 2, 2] = v
    v = -t144*t94 - 4*t156
    out[3, 2, 2, 5] = v
    out[3, 2, 5, 2] = v
    out[3, 5, 2, 2] = v
    v = t160
    out[3, 2, 4, 4] = v
    out[3, 4, 2, 4] = v
    out[3, 4, 4, 2] = v
    v = t162 - t165 - t167 + t169
    out[3, 2, 4, 5] = v
    out[3, 2, 5, 4] = v
    out[3, 4, 2, 5] = v
    out[3, 4, 5, 2] = v
    out[3, 5, 2, 4] = v
    out[3, 5, 4, 2] = v
    v = r*t1*t13*t19*t96 - r*t170*t67 - t159
    out[3, 2, 5, 5] = v
    out[3, 5, 2, 5] = v
    out[3, 5, 5, 2] = v
    out[3, 4, 4, 4] = r*t172 + t1*t171 - t173
    v = t174
    out[3, 4, 4, 5] = v
    out[3, 4, 5, 4] = v
    out[3, 5, 4, 4] = v
    v = -t177
    out[3, 4, 5, 5] = v
    out[3, 5, 4, 5] = v
    out[3, 5, 5, 4] = v
    out[3, 5, 5, 5] = t174
    out[4, 0, 0, 0] = t178*(t1*(-t180 + t76 + t78) - t181*t82)
    v = t178*(t115*t86 + t118*t90 - t182*t86)
    out[4, 0, 0, 2] = v
    out[4, 0, 2, 0] = v
    out[4, 2, 0, 0] = v
    v = t1*t185 - t183*(t1*t184 + t152*t86)
    out[4, 0, 0, 3] = v
    out[4, 0, 3, 0] = v
    out[4, 3, 0, 0] = v
    v = t178*(-t0*t184 + t80*t86)
    out[4, 0, 0, 4] = v
    out[4, 0, 4, 0] = v
    out[4, 4, 0, 0] = v
    v = -t178*t186
    out[4, 0, 0, 5] = v
    out[4, 0, 5, 0] = v
    out[4, 5, 0, 0] = v
    v = t178*(-t106*t126 + t106*t128*t26 + t109*t181 - t146 - t150 + t172)
    out[4, 0, 2, 2] = v
    out[4, 2, 0, 2] = v
    out[4, 2, 2, 0] = v
    v = -t120*t183
    out[4, 0, 2, 3] = v
    out[4, 0, 3, 2] = v
    out[4, 2, 0, 3] = v
    out[4, 2, 3, 0] = v
    out[4, 3, 0, 2] = v
    out[4, 3, 2, 0] = v
    v = t178*(t102*t97 - t117*t83 + t117*t87 + t119*t89 - t140)
    out[4, 0, 2, 4] = v
    out[4, 0, 4, 2] = v
    out[4, 2, 0, 4] = v
    out[4, 2, 4, 0] = v
    out[4, 4, 0, 2] = v
    out[4, 4, 2, 0] = v
    v = t178*(12*J2*t0*t13*t3*t74 + t0*t26*t3*t96 - t164 - t187)
    out[4, 0, 2, 5] = v
    out[4, 0, 5, 2] = v
    out[4, 2, 0, 5] = v
    out[4, 2, 5, 0] = v
    out[4, 5, 0, 2] = v
    out[4, 5, 2, 0] = v
    v = t193*(t146 + t190 - t191) + t194*t37
    out[4, 0, 3, 3] = v
    out[4, 3, 0, 3] = v
    out[4, 3, 3, 0] = v
    v = -t183*(-t0*t189 - t133) + 2*t36
    out[4, 0, 3, 4] = v
    out[4, 0, 4, 3] = v
    out[4, 3, 0, 4] = v
    out[4, 3, 4, 0] = v
    out[4, 4, 0, 3] = v
    out[4, 4, 3, 0] = v
    v = -t138*t183
    out[4, 0, 3, 5] = v
    out[4, 0, 5, 3] = v
    out[4, 3, 0, 5] = v
    out[4, 3, 5, 0] = v
    out[4, 5, 0, 3] = v
    out[4, 5, 3, 0] = v
    v = t178*(t172 - t190 + t191)
    out[4, 0, 4, 4] = v
    out[4, 4, 0, 4] = v
    out[4, 4, 4, 0] = v
    v = t178*(t117*t94 - t155)
    out[4, 0, 4, 5] = v
    out[4, 0, 5, 4] = v
    out[4, 4, 0, 5] = v
    out[4, 4, 5, 0] = v
    out[4, 5, 0, 4] = v
    out[4, 5, 4, 0] = v
    v = t178*(-t175 + t191)
    out[4, 0, 5, 5] = v
    out[4, 5, 0, 5] = v
    out[4, 5, 5, 0] = v
    out[4, 2, 2, 2] = t178*(-3*r*t113*t97 - t115*t144 - t118*t145 + t142*t196 + t144*t182 + t195 - 3*t198 + t201)
    v = -t183*(-t153 - t204) - t205
    out[4, 2, 2, 3] = v
    out[4, 2, 3, 2] = v
    out[4, 3, 2, 2] = v
    v = t178*(9*J2*t0*t26*t7 - r*t102*t105 + r*t4*t95*t96 - t108*t151 - t144*t80 - t206)
    out[4, 2, 2, 4] = v
    out[4, 2, 4, 2] = v
    out[4, 4, 2, 2] = v
    v = t178*(t207 + t209 + t210)
    out[4, 2, 2, 5] = v
    out[4, 2, 5, 2] = v
    out[4, 5, 2, 2] = v
    v = t193*(r*t113*t4*t96 - t195 + t211 - t214) + t215*t216
    out[4, 2, 3, 3] = v
    out[4, 3, 2, 3] = v
    out[4, 3, 3, 2] = v
    v = -t160*t183
    out[4, 2, 3, 4] = v
    out[4, 2, 4, 3] = v
    out[4, 3, 2, 4] = v
    out[4, 3, 4, 2] = v
    out[4, 4, 2, 3] = v
    out[4, 4, 3, 2] = v
    v = -t178*t199*t35 - t183*(3*J2*t0*t26*t3*t7 + r*t0*t26*t3*t96 - t165 - t167 - t200*t35)
    out[4, 2, 3, 5] = v
    out[4, 2, 5, 3] = v
    out[4, 3, 2, 5] = v
    out[4, 3, 5, 2] = v
    out[4, 5, 2, 3] = v
    out[4, 5, 3, 2] = v
    v = t178*(r*t196*t4*t96 - t198 - t211 - t212 + t213)
    out[4, 2, 4, 4] = v
    out[4, 4, 2, 4] = v
    out[4, 4, 4, 2] = v
    v = t178*(-r*t123 + r*t125 - t126*t166 + t128*t168)
    out[4, 2, 4, 5] = v
    out[4, 2, 5, 4] = v
    out[4, 4, 2, 5] = v
    out[4, 4, 5, 2] = v
    out[4, 5, 2, 4] = v
    out[4, 5, 4, 2] = v
    v = t178*(t214 - t217*t219 + t218)
    out[4, 2, 5, 5] = v
    out[4, 5, 2, 5] = v
    out[4, 5, 5, 2] = v
    out[4, 3, 3, 3] = 6*t192*(t202 + t58) - t223*(t204 + t222) - t224*t47
    v = t193*(t206 - t225 + t226) + t194*t52
    out[4, 3, 3, 4] = v
    out[4, 3, 4, 3] = v
    out[4, 4, 3, 3] = v
    v = -2*t192*t229 - t216*t230
    out[4, 3, 3, 5] = v
    out[4, 3, 5, 3] = v
    out[4, 5, 3, 3] = v
    v = -t183*(-t149 - t222) - t49
    out[4, 3, 4, 4] = v
    out[4, 4, 3, 4] = v
    out[4, 4, 4, 3] = v
    v = -t174*t183
    out[4, 3, 4, 5] = v
    out[4, 3, 5, 4] = v
    out[4, 4, 3, 5] = v
    out[4, 4, 5, 3] = v
    out[4, 5, 3, 4] = v
    out[4, 5, 4, 3] = v
    v = -t183*(-t177 - t203) - t205
    out[4, 3, 5, 5] = v
    out[4, 5, 3, 5] = v
    out[4, 5, 5, 3] = v
    out[4, 4, 4, 4] = t178*(r*t98 + t225 - t226)
    v = t178*t228
    out[4, 4, 4, 5] = v
    out[4, 4, 5, 4] = v
    out[4, 5, 4, 4] = v
    v = t178*(-r*t154*t79 - t226)
    out[4, 4, 5, 5] = v
    out[4, 5, 4, 5] = v
    out[4, 5, 5, 4] = v
    out[4, 5, 5, 5] = t178*t229
    out[5, 0, 0, 0] = t178*(-J2*t234*t82 - t180*t231)
    v = t178*(t13*t238 + t236*t239 + t236*t3 - t238*t26)
    out[5, 0, 0, 2] = v
    out[5, 0, 2, 0] = v
    out[5, 2, 0, 0] = v
    v = -t183*(t231*t235 + t234*t86) + t185*t231
    out[5, 0, 0, 3] = v
    out[5, 0, 3, 0] = v
    out[5, 3, 0, 0] = v
    v = t178*(t186*t241 - t235*t240)
    out[5, 0, 0, 4] = v
    out[5, 0, 4, 0] = v
    out[5, 4, 0, 0] = v
    v = t178*(t235*t242 + t244*t86)
    out[5, 0, 0, 5] = v
    out[5, 0, 5, 0] = v
    out[5, 5, 0, 0] = v
    v = t178*(48*J2*t15*t232*t3*t4*t74 - t215*t245 - 2*t246 - t248*t249)
    out[5, 0, 2, 2] = v
    out[5, 2, 0, 2] = v
    out[5, 2, 2, 0] = v
    v = t178*(-2*t22*t239 - t25) - t183*(12*J2*t232*t26*t3*t74 - t117*t13*t237 + t13*t232*t3*t96 - t248*t251 - t248 - t250)
    out[5, 0, 2, 3] = v
    out[5, 0, 3, 2] = v
    out[5, 2, 0, 3] = v
    out[5, 2, 3, 0] = v
    out[5, 3, 0, 2] = v
    out[5, 3, 2, 0] = v
    v = t178*(-t108*t127*t241 - t161*t241 + t164*t241 + t187*t241 + t251*t252 + t252)
    out[5, 0, 2, 4] = v
    out[5, 0, 4, 2] = v
    out[5, 2, 0, 4] = v
    out[5, 2, 4, 0] = v
    out[5, 4, 0, 2] = v
    out[5, 4, 2, 0] = v
    v = t178*(12*J2*t19*t232*t26*t74 - t117*t13*t253 + t13*t19*t232*t96 - t251*t255 - t254 - t255)
    out[5, 0, 2, 5] = v
    out[5, 0, 5, 2] = v
    out[5, 2, 0, 5] = v
    out[5, 2, 5, 0] = v
    out[5, 5, 0, 2] = v
    out[5, 5, 2, 0] = v
    v = -t193*t257 + t258*t31
    out[5, 0, 3, 3] = v
    out[5, 3, 0, 3] = v
    out[5, 3, 3, 0] = v
    v = -t183*(t135*t241 - t137*t241 + t188*t240) + 2*t34*t6
    out[5, 0, 3, 4] = v
    out[5, 0, 4, 3] = v
    out[5, 3, 0, 4] = v
    out[5, 3, 4, 0] = v
    out[5, 4, 0, 3] = v
    out[5, 4, 3, 0] = v
    v = -t183*(-t117*t244 + t15*t19*t232*t4*t96 - t188*t242) - 2*t21*t242
    out[5, 0, 3, 5] = v
    out[5, 0, 5, 3] = v
    out[5, 3, 0, 5] = v
    out[5, 3, 5, 0] = v
    out[5, 5, 0, 3] = v
    out[5, 5, 3, 0] = v
    v = t178*(t16*t245 + t246 - t256 + t263*t97 - t264*t265*t75)
    out[5, 0, 4, 4] = v
    out[5, 4, 0, 4] = v
    out[5, 4, 4, 0] = v
    v = t178*(t175*t241 + t188*t266 - t191*t241)
    out[5, 0, 4, 5] = v
    out[5, 0, 5, 4] = v
    out[5, 4, 0, 5] = v
    out[5, 4, 5, 0] = v
    out[5, 5, 0, 4] = v
    out[5, 5, 4, 0] = v
    v = t178*t257
    out[5, 0, 5, 5] = v
    out[5, 5, 0, 5] = v
    out[5, 5, 5, 0] = v
    out[5, 2, 2, 2] = t178*(-t13*t271 + t15**4*t270*t43 - t200*t268 + t26*t271 + 2*t270 - 4*t272 + 4*t273 + 8*t274)
    v = t178*(t215*t41*t5 + 4*t27*t46 - t277) - t183*(-V*t277 + 2*t1*t15*t179*t3*t40*t5 + 2*t1*t179*t27*t3*t40*t44 - t142*t215*t232 - t144*t234)
    out[5, 2, 2, 3] = v
    out[5, 2, 3, 2] = v
    out[5, 3, 2, 2] = v
    v = t178*(-t209*t241 - t210*t241 - t249*t283 - t281 - 2*t282)
    out[5, 2, 2, 4] = v
    out[5, 2, 4, 2] = v
    out[5, 4, 2, 2] = v
    v = t178*(2*t1*t15*t179*t19*t40*t5 + 2*t1*t179*t19*t27*t40*t44 - t144*t244 - t197*t230*t232 - t286)
    out[5, 2, 2, 5] = v
    out[5, 2, 5, 2] = v
    out[5, 5, 2, 2] = v
    v = t178*(t14*t51 + t50) + t193*(-V*t287 + t294) - t289*(t251*t288 - t287 + t288)
    out[5, 2, 3, 3] = v
    out[5, 3, 2, 3] = v
    out[5, 3, 3, 2] = v
    v = t178*(-t251*t56 - t295 - t56) - t183*(3*J2*t0*t13*t241*t3*t7 - V*t295 + r*t0*t13*t241*t3*t96 - t162*t241 - t169*t241 - t251*t283 - t283)
    out[5, 2, 3, 4] = v
    out[5, 2, 4, 3] = v
    out[5, 3, 2, 4] = v
    out[5, 3, 4, 2] = v
    out[5, 4, 2, 3] = v
    out[5, 4, 3, 2] = v
    v = t178*(-t237*t296 + t251*t59 + t59) - t183*(r*t219*t253 - r*t254 + t13*t298 - t232*t296*t32 + t251*t297 - t26*t298 + t297)
    out[5, 2, 3, 5] = v
    out[5, 2, 5, 3] = v
    out[5, 3, 2, 5] = v
    out[5, 3, 5, 2] = v
    out[5, 5, 2, 3] = v
    out[5, 5, 3, 2] = v
    v = t178*(6*J2*t13*t259*t260*t3*t7 - r*t124*t262 + 2*r*t13*t259*t260*t3*t96 - t200*(-2*t267 - t301*t35) - t26*t3*t302 + t272 - t273 - t291 + t292 - t293)
    out[5, 2, 4, 4] = v
    out[5, 4, 2, 4] = v
    out[5, 4, 4, 2] = v
    v = t178*(3*J2*t0*t13*t19*t241*t7 + r*t0*t13*t19*t241*t96 - t200*(t16*t278 + t16) - t213*t241 - t218*t241 - t251*t303 - t303)
    out[5, 2, 4, 5] = v
    out[5, 2, 5, 4] = v
    out[5, 4, 2, 5] = v
    out[5, 4, 5, 2] = v
    out[5, 5, 2, 4] = v
    out[5, 5, 4, 2] = v
    v = t178*(-t200*t267 - t294)
    out[5, 2, 5, 5] = v
    out[5, 5, 2, 5] = v
    out[5, 5, 5, 2] = v
    out[5, 3, 3, 3] = 6*t192*(-t304 - t307) - t223*(-V*t304 + t310) - t224*t231*t40
    v = 2*t192*(-V*t311 + t313) - t258*t60 - t289*(-t311 - t55*t6*t60)
    out[5, 3, 3, 4] = v
    out[5, 3, 4, 3] = v
    out[5, 4, 3, 3] = v
    v = t193*t316 + t194*t242*t40 - t289*(t285*t3 + t305*t35)
    out[5, 3, 3, 5] = v
    out[5, 3, 5, 3] = v
    out[5, 5, 3, 3] = v
    v = t178*(-t306 - t318) - t183*(-V*t318 + t142*t263 + t265*t302 - t308 + t309)
    out[5, 3, 4, 4] = v
    out[5, 4, 3, 4] = v
    out[5, 4, 4, 3] = v
    v = t178*(-t319 - 2*t39*t40*t64) - t183*(-V*t319 + t173*t241 + t176*t241 - t220*t266)
    out[5, 3, 4, 5] = v
    out[5, 3, 5, 4] = v
    out[5, 4, 3, 5] = v
    out[5, 4, 5, 3] = v
    out[5, 5, 3, 4] = v
    out[5, 5, 4, 3] = v
    v = t178*(t199*t275 + t307) - t183*(2*Om*V*t0*t19*t232*t4 - t310)
    out[5, 3, 5, 5] = v
    out[5, 5, 3, 5] = v
    out[5, 5, 5, 3] = v
    out[5, 4, 4, 4] = t178*(15*t136*t143*t241 + t142*t16*t299*t321 + 18*t143*t265*t299*t320 - t200*(t0**4*t321*t79 + 8*t279 + t317) + t282 + 5*t312)
    v = t178*(t15*t302*t79 + t197*t261*t317 - t200*(-t24*t284 - t301*t93) - t314 + t315)
    out[5, 4, 4, 5] = v
    out[5, 4, 5, 4] = v
    out[5, 5, 4, 4] = v
    v = t178*(-t281 - t313)
    out[5, 4, 5, 5] = v
    out[5, 5, 4, 5] = v
    out[5, 5, 5, 4] = v
    out[5, 5, 5, 5] = -t178*t316

@njit(cache=True)
def fill_jac_diss(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    ze = x[6]
    J2 = prm[0]
    Om = prm[1]
    cD = prm[2]
    LD = prm[3]
    csg = prm[4]
    ssg = prm[5]
    Hfac = prm[6]
    zref = prm[7]
    t0 = cD*math.exp(ze*zref)
    t1 = V*t0
    t2 = LD*t0
    t3 = LD*t1
    t4 = t3*zref
    t5 = math.cos(ga)
    t6 = ssg/t5
    t7 = math.sin(ga)
    out[3, 3] = -2*t1
    out[3, 6] = -V**2*t0*zref
    out[4, 3] = csg*t2
    out[4, 6] = csg*t4
    out[5, 3] = t2*t6
    out[5, 4] = ssg*t3*t7/t5**2
    out[5, 6] = t4*t6
    out[6, 3] = -Hfac*t7
    out[6, 4] = -Hfac*V*t5

@njit(cache=True)
def fill_hess_diss(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    ze = x[6]
    J2 = prm[0]
    Om = prm[1]
    cD = prm[2]
    LD = prm[3]
    csg = prm[4]
    ssg = prm[5]
    Hfac = prm[6]
    zref = prm[7]
    t0 = cD*math.exp(ze*zref)
    t1 = 2*t0
    t2 = V*t1
    t3 = t0*zref**2
    t4 = LD*csg
    t5 = t0*zref
    t6 = V*t3
    t7 = math.sin(ga)
    t8 = math.cos(ga)
    t9 = t8**(-2)
    t10 = LD*ssg
    t11 = t0*t10
    t12 = 1/t8
    t13 = t10*t12
    t14 = V*t7
    out[3, 3, 3] = -t1
    v = -t2*zref
    out[3, 3, 6] = v
    out[3, 6, 3] = v
    out[3, 6, 6] = -V**2*t3
    v = t4*t5
    out[4, 3, 6] = v
    out[4, 6, 3] = v
    out[4, 6, 6] = t4*t6
    v = t11*t7*t9
    out[5, 3, 4] = v
    out[5, 4, 3] = v
    v = t13*t5
    out[5, 3, 6] = v
    out[5, 6, 3] = v
    out[5, 4, 4] = V*t11*t12 + t10*t2*t7**2/t8**3
    v = t10*t14*t5*t9
    out[5, 4, 6] = v
    out[5, 6, 4] = v
    out[5, 6, 6] = t13*t6
    v = -Hfac*t8
    out[6, 3, 4] = v
    out[6, 4, 3] = v
    out[6, 4, 4] = Hfac*t14

@njit(cache=True)
def fill_cubic_diss(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    ze = x[6]
    J2 = prm[0]
    Om = prm[1]
    cD = prm[2]
    LD = prm[3]
    csg = prm[4]
    ssg = prm[5]
    Hfac = prm[6]
    zref = prm[7]
    t0 = cD*math.exp(ze*zref)
    t1 = 2*t0
    t2 = t1*zref
    t3 = zref**2
    t4 = V*t3
    t5 = t0*zref**3
    t6 = LD*t0
    t7 = t3*t6
    t8 = LD*V
    t9 = t5*t8
    t10 = math.cos(ga)
    t11 = ssg/t10
    t12 = t11*t6
    t13 = math.sin(ga)
    t14 = ssg*t13**2/t10**3
    t15 = ssg*t6
    t16 = t13*t15/t10**2
    v = -t2
    out[3, 3, 3, 6] = v
    out[3, 3, 6, 3] = v
    out[3, 6, 3, 3] = v
    v = -t1*t4
    out[3, 3, 6, 6] = v
    out[3, 6, 3, 6] = v
    out[3, 6, 6, 3] = v
    out[3, 6, 6, 6] = -V**2*t5
    v = csg*t7
    out[4, 3, 6, 6] = v
    out[4, 6, 3, 6] = v
    out[4, 6, 6, 3] = v
    out[4, 6, 6, 6] = csg*t9
    v = LD*t1*t14 + t12
    out[5, 3, 4, 4] = v
    out[5, 4, 3, 4] = v
    out[5, 4, 4, 3] = v
    v = t16*zref
    out[5, 3, 4, 6] = v
    out[5, 3, 6, 4] = v
    out[5, 4, 3, 6] = v
    out[5, 4, 6, 3] = v
    out[5, 6, 3, 4] = v
    out[5, 6, 4, 3] = v
    v = t11*t7
    out[5, 3, 6, 6] = v
    out[5, 6, 3, 6] = v
    out[5, 6, 6, 3] = v
    out[5, 4, 4, 4] = 5*V*t16 + 6*V*t13**3*t15/t10**4
    v = V*t12*zref + t14*t2*t8
    out[5, 4, 4, 6] = v
    out[5, 4, 6, 4] = v
    out[5, 6, 4, 4] = v
    v = t16*t4
    out[5, 4, 6, 6] = v
    out[5, 6, 4, 6] = v
    out[5, 6, 6, 4] = v
    out[5, 6, 6, 6] = t11*t9
    v = Hfac*t13
    out[6, 3, 4, 4] = v
    out[6, 4, 3, 4] = v
    out[6, 4, 4, 3] = v
    out[6, 4, 4, 4] = Hfac*V*t10

@njit(cache=True)
def qoi_value_energy(x, prm):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = math.cos(ga)
    t1 = (1/2)*V**2
    return t0**2*t1*math.cos(ps)**2 + t1*math.sin(ga)**2 + (1/2)*(Om*r*math.cos(ph) + V*t0*math.sin(ps))**2 - 1/r

@njit(cache=True)
def fill_qoi1_energy(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = Om*math.cos(ph)
    t1 = math.cos(ga)
    t2 = math.sin(ps)
    t3 = t1*t2
    t4 = V*t3 + r*t0
    t5 = math.sin(ga)
    t6 = t1**2
    t7 = math.cos(ps)
    t8 = t7**2
    t9 = V**2
    out[0, 0] = t0*t4 + r**(-2)
    out[0, 2] = -Om*r*t4*math.sin(ph)
    out[0, 3] = V*t5**2 + V*t6*t8 + t3*t4
    out[0, 4] = -V*t2*t4*t5 - t1*t5*t8*t9 + t1*t5*t9
    out[0, 5] = V*t1*t4*t7 - t2*t6*t7*t9

@njit(cache=True)
def fill_qoi2_energy(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = Om**2
    t1 = math.cos(ph)
    t2 = r*t1
    t3 = Om*t2
    t4 = math.cos(ga)
    t5 = math.sin(ps)
    t6 = t4*t5
    t7 = V*t6
    t8 = t3 + t7
    t9 = math.sin(ph)
    t10 = Om*t9
    t11 = Om*t1
    t12 = math.sin(ga)
    t13 = V*t12
    t14 = t13*t5
    t15 = math.cos(ps)
    t16 = V*t15*t4
    t17 = r*t10
    t18 = t12**2
    t19 = t4**2
    t20 = t15**2
    t21 = t19*t20
    t22 = t5**2
    t23 = t19*t22
    t24 = t12*t8
    t25 = t13*t4
    t26 = V*t15
    t27 = V**2
    t28 = t18*t27
    t29 = -t7*t8
    out[0, 0, 0] = t0*t1**2 - 2/r**3
    v = -t0*t2*t9 - t10*t8
    out[0, 0, 2] = v
    out[0, 2, 0] = v
    v = t11*t6
    out[0, 0, 3] = v
    out[0, 3, 0] = v
    v = -t11*t14
    out[0, 0, 4] = v
    out[0, 4, 0] = v
    v = t11*t16
    out[0, 0, 5] = v
    out[0, 5, 0] = v
    out[0, 2, 2] = r**2*t0*t9**2 - t3*t8
    v = -t17*t6
    out[0, 2, 3] = v
    out[0, 3, 2] = v
    v = t14*t17
    out[0, 2, 4] = v
    out[0, 4, 2] = v
    v = -t16*t17
    out[0, 2, 5] = v
    out[0, 5, 2] = v
    out[0, 3, 3] = t18 + t21 + t23
    v = 2*V*t12*t4 - 2*t20*t25 - t22*t25 - t24*t5
    out[0, 3, 4] = v
    out[0, 4, 3] = v
    v = t15*t4*t8 - t19*t26*t5
    out[0, 3, 5] = v
    out[0, 5, 3] = v
    out[0, 4, 4] = t19*t27 + t20*t28 - t21*t27 + t22*t28 - t28 + t29
    v = t12*t15*t27*t6 - t24*t26
    out[0, 4, 5] = v
    out[0, 5, 4] = v
    out[0, 5, 5] = t23*t27 + t29

@njit(cache=True)
def fill_qoi3_energy(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = math.cos(ph)
    t1 = Om**2
    t2 = math.sin(ph)
    t3 = t0*t1*t2
    t4 = Om*t0
    t5 = r*t4
    t6 = math.cos(ga)
    t7 = math.sin(ps)
    t8 = t6*t7
    t9 = V*t8
    t10 = t5 + t9
    t11 = Om*t2
    t12 = math.sin(ga)
    t13 = t12*t7
    t14 = V*t13
    t15 = math.cos(ps)
    t16 = t15*t6
    t17 = V*t16
    t18 = -t4*t9
    t19 = t12*t15
    t20 = V*t19
    t21 = r*t11
    t22 = t21*t9
    t23 = t15**2
    t24 = t12*t6
    t25 = 2*t24
    t26 = t7**2
    t27 = t6**2
    t28 = t12**2
    t29 = 2*V
    t30 = V*t26*t27
    t31 = t10*t8
    t32 = t10*t12
    t33 = V**2
    t34 = t24*t33
    t35 = 4*t34
    t36 = t26*t34
    t37 = -t10*t17 + t15*t27*t33*t7
    out[0, 0, 0, 0] = 6/r**4
    v = -2*t3
    out[0, 0, 0, 2] = v
    out[0, 0, 2, 0] = v
    out[0, 2, 0, 0] = v
    v = -r*t0**2*t1 + 2*r*t1*t2**2 - t10*t4
    out[0, 0, 2, 2] = v
    out[0, 2, 0, 2] = v
    out[0, 2, 2, 0] = v
    v = -t11*t8
    out[0, 0, 2, 3] = v
    out[0, 0, 3, 2] = v
    out[0, 2, 0, 3] = v
    out[0, 2, 3, 0] = v
    out[0, 3, 0, 2] = v
    out[0, 3, 2, 0] = v
    v = t11*t14
    out[0, 0, 2, 4] = v
    out[0, 0, 4, 2] = v
    out[0, 2, 0, 4] = v
    out[0, 2, 4, 0] = v
    out[0, 4, 0, 2] = v
    out[0, 4, 2, 0] = v
    v = -t11*t17
    out[0, 0, 2, 5] = v
    out[0, 0, 5, 2] = v
    out[0, 2, 0, 5] = v
    out[0, 2, 5, 0] = v
    out[0, 5, 0, 2] = v
    out[0, 5, 2, 0] = v
    v = -t13*t4
    out[0, 0, 3, 4] = v
    out[0, 0, 4, 3] = v
    out[0, 3, 0, 4] = v
    out[0, 3, 4, 0] = v
    out[0, 4, 0, 3] = v
    out[0, 4, 3, 0] = v
    v = t16*t4
    out[0, 0, 3, 5] = v
    out[0, 0, 5, 3] = v
    out[0, 3, 0, 5] = v
    out[0, 3, 5, 0] = v
    out[0, 5, 0, 3] = v
    out[0, 5, 3, 0] = v
    v = t18
    out[0, 0, 4, 4] = v
    out[0, 4, 0, 4] = v
    out[0, 4, 4, 0] = v
    v = -t20*t4
    out[0, 0, 4, 5] = v
    out[0, 0, 5, 4] = v
    out[0, 4, 0, 5] = v
    out[0, 4, 5, 0] = v
    out[0, 5, 0, 4] = v
    out[0, 5, 4, 0] = v
    v = t18
    out[0, 0, 5, 5] = v
    out[0, 5, 0, 5] = v
    out[0, 5, 5, 0] = v
    out[0, 2, 2, 2] = 3*r**2*t3 + t10*t21
    v = -t5*t8
    out[0, 2, 2, 3] = v
    out[0, 2, 3, 2] = v
    out[0, 3, 2, 2] = v
    v = t14*t5
    out[0, 2, 2, 4] = v
    out[0, 2, 4, 2] = v
    out[0, 4, 2, 2] = v
    v = -t17*t5
    out[0, 2, 2, 5] = v
    out[0, 2, 5, 2] = v
    out[0, 5, 2, 2] = v
    v = t13*t21
    out[0, 2, 3, 4] = v
    out[0, 2, 4, 3] = v
    out[0, 3, 2, 4] = v
    out[0, 3, 4, 2] = v
    out[0, 4, 2, 3] = v
    out[0, 4, 3, 2] = v
    v = -t16*t21
    out[0, 2, 3, 5] = v
    out[0, 2, 5, 3] = v
    out[0, 3, 2, 5] = v
    out[0, 3, 5, 2] = v
    out[0, 5, 2, 3] = v
    out[0, 5, 3, 2] = v
    v = t22
    out[0, 2, 4, 4] = v
    out[0, 4, 2, 4] = v
    out[0, 4, 4, 2] = v
    v = t20*t21
    out[0, 2, 4, 5] = v
    out[0, 2, 5, 4] = v
    out[0, 4, 2, 5] = v
    out[0, 4, 5, 2] = v
    out[0, 5, 2, 4] = v
    out[0, 5, 4, 2] = v
    v = t22
    out[0, 2, 5, 5] = v
    out[0, 5, 2, 5] = v
    out[0, 5, 5, 2] = v
    v = 2*t12*t6 - t23*t25 - t25*t26
    out[0, 3, 3, 4] = v
    out[0, 3, 4, 3] = v
    out[0, 4, 3, 3] = v
    v = 2*V*t23*t28 + 2*V*t26*t28 + 2*V*t27 - t23*t27*t29 - t28*t29 - t30 - t31
    out[0, 3, 4, 4] = v
    out[0, 4, 3, 4] = v
    out[0, 4, 4, 3] = v
    v = -t15*t32 + t19*t9
    out[0, 3, 4, 5] = v
    out[0, 3, 5, 4] = v
    out[0, 4, 3, 5] = v
    out[0, 4, 5, 3] = v
    out[0, 5, 3, 4] = v
    out[0, 5, 4, 3] = v
    v = t30 - t31
    out[0, 3, 5, 5] = v
    out[0, 5, 3, 5] = v
    out[0, 5, 5, 3] = v
    out[0, 4, 4, 4] = V*t32*t7 + t23*t35 - t35 + 3*t36
    v = t37
    out[0, 4, 4, 5] = v
    out[0, 4, 5, 4] = v
    out[0, 5, 4, 4] = v
    v = V*t10*t12*t7 - t36
    out[0, 4, 5, 5] = v
    out[0, 5, 4, 5] = v
    out[0, 5, 5, 4] = v
    out[0, 5, 5, 5] = t37

@njit(cache=True)
def qoi_value_apoapsis(x, prm):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = V**2
    t1 = math.cos(ga)
    t2 = t0*t1**2*math.cos(ps)**2 + (Om*r*math.cos(ph) + V*t1*math.sin(ps))**2
    t3 = -r*(t0*math.sin(ga)**2 + t2) + 2
    return r*(math.sqrt(-r*t2*t3 + 1) + 1)/t3

@njit(cache=True)
def fill_qoi1_apoapsis(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = V**2
    t1 = math.sin(ga)
    t2 = t1**2
    t3 = Om*r*math.cos(ph)
    t4 = math.cos(ga)
    t5 = math.sin(ps)
    t6 = t4*t5
    t7 = V*t6 + t3
    t8 = t4**2
    t9 = math.cos(ps)
    t10 = t9**2
    t11 = t10*t8
    t12 = t0*t11 + t7**2
    t13 = t0*t2 + t12
    t14 = -r*t13 + 2
    t15 = 1/t14
    t16 = t12*t14
    t17 = math.sqrt(-r*t16 + 1)
    t18 = t17 + 1
    t19 = 2*t7
    t20 = t13 + t19*t3
    t21 = (1/2)*t12
    t22 = 1/t17
    t23 = r*t15*t22
    t24 = t18/t14**2
    t25 = math.sin(ph)
    t26 = Om*r**3*t25
    t27 = r**2
    t28 = 2*V
    t29 = t11*t28 + t19*t6
    t30 = t27*(t2*t28 + t29)
    t31 = (1/2)*r*t14
    t32 = 2*t0
    t33 = t1*t10*t32*t4 + t1*t28*t5*t7
    t34 = t27*(2*t0*t1*t4 - t33)
    t35 = 2*V*t4*t7*t9 - t32*t5*t8*t9
    t36 = t27*t35
    out[0, 0] = r*t20*t24 + t15*t18 + t23*(r*t20*t21 - t14*t3*t7 - 1/2*t16)
    out[0, 2] = r*t15*t22*(Om*t14*t25*t27*t7 - t12*t26*t7) - t19*t24*t26
    out[0, 3] = t23*(t21*t30 - t29*t31) + t24*t30
    out[0, 4] = t23*(t21*t34 + t31*t33) + t24*t34
    out[0, 5] = t23*(t21*t36 - t31*t35) + t24*t36

@njit(cache=True)
def fill_qoi2_apoapsis(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = math.cos(ph)
    t1 = Om*t0
    t2 = r*t1
    t3 = math.cos(ga)
    t4 = math.sin(ps)
    t5 = t3*t4
    t6 = V*t5
    t7 = t2 + t6
    t8 = t7**2
    t9 = V**2
    t10 = t3**2
    t11 = math.cos(ps)
    t12 = t11**2
    t13 = t10*t12
    t14 = t13*t9
    t15 = t14 + t8
    t16 = math.sin(ga)
    t17 = t16**2
    t18 = t17*t9
    t19 = t15 + t18
    t20 = -r*t19 + 2
    t21 = t15*t20
    t22 = -r*t21 + 1
    t23 = math.sqrt(t22)
    t24 = 1/t23
    t25 = 1/t20
    t26 = t24*t25
    t27 = 2*t7
    t28 = t2*t27
    t29 = t19 + t28
    t30 = -t29
    t31 = t15*t30
    t32 = (1/2)*r
    t33 = t2*t7
    t34 = t20*t33 + (1/2)*t21 + t31*t32
    t35 = -t34
    t36 = 2*t35
    t37 = t20**(-2)
    t38 = t23 + 1
    t39 = t37*t38
    t40 = 2*t29
    t41 = Om**2
    t42 = 2*t41
    t43 = r*t0**2
    t44 = t1*t7
    t45 = t42*t43 + 4*t44
    t46 = t15*t32
    t47 = t20*t41
    t48 = t20*t44
    t49 = r*t26
    t50 = r*t39
    t51 = t22**(-3/2)
    t52 = r*t25*t51
    t53 = t35*t52
    t54 = 2*t8
    t55 = 2*t18
    t56 = 2*t14
    t57 = r*t29
    t58 = t38/t20**3
    t59 = t24*t37
    t60 = t57*t59
    t61 = math.sin(ph)
    t62 = Om*t7
    t63 = t61*t62
    t64 = r**3
    t65 = t15*t64
    t66 = r**2
    t67 = -Om*t20*t61*t66*t7 + t63*t65
    t68 = -t67
    t69 = t61*t66
    t70 = 4*t63
    t71 = r*t70 + t0*t42*t69
    t72 = t61*t64
    t73 = t39*t66
    t74 = t64*t70
    t75 = t63*t64
    t76 = 2*t17
    t77 = 2*t13
    t78 = V*t77 + t27*t5
    t79 = V*t76 + t78
    t80 = t66*t79
    t81 = (1/2)*t15
    t82 = (1/2)*t20
    t83 = t78*t82
    t84 = -r*t83 + t80*t81
    t85 = t2*t5
    t86 = t79 + 2*t85
    t87 = t30*t32
    t88 = -t84
    t89 = t35*t59
    t90 = t40*t58
    t91 = t16*t3
    t92 = 2*t91
    t93 = t9*t92
    t94 = t16*t27
    t95 = t4*t94
    t96 = V*t95 + t12*t93
    t97 = -t93 + t96
    t98 = -t97
    t99 = t66*t98
    t100 = -t96
    t101 = t100*t82
    t102 = -r*t101 + t81*t99
    t103 = 2*t16
    t104 = V*t2
    t105 = t104*t4
    t106 = t103*t105 + t97
    t107 = -t102
    t108 = t11*t3
    t109 = V*t108*t27
    t110 = 2*t10
    t111 = t110*t9
    t112 = t11*t4
    t113 = t111*t112
    t114 = t109 - t113
    t115 = t66*t81
    t116 = t114*t82
    t117 = -r*t116 + t114*t115
    t118 = t104*t108
    t119 = t109 - t113 + 2*t118
    t120 = -t117
    t121 = t114*t66
    t122 = r**4
    t123 = t61**2
    t124 = t122*t123
    t125 = t124*t41
    t126 = t52*t68
    t127 = 2*t64
    t128 = t127*t39
    t129 = t59*t68
    t130 = Om*t61
    t131 = t130*t65
    t132 = t59*t84
    t133 = Om*t27*t72
    t134 = t128*t130
    t135 = t122*t58*t70
    t136 = t16*t4
    t137 = t133*t59
    t138 = V*t134
    t139 = t4**2
    t140 = t110*t139
    t141 = t140 + t77
    t142 = t141 + t76
    t143 = r*t82
    t144 = t127*t58
    t145 = t52*t84
    t146 = 4*V*t12*t91 + V*t139*t92 + t95
    t147 = 4*V*t16*t3 - t146
    t148 = (1/2)*t78
    t149 = (1/2)*t80
    t150 = t59*t80
    t151 = t144*t79
    t152 = -V*t110*t112 + 2*t11*t3*t7
    t153 = -t27*t6
    t154 = t12*t55 + t139*t55 + t153 - t56
    t155 = t111 + t154 - t55
    t156 = t102*t52
    t157 = t59*t99
    t158 = -V*t11*t94 + t103*t11*t5*t9
    t159 = t121*t59
    t160 = t114**2
    t161 = t140*t9 + t153
    out[0, 0, 0] = t26*t36 + t34*t53 + t36*t60 + t39*t40 + t45*t50 + t49*(-t28*t30 - t31 - t43*t47 + t45*t46 - 2*t48) + t57*t58*(4*t33 + t54 + t55 + t56)
    v = -Om*t27*t61*t73 + t26*t68 - t29*t58*t74 - t36*t59*t75 + t49*(2*Om*r*t20*t61*t7 + Om*t30*t61*t66*t7 + t0*t20*t41*t61*t66 - t0*t41*t54*t72 - t15*t62*t69 - t46*t71) - t50*t71 + t53*t67 + t60*t68
    out[0, 0, 2] = v
    out[0, 2, 0] = v
    v = t26*t84 + t49*(Om*t0*t66*t7*t79 + (1/2)*r*t15*t79 - t20*t85 + t46*t86 - t78*t87 - t83) + t50*t79 + t50*t86 + t53*t88 + t60*t84 + t80*t89 + t80*t90
    out[0, 0, 3] = v
    out[0, 3, 0] = v
    v = t102*t26 + t102*t60 - t106*t50 + t107*t53 + t49*(-t100*t87 - t101 + t105*t16*t20 - t106*t46 + t44*t99 + t46*t98) + t50*t98 + t89*t99 + t90*t99
    out[0, 0, 4] = v
    out[0, 4, 0] = v
    v = t114*t50 + t117*t26 + t117*t60 + t119*t50 + t120*t53 + t121*t89 + t121*t90 + t49*(Om*t0*t114*t66*t7 + (1/2)*r*t114*t15 - t114*t87 - t116 - t118*t20 + t119*t46)
    out[0, 0, 5] = v
    out[0, 5, 0] = v
    out[0, 2, 2] = 8*r**5*t123*t41*t58*t8 + t124*t39*t42 + t126*t67 - t128*t44 - t129*t74 + t49*(-t123*t47*t64 + t125*t15 + 4*t125*t8 - t44*t65 + t48*t66)
    v = r*t24*t25*(Om*t20*t3*t4*t61*t66 - t131*t5 - t75*t78 - t75*t79) + r*t25*t51*t68*t88 - t132*t133 - t134*t5 - t135*t79 + t24*t37*t66*t68*t79
    out[0, 2, 3] = v
    out[0, 3, 2] = v
    v = -t102*t137 + t107*t126 + t129*t99 - t135*t98 + t136*t138 + t49*(-Om*V*t136*t20*t69 + Om*V*t15*t16*t4*t61*t64 - t100*t75 - t75*t98)
    out[0, 2, 4] = v
    out[0, 4, 2] = v
    v = r*t120*t25*t51*t68 + r*t24*t25*(Om*V*t11*t20*t3*t61*t66 - V*t108*t131 - t114*t133) - t108*t138 - t114*t135 + t114*t24*t37*t66*t68 - t117*t137
    out[0, 2, 5] = v
    out[0, 5, 2] = v
    out[0, 3, 3] = 2*t132*t80 + t142*t73 + t144*t79**2 + t145*t88 + t49*(t115*t142 - t141*t143 + t78*t80)
    v = t102*t150 + t107*t145 + t132*t99 + t147*t73 + t151*t98 + t49*(t100*t149 + t115*t147 + t143*t146 + t148*t99)
    out[0, 3, 4] = v
    out[0, 4, 3] = v
    v = t114*t151 + t117*t150 + t120*t145 + t121*t132 + t152*t73 + t49*(t114*t149 + t115*t152 + t121*t148 - t143*t152)
    out[0, 3, 5] = v
    out[0, 5, 3] = v
    out[0, 4, 4] = 2*t102*t157 + t107*t156 + t144*t98**2 + t155*t73 + t49*(t100*t99 + t115*t155 - t143*t154)
    v = t102*t159 + t114*t144*t98 + t117*t157 + t120*t156 + t158*t73 + t49*((1/2)*t100*t121 + (1/2)*t114*t99 + t115*t158 - t143*t158)
    out[0, 4, 5] = v
    out[0, 5, 4] = v
    out[0, 5, 5] = t117*t120*t52 + 2*t117*t159 + t144*t160 + t161*t73 + t49*(t115*t161 - t143*t161 + t160*t66)

@njit(cache=True)
def fill_qoi3_apoapsis(x, prm, out):
    r = x[0]
    ph = x[2]
    V = x[3]
    ga = x[4]
    ps = x[5]
    Om = prm[0]
    t0 = math.cos(ph)
    t1 = Om*t0
    t2 = r*t1
    t3 = math.cos(ga)
    t4 = math.sin(ps)
    t5 = t3*t4
    t6 = V*t5
    t7 = t2 + t6
    t8 = t7**2
    t9 = V**2
    t10 = t3**2
    t11 = math.cos(ps)
    t12 = t11**2
    t13 = t10*t12
    t14 = t13*t9
    t15 = t14 + t8
    t16 = math.sin(ga)
    t17 = t16**2
    t18 = t17*t9
    t19 = t15 + t18
    t20 = -r*t19 + 2
    t21 = t15*t20
    t22 = -r*t21 + 1
    t23 = math.sqrt(t22)
    t24 = 1/t23
    t25 = 1/t20
    t26 = t24*t25
    t27 = 2*t7
    t28 = t2*t27
    t29 = t19 + t28
    t30 = -t29
    t31 = t15*t30
    t32 = Om**2
    t33 = t0**2
    t34 = t32*t33
    t35 = 2*r
    t36 = t1*t7
    t37 = 4*t36
    t38 = t34*t35 + t37
    t39 = -t38
    t40 = t15*t39
    t41 = (1/2)*r
    t42 = t20*t34
    t43 = t20*t36
    t44 = r*t42 + t28*t30 + t31 + t40*t41 + 2*t43
    t45 = -t44
    t46 = 3*t45
    t47 = t20**(-2)
    t48 = t23 + 1
    t49 = t47*t48
    t50 = 3*t38
    t51 = r*t34
    t52 = t30*t36
    t53 = t2*t7
    t54 = r*t26
    t55 = t20*t53
    t56 = (1/2)*t21 + t31*t41 + t55
    t57 = -t56
    t58 = t22**(-3/2)
    t59 = t25*t58
    t60 = t57*t59
    t61 = 3*t56
    t62 = t20**(-3)
    t63 = t48*t62
    t64 = t29*t63
    t65 = 4*t7
    t66 = t2*t65
    t67 = 2*t8
    t68 = 2*t18
    t69 = 2*t14
    t70 = t68 + t69
    t71 = t66 + t67 + t70
    t72 = 3*t71
    t73 = 6*t29
    t74 = t24*t47
    t75 = t57*t74
    t76 = r*t60
    t77 = r*t64
    t78 = t35*t59
    t79 = t63*t71
    t80 = r*t29
    t81 = t74*t80
    t82 = t56*t57
    t83 = t22**(-5/2)
    t84 = r*t25*t83
    t85 = t82*t84
    t86 = t48/t20**4
    t87 = t71*t80
    t88 = t47*t58
    t89 = t80*t88
    t90 = t24*t62
    t91 = t57*t90
    t92 = r**2
    t93 = 2*t92
    t94 = math.sin(ph)
    t95 = t0*t32*t94
    t96 = Om*t94
    t97 = t65*t96
    t98 = r*t97 + t93*t95
    t99 = t15*t98
    t100 = t7*t96
    t101 = t100*t92
    t102 = r**3
    t103 = t102*t67
    t104 = -2*Om*r*t20*t7*t94 - Om*t30*t7*t92*t94 - t0*t20*t32*t92*t94 + t101*t15 + t103*t95 + t41*t99
    t105 = -t104
    t106 = 2*t26
    t107 = -t98
    t108 = 2*t49
    t109 = 8*r
    t110 = t109*t95 + t97
    t111 = t15*t41
    t112 = Om**3
    t113 = 4*t92*t95
    t114 = r*t49
    t115 = t102*t15
    t116 = t100*t115
    t117 = t101*t20
    t118 = t116 - t117
    t119 = 2*t60
    t120 = -t118
    t121 = t120*t74
    t122 = 2*t29
    t123 = r*t59
    t124 = t123*t45
    t125 = t123*t56
    t126 = r*t38
    t127 = r*t107
    t128 = t35*t75
    t129 = t105*t74
    t130 = t29*t35
    t131 = 3*t116 - 3*t117
    t132 = t87*t90
    t133 = t118*t57
    t134 = t133*t88
    t135 = t75*t92
    t136 = t102*t97
    t137 = t136*t63
    t138 = t45*t74
    t139 = t27*t96
    t140 = t102*t139
    t141 = t100*t102
    t142 = 8*t141
    t143 = t142*t29
    t144 = t73*t86
    t145 = t82*t88
    t146 = 2*t13
    t147 = t27*t5
    t148 = V*t146 + t147
    t149 = (1/2)*t20
    t150 = t2*t5
    t151 = 2*t150
    t152 = 2*t17
    t153 = V*t152 + t148
    t154 = t151 + t153
    t155 = -t154
    t156 = t15*t155
    t157 = t148*t30
    t158 = -Om*t0*t153*t7*t92 - 1/2*r*t15*t153 + t148*t149 + t150*t20 + t156*t41 + t157*t41
    t159 = -t158
    t160 = r*t148
    t161 = (1/2)*t39
    t162 = t20*t5
    t163 = 2*t1
    t164 = t153*t92
    t165 = t15*t164
    t166 = -1/2*r*t148*t20 + (1/2)*t165
    t167 = -t166
    t168 = t166*t74
    t169 = t5*t65
    t170 = 4*t150
    t171 = 4*t17
    t172 = 4*t13
    t173 = V*t172
    t174 = V*t171 + t173
    t175 = r*t79
    t176 = t159*t74
    t177 = 2*t63
    t178 = t177*t38
    t179 = 4*t77
    t180 = (3/2)*r*t148*t20 - 3/2*t165
    t181 = t167*t57
    t182 = t181*t88
    t183 = t164*t29
    t184 = t72*t86
    t185 = 4*t91
    t186 = t16*t4
    t187 = t186*t27
    t188 = V*t187
    t189 = t16*t3
    t190 = t189*t9
    t191 = 2*t190
    t192 = t12*t191 + t188
    t193 = -t192
    t194 = -t191 + t192
    t195 = -t194
    t196 = t186*t2
    t197 = 2*t196
    t198 = V*t197
    t199 = t194 + t198
    t200 = t15*t199
    t201 = t193*t30
    t202 = t195*t92
    t203 = V*t196*t20 + t111*t195 - t149*t193 - t200*t41 - t201*t41 + t202*t36
    t204 = -t199
    t205 = r*t193
    t206 = t15*t202
    t207 = -1/2*r*t193*t20 + (1/2)*t206
    t208 = -t207
    t209 = t207*t74
    t210 = t186*t65
    t211 = 4*t189
    t212 = 4*V
    t213 = t196*t212
    t214 = t130*t74
    t215 = (3/2)*r*t193*t20 - 3/2*t206
    t216 = t208*t57
    t217 = t130*t88
    t218 = t202*t29
    t219 = t11*t3
    t220 = t219*t27
    t221 = V*t220
    t222 = 2*t10
    t223 = t222*t9
    t224 = t11*t4
    t225 = t223*t224
    t226 = -t221 + t225
    t227 = -t226
    t228 = t2*t219
    t229 = 2*t228
    t230 = V*t229
    t231 = t221 - t225 + t230
    t232 = -t231
    t233 = t15*t232
    t234 = t227*t30
    t235 = t20*t228
    t236 = -Om*t0*t227*t7*t92 + V*t235 - 1/2*r*t15*t227 + t149*t227 + t233*t41 + t234*t41
    t237 = -t236
    t238 = r*t227
    t239 = V*t219
    t240 = t227*t92
    t241 = (1/2)*t15
    t242 = -1/2*r*t20*t227 + t240*t241
    t243 = -t242
    t244 = t243*t59
    t245 = 2*t57
    t246 = t242*t74
    t247 = r*t244
    t248 = 4*t10
    t249 = t248*t9
    t250 = V*t219*t65
    t251 = t212*t228
    t252 = 2*t238
    t253 = 2*t240
    t254 = t253*t63
    t255 = 4*t64
    t256 = (3/2)*r*t20*t227 - 3/2*t15*t240
    t257 = t243*t57
    t258 = t240*t29
    t259 = r**4
    t260 = t94**2
    t261 = t260*t32
    t262 = t15*t261
    t263 = t102*t261
    t264 = t259*t261
    t265 = 4*t264
    t266 = -t115*t36 - t20*t263 + t259*t262 + t265*t8 + t43*t92
    t267 = t261*t92
    t268 = -6*t267 + t34*t93 + t66
    t269 = 3*t20
    t270 = 8*t8
    t271 = t36*t92
    t272 = t112*t7
    t273 = 6*t259
    t274 = t120*t59
    t275 = -t266
    t276 = t266*t74
    t277 = t118*t78
    t278 = t133*t84
    t279 = t118*t120
    t280 = 2*t264
    t281 = t121*t92
    t282 = t102*t36
    t283 = 2*t282
    t284 = r**5
    t285 = t261*t284
    t286 = t270*t285
    t287 = t29*t86
    t288 = 24*t285*t8
    t289 = t120*t90
    t290 = t115*t5
    t291 = -Om*t20*t3*t4*t92*t94 + t141*t148 + t141*t153 + t290*t96
    t292 = -t291
    t293 = (1/2)*t98
    t294 = t148*t92
    t295 = t102*t95
    t296 = t92*t96
    t297 = 3*t15
    t298 = t105*t123
    t299 = t118*t123
    t300 = r*t121
    t301 = t107*t177
    t302 = t120*t89
    t303 = t122*t289
    t304 = t5*t96
    t305 = t49*t92
    t306 = 6*t305
    t307 = t102*t153
    t308 = t63*t97
    t309 = t168*t92
    t310 = t153*t259
    t311 = t100*t310
    t312 = 12*t287
    t313 = t166*t90
    t314 = t136*t29
    t315 = t102*t304
    t316 = t91*t97
    t317 = 2*t315
    t318 = t20*t296
    t319 = t186*t318
    t320 = -Om*V*t102*t15*t16*t4*t94 + V*t319 + t141*t193 + t141*t195
    t321 = -t320
    t322 = t193*t92
    t323 = V*t186
    t324 = t323*t96
    t325 = t102*t195
    t326 = t209*t92
    t327 = t140*t74
    t328 = t195*t259
    t329 = t100*t312
    t330 = t207*t90
    t331 = t140*t88
    t332 = 2*t324
    t333 = t102*t75
    t334 = t102*t324
    t335 = t115*t96
    t336 = t219*t335
    t337 = -Om*V*t11*t20*t3*t92*t94 + V*t336 + t140*t227
    t338 = -t337
    t339 = 3*t240
    t340 = t253*t29
    t341 = t246*t92
    t342 = t227*t259
    t343 = t239*t96
    t344 = t242*t90
    t345 = t102*t343
    t346 = t148*t153
    t347 = t4**2
    t348 = t222*t347
    t349 = t146 + t348
    t350 = t152 + t349
    t351 = t241*t92
    t352 = t149*t349
    t353 = -r*t352 + t346*t92 + t350*t351
    t354 = t30*t41
    t355 = t166*t59
    t356 = t153**2
    t357 = t63*t93
    t358 = -t353
    t359 = t167*t78
    t360 = t168*t35
    t361 = t164*t74
    t362 = 2*t361
    t363 = t64*t93
    t364 = t102*t356
    t365 = t245*t90
    t366 = 4*t63
    t367 = t180*t84
    t368 = t166*t89
    t369 = t164*t88
    t370 = t167*t369
    t371 = 4*t313
    t372 = V*t211
    t373 = V*t189
    t374 = t12*t372 + t187 + 2*t347*t373
    t375 = -t372 + t374
    t376 = -t375
    t377 = (1/2)*t164
    t378 = -t374
    t379 = t149*t378
    t380 = -r*t379 + t193*t377 + (1/2)*t195*t294 + t351*t376
    t381 = t197 + t375
    t382 = (1/2)*t160
    t383 = (1/2)*t205
    t384 = t1*t164
    t385 = t123*t167
    t386 = t123*t208
    t387 = -t380
    t388 = r*t168
    t389 = r*t209
    t390 = t164*t177
    t391 = t177*t202
    t392 = t181*t84
    t393 = t122*t202
    t394 = t122*t164
    t395 = t195*t307
    t396 = V*t222*t224
    t397 = t220 - t396
    t398 = (1/2)*t227
    t399 = t149*t397
    t400 = -r*t399 + t227*t377 + t294*t398 + t351*t397
    t401 = (1/2)*t238
    t402 = t220 + t229 - t396
    t403 = t1*t5
    t404 = -t400
    t405 = r*t246
    t406 = t227*t307
    t407 = t12*t68
    t408 = t347*t68
    t409 = t27*t6
    t410 = -t409
    t411 = t407 + t408 + t410 - t69
    t412 = t223 + t411 - t68
    t413 = t149*t411
    t414 = -r*t413 + t193*t195*t92 + t351*t412
    t415 = t2*t6
    t416 = t409 + 2*t415
    t417 = -t223 - t407 - t408 + t416 + t70
    t418 = t207*t59
    t419 = t195**2
    t420 = -t414
    t421 = t208*t78
    t422 = t209*t35
    t423 = t202*t74
    t424 = 2*t423
    t425 = t102*t419
    t426 = t216*t84
    t427 = t207*t89
    t428 = t202*t88
    t429 = t208*t428
    t430 = 4*t330
    t431 = t11*t16
    t432 = t27*t431
    t433 = V*t432
    t434 = 2*t431
    t435 = t5*t9
    t436 = t434*t435
    t437 = -t433 + t436
    t438 = t149*t437
    t439 = -r*t438 + t202*t398 + t322*t398 + t351*t437
    t440 = V*t431
    t441 = 2*t2*t440 + t433 - t436
    t442 = t1*t323
    t443 = -t439
    t444 = t240*t74
    t445 = t240*t88
    t446 = t227*t325
    t447 = t227**2
    t448 = t447*t92
    t449 = t348*t9
    t450 = t410 + t449
    t451 = t149*t450
    t452 = -r*t451 + t351*t450 + t448
    t453 = t416 - t449
    t454 = t1*t239
    t455 = -t452
    t456 = t244*t35
    t457 = t253*t74
    t458 = t102*t447
    t459 = t256*t84
    t460 = t242*t243
    t461 = t253*t88
    t462 = 4*t344
    t463 = 12*t284
    t464 = t94**3
    t465 = t272*t464
    t466 = r*t274
    t467 = t279*t84
    t468 = r**6
    t469 = 24*t63
    t470 = 6*t121
    t471 = 6*t141
    t472 = t1*t92
    t473 = t5*t7
    t474 = 8*t264
    t475 = t153*t366
    t476 = t136*t74
    t477 = t37*t63
    t478 = t102*t108
    t479 = t153*t86
    t480 = 24*t261*t468*t8
    t481 = 8*t289
    t482 = t120*t167
    t483 = t136*t88
    t484 = 4*t315
    t485 = 16*t285*t63
    t486 = t20*t472
    t487 = t474*t7
    t488 = t285*t366
    t489 = t259*t477
    t490 = t480*t86
    t491 = t100*t481
    t492 = t120*t208
    t493 = t485*t7
    t494 = 4*t334
    t495 = 2*t227
    t496 = t120*t243
    t497 = t102*t212*t219*t96
    t498 = t364*t90
    t499 = 2*t120
    t500 = t100*t463
    t501 = t500*t86
    t502 = t259*t308
    t503 = 8*t63
    t504 = t166*t167
    t505 = t215*t84
    t506 = t499*t90
    t507 = t478*t96
    t508 = t479*t500
    t509 = t313*t97
    t510 = t310*t97
    t511 = t304*t366
    t512 = t166*t208
    t513 = t102*t332
    t514 = t259*t475
    t515 = t166*t243
    t516 = 2*t345
    t517 = t318*t6
    t518 = t102*t193
    t519 = 8*t100
    t520 = t207*t208
    t521 = t507*t6
    t522 = t195*t227
    t523 = t207*t243
    t524 = t460*t88
    t525 = t273*t86
    t526 = r*t355
    t527 = t102*t177
    t528 = t153*t527
    t529 = t248*t347
    t530 = t350*t92
    t531 = t12*t211 + t211*t347
    t532 = 4*t16*t3 - t531
    t533 = (1/2)*t349
    t534 = (1/2)*t350
    t535 = r*t149
    t536 = t168*t93
    t537 = 2*t498
    t538 = t350*t527
    t539 = t356*t525
    t540 = 2*t166
    t541 = t369*t540
    t542 = V*t348
    t543 = -4*V*t12*t17 - 4*V*t17*t347 + t147 + t542
    t544 = 4*V*t10 - t174 - t543
    t545 = (1/2)*t294
    t546 = t209*t93
    t547 = t425*t90
    t548 = t102*t366
    t549 = t153*t525
    t550 = t207*t369
    t551 = -t432 + t434*t6
    t552 = (1/2)*t397
    t553 = (1/2)*t240
    t554 = t195*t527
    t555 = t227*t527
    t556 = 2*t242
    t557 = -t147 + t542
    t558 = t246*t93
    t559 = t458*t90
    t560 = t227*t548
    t561 = 8*t190
    t562 = t12*t561 + t188 + 6*t190*t347
    t563 = -t561 + t562
    t564 = r*t418
    t565 = 4*t18
    t566 = -t6*t65
    t567 = t226*t351 - t226*t535
    t568 = t226*t305
    t569 = 2*t207
    t570 = t188 - t191*t347
    t571 = (1/2)*t450
    t572 = t529*t9 + t566
    out[0, 0, 0, 0] = r*t50*t75 + t26*t46 + t35*t38*t79 + t44*t76 + t45*t56*t78 + t46*t81 + t49*t50 + 6*t49*t51 + t54*(3*r*t15*t32*t33 - 3*t30*t51 - 3*t39*t53 - 3/2*t40 - 3*t42 - 6*t52) + t57*t61*t89 + t60*t61 + t64*t72 + t72*t80*t91 + t73*t75 + t77*(8*t36 + 4*t51) + t85*((3/2)*r*t31 + (3/2)*t21 + 3*t55) + t86*t87*(3*t14 + 3*t18 + 6*t53 + 3*t8)
    v = -8*t101*t64 + t104*t76 + t105*t106 + t105*t125 + t107*t108 + t107*t128 - t110*t114 + t118*t119 + t118*t124 + t120*t132 + t121*t122 + t121*t126 + t127*t79 + t129*t130 + t130*t134 + t131*t85 - t135*t97 - t137*t38 - t138*t140 - t140*t145 - t141*t144*t71 - t143*t91 + t54*(4*Om*r*t30*t7*t94 + 2*Om*t20*t7*t94 + Om*t39*t7*t92*t94 + 4*r*t0*t20*t32*t94 + 2*t0*t30*t32*t92*t94 - t102*t112*t27*t33*t94 - t110*t111 - t113*t8 - t28*t98 - t99) + t77*(-t100*t109 - t113)
    out[0, 0, 0, 2] = v
    out[0, 0, 2, 0] = v
    out[0, 2, 0, 0] = v
    v = t106*t159 + t108*t154 + t119*t167 + t122*t168 + t124*t167 + t125*t159 + t126*t168 + t128*t153 + t128*t154 + t130*t176 + t130*t182 + t132*t166 + t138*t164 + t145*t164 + t153*t179 + t154*t175 + t158*t76 + t164*t178 + t170*t49 + t180*t85 + t183*t184 + t183*t185 + t54*(2*Om*r*t0*t15*t3*t4 + 2*Om*r*t0*t153*t7 - t151*t30 + t153*t32*t33*t92 - t155*t28 - t156 - t157 - t160*t161 - t162*t163) + t77*(t169 + t170 + t174)
    out[0, 0, 0, 3] = v
    out[0, 0, 3, 0] = v
    out[0, 3, 0, 0] = v
    v = t106*t203 + t108*t204 + t119*t208 + t122*t209 + t124*t208 + t125*t203 + t126*t209 + t128*t195 + t128*t204 + t132*t207 + t138*t202 + t145*t202 + t175*t204 + t178*t202 + t179*t195 + t184*t218 + t185*t218 + t203*t214 - t203*t76 - t213*t49 + t215*t85 + t216*t217 + t54*(2*Om*V*r*t0*t16*t30*t4 + 2*Om*V*t0*t16*t20*t4 + 2*Om*r*t0*t195*t7 - t15*t198 - t161*t205 + t195*t32*t33*t92 - t199*t28 - t200 - t201) + t77*(-V*t210 - t12*t211*t9 + 4*t16*t3*t9 - t213)
    out[0, 0, 0, 4] = v
    out[0, 0, 4, 0] = v
    out[0, 4, 0, 0] = v
    v = t106*t237 + t108*t231 + t122*t246 + t125*t237 + t126*t246 + t128*t231 + t132*t242 + t138*t240 + t145*t240 + t175*t231 + t184*t258 + t185*t258 + t214*t237 + t217*t257 + t236*t76 + t238*t255 + t244*t245 + t247*t45 + t251*t49 + t252*t75 + t254*t38 + t256*t85 + t54*(2*Om*V*r*t0*t11*t15*t3 + 2*Om*r*t0*t227*t7 - t161*t238 - t163*t20*t239 + t227*t32*t33*t92 - t230*t30 - t232*t28 - t233 - t234) + t77*(-t224*t249 + t250 + t251)
    out[0, 0, 0, 5] = v
    out[0, 0, 5, 0] = v
    out[0, 5, 0, 0] = v
    v = -t102*t37*t64 + t105*t277 + t107*t121*t35 - t107*t142*t63 + t108*t263 - t108*t271 - t114*t268 + t118*t274 - t129*t136 + t131*t278 - t134*t136 - t143*t289 + t26*t266 + t264*t270*t63 + t265*t64 + t275*t76 + t276*t80 + t279*t89 + t280*t75 - t281*t97 - t283*t75 + t286*t91 + t287*t288 + t54*(t0*t260*t272*t273 + t102*t262 - t103*t34 - t111*t268 + t139*t92*t98 - t15*t271 + t20*t28 + t263*t270 - t263*t30 - t267*t269 + t42*t92 + t52*t92)
    out[0, 0, 2, 2] = v
    out[0, 2, 0, 2] = v
    out[0, 2, 2, 0] = v
    v = t127*t168 + t129*t164 + t134*t164 - t137*t154 - t139*t309 - t140*t176 - t140*t182 + t153*t300 + t154*t300 + t159*t299 + t164*t301 + t164*t303 + t167*t274 + t167*t298 + t167*t302 + t180*t278 - t255*t315 + t26*t292 + t291*t76 + t292*t81 - t304*t306 - t307*t308 - t310*t316 - t311*t312 - t313*t314 - t317*t75 + t54*(2*Om*r*t20*t3*t4*t94 + Om*t155*t7*t92*t94 + Om*t3*t30*t4*t92*t94 - t100*t294 - t139*t164 - t153*t295 - t160*t293 - t169*t295 - t296*t297*t5)
    out[0, 0, 2, 3] = v
    out[0, 0, 3, 2] = v
    out[0, 2, 0, 3] = v
    out[0, 2, 3, 0] = v
    out[0, 3, 0, 2] = v
    out[0, 3, 2, 0] = v
    v = t127*t209 + t129*t202 + t134*t202 - t137*t204 - t139*t326 + t195*t300 + t202*t301 + t202*t303 + t203*t299 - t203*t327 + t204*t300 + t208*t274 + t208*t298 + t208*t302 + t215*t278 - t216*t331 + t255*t334 + t26*t321 + t306*t324 - t308*t325 - t314*t330 - t316*t328 + t320*t76 + t321*t81 - t328*t329 + t332*t333 + t54*(3*Om*V*t15*t16*t4*t92*t94 + Om*t199*t7*t92*t94 + 4*V*t0*t102*t16*t32*t4*t7*t94 - t100*t322 - t139*t202 - t195*t295 - t20*t324*t35 - t205*t293 - t296*t30*t323)
    out[0, 0, 2, 4] = v
    out[0, 0, 4, 2] = v
    out[0, 2, 0, 4] = v
    out[0, 2, 4, 0] = v
    out[0, 4, 0, 2] = v
    out[0, 4, 2, 0] = v
    v = t105*t247 + t107*t254 + t121*t238 + t127*t246 + t129*t240 + t134*t240 - t137*t227 - t137*t231 - t139*t341 + t231*t300 + t237*t299 - t237*t327 + t243*t274 + t243*t302 - t255*t345 + t256*t278 - t257*t331 + t26*t338 + t289*t340 - t306*t343 - t314*t344 - t316*t342 - t329*t342 - 2*t333*t343 + t337*t76 + t338*t81 + t54*(2*Om*V*r*t11*t20*t3*t94 + Om*V*t11*t3*t30*t92*t94 + Om*t232*t7*t92*t94 - t100*t339 - t227*t295 - t238*t293 - t239*t296*t297 - t250*t295)
    out[0, 0, 2, 5] = v
    out[0, 0, 5, 2] = v
    out[0, 2, 0, 5] = v
    out[0, 2, 5, 0] = v
    out[0, 5, 0, 2] = v
    out[0, 5, 2, 0] = v
    v = t135*t350 + t144*t364 + t153*t360 + t154*t164*t366 + t154*t360 + t159*t359 + t159*t362 + t167*t355 + t167*t368 + t181*t367 + t183*t371 + t245*t370 + t26*t353 + t35*t350*t49 + t350*t363 + t353*t81 + t356*t357 + t358*t76 + t364*t365 + t54*(r*t346 + 2*t111*t350 - t155*t160 + t163*t164*t5 + t271*t350 - t349*t354 - t352)
    out[0, 0, 3, 3] = v
    out[0, 3, 0, 3] = v
    out[0, 3, 3, 0] = v
    v = t114*t376 - t114*t381 + t135*t376 + t144*t395 + t153*t389 + t154*t389 + t154*t391 + t159*t386 + t176*t202 + t182*t202 + t195*t388 + t195*t390 + t203*t361 + t203*t385 + t204*t388 + t204*t390 + t208*t355 + t208*t368 + t215*t392 + t216*t369 + t26*t380 + t313*t393 + t330*t394 + t363*t376 + t365*t395 + t380*t81 + t387*t76 + t54*(Om*r*t0*t16*t20*t4 + Om*t0*t195*t3*t4*t92 + Om*t0*t376*t7*t92 + (1/2)*r*t148*t195 + (1/2)*r*t15*t376 + (1/2)*r*t153*t193 - t111*t381 - t155*t383 - t199*t382 - t323*t384 - t354*t378 - t379)
    out[0, 0, 3, 4] = v
    out[0, 0, 4, 3] = v
    out[0, 3, 0, 4] = v
    out[0, 3, 4, 0] = v
    out[0, 4, 0, 3] = v
    out[0, 4, 3, 0] = v
    v = t114*t397 + t114*t402 + t135*t397 + t144*t406 + t153*t405 + t154*t254 + t154*t405 + t159*t247 + t168*t238 + t176*t240 + t182*t240 + t227*t390 + t231*t388 + t231*t390 + t237*t361 + t237*t385 + t243*t355 + t243*t368 + t256*t392 + t257*t369 + t26*t400 + t313*t340 + t344*t394 + t363*t397 + t365*t406 + t400*t81 + t404*t76 + t54*(t111*t397 + t111*t402 + t153*t401 - t155*t401 + t227*t382 - t232*t382 - t235 + t239*t384 + t240*t403 + t271*t397 - t354*t397 - t399)
    out[0, 0, 3, 5] = v
    out[0, 0, 5, 3] = v
    out[0, 3, 0, 5] = v
    out[0, 3, 5, 0] = v
    out[0, 5, 0, 3] = v
    out[0, 5, 3, 0] = v
    v = t114*t412 - t114*t417 + t135*t412 + t144*t425 + t195*t422 + t202*t204*t366 + t203*t421 + t203*t424 + t204*t422 + t208*t418 + t208*t427 + t215*t426 + t218*t430 + t245*t429 + t26*t414 + t357*t419 + t363*t412 + t365*t425 + t414*t81 + t420*t76 + t54*(Om*V*r*t0*t20*t3*t4 + Om*t0*t412*t7*t92 + (1/2)*r*t15*t412 + r*t193*t195 - t111*t417 - t163*t202*t323 - t199*t205 - t354*t411 - t413)
    out[0, 0, 4, 4] = v
    out[0, 4, 0, 4] = v
    out[0, 4, 4, 0] = v
    v = t114*t437 - t114*t441 + t135*t437 + t144*t446 + t195*t405 + t203*t247 + t203*t444 + t204*t254 + t204*t405 + t209*t238 + t216*t445 + t227*t391 + t231*t389 + t231*t391 + t237*t386 + t237*t423 + t243*t418 + t243*t427 + t256*t426 + t257*t428 + t26*t439 + t330*t340 + t344*t393 + t363*t437 + t365*t446 + t439*t81 + t443*t76 + t54*(Om*V*r*t0*t11*t16*t20 + Om*V*t0*t11*t195*t3*t92 + Om*t0*t437*t7*t92 + (1/2)*r*t15*t437 + (1/2)*r*t193*t227 + (1/2)*r*t195*t227 - t111*t441 - t199*t401 - t232*t383 - t240*t442 - t354*t437 - t438)
    out[0, 0, 4, 5] = v
    out[0, 0, 5, 4] = v
    out[0, 4, 0, 5] = v
    out[0, 4, 5, 0] = v
    out[0, 5, 0, 4] = v
    out[0, 5, 4, 0] = v
    v = t114*t450 - t114*t453 + t135*t450 + t144*t458 + t177*t448 + t231*t240*t366 + t231*t246*t35 + t237*t456 + t237*t457 + t242*t244 + t246*t252 + t257*t459 + t257*t461 + t258*t462 + t26*t452 + t363*t450 + t365*t458 + t452*t81 + t455*t76 + t460*t89 + t54*(r*t447 + t111*t450 - t111*t453 + t20*t415 - t232*t238 + t253*t454 + t271*t450 - t354*t450 - t451)
    out[0, 0, 5, 5] = v
    out[0, 5, 0, 5] = v
    out[0, 5, 5, 0] = v
    out[0, 2, 2, 2] = -48*r**7*t112*t464*t7**3*t86 + t108*t141 + t131*t467 + t264*t470 + t266*t277 + t273*t49*t95 + t275*t466 - t276*t471 - t279*t471*t88 - t282*t470 + t284*t469*t8*t95 + t288*t289 - t465*t468*t469 + t54*(3*t0*t15*t259*t32*t94 + 12*t0*t259*t32*t8*t94 + t116 - t117 - t269*t295 - t463*t465)
    v = -t121*t484 + t164*t276 + t168*t280 - t168*t283 + t266*t385 + t279*t367 + t279*t369 + t285*t475 + t286*t313 + t291*t466 + t292*t299 - t292*t476 - t310*t477 - t311*t481 - t403*t478 + t473*t485 + t479*t480 - t482*t483 + t54*(-t1*t290 + t148*t264 - t148*t282 + t153*t264 - t153*t282 + t162*t472 + t473*t474)
    out[0, 2, 2, 3] = v
    out[0, 2, 3, 2] = v
    out[0, 3, 2, 2] = v
    v = t121*t494 + t195*t488 - t195*t489 + t195*t490 + t202*t276 + t209*t280 - t209*t283 + t215*t467 + t266*t386 + t279*t428 + t286*t330 + t299*t321 + t320*t466 - t321*t476 - t323*t493 - t328*t491 + t442*t478 - t483*t492 + t54*(Om*V*t0*t102*t15*t16*t4 + t193*t259*t260*t32 - t193*t282 + t195*t259*t260*t32 - t195*t282 - t323*t486 - t323*t487)
    out[0, 2, 2, 4] = v
    out[0, 2, 4, 2] = v
    out[0, 4, 2, 2] = v
    v = -t121*t497 + t227*t488 - t227*t489 + t227*t490 + t239*t493 + t240*t276 + t246*t280 - t246*t283 + t247*t266 + t279*t445 + t279*t459 + t286*t344 + t299*t338 + t337*t466 - t338*t476 - t342*t491 - t454*t478 - t483*t496 + t54*(-t115*t454 + t239*t486 + t239*t487 + t264*t495 - t282*t495)
    out[0, 2, 2, 5] = v
    out[0, 2, 5, 2] = v
    out[0, 5, 2, 2] = v
    v = -t168*t484 + t281*t350 + t292*t359 + t292*t362 - t304*t310*t503 - 8*t311*t313 - t327*t353 - t331*t504 - t350*t502 - t356*t501 + t358*t466 + t367*t482 + t370*t499 + t498*t499 + t54*(-t141*t349 - t141*t350 - t148*t317 - t153*t317)
    out[0, 2, 3, 3] = v
    out[0, 3, 2, 3] = v
    out[0, 3, 3, 2] = v
    v = t120*t208*t369 + t168*t513 + t186*t507 - t195*t508 - t209*t317 + t281*t376 + t292*t386 + t292*t423 + t321*t361 + t321*t385 + t324*t514 - t327*t380 - t328*t509 - t328*t511 - t330*t510 - t331*t512 - t376*t502 + t387*t466 + t395*t506 + t428*t482 + t482*t505 + t54*(Om*V*t102*t148*t16*t4*t94 + Om*V*t102*t153*t16*t4*t94 + Om*t102*t15*t16*t4*t94 - t141*t376 - t141*t378 - t193*t315 - t195*t315 - t319)
    out[0, 2, 3, 4] = v
    out[0, 2, 4, 3] = v
    out[0, 3, 2, 4] = v
    out[0, 3, 4, 2] = v
    out[0, 4, 2, 3] = v
    out[0, 4, 3, 2] = v
    v = r*t120*t167*t25*t256*t83 + r*t120*t25*t404*t58 + r*t167*t25*t338*t58 + r*t24*t25*(Om*t11*t20*t3*t92*t94 - t102*t148*t343 - t140*t397 - t307*t343 - t315*t495 - t336) + r*t243*t25*t292*t58 + 2*t102*t120*t153*t227*t24*t62 + t120*t153*t243*t47*t58*t92 + t120*t167*t227*t47*t58*t92 + t120*t24*t397*t47*t92 + t153*t24*t338*t47*t92 - t168*t516 - t219*t507 + t227*t24*t292*t47*t92 - t227*t508 - t246*t317 - t327*t400 - t331*t515 - t342*t509 - t342*t511 - t343*t514 - t344*t510 - t397*t502
    out[0, 2, 3, 5] = v
    out[0, 2, 5, 3] = v
    out[0, 3, 2, 5] = v
    out[0, 3, 5, 2] = v
    out[0, 5, 2, 3] = v
    out[0, 5, 3, 2] = v
    v = t209*t494 + t281*t412 + t321*t421 + t321*t424 + t324*t328*t503 - t327*t414 - t328*t330*t519 - t331*t520 - t412*t502 - t419*t501 + t420*t466 + t425*t506 + t429*t499 + t492*t505 + t521 + t54*(-t141*t411 - t141*t412 + t325*t332 + t332*t518 + t335*t6 - t517)
    out[0, 2, 4, 4] = v
    out[0, 4, 2, 4] = v
    out[0, 4, 4, 2] = v
    v = -t209*t516 + t246*t513 + t247*t321 + t281*t437 + t289*t325*t495 + t321*t444 + t324*t342*t366 - t327*t439 - t328*t343*t366 - t328*t344*t97 - t330*t342*t97 - t331*t523 + t338*t386 + t338*t423 + t428*t496 - t437*t502 + t440*t507 + t443*t466 + t445*t492 + t459*t492 - t501*t522 + t54*(Om*V*t102*t11*t15*t16*t94 + 2*Om*V*t102*t16*t227*t4*t94 - t140*t437 - t318*t440 - t325*t343 - t343*t518)
    out[0, 2, 4, 5] = v
    out[0, 2, 5, 4] = v
    out[0, 4, 2, 5] = v
    out[0, 4, 5, 2] = v
    out[0, 5, 2, 4] = v
    out[0, 5, 4, 2] = v
    v = -t140*t524 - t246*t497 + t281*t450 - t327*t452 + t338*t456 + t338*t457 - t342*t343*t503 - t342*t344*t519 - t447*t501 - t450*t502 + t455*t466 + t458*t506 + t459*t496 + t461*t496 + t521 + t54*(Om*V*t102*t15*t3*t4*t94 - t140*t450 - t227*t497 - t517)
    out[0, 2, 5, 5] = v
    out[0, 5, 2, 5] = v
    out[0, 5, 5, 2] = v
    out[0, 3, 3, 3] = t153**3*t525 + 6*t166*t498 + 3*t168*t530 + t350*t528 + t353*t359 + 3*t353*t361 + t358*t526 + t367*t504 + 3*t369*t504 + t528*(t171 + t172 + t529) + t54*((3/2)*t164*t349 + (3/2)*t294*t350)
    v = t195*t538 + t195*t539 + t207*t537 + t208*t541 + t209*t530 + t305*t532 + t353*t386 + t353*t423 + t362*t380 + t371*t395 + t376*t536 + t380*t385 + t387*t526 + t428*t504 + t504*t505 + t528*(8*V*t16*t3 - 8*t12*t373 - t210 - t347*t372) + t54*(t164*t378 + t202*t533 + t294*t376 + t322*t534 + t351*t532 + t531*t535)
    out[0, 3, 3, 4] = v
    out[0, 3, 4, 3] = v
    out[0, 4, 3, 3] = v
    v = t227*t538 + t227*t539 + t242*t537 + t243*t541 + t246*t530 + t247*t353 + t353*t444 + t362*t400 + t371*t406 + t385*t400 + t397*t536 + t404*t526 + t445*t504 + t459*t504 + t528*(-V*t224*t248 + 4*t11*t3*t7) + t54*(t164*t397 + t240*t533 + t240*t534 + t294*t397)
    out[0, 3, 3, 5] = v
    out[0, 3, 5, 3] = v
    out[0, 5, 3, 3] = v
    v = t195*t376*t548 + t208*t550 + t305*t544 + t309*t412 + t361*t414 + t376*t546 + t380*t421 + t380*t424 + t395*t430 + t412*t528 + t419*t549 + t420*t526 + t429*t540 + t505*t512 + t54*(t202*t378 + t322*t376 + t351*t544 + t377*t411 + t412*t545 - t535*(-t173 - t543)) + t540*t547
    out[0, 3, 4, 4] = v
    out[0, 4, 3, 4] = v
    out[0, 4, 4, 3] = v
    v = t243*t550 + t247*t380 + t305*t551 + t307*t330*t495 + t309*t437 + t313*t325*t495 + t326*t397 + t341*t376 + t361*t439 + t376*t555 + t380*t444 + t386*t400 + t395*t556*t90 + t397*t554 + t400*t423 + t428*t515 + t437*t528 + t443*t526 + t445*t512 + t459*t512 + t522*t549 + t54*(t202*t552 + t322*t552 + t351*t551 + t376*t553 + t377*t437 + t378*t553 + t437*t545 - t535*t551)
    out[0, 3, 4, 5] = v
    out[0, 3, 5, 4] = v
    out[0, 4, 3, 5] = v
    out[0, 4, 5, 3] = v
    out[0, 5, 3, 4] = v
    out[0, 5, 4, 3] = v
    v = t305*t557 + t309*t450 + t361*t452 + t369*t460 + t397*t558 + t397*t560 + t400*t456 + t400*t457 + t406*t462 + t447*t549 + t450*t528 + t455*t526 + t459*t515 + t461*t515 + t54*(t253*t397 + t351*t557 + t377*t450 + t450*t545 - t535*t557) + t540*t559
    out[0, 3, 5, 5] = v
    out[0, 5, 3, 5] = v
    out[0, 5, 5, 3] = v
    out[0, 4, 4, 4] = t195**3*t525 + 6*t207*t547 + t305*t563 + 3*t326*t412 + t412*t554 + t414*t421 + 3*t414*t423 + t420*t564 + 3*t428*t520 + t505*t520 + t54*((3/2)*t202*t411 + (3/2)*t322*t412 + t351*t563 - t535*t562) + t554*(t12*t565 - 4*t14 + t249 + t347*t565 - t565 + t566)
    v = t227*t419*t525 + t243*t428*t569 + t247*t414 + t341*t412 + t386*t439 + t412*t555 + t414*t444 + t424*t439 + t430*t446 + t437*t546 + t443*t564 + t445*t520 + t459*t520 + t54*(t202*t437 + t322*t437 + t411*t553 + t412*t553 + t567) + t547*t556 + t554*(4*t431*t435 - t440*t65) + t568
    out[0, 4, 4, 5] = v
    out[0, 4, 5, 4] = v
    out[0, 5, 4, 4] = v
    v = t195*t447*t525 + t305*t570 + t326*t450 + t423*t452 + t428*t460 + t437*t558 + t437*t560 + t439*t456 + t439*t457 + t446*t462 + t450*t554 + t455*t564 + t459*t523 + t461*t523 + t54*(t202*t571 + t253*t437 + t322*t571 + t351*t570 - t535*t570) + t559*t569
    out[0, 4, 5, 5] = v
    out[0, 5, 4, 5] = v
    out[0, 5, 5, 4] = v
    out[0, 5, 5, 5] = t123*t242*t455 + t227**3*t525 + 6*t242*t559 + t339*t524 + 3*t341*t450 + 3*t444*t452 + t450*t555 + t452*t456 + t459*t460 + t54*(t240*t450 + t240*t572 + t567) + t555*t572 + t568

