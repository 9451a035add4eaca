"""Generate closed-form partial-derivative kernels into src/aerodstt/_partials_gen.py.

Differentiates the nondimensional entry dynamics (conservative and
dissipative parts separately) and the scalar quantities of interest
(inertial specific energy, apoapsis radius) to third order with sympy,
runs common-subexpression elimination, and emits plain-scalar Python
functions that fill preallocated arrays. The emitted code only touches
nonzero entries and writes every permutation of the trailing indices, so
the stored tensors are symmetric by construction.

Run from the repository root:  python tools/gen_partials.py
"""

from __future__ import annotations

import itertools
from pathlib import Path

import sympy as sp
from sympy.printing.pycode import PythonCodePrinter

OUT_PATH = Path(__file__).resolve().parent.parent / "src" / "aerodstt" / "_partials_gen.py"

# state and parameter symbols; names match the runtime prm layout
r, th, ph, V, ga, ps, ze = sp.symbols("r th ph V ga ps ze", real=True)
J2, Om, cD, LD, csg, ssg, Hfac, zref = sp.symbols(
    "J2 Om cD LD csg ssg Hfac zref", real=True
)
STATE = (r, th, ph, V, ga, ps, ze)
N = 7

_PRINTER = PythonCodePrinter({"standard": "python3"})


def _p(expr) -> str:
    return _PRINTER.doprint(expr)


def conservative_rhs():
    sph, cph = sp.sin(ph), sp.cos(ph)
    sga, cga = sp.sin(ga), sp.cos(ga)
    sps, cps = sp.sin(ps), sp.cos(ps)
    g_r = (1 + (J2 / r**2) * (sp.Rational(3, 2) - sp.Rational(9, 2) * sph**2)) / r**2
    g_ph = ((J2 / r**2) * 3 * sph * cph) / r**2
    om2r = Om**2 * r
    return [
        V * sga,
        V * cga * sps / (r * cph),
        V * cga * cps / r,
        -g_r * sga - g_ph * cga * cps + om2r * cph * (sga * cph - cga * sph * cps),
        (
            (V**2 / r - g_r) * cga
            + g_ph * sga * cps
            + 2 * Om * V * cph * sps
            + om2r * cph * (cga * cph + sga * cps * sph)
        )
        / V,
        (
            (V**2 / r) * cga * sps * sph / cph
            + g_ph * sps / cga
            - 2 * Om * V * (sga / cga * cps * cph - sph)
            + om2r * sps * sph * cph / cga
        )
        / V,
        sp.Integer(0),
    ]


def dissipative_rhs():
    rho = sp.exp(ze * zref)
    drag = cD * rho * V**2
    lift = LD * drag
    return [
        sp.Integer(0),
        sp.Integer(0),
        sp.Integer(0),
        -drag,
        lift * csg / V,
        lift * ssg / (V * sp.cos(ga)),
        -V * sp.sin(ga) * Hfac,
    ]


def inertial_velocity_sq():
    """(u, east, north) squared pieces of the inertial velocity, nondimensional."""
    w = Om * r * sp.cos(ph)
    up = V * sp.sin(ga)
    east = V * sp.cos(ga) * sp.sin(ps) + w
    north = V * sp.cos(ga) * sp.cos(ps)
    return up**2 + east**2 + north**2, east**2 + north**2


def energy_expr():
    vi2, _ = inertial_velocity_sq()
    return vi2 / 2 - 1 / r


def apoapsis_expr():
    vi2, hor2 = inertial_velocity_sq()
    a = r / (2 - r * vi2)
    disc = 1 - hor2 * r**2 / a
    return a * (1 + sp.sqrt(disc))


def derivative_entries(exprs, max_order):
    """dict order -> {multi-index tuple: expr} over distinct sorted index combos."""
    per_order = {}
    first = {}
    for i, f in enumerate(exprs):
        for a in range(N):
            d = sp.diff(f, STATE[a])
            if d != 0:
                first[(i, a)] = d
    per_order[1] = first
    if max_order >= 2:
        second = {}
        for (i, a), d in first.items():
            for b in range(a, N):
                dd = sp.diff(d, STATE[b])
                if dd != 0:
                    second[(i, a, b)] = dd
        per_order[2] = second
    if max_order >= 3:
        third = {}
        for (i, a, b), d in per_order[2].items():
            for c in range(b, N):
                ddd = sp.diff(d, STATE[c])
                if ddd != 0:
                    third[(i, a, b, c)] = ddd
        per_order[3] = third
    return per_order


HEADER = '''"""Machine-generated closed-form partial derivatives. DO NOT EDIT.

Produced by tools/gen_partials.py (sympy differentiation + CSE). Each
fill_* function writes the nonzero entries of a preallocated, pre-zeroed
array; trailing-index-symmetric entries are written at every permutation
so the tensors are exactly symmetric. All inputs are nondimensional.
"""

import math

from ._jit import njit

'''

STATE_UNPACK = {
    "dyn": [
        "    r = x[0]",
        "    ph = x[2]",
        "    V = x[3]",
        "    ga = x[4]",
        "    ps = x[5]",
        "    ze = x[6]",
        "    J2 = prm[0]",
        "    Om = prm[1]",
        "    cD = prm[2]",
        "    LD = prm[3]",
        "    csg = prm[4]",
        "    ssg = prm[5]",
        "    Hfac = prm[6]",
        "    zref = prm[7]",
    ],
    "qoi": [
        "    r = x[0]",
        "    ph = x[2]",
        "    V = x[3]",
        "    ga = x[4]",
        "    ps = x[5]",
        "    Om = prm[0]",
    ],
}


def emit_fill(name, entries, order, unpack_kind):
    """Emit one fill function: def name(x, prm, out) writing order-`order` entries."""
    lines = ["@njit(cache=True)", f"def {name}(x, prm, out):"]
    lines += STATE_UNPACK[unpack_kind]
    keys = sorted(entries.keys())
    exprs = [entries[k] for k in keys]
    temps, reduced = sp.cse(exprs, symbols=sp.numbered_symbols("t"), order="none")
    for sym, val in temps:
        lines.append(f"    {sym} = {_p(val)}")
    def slot(i, idx):
        return "out[" + ", ".join(str(k) for k in (i,) + tuple(idx)) + "]"

    for key, expr in zip(keys, reduced):
        i, idx = key[0], key[1:]
        code = _p(expr)
        perms = sorted(set(itertools.permutations(idx)))
        if len(perms) == 1:
            lines.append(f"    {slot(i, perms[0])} = {code}")
        else:
            lines.append(f"    v = {code}")
            for p_ in perms:
                lines.append(f"    {slot(i, p_)} = v")
    if not keys:
        lines.append("    pass")
    return "\n".join(lines) + "\n\n"


def emit_value(name, expr, unpack_kind):
    lines = ["@njit(cache=True)", f"def {name}(x, prm):"]
    lines += STATE_UNPACK[unpack_kind]
    temps, (red,) = sp.cse([expr], symbols=sp.numbered_symbols("t"), order="none")
    for sym, val in temps:
        lines.append(f"    {sym} = {_p(val)}")
    lines.append(f"    return {_p(red)}")
    return "\n".join(lines) + "\n\n"


def main():
    chunks = [HEADER]

    for tag, exprs in (("cons", conservative_rhs()), ("diss", dissipative_rhs())):
        per_order = derivative_entries(exprs, 3)
        print(
            f"{tag}: order sizes "
            + ", ".join(f"{o}:{len(per_order[o])}" for o in sorted(per_order))
        )
        chunks.append(emit_fill(f"fill_jac_{tag}", per_order[1], 1, "dyn"))
        chunks.append(emit_fill(f"fill_hess_{tag}", per_order[2], 2, "dyn"))
        chunks.append(emit_fill(f"fill_cubic_{tag}", per_order[3], 3, "dyn"))

    for tag, expr in (("energy", energy_expr()), ("apoapsis", apoapsis_expr())):
        per_order = derivative_entries([expr], 3)
        print(
            f"qoi {tag}: order sizes "
            + ", ".join(f"{o}:{len(per_order[o])}" for o in sorted(per_order))
        )
        chunks.append(emit_value(f"qoi_value_{tag}", expr, "qoi"))
        chunks.append(emit_fill(f"fill_qoi1_{tag}", per_order[1], 1, "qoi"))
        chunks.append(emit_fill(f"fill_qoi2_{tag}", per_order[2], 2, "qoi"))
        chunks.append(emit_fill(f"fill_qoi3_{tag}", per_order[3], 3, "qoi"))

    OUT_PATH.write_text("".join(chunks))
    n_lines = sum(len(c.splitlines()) for c in chunks)
    print(f"wrote {OUT_PATH} ({n_lines} lines)")


if __name__ == "__main__":
    main()
