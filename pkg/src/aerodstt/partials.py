"""State partials of the entry dynamics to third order.

Thin wrapper over the machine-generated closed forms in
:mod:`aerodstt._partials_gen`. Partials are always taken with respect to
the nondimensional state, of the nondimensional dynamics; callers pass
states in either frame and the reference state is converted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _partials_gen as gen
from .dynamics import _check_domain, build_params
from .models import N_STATES, ModelSet, StateVector

COMPONENTS = ("full", "conservative", "dissipative")

_FILLS = {
    "conservative": (gen.fill_jac_cons, gen.fill_hess_cons, gen.fill_cubic_cons),
    "dissipative": (gen.fill_jac_diss, gen.fill_hess_diss, gen.fill_cubic_diss),
}


@dataclass(frozen=True)
class DynamicsPartials:
    """A = df/dx (n x n), B = d2f/dx2, C = d3f/dx3 at one state.

    B is symmetric in its trailing two indices and C in its trailing
    three, exactly, by construction. Higher orders are None when not
    requested.
    """

    A: np.ndarray
    B: np.ndarray | None = None
    C: np.ndarray | None = None


def eval_partials(
    x_nd: np.ndarray, prm: np.ndarray, order: int = 3, which: str = "full"
):
    """(A, B, C) arrays at a nondimensional state; entries beyond `order` are None."""
    if which not in COMPONENTS:
        raise ValueError(f"which must be one of {COMPONENTS}, got {which!r}")
    if not 1 <= order <= 3:
        raise ValueError("order must be 1, 2 or 3")
    parts = COMPONENTS[1:] if which == "full" else (which,)
    n = N_STATES
    A = np.zeros((n, n))
    B = np.zeros((n, n, n)) if order >= 2 else None
    C = np.zeros((n, n, n, n)) if order >= 3 else None
    scratch = np.zeros_like(A)
    for part in parts:
        fj, fh, fc = _FILLS[part]
        scratch[:] = 0.0
        fj(x_nd, prm, scratch)
        A += scratch
        if order >= 2:
            s2 = np.zeros((n, n, n))
            fh(x_nd, prm, s2)
            B += s2
        if order >= 3:
            s3 = np.zeros((n, n, n, n))
            fc(x_nd, prm, s3)
            C += s3
    return A, B, C


def dynamics_partials(
    x: StateVector, models: ModelSet, order: int = 3, which: str = "full"
) -> DynamicsPartials:
    """Closed-form partials of the selected dynamics component at ``x``.

    ``which`` selects the full dynamics or its conservative/dissipative
    part; the full-component partials are the exact elementwise sum of
    the other two.
    """
    x_nd = x.nondimensionalized(models.scales).to_array()
    _check_domain(x_nd)
    prm = build_params(models)
    A, B, C = eval_partials(x_nd, prm, order, which)
    return DynamicsPartials(A=A, B=B, C=C)
