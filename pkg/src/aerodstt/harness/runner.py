"""Shared experiment artifacts, computed lazily and reused across commands.

A RunContext owns the reference trajectory, the per-interval STT grids
(full and decomposed dynamics), the full-span STT, the rotation bases for
every configured method, and the Taylor propagators derived from them.
Everything is deterministic for a fixed configuration.
"""

from __future__ import annotations

import numpy as np

from ..dstt import DsttSet, RotationBasis, build_basis, construct_dstt, propagate_perturbation_dstt
from ..eigen import SSHopmConfig
from ..models import NONDIMENSIONAL, StateVector
from ..propagation import (
    IntegratorConfig,
    SttSet,
    aero_system,
    compose_stts,
    flow_nd,
    integrate_stt_nd,
    integrate_stts,
)
from ..qoi import QoiPartials, qoi_partials
from ..tensors import SelectionMatrix
from .config import SELECTED_STATE_INDICES, ExperimentConfig


class RunContext:
    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.models = config.models
        self.scales = self.models.scales
        self.system = aero_system(self.models)
        self._cache: dict = {}

    # -- basic artifacts ----------------------------------------------------

    def _get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def x0_nd(self) -> np.ndarray:
        return self._get(
            "x0_nd",
            lambda: self.config.entry_state().nondimensionalized(self.scales).to_array(),
        )

    @property
    def t_final_nd(self) -> float:
        return self.config.t_final_s / self.scales.time_ref

    def sshopm_config(self) -> SSHopmConfig:
        s = self.config.sshopm
        return SSHopmConfig(
            tol_lambda=s.tol_lambda, tol_residual=s.tol_residual, max_iter=s.max_iter
        )

    def grid_and_stts(self, which: str = "full", order: int = 3):
        """Reference grid plus per-interval SttSets for a dynamics component."""

        def build():
            return integrate_stts(
                self.config.entry_state(),
                (0.0, self.config.t_final_s),
                self.models,
                order=order,
                dt_grid_s=self.config.dt_grid_s,
                config=self.config.integrator(),
                which=which,
            )

        return self._get(("stts", which, order), build)

    @property
    def grid(self):
        return self.grid_and_stts()[0]

    @property
    def stts(self) -> list[SttSet]:
        return self.grid_and_stts()[1]

    @property
    def full_span_stt(self) -> SttSet:
        def build():
            stt, xf = integrate_stt_nd(
                self.x0_nd,
                (0.0, self.t_final_nd),
                self.system,
                order=3,
                config=self.config.integrator(),
            )
            self._cache["xf_nd"] = xf
            return stt

        return self._get("full_span_stt", build)

    @property
    def xf_nd(self) -> np.ndarray:
        self.full_span_stt
        return self._cache["xf_nd"]

    @property
    def xf_state(self) -> StateVector:
        return StateVector.from_array(self.xf_nd, frame=NONDIMENSIONAL)

    def maps_from_t0(self) -> list[SttSet]:
        """Composed maps (t_0 -> t_k) for every grid point k >= 1."""

        def build():
            maps = []
            acc = None
            for stt in self.stts:
                acc = stt if acc is None else compose_stts(acc, stt)
                maps.append(acc)
            return maps

        return self._get("maps_from_t0", build)

    def selection(self) -> SelectionMatrix:
        return SelectionMatrix.from_indices(SELECTED_STATE_INDICES, 7)

    def qoi_at(self, x_nd: np.ndarray, kind: str) -> QoiPartials:
        return qoi_partials(
            StateVector.from_array(x_nd, frame=NONDIMENSIONAL), kind, self.models, order=3
        )

    # -- bases and methods over one interval ---------------------------------

    def basis_for(self, method: str, stt: SttSet, x_end_nd: np.ndarray) -> RotationBasis:
        """Rotation basis of one named Taylor method over one interval."""
        s = self.config.sshopm
        kw = dict(
            seed=s.seed, n_starts=s.n_starts, dedup_angle=s.dedup_angle_rad,
            sshopm=self.sshopm_config(),
        )
        if method.endswith("-DSTT"):
            l = int(method.split("-")[0])
            return build_basis("cgt2-top-l", stt, l=l)
        if method == "hoDSTT":
            return build_basis("hocgt", stt, **kw)
        if method == "sDSTT":
            return build_basis("scgt", stt, aux=self.selection(), **kw)
        if method == "eps-qDSTT":
            return build_basis("qcgt-energy", stt, aux=self.qoi_at(x_end_nd, "energy"), **kw)
        if method == "ra-qDSTT":
            return build_basis(
                "qcgt-apoapsis", stt, aux=self.qoi_at(x_end_nd, "apoapsis"), **kw
            )
        raise ValueError(f"method {method!r} has no basis")

    def propagators(self, methods=None):
        """name -> callable(dx_nd) -> dx_f_nd over the full span (t_0 -> t_f)."""

        def build_one(name):
            stt = self.full_span_stt
            if name == "STM":
                return lambda dx: stt.phi1 @ dx
            if name == "STT2":
                from ..propagation import propagate_perturbation_stt

                return lambda dx: propagate_perturbation_stt(stt, dx, 2)
            if name == "STT3":
                from ..propagation import propagate_perturbation_stt

                return lambda dx: propagate_perturbation_stt(stt, dx, 3)
            basis = self.basis_for(name, stt, self.xf_nd)
            dstt = construct_dstt(stt, basis)
            return lambda dx: propagate_perturbation_dstt(dstt, dx, 3)

        methods = tuple(methods) if methods is not None else self.config.methods
        return {
            name: self._get(("prop", name), lambda n=name: build_one(n))
            for name in methods
        }

    # -- oracle -------------------------------------------------------------

    def integrate_perturbed(
        self, dx_nd: np.ndarray, t_eval=None, config: IntegratorConfig | None = None
    ) -> np.ndarray:
        """Truth propagation of a perturbed entry state to t_f (or t_eval grid)."""
        sol = flow_nd(
            self.x0_nd + dx_nd,
            (0.0, self.t_final_nd),
            self.system,
            config or self.config.integrator(),
            t_eval=t_eval,
        )
        return sol.y[:, -1] if t_eval is None else sol.y
