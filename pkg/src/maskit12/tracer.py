"""Numerical location of pleating rays and planes.

A pleating ray is followed as a branch of the totally real variety where
the traces of the supporting curve and of enough of its wheel are real.
The branch is seeded far out with Im tau_i = 4/(theta q_i) and
Re tau_i = -2 p_i/q_i, corrected by a damped Newton method, continued by a
pseudo-arclength predictor-corrector toward the embedding's boundary, and
terminated where a monitored curve turns parabolic (|trace| = 2), located
by bisection and polished by a cusp Newton solve.

Traces along the path are evaluated through the exact trace polynomials,
so residuals stay near rounding level even deep in the asymptotic regime;
Jacobians use the exact polynomial gradients for words under the symbolic
cap and central finite differences beyond it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .config import RunConfig
from .errors import (
    AdmissibilityError,
    ContinuationError,
    ConvergenceError,
    SingularJacobianError,
)
from .lamination import (
    RationalLamination,
    infer_coords_from_trace,
    is_exceptional_pair,
    wheel_search,
)
from .tracepoly import BiPoly, trace_poly
from .words import GroupWord, ParameterPoint, cyclic_reduce, trace_at

DEFAULT_CONFIG = RunConfig()


# ---------------------------------------------------------------------------
# Trace evaluation on the real chart (x1, y1, x2, y2).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _TraceFn:
    """A trace and its exact tau-gradient, bound to one word."""

    word: GroupWord
    poly: BiPoly | None
    d1: BiPoly | None
    d2: BiPoly | None

    @classmethod
    def make(cls, w: GroupWord, cap: int) -> "_TraceFn":
        w = cyclic_reduce(w)
        if len(w) <= cap:
            poly = trace_poly(w, cap)
            return cls(w, poly, poly.partial(1), poly.partial(2))
        return cls(w, None, None, None)

    def value(self, tau1: complex, tau2: complex) -> complex:
        if self.poly is not None:
            return self.poly.eval(tau1, tau2)
        return trace_at(self.word, tau1, tau2)

    def grad_im(self, u: np.ndarray, fd_step: float) -> np.ndarray:
        """Gradient of Im trace with respect to (x1, y1, x2, y2)."""
        tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
        if self.d1 is not None:
            g1 = self.d1.eval(tau1, tau2)
            g2 = self.d2.eval(tau1, tau2)
            return np.array([g1.imag, g1.real, g2.imag, g2.real])
        out = np.zeros(4)
        for k in range(4):
            h = fd_step * max(1.0, abs(u[k]))
            up, dn = u.copy(), u.copy()
            up[k] += h
            dn[k] -= h
            fu = self.value(complex(up[0], up[1]), complex(up[2], up[3])).imag
            fd = self.value(complex(dn[0], dn[1]), complex(dn[2], dn[3])).imag
            out[k] = (fu - fd) / (2 * h)
        return out

    def grad_re(self, u: np.ndarray, fd_step: float) -> np.ndarray:
        tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
        if self.d1 is not None:
            g1 = self.d1.eval(tau1, tau2)
            g2 = self.d2.eval(tau1, tau2)
            return np.array([g1.real, -g1.imag, g2.real, -g2.imag])
        out = np.zeros(4)
        for k in range(4):
            h = fd_step * max(1.0, abs(u[k]))
            up, dn = u.copy(), u.copy()
            up[k] += h
            dn[k] -= h
            fu = self.value(complex(up[0], up[1]), complex(up[2], up[3])).real
            fd = self.value(complex(dn[0], dn[1]), complex(dn[2], dn[3])).real
            out[k] = (fu - fd) / (2 * h)
        return out


def _point(u: np.ndarray) -> ParameterPoint:
    return ParameterPoint(complex(u[0], u[1]), complex(u[2], u[3]))


@dataclass(frozen=True)
class AffineRow:
    """Affine normalization row: coeffs . u = rhs."""

    coeffs: tuple[float, float, float, float]
    rhs: float


@dataclass
class _System:
    """Im-trace constraints plus affine rows, acting on u in R^4."""

    traces: list[_TraceFn]
    rows: list[AffineRow]
    cfg: RunConfig

    def residual(self, u: np.ndarray) -> np.ndarray:
        tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
        vals = [fn.value(tau1, tau2).imag for fn in self.traces]
        vals += [float(np.dot(row.coeffs, u)) - row.rhs for row in self.rows]
        return np.array(vals)

    def trace_scale(self, u: np.ndarray) -> float:
        tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
        return max(
            1.0, max(abs(fn.value(tau1, tau2)) for fn in self.traces) if self.traces else 1.0
        )

    def jacobian(self, u: np.ndarray) -> np.ndarray:
        rows = [fn.grad_im(u, self.cfg.fd_step) for fn in self.traces]
        rows += [np.array(row.coeffs, dtype=float) for row in self.rows]
        return np.vstack(rows)


def _solve_damped(system: _System, u0: np.ndarray, cfg: RunConfig) -> np.ndarray:
    """Damped Newton on the square 4x4 system.

    After meeting the relative tolerance, a few full polish steps run the
    residual down toward rounding level (the constraint values are exact
    polynomial evaluations, so near-exact roots are reachable).
    """
    u = u0.astype(float).copy()
    fval = system.residual(u)
    for _ in range(cfg.max_newton_iter):
        scale = system.trace_scale(u)
        if np.max(np.abs(fval)) < cfg.newton_tol * scale:
            for _ in range(4):
                if not np.any(fval):
                    break
                try:
                    jac = system.jacobian(u)
                    step = np.linalg.solve(jac, -fval)
                except np.linalg.LinAlgError:
                    break
                trial = u + step
                ftrial = system.residual(trial)
                if np.max(np.abs(ftrial)) < 0.5 * np.max(np.abs(fval)) and (
                    trial[1] > 0 and trial[3] > 0
                ):
                    u, fval = trial, ftrial
                else:
                    break
            return u
        jac = system.jacobian(u)
        # Row equilibration keeps the O(|tau|) trace rows comparable to
        # the O(1) normalization rows.
        norms = np.maximum(np.linalg.norm(jac, axis=1), 1e-300)
        jac_s = jac / norms[:, None]
        if np.linalg.cond(jac_s) > 1e12:
            raise SingularJacobianError(
                f"singular corrector Jacobian (cond > 1e12) at {_point_str(u)}"
            )
        step = np.linalg.solve(jac_s, -fval / norms)
        lam, best = 1.0, None
        f0 = np.linalg.norm(fval / np.maximum(norms, 1.0))
        while lam > 2**-12:
            trial = u + lam * step
            if trial[1] > 0 and trial[3] > 0:
                ftrial = system.residual(trial)
                if np.linalg.norm(ftrial / np.maximum(norms, 1.0)) < (1 - 0.25 * lam) * f0:
                    best = (trial, ftrial)
                    break
            lam *= 0.5
        if best is None:
            raise ConvergenceError(f"Newton stalled at {_point_str(u)}")
        u, fval = best
    scale = system.trace_scale(u)
    if np.max(np.abs(fval)) < cfg.newton_tol * scale:
        return u
    raise ConvergenceError(
        f"no convergence within {cfg.max_newton_iter} iterations at {_point_str(u)}"
    )


def _point_str(u: np.ndarray) -> str:
    return f"({u[0]:.6g}+{u[1]:.6g}i, {u[2]:.6g}+{u[3]:.6g}i)"


def newton_correct(
    p: ParameterPoint,
    constraints: list[GroupWord],
    normalizations: list[AffineRow],
    cfg: RunConfig = DEFAULT_CONFIG,
) -> ParameterPoint:
    """Drive Im trace -> 0 for each constraint while holding affine rows.

    The total row count must be 4 (the real dimension of the chart).
    """
    if len(constraints) + len(normalizations) != 4:
        raise ValueError("need exactly 4 rows: constraints + normalizations")
    if not 0 <= len(normalizations) <= 2:
        raise ValueError("0-2 normalization rows supported")
    system = _System(
        [_TraceFn.make(w, cfg.symbolic_cap) for w in constraints],
        list(normalizations),
        cfg,
    )
    u0 = np.array([p.tau1.real, p.tau1.imag, p.tau2.real, p.tau2.imag])
    return _point(_solve_damped(system, u0, cfg))


# ---------------------------------------------------------------------------
# Ray and plane continuation.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RaySample:
    theta_nominal: float
    point: ParameterPoint
    residual: float
    trace_values: dict[str, float]

    def u(self) -> np.ndarray:
        return np.array(
            [
                self.point.tau1.real,
                self.point.tau1.imag,
                self.point.tau2.real,
                self.point.tau2.imag,
            ]
        )


@dataclass(frozen=True)
class RayPolyline:
    samples: tuple[RaySample, ...]
    terminus: str  # "CUSP", "MAX_STEPS", "DIVERGED"
    cusp_curve: str | None = None
    flags: tuple[str, ...] = ()

    def end(self) -> ParameterPoint:
        return self.samples[-1].point


@dataclass(frozen=True)
class EDiagnostic:
    value: float


def eval_E(c, p: ParameterPoint) -> EDiagnostic:
    """Directional defect (q1 x1 + 2 p1) eta2 + (q2 x2 + 2 p2) eta1.

    eta_i = Im tau_i / sqrt(Im tau1^2 + Im tau2^2); the quantity decays
    like the bending scale along the curve's pleating ray.
    """
    y1, y2 = p.tau1.imag, p.tau2.imag
    rho = math.hypot(y1, y2)
    eta1, eta2 = y1 / rho, y2 / rho
    val = (c.q1 * p.tau1.real + 2 * c.p1) * eta2 + (c.q2 * p.tau2.real + 2 * c.p2) * eta1
    return EDiagnostic(val)


def seed_point(xi: RationalLamination, theta: float) -> ParameterPoint:
    """Asymptotic seed tau_i = -2 p_i/q_i + 4i/(theta q_i)."""
    if theta <= 0:
        raise AdmissibilityError("theta must be positive")
    q1, p1, q2, p2 = xi.coords()
    if not (q1 > 0 and q2 > 0):
        raise AdmissibilityError(f"lamination {xi} is not admissible")
    return ParameterPoint(
        complex(-2 * p1 / q1, 4.0 / (theta * q1)),
        complex(-2 * p2 / q2, 4.0 / (theta * q2)),
    )


def _tangent(system: _System, u: np.ndarray) -> np.ndarray:
    """Unit null direction of the constraint rows (without arclength row)."""
    jac = system.jacobian(u)
    norms = np.maximum(np.linalg.norm(jac, axis=1), 1e-300)
    _, svals, vt = np.linalg.svd(jac / norms[:, None])
    if svals[-1] > 1e-8 * svals[0] and jac.shape[0] >= 4:
        raise SingularJacobianError("constraint rows leave no tangent direction")
    return vt[-1]


@dataclass
class _Monitor:
    fn: _TraceFn
    label: str


def _roundtrip_theta(q1: Fraction | float, y1: float) -> float:
    return 4.0 / (float(q1) * y1)


def _sample(
    system: _System, u: np.ndarray, monitors: list[_Monitor], q1
) -> RaySample:
    tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
    residual = max(abs(fn.value(tau1, tau2).imag) for fn in system.traces)
    traces = {m.label: m.fn.value(tau1, tau2).real for m in monitors}
    return RaySample(_roundtrip_theta(q1, u[1]), _point(u), residual, traces)


def _locate_cusp(
    base: _System,
    u_in: np.ndarray,
    u_out: np.ndarray,
    tangent: np.ndarray,
    monitor: _Monitor,
    cfg: RunConfig,
) -> np.ndarray:
    """Bisect |Re tr| - 2 between an inside and an outside point, then
    polish with a square Newton solve on the parabolic condition."""

    def correct_at(t: float) -> np.ndarray:
        pred = (1 - t) * u_in + t * u_out
        rows = base.rows + [AffineRow(tuple(tangent), float(np.dot(tangent, pred)))]
        return _solve_damped(_System(base.traces, rows, cfg), pred, cfg)

    def gap(u: np.ndarray) -> float:
        return abs(monitor.fn.value(complex(u[0], u[1]), complex(u[2], u[3])).real) - 2.0

    lo, hi = 0.0, 1.0
    u_best = u_in
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        u_mid = correct_at(mid)
        if gap(u_mid) > 0:
            lo, u_best = mid, u_mid
        else:
            hi = mid
        if hi - lo < 1e-14:
            break
    # Polish: Im-trace rows plus Re tr = +-2 for the cusp curve.
    sign = 2.0 if monitor.fn.value(
        complex(u_best[0], u_best[1]), complex(u_best[2], u_best[3])
    ).real > 0 else -2.0
    u = u_best.copy()
    for _ in range(60):
        tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
        fvals = [fn.value(tau1, tau2).imag for fn in base.traces]
        fvals += [float(np.dot(r.coeffs, u)) - r.rhs for r in base.rows]
        fvals.append(monitor.fn.value(tau1, tau2).real - sign)
        fval = np.array(fvals)
        if np.max(np.abs(fval)) < 1e-14 * base.trace_scale(u):
            break
        rows = [fn.grad_im(u, cfg.fd_step) for fn in base.traces]
        rows += [np.array(r.coeffs) for r in base.rows]
        rows.append(monitor.fn.grad_re(u, cfg.fd_step))
        jac = np.vstack(rows)
        norms = np.maximum(np.linalg.norm(jac, axis=1), 1e-300)
        try:
            step = np.linalg.solve(jac / norms[:, None], -fval / norms)
        except np.linalg.LinAlgError as exc:
            raise SingularJacobianError(f"cusp polish Jacobian singular: {exc}")
        if not np.all(np.isfinite(step)):
            break
        u = u + step
        if np.linalg.norm(step) < 1e-15 * max(1.0, np.linalg.norm(u)):
            break
    if abs(gap(u)) > cfg.cusp_tol:
        raise ConvergenceError(
            f"cusp refinement stalled: | |tr|-2 | = {abs(gap(u)):.3e} at {_point_str(u)}"
        )
    return u


def _continue_branch(
    constraint_words: list[GroupWord],
    base_rows: list[AffineRow],
    u0: np.ndarray,
    monitors: list[_Monitor],
    q1,
    theta_end: float,
    cfg: RunConfig,
    max_samples: int,
) -> RayPolyline:
    """Shared pseudo-arclength loop for rays and pseudo-rays.

    ``base_rows`` contribute 4 - 1 - len(constraints) rows; one more slot
    is used by the moving arclength row.
    """
    traces = [_TraceFn.make(w, cfg.symbolic_cap) for w in constraint_words]
    base = _System(traces, list(base_rows), cfg)
    flags: list[str] = []

    u = u0.copy()
    samples = [_sample(base, u, monitors, q1)]
    h = cfg.initial_step
    easy = 0
    terminus, cusp_label = "MAX_STEPS", None
    prev_tangent = None

    for _ in range(cfg.max_steps):
        if len(samples) >= max_samples:
            flags.append("sample-budget")
            break
        try:
            tangent = _tangent(base, u)
        except SingularJacobianError:
            terminus = "DIVERGED"
            flags.append("singular-tangent")
            break
        # First step walks toward decreasing Im tau1 (increasing bending);
        # afterwards the orientation follows the path by continuity, which
        # is stable across folds.
        if prev_tangent is None:
            if tangent[1] > 0:
                tangent = -tangent
        elif float(np.dot(tangent, prev_tangent)) < 0:
            tangent = -tangent
        prev_tangent = tangent
        scale = max(1.0, abs(u[1]), abs(u[3]))
        moved = None
        while h >= cfg.min_step:
            pred = u + h * scale * tangent
            rows = base.rows + [AffineRow(tuple(tangent), float(np.dot(tangent, pred)))]
            try:
                trial = _solve_damped(_System(base.traces, rows, cfg), pred, cfg)
            except (ConvergenceError, SingularJacobianError):
                h *= cfg.step_shrink
                easy = 0
                continue
            moved = trial
            break
        if moved is None:
            terminus = "DIVERGED"
            flags.append("min-step-underflow")
            break
        crossed = None
        for mon in monitors:
            g_prev = abs(mon.fn.value(complex(u[0], u[1]), complex(u[2], u[3])).real) - 2.0
            g_new = abs(
                mon.fn.value(complex(moved[0], moved[1]), complex(moved[2], moved[3])).real
            ) - 2.0
            if g_prev > 0 >= g_new:
                crossed = mon
                break
        if crossed is not None:
            u_c = _locate_cusp(base, u, moved, _tangent(base, u), crossed, cfg)
            samples.append(_sample(base, u_c, monitors, q1))
            terminus, cusp_label = "CUSP", crossed.label
            break
        u = moved
        samples.append(_sample(base, u, monitors, q1))
        easy += 1
        if easy >= cfg.easy_streak:
            h = min(h * cfg.step_growth, 0.25)
            easy = 0
        if u[1] <= 0 or u[3] <= 0 or max(abs(u[1]), abs(u[3])) > 1e12:
            terminus = "DIVERGED"
            flags.append("left-chart")
            break
        if _roundtrip_theta(q1, u[1]) >= theta_end:
            flags.append("theta-end")
            break

    return RayPolyline(tuple(samples), terminus, cusp_label, tuple(flags))


def trace_ray(
    gamma: GroupWord,
    theta_start: float = 0.05,
    theta_end: float = 8.0,
    steps: int = 4000,
    cfg: RunConfig = DEFAULT_CONFIG,
    wheel: list[GroupWord] | None = None,
) -> RayPolyline:
    """Follow the pleating ray of an admissible simple curve to its cusp.

    Constraints are gamma plus two independent wheel curves; the seed
    comes from the asymptotic direction at bending scale ``theta_start``
    and the path runs toward increasing theta until a monitored curve
    turns parabolic.
    """
    gamma = cyclic_reduce(gamma)
    coords = infer_coords_from_trace(gamma)
    if not (coords.q1 > 0 and coords.q2 > 0):
        raise AdmissibilityError(f"{gamma} with {coords} is not admissible")
    if wheel is None:
        wheel = wheel_search(gamma, 2, depth=cfg.enum_depth)
    constraints = [gamma] + list(wheel)
    lam = RationalLamination.single(gamma)
    seed = seed_point(lam, theta_start)
    u0 = np.array([seed.tau1.real, seed.tau1.imag, seed.tau2.real, seed.tau2.imag])

    from .domain import Membership, membership

    if membership(seed).status is not Membership.PROVED_INSIDE:
        raise ContinuationError(
            f"seed {seed} at theta = {theta_start} is below the sufficiency bounds; "
            "decrease theta_start"
        )
    pin = AffineRow((0.0, 1.0, 0.0, 0.0), u0[1])
    traces = [_TraceFn.make(w, cfg.symbolic_cap) for w in constraints]
    u0 = _solve_damped(_System(traces, [pin], cfg), u0, cfg)
    monitors = [_Monitor(fn, str(fn.word)) for fn in traces]
    return _continue_branch(
        constraints, [], u0, monitors, coords.q1, theta_end, cfg, steps
    )


def trace_plane(
    gamma1: GroupWord,
    gamma2: GroupWord,
    s_grid: int = 9,
    theta_start: float = 0.05,
    theta_end: float = 16.0,
    cfg: RunConfig = DEFAULT_CONFIG,
) -> list[RayPolyline]:
    """Foliate the pleating plane of a disjoint pair by pseudo-rays.

    For each interior grid value s the lamination (1-s) gamma1 + s gamma2
    is followed with the two trace constraints plus a foliation row:
    q1(s) Im tau1 - q2(s) Im tau2 = 0 (the asymptotic Im-ratio), replaced
    by the real-part pin (x1 + 2p1/q1) - (x2 + 2p2/q2) = 0 when the ratio
    row degenerates inside the plane.  Pseudo-rays agree with true rays
    only asymptotically.  Exceptional pairs are traced but flagged.
    """
    from .lamination import disjoint

    gamma1, gamma2 = cyclic_reduce(gamma1), cyclic_reduce(gamma2)
    c1 = infer_coords_from_trace(gamma1)
    c2 = infer_coords_from_trace(gamma2)
    if not disjoint(gamma1, gamma2):
        raise AdmissibilityError(f"{gamma1} and {gamma2} are not disjoint")
    exceptional = is_exceptional_pair(c1, c2)
    out: list[RayPolyline] = []
    traced_any = False
    for k in range(1, s_grid + 1):
        s = Fraction(k, s_grid + 1)
        coords = tuple(
            (1 - s) * a + s * b for a, b in zip(c1.as_tuple(), c2.as_tuple())
        )
        q1, p1, q2, p2 = coords
        if not (q1 > 0 and q2 > 0):
            continue
        traced_any = True
        seed = ParameterPoint(
            complex(-2 * p1 / q1, 4.0 / (theta_start * float(q1))),
            complex(-2 * p2 / q2, 4.0 / (theta_start * float(q2))),
        )
        u0 = np.array([seed.tau1.real, seed.tau1.imag, seed.tau2.real, seed.tau2.imag])
        ratio_row = AffineRow((0.0, float(q1), 0.0, -float(q2)), 0.0)
        re_row = AffineRow(
            (1.0, 0.0, -1.0, 0.0), float(-2 * p1 / q1 + 2 * p2 / q2)
        )
        traces = [_TraceFn.make(w, cfg.symbolic_cap) for w in (gamma1, gamma2)]
        pin = AffineRow((0.0, 1.0, 0.0, 0.0), u0[1])
        flags = ["pseudo-ray"]
        if exceptional:
            # The Im-ratio is constant across the family, so the real
            # parts (which do vary with s) must do the foliating.
            foliation = re_row
            flags.append("re-foliation")
        else:
            foliation = ratio_row
            trial_sys = _System(traces, [foliation, pin], cfg)
            jac = trial_sys.jacobian(u0)
            norms = np.maximum(np.linalg.norm(jac, axis=1), 1e-300)
            svals = np.linalg.svd(jac / norms[:, None], compute_uv=False)
            if svals[-1] < 1e-8 * svals[0]:
                foliation = re_row
                flags.append("re-foliation")
        u0 = _solve_damped(
            _System(traces, [foliation, pin], cfg), u0, cfg
        )
        monitors = [_Monitor(fn, str(fn.word)) for fn in traces]
        poly = _continue_branch(
            [gamma1, gamma2], [foliation], u0, monitors, q1, theta_end, cfg,
            cfg.max_steps,
        )
        extra = tuple(flags) + (("EXCEPTIONAL",) if exceptional else ())
        out.append(
            RayPolyline(poly.samples, poly.terminus, poly.cusp_curve, poly.flags + extra)
        )
    if not traced_any:
        raise AdmissibilityError(
            f"no interior lamination of {gamma1}, {gamma2} is admissible"
        )
    return out


def double_cusp(
    gamma1: GroupWord,
    gamma2: GroupWord,
    seed: ParameterPoint,
    cfg: RunConfig = DEFAULT_CONFIG,
) -> ParameterPoint:
    """Polish the point where both curves are parabolic with real traces."""
    fns = [_TraceFn.make(cyclic_reduce(w), cfg.symbolic_cap) for w in (gamma1, gamma2)]
    u = np.array([seed.tau1.real, seed.tau1.imag, seed.tau2.real, seed.tau2.imag])
    signs = [
        2.0 if fn.value(complex(u[0], u[1]), complex(u[2], u[3])).real > 0 else -2.0
        for fn in fns
    ]
    for _ in range(80):
        tau1, tau2 = complex(u[0], u[1]), complex(u[2], u[3])
        fval = np.array(
            [fn.value(tau1, tau2).imag for fn in fns]
            + [fn.value(tau1, tau2).real - s for fn, s in zip(fns, signs)]
        )
        if np.max(np.abs(fval)) < 1e-14 * max(1.0, *(abs(fn.value(tau1, tau2)) for fn in fns)):
            break
        jac = np.vstack(
            [fn.grad_im(u, cfg.fd_step) for fn in fns]
            + [fn.grad_re(u, cfg.fd_step) for fn in fns]
        )
        try:
            step = np.linalg.solve(jac, -fval)
        except np.linalg.LinAlgError as exc:
            raise SingularJacobianError(f"double-cusp Jacobian singular: {exc}")
        u = u + step
        if np.linalg.norm(step) < 1e-15 * max(1.0, np.linalg.norm(u)):
            break
    return _point(u)


def find_plane_corner(
    gamma1: GroupWord,
    gamma2: GroupWord,
    rays: list[RayPolyline],
    cfg: RunConfig = DEFAULT_CONFIG,
) -> ParameterPoint:
    """Corner of a pleating plane: the double cusp where the boundary arcs
    of the two support curves meet.  Seeded from the pseudo-ray whose
    terminus switches from one cusp curve to the other."""
    cusp_rays = [r for r in rays if r.terminus == "CUSP"]
    if not cusp_rays:
        raise ContinuationError("no pseudo-ray reached a cusp")
    switch = None
    for a, b in zip(cusp_rays, cusp_rays[1:]):
        if a.cusp_curve != b.cusp_curve:
            switch = (a, b)
            break
    if switch is None:
        raise ContinuationError(
            "cusp curve never switches along the grid; refine s_grid"
        )
    ua, ub = switch[0].end(), switch[1].end()
    seed = ParameterPoint((ua.tau1 + ub.tau1) / 2, (ua.tau2 + ub.tau2) / 2)
    return double_cusp(gamma1, gamma2, seed, cfg)


# ---------------------------------------------------------------------------
# Model branch systems near the origin.
# ---------------------------------------------------------------------------

_TOY_FACTORS = {
    "f1": lambda z1, z2: 1 - z1 + z2 + z1 * z2,
    "f2": lambda z1, z2: 1 - z1 - z2 + z1 * z2,
    "f3": lambda z1, z2: 1 - z1 + z2 + z1 * z1,
}


@dataclass(frozen=True)
class ToyBranchReport:
    which: str
    verdict: str  # FAMILY / NONE / UNIQUE
    roots: dict[float, tuple[float, ...]] = field(default_factory=dict)


def toy_branch_check(
    which: str,
    eps_values: tuple[float, ...] = (1e-2, 1e-3),
    alpha_window: float = 0.3,
    n_samples: int = 601,
) -> ToyBranchReport:
    """Classify the branch structure of Im f0 = Im f_w = 0 near the origin.

    On the ansatz z1 = eps*i*e^{i a}, z2 = eps*i*e^{-i a} the first
    equation holds identically, so the solver scans the one real function
    a -> Im f_w over |a| <= alpha_window: an identically vanishing scan is
    a one-parameter FAMILY, no sign change is NONE, and isolated roots
    (expected at a = 0) give UNIQUE.
    """
    if which not in _TOY_FACTORS:
        raise ValueError(f"unknown toy system {which!r}; use f1, f2 or f3")
    factor = _TOY_FACTORS[which]

    def g(eps: float, alpha: float) -> float:
        z1 = eps * 1j * cmath.exp(1j * alpha)
        z2 = eps * 1j * cmath.exp(-1j * alpha)
        return (z1 * z2 * factor(z1, z2)).imag

    verdicts = []
    roots: dict[float, tuple[float, ...]] = {}
    for eps in eps_values:
        alphas = np.linspace(-alpha_window, alpha_window, n_samples)
        vals = np.array([g(eps, a) for a in alphas])
        floor = 1e-2 * eps**4
        if np.max(np.abs(vals)) < floor:
            verdicts.append("FAMILY")
            roots[eps] = tuple(alphas)
            continue
        found = []
        for a0, a1, v0, v1 in zip(alphas, alphas[1:], vals, vals[1:]):
            if v0 == 0.0:
                found.append(float(a0))
            if v0 * v1 < 0:
                lo, hi = float(a0), float(a1)
                for _ in range(80):
                    mid = 0.5 * (lo + hi)
                    if g(eps, lo) * g(eps, mid) <= 0:
                        hi = mid
                    else:
                        lo = mid
                found.append(0.5 * (lo + hi))
        found = sorted(set(round(a, 12) for a in found))
        roots[eps] = tuple(found)
        verdicts.append("NONE" if not found else ("UNIQUE" if len(found) == 1 else "MANY"))
    final = verdicts[0] if len(set(verdicts)) == 1 else "MIXED"
    return ToyBranchReport(which, final, roots)
