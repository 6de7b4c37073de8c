"""Numeric geometric monodromy of ``f(x) = t`` by root continuation.

Branch points are the roots of the squarefree part of ``Res_x(f', f - t)``,
computed exactly and then located numerically.  From a basepoint on a circle
enclosing all of them, one lasso per branch point (straight ray in, a
counterclockwise circle, straight ray out) is followed while the ``n`` roots
of ``f(x) = t`` are tracked.  Lassos are ordered so that their product is the
counterclockwise boundary loop; the loop around infinity is the same circle
run clockwise, so ``loops[0] * ... * loops[-1] * infinity`` is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .permgroup import Permutation, PermGroup, product
from .poly import Polynomial, critical_value_resultant, squarefree_part

DEFAULT_TOLERANCE = 1e-10
DEFAULT_SEED = 0
MIN_STEP = 1e-13


class MonodromyError(RuntimeError):
    """Numerical failure; ``code`` is ``PRECISION`` or ``STEP_COLLAPSE``."""

    def __init__(self, code: str, message: str, suggestion: str = ""):
        super().__init__(f"{code}: {message}" + (f" ({suggestion})" if suggestion else ""))
        self.code = code
        self.suggestion = suggestion


@dataclass
class MonodromyReport:
    degree: int
    basepoint: complex
    branch_points: list[complex]
    error_radii: list[float]
    loop_permutations: list[Permutation]
    infinity_permutation: Permutation
    group: PermGroup
    transitive: bool
    primitive: bool
    doubly_transitive: bool
    block_systems: list = field(default_factory=list)

    @property
    def product_relation_holds(self) -> bool:
        n = self.degree
        return (product(self.loop_permutations, n) * self.infinity_permutation).is_identity

    def as_payload(self) -> dict:
        def c(z):
            return [float(z.real), float(z.imag)]

        return {
            "numeric": True,
            "degree": self.degree,
            "basepoint": c(self.basepoint),
            "branch_points": [{"value": c(b), "error_radius": r} for b, r in zip(self.branch_points, self.error_radii)],
            "loop_permutations": [list(p.images) for p in self.loop_permutations],
            "infinity_permutation": list(self.infinity_permutation.images),
            "group_order": self.group.order,
            "transitive": self.transitive,
            "primitive": self.primitive,
            "doubly_transitive": self.doubly_transitive,
            "block_systems": [[sorted(b) for b in bs] for bs in self.block_systems],
            "product_relation": self.product_relation_holds,
        }


def _coeffs_high_first(p: Polynomial, dtype=complex) -> np.ndarray:
    return np.array([complex(c) for c in reversed(p.coeffs)], dtype=dtype)


def _polish(coeffs: np.ndarray, z: np.ndarray, iters: int = 3) -> tuple[np.ndarray, np.ndarray]:
    """Newton steps in extended precision; returns roots and the last step sizes."""
    c = coeffs.astype(np.clongdouble)
    dc = np.polyder(c)
    z = z.astype(np.clongdouble)
    step = np.zeros(len(z), dtype=np.longdouble)
    for _ in range(iters):
        d = np.polyval(dc, z)
        safe = np.where(d == 0, 1, d)
        delta = np.where(d == 0, 0, np.polyval(c, z) / safe)
        z = z - delta
        step = np.abs(delta)
    return z.astype(complex), step.astype(float)


def branch_points(f: Polynomial, tolerance: float = DEFAULT_TOLERANCE):
    """Distinct finite critical values of ``f`` with error radii."""
    R = squarefree_part(critical_value_resultant(f))
    if R.degree == 0:
        return np.array([], dtype=complex), np.array([])
    coeffs = _coeffs_high_first(R)
    coeffs = coeffs / coeffs[0]
    roots = np.roots(coeffs) if R.degree > 0 else np.array([])
    roots, err = _polish(coeffs, roots)
    order = np.lexsort((roots.imag, roots.real))
    roots, err = roots[order], err[order]
    scale = 1 + np.max(np.abs(roots))
    if len(roots) > 1:
        gaps = np.abs(roots[:, None] - roots[None, :]) + np.diag(np.full(len(roots), np.inf))
        if gaps.min() < 100 * tolerance * scale:
            raise MonodromyError(
                "PRECISION",
                f"branch points closer than {100 * tolerance * scale:.3g}",
                "retry with a smaller tolerance",
            )
    return roots, np.maximum(err, np.finfo(float).eps * scale)


class _Tracker:
    """Predictor-corrector continuation of the roots of ``f(x) = t``."""

    def __init__(self, f: Polynomial, tolerance: float):
        self.c = _coeffs_high_first(f)
        self.dc = np.polyder(self.c)
        self.tol = tolerance
        self.n = f.degree

    def roots_at(self, t: complex) -> np.ndarray:
        c = self.c.copy()
        c[-1] -= t
        z, _ = _polish(c, np.roots(c))
        z = self._correct(z, t)
        if z is None:
            raise MonodromyError("PRECISION", "Newton failed at the basepoint", "retry with another seed")
        return z[np.lexsort((z.imag, z.real))]

    def _correct(self, z: np.ndarray, t: complex):
        for _ in range(12):
            d = np.polyval(self.dc, z)
            if np.any(d == 0):
                return None
            delta = (np.polyval(self.c, z) - t) / d
            z = z - delta
            if np.all(np.abs(delta) <= self.tol * (1 + np.abs(z))):
                return z
        return None

    @staticmethod
    def _min_gaps(z: np.ndarray) -> np.ndarray:
        gaps = np.abs(z[:, None] - z[None, :]) + np.diag(np.full(len(z), np.inf))
        return gaps.min(axis=1)

    def track(self, z: np.ndarray, path) -> np.ndarray:
        """Follow roots along ``path(s)``, ``s`` in ``[0, 1]``; ``path`` returns ``(t, dt/ds)``."""
        s, h = 0.0, 0.02
        while s < 1.0:
            h = min(h, 1.0 - s)
            t0, _ = path(s)
            t1, _ = path(s + h)
            d = np.polyval(self.dc, z)
            pred = z + (t1 - t0) / d if np.all(d != 0) else None
            new = None if pred is None else self._correct(pred, t1)
            if new is not None:
                gaps = self._min_gaps(z) if self.n > 1 else np.array([np.inf])
                moved = np.abs(new - z)
                sep_new = self._min_gaps(new).min() if self.n > 1 else np.inf
                if np.all(moved <= 0.25 * gaps) and np.all(np.abs(new - pred) <= 0.1 * gaps) and sep_new > 10 * self.tol:
                    z, s = new, s + h
                    h = min(h * 1.5, 0.1)
                    continue
            h /= 2
            if h < MIN_STEP:
                raise MonodromyError("STEP_COLLAPSE", f"continuation step collapsed at s={s:.6g}", "retry with another seed")
        return z


def _segment(a: complex, b: complex):
    return lambda s: (a + (b - a) * s, b - a)


def _arc(center: complex, radius: float, theta0: float, turn: float):
    def path(s):
        ang = theta0 + turn * s
        w = np.exp(1j * ang)
        return center + radius * w, 1j * turn * radius * w

    return path


def _match(start: np.ndarray, end: np.ndarray) -> Permutation:
    """Index map ``i -> j`` with ``end[i]`` closest to ``start[j]``; must be a bijection."""
    dist = np.abs(end[:, None] - start[None, :])
    images = tuple(int(j) for j in dist.argmin(axis=1))
    gaps = np.abs(start[:, None] - start[None, :]) + np.diag(np.full(len(start), np.inf))
    if len(set(images)) != len(images) or np.any(dist.min(axis=1) > 0.25 * gaps.min()):
        raise MonodromyError("PRECISION", "ambiguous endpoint matching", "retry with a smaller tolerance")
    return Permutation(images)


def _clearance(P: complex, targets: np.ndarray, radii: np.ndarray) -> float:
    """Smallest ratio distance/radius from a branch point to a foreign ray out of ``P``."""
    worst = np.inf
    for i, b in enumerate(targets):
        d = b - P
        for j, c in enumerate(targets):
            if i == j:
                continue
            s = np.clip(((c - P) * np.conj(d)).real / abs(d) ** 2, 0, 1)
            worst = min(worst, abs(P + s * d - c) / radii[j])
    return worst


def monodromy(f: Polynomial, tolerance: float = DEFAULT_TOLERANCE, seed: int = DEFAULT_SEED) -> MonodromyReport:
    """Numeric geometric monodromy group of ``f`` with its loop permutations."""
    n = f.degree
    if n is None or n < 2:
        raise ValueError("monodromy needs deg f >= 2")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    bps, err = branch_points(f, tolerance)
    k = len(bps)
    rng = np.random.default_rng(seed)
    big = 2 * float(np.max(np.abs(bps))) + 1
    if k > 1:
        nearest = (np.abs(bps[:, None] - bps[None, :]) + np.diag(np.full(k, np.inf))).min(axis=1)
        radii = np.minimum(0.5 * nearest, 0.25 * big)
    else:
        radii = np.full(k, 0.25 * big)
    best = None
    for theta in rng.uniform(0, 2 * np.pi, 64):
        P = big * np.exp(1j * theta)
        score = _clearance(P, bps, radii)
        if best is None or score > best[0]:
            best = (score, theta, P)
    _, theta_b, P = best
    if k > 1 and best[0] <= 0.1:
        raise MonodromyError("PRECISION", "no basepoint gives clear lassos", "retry with another seed")

    inward = -P / abs(P)
    rel = np.angle((bps - P) / inward)
    order = np.argsort(rel, kind="stable")
    bps, err, radii = bps[order], err[order], radii[order]

    tracker = _Tracker(f, tolerance)
    start = tracker.roots_at(P)
    loops = []
    for b, r in zip(bps, radii):
        u = (P - b) / abs(P - b)
        q = b + r * u
        z = tracker.track(start, _segment(P, q))
        z = tracker.track(z, _arc(b, r, float(np.angle(u)), 2 * np.pi))
        z = tracker.track(z, _segment(q, P))
        loops.append(_match(start, z))
    z = tracker.track(start, _arc(0, big, theta_b, -2 * np.pi))
    infinity = _match(start, z)

    group = PermGroup(loops, degree=n)
    transitive = group.is_transitive
    blocks = group.block_systems() if transitive and n <= 12 else []
    return MonodromyReport(
        degree=n,
        basepoint=complex(P),
        branch_points=[complex(b) for b in bps],
        error_radii=[float(e) for e in err],
        loop_permutations=loops,
        infinity_permutation=infinity,
        group=group,
        transitive=transitive,
        primitive=group.is_primitive,
        doubly_transitive=group.is_doubly_transitive,
        block_systems=blocks,
    )
