"""Gauss rules on [0,1] for weights t^beta (1-t)^(kappa-1), cached per (kappa, beta, order).

Nodes and weights come from the Jacobi three-term recurrence (Golub-Welsch
eigenproblem, as exposed by scipy) mapped from [-1,1] to [0,1]. Orders are
capped at 200; endpoint exponents must exceed -1 for integrability.
"""
from __future__ import annotations

import json
import math
import threading
from fractions import Fraction

import numpy as np
from scipy.special import roots_jacobi

from .rootgeom import _as_fraction, _fraction_str

MAX_ORDER = 200


def _key_fraction(v) -> Fraction:
    # floats are exact binary rationals, fine as cache keys
    if isinstance(v, float):
        return Fraction(v)
    return _as_fraction(v)

_cache: dict[tuple[Fraction, Fraction, int], "JacobiQuadrature"] = {}
_cache_lock = threading.Lock()


class JacobiQuadrature:
    """One rule: integral_0^1 t^beta (1-t)^(kappa-1) f(t) dt ~= sum w_i f(t_i)."""

    __slots__ = ("kappa", "beta", "order", "nodes", "weights")

    def __init__(self, kappa, order: int, beta=0) -> None:
        kappa = _key_fraction(kappa)
        beta = _key_fraction(beta)
        if kappa <= 0:
            raise ValueError(f"weight exponent kappa-1 = {kappa - 1} is not integrable")
        if beta <= -1:
            raise ValueError(f"weight exponent beta = {beta} is not integrable")
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order {order} outside [1, {MAX_ORDER}]")
        self.kappa = kappa
        self.beta = beta
        self.order = order
        # scipy weight on [-1,1] is (1-x)^a (1+x)^b; t=(1+x)/2 gives
        # (1-t)^a t^b up to 2^(a+b+1)
        a, b = float(kappa - 1), float(beta)
        x, w = roots_jacobi(order, a, b)
        self.nodes = (x + 1.0) / 2.0
        self.weights = w * 2.0 ** (-(a + b + 1.0))

    def integrate(self, f) -> complex:
        """f is a vectorized callable on the open interval (0,1)."""
        return complex(np.sum(self.weights * np.asarray(f(self.nodes))))

    def integrate_values(self, values) -> complex:
        return complex(np.dot(self.weights, np.asarray(values)))


def get_rule(kappa, order: int, beta=0) -> JacobiQuadrature:
    """Cached lookup; single writer, many readers."""
    key = (_key_fraction(kappa), _key_fraction(beta), int(order))
    rule = _cache.get(key)
    if rule is None:
        with _cache_lock:
            rule = _cache.get(key)
            if rule is None:
                rule = JacobiQuadrature(key[0], key[2], key[1])
                _cache[key] = rule
    return rule


def legendre_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Plain Gauss-Legendre on [0,1], cached through the same table (kappa=1)."""
    r = get_rule(1, order)
    return r.nodes, r.weights


def graded_panels(a: float, b: float, order: int, max_width: float | None = None,
                  depth: int = 24) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss nodes and weights on [a, b], refined toward both ends.

    The first and last base cells are split by repeated halving toward the
    endpoints, keeping the innermost sliver as a cell of its own. This
    restores fast convergence when the integrand loses smoothness only at
    the ends of the interval (support edges, corner points, weight factors
    whose scale shrinks toward an endpoint).
    """
    length = b - a
    if not length > 0:
        raise ValueError("panel range must have positive length")
    nodes, weights = legendre_rule(order)
    width = length / 4.0 if max_width is None else min(max_width, length / 4.0)
    n = max(1, math.ceil(length / width))
    edges = np.linspace(a, b, n + 1)
    halves = 2.0 ** -np.arange(1, depth + 1)
    left = a + (edges[1] - a) * halves[::-1]
    right = b - (edges[-1] - edges[-2]) * halves
    edges = np.unique(np.concatenate([edges, left, right]))
    widths = np.diff(edges)
    x = (edges[:-1, None] + widths[:, None] * nodes[None, :]).ravel()
    w = (widths[:, None] * weights[None, :]).ravel()
    return x, w


def dump_cache(path: str) -> int:
    """Write every cached rule as JSON records; returns the record count."""
    records = []
    for (kappa, beta, order), rule in sorted(_cache.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]), kv[0][2])):
        rec = {
            "kappa": _fraction_str(kappa),
            "order": order,
            "nodes": [float(v) for v in rule.nodes],
            "weights": [float(v) for v in rule.weights],
        }
        if beta != 0:
            rec["beta"] = _fraction_str(beta)
        records.append(rec)
    with open(path, "w") as fh:
        json.dump(records, fh)
    return len(records)


def load_cache(path: str) -> int:
    """Re-seed the cache from a dump; entries are trusted as-is."""
    with open(path) as fh:
        records = json.load(fh)
    n = 0
    with _cache_lock:
        for rec in records:
            kappa = Fraction(rec["kappa"])
            beta = Fraction(rec.get("beta", 0))
            order = int(rec["order"])
            rule = JacobiQuadrature.__new__(JacobiQuadrature)
            rule.kappa, rule.beta, rule.order = kappa, beta, order
            rule.nodes = np.asarray(rec["nodes"], dtype=float)
            rule.weights = np.asarray(rec["weights"], dtype=float)
            _cache[(kappa, beta, order)] = rule
            n += 1
    return n


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()
