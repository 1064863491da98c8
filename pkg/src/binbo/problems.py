"""Artificial benchmark targets and the binomial observation simulator.

Each registered function is minimized over a standard hypercube and then
rescaled to [0, 1] so the value at a point can be read as the success
probability of a Bernoulli trial.  The rescaling constants are frozen in
``data/problems.toml`` (regenerated explicitly via the CLI) so results are
stable across machines.

Function definitions, written out term by term so independent
implementations agree at double precision:

* ``michalewicz`` on [0, pi]^d, steepness m = 10:
  f(x) = -sum_{i=1..d} sin(x_i) * sin(i * x_i^2 / pi)^(2m)
* ``rastrigin`` on [-5.12, 5.12]^d:
  f(x) = 10 d + sum_{i=1..d} (x_i^2 - 10 cos(2 pi x_i))
* ``zakharov`` on [-5, 10]^d, with s = sum_{i=1..d} 0.5 i x_i:
  f(x) = sum_{i=1..d} x_i^2 + s^2 + s^4
* ``styblinski_tang`` on [-5, 5]^d:
  f(x) = 0.5 * sum_{i=1..d} (x_i^4 - 16 x_i^2 + 5 x_i)
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._search import compass_max, scan_max

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

_SPOT_CHECK_SEED = 20260810
_SPOT_CHECK_POINTS = 10_000
_SPOT_CHECK_TOL = 1e-6

# Analytic minima where known; Styblinski-Tang constants are the standard
# literature values for the per-coordinate minimizer.
STYBLINSKI_TANG_XMIN = -2.903534018185960
STYBLINSKI_TANG_FMIN_PER_DIM = -39.16616570377142


def _michalewicz(X: np.ndarray) -> np.ndarray:
    i = np.arange(1, X.shape[1] + 1)
    return -np.sum(np.sin(X) * np.sin(i * X**2 / np.pi) ** 20, axis=1)


def _rastrigin(X: np.ndarray) -> np.ndarray:
    d = X.shape[1]
    return 10.0 * d + np.sum(X**2 - 10.0 * np.cos(2.0 * np.pi * X), axis=1)


def _zakharov(X: np.ndarray) -> np.ndarray:
    i = np.arange(1, X.shape[1] + 1)
    s = np.sum(0.5 * i * X, axis=1)
    return np.sum(X**2, axis=1) + s**2 + s**4


def _styblinski_tang(X: np.ndarray) -> np.ndarray:
    return 0.5 * np.sum(X**4 - 16.0 * X**2 + 5.0 * X, axis=1)


# function_id -> (batched evaluator, (lower, upper) per-coordinate bounds)
FUNCTIONS: dict[str, tuple[Callable[[np.ndarray], np.ndarray], tuple[float, float]]] = {
    "michalewicz": (_michalewicz, (0.0, np.pi)),
    "rastrigin": (_rastrigin, (-5.12, 5.12)),
    "zakharov": (_zakharov, (-5.0, 10.0)),
    "styblinski_tang": (_styblinski_tang, (-5.0, 5.0)),
}

_ANALYTIC_FMIN: dict[str, Callable[[int], float]] = {
    "rastrigin": lambda d: 0.0,
    "zakharov": lambda d: 0.0,
    "styblinski_tang": lambda d: STYBLINSKI_TANG_FMIN_PER_DIM * d,
}


def register_function(
    function_id: str,
    fn: Callable[[np.ndarray], np.ndarray],
    bounds: tuple[float, float],
) -> None:
    """Extension point: add a custom target to the registry.

    ``fn`` must accept an (m, d) array and return an (m,) array.
    """
    if function_id in FUNCTIONS:
        raise ValueError(f"function_id {function_id!r} already registered")
    FUNCTIONS[function_id] = (fn, bounds)


def standard_bounds(function_id: str, dim: int) -> tuple[np.ndarray, np.ndarray]:
    lo, hi = FUNCTIONS[function_id][1]
    return np.full(dim, lo), np.full(dim, hi)


def eval_raw_batch(function_id: str, X: np.ndarray) -> np.ndarray:
    """Evaluate the raw (unscaled) target on an (m, d) batch. No bounds check."""
    try:
        fn = FUNCTIONS[function_id][0]
    except KeyError:
        raise ValueError(f"unknown function_id {function_id!r}") from None
    return fn(np.atleast_2d(np.asarray(X, dtype=float)))


def eval_raw(function_id: str, x: np.ndarray) -> float:
    """Raw target value at a single in-bounds point."""
    x = np.asarray(x, dtype=float)
    lo, hi = standard_bounds(function_id, x.size)
    if np.any(x < lo) or np.any(x > hi):
        raise ValueError(f"point {x} outside the {function_id} domain")
    return float(eval_raw_batch(function_id, x[None, :])[0])


def rescale(raw: float, f_min: float, f_max: float) -> float:
    """Affine map of a raw value onto [0, 1], clamping round-off overshoot."""
    if not f_min < f_max:
        raise ValueError(f"need f_min < f_max, got {f_min} >= {f_max}")
    return float(np.clip((raw - f_min) / (f_max - f_min), 0.0, 1.0))


def sample_binomial(p: float, trials: int, rng: np.random.Generator) -> int:
    """One binomial draw; deterministic given the generator state."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    return int(rng.binomial(trials, p))


def estimate_extrema(
    function_id: str, dim: int, seed: int = 0, starts: int = 1000
) -> tuple[float, float]:
    """Estimate (f_min, f_max) of a registered function over its box.

    The minimum is taken analytically where known.  Otherwise, and always
    for the maximum, we draw seeded uniform starts, keep the best few and
    refine each with per-coordinate grid scans (a plain +-probe pattern
    search stalls in the per-coordinate ripples of the separable targets).
    Box corners are added to the start pool when there are few enough.
    """
    lo, hi = standard_bounds(function_id, dim)
    rng = np.random.default_rng(seed)
    pool = rng.uniform(lo, hi, size=(starts, dim))
    if dim <= 12:
        corners = np.stack(
            np.meshgrid(*[[lo[j], hi[j]] for j in range(dim)], indexing="ij"), axis=-1
        ).reshape(-1, dim)
        pool = np.vstack([pool, corners])
    vals = eval_raw_batch(function_id, pool)

    def _refine(sign: float) -> float:
        # sign=+1 maximizes f, sign=-1 maximizes -f (i.e. minimizes f)
        order = np.argsort(-sign * vals)[:16]
        best = -np.inf
        g = lambda x: sign * float(eval_raw_batch(function_id, x[None, :])[0])
        for idx in order:
            x, _ = compass_max(g, pool[idx], lo, hi, steps=20 * dim)
            _, v = scan_max(g, x, lo, hi, sweeps=3, grid=257, refine=40)
            best = max(best, v)
        return sign * best

    f_max = _refine(+1.0)
    if function_id in _ANALYTIC_FMIN:
        f_min = _ANALYTIC_FMIN[function_id](dim)
    else:
        f_min = _refine(-1.0)
    return f_min, f_max


@dataclass(frozen=True)
class BenchmarkProblem:
    """A rescaled target plus the trial count of a full-fidelity evaluation."""

    function_id: str
    dim: int
    lower: np.ndarray = field(repr=False)
    upper: np.ndarray = field(repr=False)
    f_min: float
    f_max: float
    trials_high: int

    def __post_init__(self):
        if not self.f_min < self.f_max:
            raise ValueError("f_min must be strictly below f_max")
        if self.trials_high < 1:
            raise ValueError("trials_high must be >= 1")
        # Construction-time spot check: the rescaled target must stay in
        # [0, 1] (up to clamping tolerance) over the whole box.
        rng = np.random.default_rng(_SPOT_CHECK_SEED)
        X = rng.uniform(self.lower, self.upper, size=(_SPOT_CHECK_POINTS, self.dim))
        raw = eval_raw_batch(self.function_id, X)
        scaled = (raw - self.f_min) / (self.f_max - self.f_min)
        if scaled.min() < -_SPOT_CHECK_TOL or scaled.max() > 1.0 + _SPOT_CHECK_TOL:
            raise ValueError(
                f"{self.problem_id}: rescaled values span "
                f"[{scaled.min():.3g}, {scaled.max():.3g}]; extrema look stale"
            )

    @property
    def problem_id(self) -> str:
        return f"{self.function_id}_d{self.dim}"

    @property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return self.lower, self.upper

    def success_prob(self, x: np.ndarray) -> float:
        """Noiseless rescaled value at x, read as a success probability."""
        return rescale(eval_raw(self.function_id, x), self.f_min, self.f_max)

    def success_prob_batch(self, X: np.ndarray) -> np.ndarray:
        raw = eval_raw_batch(self.function_id, X)
        return np.clip((raw - self.f_min) / (self.f_max - self.f_min), 0.0, 1.0)


def _load_problem_table() -> list[dict]:
    import importlib.resources as resources

    text = resources.files("binbo").joinpath("data/problems.toml").read_text()
    return tomllib.loads(text)["problems"]


def list_registered_problems() -> list[tuple[str, int]]:
    """(function_id, dim) pairs present in the frozen problem file."""
    return [(e["function_id"], e["dim"]) for e in _load_problem_table()]


def load_problem(function_id: str, dim: int, trials_high: int | None = None) -> BenchmarkProblem:
    """Build a problem from the frozen definition file.

    ``trials_high`` overrides the file's default trial count.
    """
    for entry in _load_problem_table():
        if entry["function_id"] == function_id and entry["dim"] == dim:
            return BenchmarkProblem(
                function_id=function_id,
                dim=dim,
                lower=np.full(dim, entry["lower"]),
                upper=np.full(dim, entry["upper"]),
                f_min=entry["f_min"],
                f_max=entry["f_max"],
                trials_high=trials_high if trials_high is not None else entry["trials"],
            )
    raise ValueError(f"no frozen problem definition for ({function_id!r}, dim={dim})")
