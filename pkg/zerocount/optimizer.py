"""
Derivative-free search for circle parameters `(c, r, eta)` that minimise a
weighted sum of the assembled constants.
"""

import dataclasses
import logging
import math
import typing as tp
from multiprocessing.pool import ThreadPool

import numpy as np
from scipy.optimize import minimize

from zerocount.constants import ConstantSet, QuadratureSpec, assemble
from zerocount.regions import BoundParams, check_constraints
from zerocount.types import (
    ComputationError,
    ConstraintViolation,
    InfeasibleError,
    ValidationError,
)

WEIGHT_KEYS = ("C1", "C2", "C2p", "C3", "C3p")
SEARCH_KEYS = ("c", "r", "eta")
PARAM_KEYS = tuple(f.name for f in dataclasses.fields(BoundParams))

ETA_RANGE = (1e-5, 0.5)
SIMPLEX_SCALE = 1e-2
XATOL = 1e-7
MIN_BUDGET = 100
MIN_RESTARTS = 8
MAX_SAMPLE_ATTEMPTS = 100_000

__all__ = [
    "Objective",
    "Optimizer",
    "SearchResult",
    "check_constraints",
    "optimize",
]


@dataclasses.dataclass(frozen=True)
class Objective:
    """
    A weighted sum of constants and the parameters held fixed during the search.

    ```python
    Objective(weights={"C1": 1.0})
    Objective(weights={"C2": 1.0, "C3": 0.1}, fixed={"n": 4, "J1": 128})
    ```

    Arguments:
        weights: non-negative weight of each of `C1`, `C2`, `C2p`, `C3`, `C3p`.
        fixed: `BoundParams` fields held constant. Fixing `c`, `r` or `eta`
            removes it from the search.
    """

    weights: tp.Mapping[str, float]
    fixed: tp.Mapping[str, tp.Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        violations = []

        unknown = set(self.weights) - set(WEIGHT_KEYS)
        if unknown:
            violations.append(
                f"weights only name {WEIGHT_KEYS} (got {sorted(unknown)})"
            )
        if any(w < 0 for w in self.weights.values()):
            violations.append(f"weights >= 0 (got {dict(self.weights)})")
        if not any(w > 0 for w in self.weights.values()):
            violations.append("at least one positive weight")

        unknown = set(self.fixed) - set(PARAM_KEYS)
        if unknown:
            violations.append(
                f"fixed only names BoundParams fields (got {sorted(unknown)})"
            )

        if violations:
            raise ConstraintViolation(violations)

    def __call__(self, cs: ConstantSet) -> float:
        return sum(w * getattr(cs, key) for key, w in self.weights.items())

    @property
    def free(self) -> tp.Tuple[str, ...]:
        return tuple(key for key in SEARCH_KEYS if key not in self.fixed)


class Evaluation(tp.NamedTuple):
    value: float
    params: tp.Optional[BoundParams]
    constants: tp.Optional[ConstantSet]


class SearchResult(tp.NamedTuple):
    params: BoundParams
    constants: ConstantSet
    objective_value: float
    evaluations: int


class Optimizer:
    """
    Nelder-Mead over `(c, r, log eta)` restarted from random feasible points.

    Infeasible points evaluate to `inf`, so the simplex never leaves the
    admissible region. Each restart is deterministic given its start, and the
    best restart is chosen by `(objective, restart index)`.

    Arguments:
        objective: what to minimise.
        restarts: number of random starts, at least 8.
        starts: extra `(c, r, eta)` starting points tried before the random ones.
        workers: threads running restarts concurrently.
        quadrature: tolerances for `integrate_regions`.
    """

    def __init__(
        self,
        objective: Objective,
        restarts: int = MIN_RESTARTS,
        starts: tp.Sequence[tp.Tuple[float, float, float]] = (),
        workers: int = 1,
        quadrature: QuadratureSpec = QuadratureSpec(),
    ):
        if restarts < MIN_RESTARTS:
            raise ValidationError(f"restarts must be >= {MIN_RESTARTS}, got {restarts}")

        self.objective = objective
        self.restarts = restarts
        self.starts = [tuple(float(v) for v in start) for start in starts]
        self.workers = workers
        self.quadrature = quadrature

    # coordinates: the free members of (c, r, log eta)
    def _to_values(self, x: np.ndarray) -> tp.Dict[str, float]:
        values = dict(zip(self.objective.free, (float(v) for v in x)))
        if "eta" in values:
            values["eta"] = math.exp(values["eta"])
        return values

    def _to_coords(self, point: tp.Mapping[str, float]) -> np.ndarray:
        return np.array(
            [
                math.log(point[key]) if key == "eta" else point[key]
                for key in self.objective.free
            ]
        )

    def params(self, x: np.ndarray) -> BoundParams:
        return BoundParams(**{**self.objective.fixed, **self._to_values(x)})

    def evaluate(self, x: np.ndarray) -> Evaluation:
        try:
            p = self.params(x)
            cs = assemble(p, q=self.quadrature)
        except (ValidationError, ComputationError):
            return Evaluation(math.inf, None, None)

        value = self.objective(cs)
        if not math.isfinite(value):
            return Evaluation(math.inf, None, None)

        return Evaluation(value, p, cs)

    def sample_starts(self, rng: np.random.Generator) -> tp.List[np.ndarray]:
        """
        Draws `restarts` feasible starting points: `eta` log-uniform in
        `[1e-5, 0.5]`, `c = 1 + eta + u / 2` and `r` uniform in `(2c - 1, c + 1/2)`.
        A draw with `c >= 3/2` leaves that interval empty and is rejected.
        """
        fixed = self.objective.fixed
        n = fixed.get("n", 5)
        points = []
        attempts = 0

        while len(points) < self.restarts:
            attempts += 1
            if attempts > MAX_SAMPLE_ATTEMPTS:
                raise InfeasibleError(
                    f"found {len(points)} of {self.restarts} feasible starts "
                    f"in {MAX_SAMPLE_ATTEMPTS} draws"
                )

            if "eta" in fixed:
                eta = fixed["eta"]
            else:
                eta = math.exp(rng.uniform(*np.log(ETA_RANGE)))
            c = fixed["c"] if "c" in fixed else 1 + eta + rng.uniform(0.0, 0.5)

            if "r" in fixed:
                r = fixed["r"]
            elif 2 * c - 1 < c + 0.5:
                r = rng.uniform(2 * c - 1, c + 0.5)
            else:
                # c >= 3/2 leaves no room for r
                continue

            if check_constraints(c, r, eta, n).valid:
                points.append(self._to_coords({"c": c, "r": r, "eta": eta}))

        return points

    def _search(self, x0: np.ndarray, budget: int):
        evaluations = 0
        best = Evaluation(math.inf, None, None)

        def fun(x):
            nonlocal evaluations, best
            evaluations += 1
            result = self.evaluate(x)
            if result.value < best.value:
                best = result
            return result.value

        if not math.isfinite(fun(x0)):
            return best, evaluations

        if len(x0) > 0:
            simplex = [x0]
            for i in range(len(x0)):
                vertex = x0.copy()
                vertex[i] += SIMPLEX_SCALE * (abs(x0[i]) or 1.0)
                simplex.append(vertex)

            minimize(
                fun,
                x0,
                method="Nelder-Mead",
                options=dict(
                    initial_simplex=np.array(simplex),
                    xatol=XATOL,
                    fatol=math.inf,
                    maxfev=max(budget - 1, 1),
                ),
            )

        return best, evaluations

    def minimize(self, seed: int, budget: int) -> SearchResult:
        """
        Runs the restarts and returns the best feasible point.

        Arguments:
            seed: seed for `numpy.random.default_rng`.
            budget: total number of objective evaluations, at least 100, split
                evenly over the restarts.

        Returns:
            The best `SearchResult`, with `evaluations` summed over restarts.

        Raises:
            InfeasibleError: if no start is feasible.
        """
        if budget < MIN_BUDGET:
            raise ValidationError(f"budget must be >= {MIN_BUDGET}, got {budget}")

        rng = np.random.default_rng(seed)
        explicit = [
            self._to_coords(dict(zip(SEARCH_KEYS, start))) for start in self.starts
        ]
        starts = explicit + self.sample_starts(rng)
        per_start = max(budget // len(starts), 1)

        def run(x0):
            return self._search(x0, per_start)

        if self.workers > 1:
            with ThreadPool(self.workers) as pool:
                results = pool.map(run, starts)
        else:
            results = [run(x0) for x0 in starts]

        evaluations = sum(count for _, count in results)
        feasible = [
            (value, index, p, cs)
            for index, ((value, p, cs), _) in enumerate(results)
            if p is not None
        ]

        for index, ((value, _, _), _) in enumerate(results):
            if not math.isfinite(value):
                logging.warning("start %d is infeasible after assembly, skipped", index)

        if not feasible:
            raise InfeasibleError("no feasible start found")

        value, index, p, cs = min(feasible, key=lambda item: item[:2])
        logging.info("best objective %.9f from start %d", value, index)

        return SearchResult(
            params=p, constants=cs, objective_value=value, evaluations=evaluations
        )


def optimize(
    obj: Objective,
    seed: int = 0,
    budget: int = 2000,
    restarts: int = MIN_RESTARTS,
    starts: tp.Sequence[tp.Tuple[float, float, float]] = (),
    workers: int = 1,
    quadrature: QuadratureSpec = QuadratureSpec(),
) -> SearchResult:
    """Functional form of `Optimizer(...).minimize(seed, budget)`."""
    return Optimizer(
        obj, restarts=restarts, starts=starts, workers=workers, quadrature=quadrature
    ).minimize(seed, budget)
