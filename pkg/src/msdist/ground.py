"""Ground metrics over element spaces, the Steinhaus transform and a metric audit.

Elements are plain Python values.  The element spaces used by the command
line tool are

* labeled paths: tuples of short strings, the empty tuple acting as the null
  element,
* scalars: floats, with null element ``0.0``,
* symbols: strings.

A :class:`GroundMetric` bundles a distance function with an optional null
element (used to price unmatched elements) and an optional known upper bound.
``None`` is reserved to mean "no null element".
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from msdist import kernels
from msdist.errors import ConfigurationError, EmptySpaceError

LabeledPath = tuple  # tuple[str, ...]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class GroundMetric:
    """A distance on an element space plus the metadata the collection distances need.

    ``pairwise``, when given, computes the full ``len(xs) x len(ys)`` matrix in
    one call and must agree bit for bit with ``distance`` applied entrywise.
    """

    distance: Callable[[Any, Any], float]
    null_element: Any = None
    upper_bound: Optional[float] = None
    pairwise: Optional[Callable[[Sequence, Sequence], np.ndarray]] = field(default=None, compare=False)
    name: str = "ground"

    def __call__(self, x, y):
        return self.distance(x, y)

    @property
    def has_null(self):
        return self.null_element is not None

    def matrix(self, xs, ys):
        if self.pairwise is not None:
            return self.pairwise(xs, ys)
        out = np.empty((len(xs), len(ys)), dtype=np.float64)
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                out[i, j] = self.distance(x, y)
        return out

    def null_costs(self, xs):
        """Vector of ``d(x, null)`` for each ``x``."""
        if not self.has_null:
            raise ConfigurationError(f"ground metric {self.name!r} has no null element")
        return np.ascontiguousarray(self.matrix(xs, [self.null_element])[:, 0])


def lift_to_ground(d, null_element=None, upper_bound=None, *, pairwise=None, name=None):
    """Wrap any distance function as a :class:`GroundMetric` without changing its values."""
    if isinstance(d, GroundMetric):
        return GroundMetric(
            d.distance,
            null_element if null_element is not None else d.null_element,
            upper_bound if upper_bound is not None else d.upper_bound,
            pairwise if pairwise is not None else d.pairwise,
            name or d.name,
        )
    return GroundMetric(d, null_element, upper_bound, pairwise, name or getattr(d, "__name__", "ground"))


# -- concrete element spaces -------------------------------------------------

def _abs_distance(x, y):
    return abs(x - y)


def _abs_pairwise(xs, ys):
    return np.abs(np.subtract.outer(np.asarray(xs, dtype=np.float64), np.asarray(ys, dtype=np.float64)))


def abs_metric(null_element=0.0):
    """``|x - y|`` on real numbers."""
    return GroundMetric(_abs_distance, null_element, None, _abs_pairwise, "scalar-abs")


def _discrete_distance(x, y):
    return 0.0 if x == y else 1.0


def discrete_metric(null_element=()):
    return GroundMetric(_discrete_distance, null_element, 1.0, None, "discrete")


_label_codes: dict = {}


def _code(label):
    code = _label_codes.get(label)
    if code is None:
        code = _label_codes.setdefault(label, len(_label_codes))
    return code


def encode_path(path):
    """Integer codes for a labeled path; equal labels get equal codes process-wide."""
    return np.fromiter((_code(v) for v in path), dtype=np.int64, count=len(path))


def pack_paths(xs, ys):
    """Pack two path lists into one code buffer plus offset arrays for the matrix kernels."""
    codes = []
    offsets_x = [0]
    for p in xs:
        codes.extend(_code(v) for v in p)
        offsets_x.append(len(codes))
    offsets_y = [len(codes)]
    for p in ys:
        codes.extend(_code(v) for v in p)
        offsets_y.append(len(codes))
    return (
        np.asarray(codes, dtype=np.int64),
        np.asarray(offsets_x, dtype=np.int64),
        np.asarray(offsets_y, dtype=np.int64),
    )


def _lcs_distance(x, y):
    return float(kernels.lcs_light(encode_path(x), encode_path(y)))


def _lcs_pairwise(xs, ys):
    return kernels.lcs_matrix(*pack_paths(xs, ys))


def _lsp_distance(x, y):
    return float(kernels.lsp_light(encode_path(x), encode_path(y)))


def _lsp_pairwise(xs, ys):
    return kernels.lsp_matrix(*pack_paths(xs, ys))


def lcs_ground():
    """Longest-common-subsequence distance between labeled paths; null is the empty path."""
    return GroundMetric(_lcs_distance, (), None, _lcs_pairwise, "lcs")


def lsp_ground():
    """Longest-common-subpath distance between labeled paths; null is the empty path."""
    return GroundMetric(_lsp_distance, (), None, _lsp_pairwise, "lsp")


# -- Steinhaus transform -----------------------------------------------------

class _Steinhaus:
    # a class rather than a closure so the transformed metric pickles
    def __init__(self, base, reference):
        self.base = base
        self.reference = reference

    def __call__(self, x, y):
        d = self.base(x, y)
        den = (self.base(x, self.reference) + self.base(y, self.reference)) + d
        if den == 0:
            return 0.0
        # the exact value is at most 1; rounding in den can push it one ulp above
        return min(2.0 * d / den, 1.0)


class _SteinhausPairwise:
    def __init__(self, base, reference):
        self.base = base
        self.reference = reference

    def __call__(self, xs, ys):
        ref = [self.reference]
        D = self.base.matrix(xs, ys)
        to_ref_x = self.base.matrix(xs, ref)[:, 0]
        to_ref_y = self.base.matrix(ys, ref)[:, 0]
        den = (to_ref_x[:, None] + to_ref_y[None, :]) + D
        out = np.zeros_like(D)
        np.divide(2.0 * D, den, out=out, where=den != 0)
        return np.minimum(out, 1.0, out=out)


def steinhaus_transform(d, reference, null_element=None):
    """Normalize a metric into ``[0, 1]`` relative to a reference point.

    ``2 d(x,y) / (d(x,c) + d(y,c) + d(x,y))``, taken as 0 when the
    denominator vanishes (only when ``x == y == c``) and clipped at 1 against
    rounding.  ``d`` may be a :class:`GroundMetric` or any two-argument
    distance; a ground metric's null element carries over unless
    ``null_element`` overrides it.
    """
    if isinstance(d, GroundMetric):
        base = d
        pairwise = _SteinhausPairwise(d, reference) if d.pairwise is not None else None
        if null_element is None:
            null_element = d.null_element
        name = f"steinhaus({d.name})"
    else:
        base = d
        pairwise = None
        name = f"steinhaus({getattr(d, '__name__', 'd')})"
    return GroundMetric(_Steinhaus(base, reference), null_element, 1.0, pairwise, name)


# -- metric audit ------------------------------------------------------------

AXIOMS = ("identity", "symmetry", "triangle")


@dataclass(frozen=True)
class Violation:
    axiom: str
    witnesses: tuple
    lhs: float
    rhs: float


@dataclass
class MetricAuditReport:
    n_samples: int
    violations: list = field(default_factory=list)

    def count(self, axiom):
        return sum(1 for v in self.violations if v.axiom == axiom)

    def failed_axioms(self):
        return {v.axiom for v in self.violations}

    @property
    def ok(self):
        return not self.violations

    def render(self, max_witnesses=3):
        lines = [f"samples: {self.n_samples}"]
        for axiom in AXIOMS:
            found = [v for v in self.violations if v.axiom == axiom]
            lines.append(f"{axiom}: {len(found)} violation(s)")
            for v in found[:max_witnesses]:
                lines.append(f"  witness {v.witnesses!r}: {v.lhs!r} vs {v.rhs!r}")
        return "\n".join(lines)


def _check_triple(d, x, y, z, tol, out):
    """Append every axiom violation witnessed by the triple ``(x, y, z)``."""
    dxx = d(x, x)
    if abs(dxx) > tol:
        out.append(Violation("identity", (x,), dxx, 0.0))
    fwd = {(0, 1): d(x, y), (0, 2): d(x, z), (2, 1): d(z, y)}
    bwd = {(1, 0): d(y, x), (2, 0): d(z, x), (1, 2): d(y, z)}
    elems = (x, y, z)
    for (a, b), v in fwd.items():
        if v <= tol and elems[a] != elems[b]:
            out.append(Violation("identity", (elems[a], elems[b]), v, 0.0))
        w = bwd[(b, a)]
        if abs(v - w) > tol:
            out.append(Violation("symmetry", (elems[a], elems[b]), v, w))
    val = {**fwd, **bwd}
    for a, b, c in ((0, 1, 2), (0, 2, 1), (2, 1, 0)):
        lhs = val[(a, b)]
        rhs = val[(a, c)] + val[(c, b)]
        if lhs > rhs + tol:
            out.append(Violation("triangle", (elems[a], elems[b], elems[c]), lhs, rhs))


def audit_metric(d, sampler, n=1000, tol=DEFAULT_TOL, *, seed=0, exhaustive=False):
    """Check the three metric axioms on sampled triples.

    ``sampler`` is either a finite sequence of elements, from which triples are
    drawn uniformly, or a callable ``sampler(rng) -> element`` taking a
    :class:`random.Random`.  With ``exhaustive=True`` (finite sequences of at
    most 30 elements) every ordered triple is checked and ``n`` is ignored.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if tol < 0:
        raise ValueError("tol must be >= 0")
    rng = random.Random(seed)
    violations = []
    if callable(sampler):
        draw = lambda: sampler(rng)  # noqa: E731
    else:
        pool = list(sampler)
        if not pool:
            raise EmptySpaceError("sampler yields no elements")
        if exhaustive:
            if len(pool) > 30:
                raise ValueError("exhaustive audit is limited to 30 elements")
            count = 0
            for x, y, z in itertools.product(pool, repeat=3):
                _check_triple(d, x, y, z, tol, violations)
                count += 1
            return MetricAuditReport(count, violations)
        draw = lambda: rng.choice(pool)  # noqa: E731
    for _ in range(n):
        x, y, z = draw(), draw(), draw()
        _check_triple(d, x, y, z, tol, violations)
    return MetricAuditReport(n, violations)
