"""Corpus loading, distance configuration and the parallel pairwise-matrix driver."""

import csv
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from msdist.embed import classical_mds
from msdist.errors import ConfigurationError, CorpusError
from msdist.ground import abs_metric, audit_metric, discrete_metric, lcs_ground, lsp_ground, steinhaus_transform
from msdist.multiset import Multiset
from msdist.seqdist import dtw_distance, edit_distance, fixed_penalty_dtw_distance, fixed_penalty_edit_distance
from msdist.setdist import emd, fixed_penalty_matching_distance, matching_distance, semd

FAMILIES = ("matching", "fp-matching", "emd", "semd", "edit", "fp-edit", "dtw", "fp-dtw")
GROUNDS = ("lcs", "lsp", "discrete", "scalar-abs")
SEQUENCE_FAMILIES = ("edit", "fp-edit", "dtw", "fp-dtw")
# families whose value is undefined when an observation is empty
NONEMPTY_FAMILIES = ("emd", "semd", "dtw", "fp-dtw")


class PairEvaluationError(ValueError):
    pass


# -- corpus ------------------------------------------------------------------

@dataclass(frozen=True)
class Observation:
    id: str
    paths: tuple  # tuple of label tuples
    meta: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Corpus:
    observations: tuple

    def __len__(self):
        return len(self.observations)

    def __getitem__(self, k):
        return self.observations[k]

    @property
    def ids(self):
        return [o.id for o in self.observations]

    def meta_keys(self):
        keys = {}
        for o in self.observations:
            for k in o.meta:
                keys.setdefault(k, None)
        return list(keys)


def _parse_label(label, lineno):
    if isinstance(label, bool) or not isinstance(label, (str, int, float)):
        raise CorpusError(f"label {label!r} is not a string or number", lineno)
    if isinstance(label, str) and label == "":
        raise CorpusError("empty label", lineno)
    return label


def parse_corpus(lines):
    observations = []
    seen = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"invalid JSON ({exc.msg})", lineno) from None
        if not isinstance(rec, dict):
            raise CorpusError("record must be an object", lineno)
        if "id" not in rec or "paths" not in rec:
            raise CorpusError("record needs 'id' and 'paths'", lineno)
        oid = str(rec["id"])
        if oid in seen:
            raise CorpusError(f"duplicate id {oid!r}", lineno)
        seen.add(oid)
        paths = rec["paths"]
        if not isinstance(paths, list) or not all(isinstance(p, list) for p in paths):
            raise CorpusError("'paths' must be a list of lists of labels", lineno)
        paths = tuple(tuple(_parse_label(v, lineno) for v in p) for p in paths)
        meta = rec.get("meta", {}) or {}
        if not isinstance(meta, dict):
            raise CorpusError("'meta' must be an object", lineno)
        observations.append(Observation(oid, paths, {str(k): str(v) for k, v in meta.items()}))
    return Corpus(tuple(observations))


def load_corpus(path):
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh)


# -- configuration -----------------------------------------------------------

@dataclass(frozen=True)
class DistanceConfig:
    family: str = "fp-matching"
    ground: str = "lcs"
    rho: float = None
    tau: float = None
    steinhaus_ground: bool = False
    steinhaus_outer: bool = False
    outer_reference: str = "empty"  # "empty" or a corpus id

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigurationError(f"unknown distance family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.ground not in GROUNDS:
            raise ConfigurationError(f"unknown ground {self.ground!r}; choose from {', '.join(GROUNDS)}")
        if self.family.startswith("fp-"):
            if self.rho is None or not self.rho > 0:
                raise ConfigurationError(f"{self.family} needs a positive rho")
        if self.family == "semd":
            if self.tau is None or not 0 < self.tau < 1:
                raise ConfigurationError("semd needs tau in (0, 1)")
        if self.steinhaus_outer and self.outer_reference == "empty" and self.family in NONEMPTY_FAMILIES:
            raise ConfigurationError(
                f"{self.family} is undefined on the empty observation; pass another outer reference"
            )

    @property
    def is_sequence(self):
        return self.family in SEQUENCE_FAMILIES

    def ground_metric(self):
        if self.ground == "lcs":
            g = lcs_ground()
        elif self.ground == "lsp":
            g = lsp_ground()
        elif self.ground == "discrete":
            g = discrete_metric()
        else:
            g = abs_metric()
        if self.steinhaus_ground:
            g = steinhaus_transform(g, g.null_element)
        return g

    def elements(self, obs):
        """Element list of an observation under this ground."""
        if self.ground != "scalar-abs":
            return [tuple(str(v) for v in p) for p in obs.paths]
        out = []
        for p in obs.paths:
            if len(p) != 1:
                raise ConfigurationError(f"observation {obs.id!r}: scalar ground needs single-label paths")
            try:
                out.append(float(p[0]))
            except ValueError:
                raise ConfigurationError(f"observation {obs.id!r}: label {p[0]!r} is not numeric") from None
        return out


def base_distance(config, ground, X, Y):
    """The configured collection distance between two element lists, without outer normalisation."""
    f = config.family
    if f == "matching":
        return float(matching_distance(Multiset(X), Multiset(Y), ground)[0])
    if f == "fp-matching":
        return float(fixed_penalty_matching_distance(Multiset(X), Multiset(Y), ground, config.rho)[0])
    if f == "emd":
        return float(emd(Multiset(X), Multiset(Y), ground)[0])
    if f == "semd":
        return float(semd(Multiset(X), Multiset(Y), ground, config.tau))
    if f == "edit":
        return float(edit_distance(X, Y, ground))
    if f == "fp-edit":
        return float(fixed_penalty_edit_distance(X, Y, ground, config.rho))
    if f == "dtw":
        return float(dtw_distance(X, Y, ground))
    return float(fixed_penalty_dtw_distance(X, Y, ground, config.rho))


def _outer(d, dxc, dyc):
    den = (dxc + dyc) + d
    if den == 0:
        return 0.0
    return min(2.0 * d / den, 1.0)


class ObservationDistance:
    """Picklable two-argument distance on element lists built from a config."""

    def __init__(self, config, reference=()):
        self.config = config
        self.ground = config.ground_metric()
        self.reference = list(reference)

    def __call__(self, X, Y):
        X, Y = list(X), list(Y)
        d = base_distance(self.config, self.ground, X, Y)
        if not self.config.steinhaus_outer:
            return d
        ref = self.reference
        return _outer(d, base_distance(self.config, self.ground, X, ref),
                      base_distance(self.config, self.ground, Y, ref))


# -- pairwise matrix ---------------------------------------------------------

_WORKER = {}


def _init_worker(config, elems, ids, ref_dist):
    _WORKER.update(config=config, ground=config.ground_metric(), elems=elems, ids=ids, ref=ref_dist)


def _evaluate(pairs):
    config, ground, elems, ids, ref = (_WORKER[k] for k in ("config", "ground", "elems", "ids", "ref"))
    out = []
    for i, j in pairs:
        try:
            d = base_distance(config, ground, elems[i], elems[j])
            if ref is not None:
                d = _outer(d, ref[i], ref[j])
        except Exception as exc:
            raise PairEvaluationError(f"pair ({ids[i]!r}, {ids[j]!r}): {exc}") from None
        out.append(d)
    return out


def _reference_elements(corpus, config):
    if config.outer_reference == "empty":
        return []
    for o in corpus.observations:
        if o.id == config.outer_reference:
            return config.elements(o)
    raise ConfigurationError(f"outer reference {config.outer_reference!r} is not a corpus id")


def _partition(pairs, workers):
    # contiguous static blocks; the matrix does not depend on the split
    size = -(-len(pairs) // workers)
    return [pairs[k:k + size] for k in range(0, len(pairs), size)]


def pairwise_matrix(corpus, config, workers=1):
    """Symmetric matrix of distances between all corpus observations.

    Each strict-upper-triangle pair is evaluated exactly once, by exactly the
    same code, whatever the worker count, so results are bit identical
    across ``workers`` settings.
    """
    if workers < 1:
        raise ConfigurationError("workers must be >= 1")
    n = len(corpus)
    elems = [config.elements(o) for o in corpus.observations]
    ids = corpus.ids
    if config.family in NONEMPTY_FAMILIES:
        for oid, e in zip(ids, elems):
            if not e:
                raise ConfigurationError(f"observation {oid!r} is empty; {config.family} needs non-empty observations")
    ref_dist = None
    if config.steinhaus_outer:
        ground = config.ground_metric()
        ref = _reference_elements(corpus, config)
        ref_dist = []
        for oid, e in zip(ids, elems):
            try:
                ref_dist.append(base_distance(config, ground, e, ref))
            except Exception as exc:
                raise PairEvaluationError(f"pair ({oid!r}, reference): {exc}") from None
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    D = np.zeros((n, n))
    if not pairs:
        return D
    if workers == 1:
        _init_worker(config, elems, ids, ref_dist)
        values = _evaluate(pairs)
    else:
        chunks = _partition(pairs, workers)
        with ProcessPoolExecutor(max_workers=min(workers, len(chunks)), initializer=_init_worker,
                                 initargs=(config, elems, ids, ref_dist)) as pool:
            values = [v for chunk in pool.map(_evaluate, chunks) for v in chunk]
    for (i, j), v in zip(pairs, values):
        D[i, j] = D[j, i] = v
    return D


# -- output ------------------------------------------------------------------

def _fmt(v):
    return format(float(v), ".17g")


def write_matrix_csv(path, ids, D):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", *ids])
        for oid, row in zip(ids, D):
            w.writerow([oid, *(_fmt(v) for v in row)])


def read_matrix_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    ids = rows[0][1:]
    D = np.array([[float(v) for v in r[1:]] for r in rows[1:]], dtype=np.float64)
    return ids, D


def write_coords_csv(path, corpus, coords):
    keys = corpus.meta_keys()
    m = coords.shape[1]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", *(f"x{k + 1}" for k in range(m)), *keys])
        for o, row in zip(corpus.observations, coords):
            w.writerow([o.id, *(_fmt(v) for v in row), *(o.meta.get(k, "") for k in keys)])


def embed_command(corpus, config, m=2, output=".", workers=1):
    """Write ``matrix.csv`` and ``coords.csv`` into ``output``; returns ``(D, embedding)``."""
    D = pairwise_matrix(corpus, config, workers)
    emb = classical_mds(D, m)
    os.makedirs(output, exist_ok=True)
    write_matrix_csv(os.path.join(output, "matrix.csv"), corpus.ids, D)
    write_coords_csv(os.path.join(output, "coords.csv"), corpus, emb.coords)
    return D, emb


# -- audit -------------------------------------------------------------------

def synthetic_sampler(config, alphabet=("a", "b"), max_path=2, max_size=3):
    """Random small observations: paths over a tiny alphabet, never the null element."""
    if config.ground == "scalar-abs":
        pool = [1.0, 2.0, 3.0]
    else:
        pool = [tuple(p) for k in range(1, max_path + 1) for p in _words(alphabet, k)]

    wrap = tuple if config.is_sequence else Multiset

    def sample(rng):
        return wrap(rng.choice(pool) for _ in range(rng.randint(1, max_size)))

    return sample


def _words(alphabet, k):
    if k == 0:
        return [()]
    return [w + (a,) for w in _words(alphabet, k - 1) for a in alphabet]


def corpus_sampler(corpus, config):
    wrap = tuple if config.is_sequence else Multiset
    return [wrap(config.elements(o)) for o in corpus.observations]


def audit_command(config, n=1000, *, corpus=None, seed=0, tol=1e-9):
    d = ObservationDistance(config, _reference_elements(corpus, config) if corpus is not None else ())
    sampler = corpus_sampler(corpus, config) if corpus is not None else synthetic_sampler(config)
    return audit_metric(d, sampler, n, tol, seed=seed)


def random_corpus(n, seed=0, regimes=None):
    """Two-regime synthetic corpus: each regime prefers its own label vocabulary."""
    rng = random.Random(seed)
    regimes = regimes or (("GK", "LCB", "RCB", "LB"), ("CF", "LW", "RW", "AM"))
    shared = ("CM", "DM")
    obs = []
    for k in range(n):
        r = k % len(regimes)
        vocab = regimes[r]
        paths = []
        for _ in range(rng.randint(3, 6)):
            length = rng.randint(2, 5)
            paths.append(tuple(rng.choice(vocab) if rng.random() < 0.85 else rng.choice(shared)
                               for _ in range(length)))
        obs.append(Observation(f"obs{k:03d}", tuple(paths), {"regime": str(r)}))
    return Corpus(tuple(obs))
