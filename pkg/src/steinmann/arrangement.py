"""The adjoint braid (resonance) arrangement: hyperplanes and chambers.

The arrangement lives in the sum-zero subspace of R^I and has one hyperplane
per unordered split {S, T} of the ground set.  Chambers are identified by
their strict sign vectors over the canonical hyperplane list (orientation:
positive side of {S, T} is where the indicator of the min-containing side
pairs positively; hyperplanes are ordered lexicographically by that side).

Enumeration walks the chamber graph: starting from a deterministic generic
seed it repeatedly flips one sign and asks whether the flipped vector is
realizable.  Realizability of a flip is equivalent to sharing a facet, so
the walk reaches every chamber.  Three layers keep this fast while staying
exact:

* a necessary combinatorial filter: a realizable sign vector, read as a set
  of ordered splits, is closed under the partial product of splits; flipping
  one split lets us re-check closure incrementally in O(2^n) integer ops;
* exact ray shooting from the parent witness, which usually produces an
  interior witness of the neighbor without any linear programming;
* an exact margin LP (single phase, Bland's rule) as the decision oracle for
  everything the first two layers cannot settle.

Computed chamber tables are cached in-process and, optionally, on disk as
JSON lines (written atomically).
"""

from __future__ import annotations

import json
import os
import tempfile
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from . import ratgeom
from .compositions import GroundSet
from .errors import ResourceBoundError
from .preposets import AdjointFamily, two_block
from .rat import ZERO, rat, rat_str, parse_rat

CACHE_FORMAT = 1
CACHE_ENV = "STEINMANN_CACHE_DIR"
DEFAULT_MAX_N = 6
MAX_N = DEFAULT_MAX_N  # process-wide safety bound; the CLI overrides via --max-n


def set_max_n(bound: int):
    global MAX_N
    MAX_N = int(bound)


def hyperplane_splits(g: GroundSet):
    """Canonical hyperplane list: min-containing sides, lexicographic."""
    n = len(g)
    if n <= 1:
        return []
    labels = g.labels
    sides = []
    for mask in range(1, (1 << n) - 1):
        if mask & 1:  # side containing the minimum label (position 0)
            sides.append(tuple(labels[i] for i in range(n) if (mask >> i) & 1))
    sides.sort()
    return [two_block(g, side) for side in sides]


def _side_masks(g: GroundSet):
    """Position bitmasks of the canonical sides, in hyperplane order."""
    n = len(g)
    masks = []
    for tb in hyperplane_splits(g):
        mask = 0
        for label in tb.S:
            mask |= 1 << g.position(label)
        masks.append(mask)
    return masks


@dataclass(frozen=True)
class AdjointChamber:
    """A chamber: strict signs over the hyperplane list plus an interior witness."""

    ground: GroundSet
    signs: str
    witness: ratgeom.Point

    def sign(self, index: int) -> str:
        return self.signs[index]

    def signature(self) -> AdjointFamily:
        """The total nonsymmetric family of splits on whose positive side we sit."""
        members = []
        for s, tb in zip(self.signs, hyperplane_splits(self.ground)):
            members.append(tb if s == "+" else tb.reversed())
        return AdjointFamily(self.ground, frozenset(members))

    def __repr__(self):
        return f"Chamber[{self.signs}]"


@dataclass(frozen=True)
class AdjointFace:
    """A relatively open face: signs with zeros, witness strict off the zero set."""

    ground: GroundSet
    signs: str  # over the hyperplane list, entries +, -, 0
    witness: ratgeom.Point

    def zero_set(self):
        return tuple(i for i, s in enumerate(self.signs) if s == "0")


# ---------------------------------------------------------------------------
# generic sign-vector enumeration core


def _dot(vec, point):
    return sum((a * b for a, b in zip(vec, point)), ZERO)


def _generic_seed(functionals, dim, base_start=3, recenter=False):
    """Deterministic all-strict seed: powers of the smallest working base.

    With ``recenter`` the seed is powers minus their mean (so that, lifted by
    appending the negated sum, it matches the recentered power seed in the
    ambient sum-zero space).
    """
    base = base_start
    while True:
        if recenter:
            n = dim + 1
            total = sum(base**i for i in range(n))
            seed = tuple(rat(base**i) - rat(total, n) for i in range(dim))
        else:
            seed = tuple(rat(base**i) for i in range(dim))
        if all(_dot(f, seed) != 0 for f in functionals):
            return seed
        base += 1


def _sign_bits(functionals, point):
    bits = 0
    for k, f in enumerate(functionals):
        v = _dot(f, point)
        if v == 0:
            raise AssertionError("seed/witness must be strict")
        if v > 0:
            bits |= 1 << k
    return bits


def _ray_shoot(functionals, w, j, cur_bits):
    """Try to walk from witness ``w`` through the facet on hyperplane j.

    Returns a strict witness beyond hyperplane j if the exit facet of the ray
    is provably j (unique minimal crossing), else None.
    """
    aj = functionals[j]
    sign_j = 1 if (cur_bits >> j) & 1 else -1
    v = tuple(-sign_j * c for c in aj)
    dots = [_dot(f, w) for f in functionals]
    dvs = [_dot(f, v) for f in functionals]
    t_min, t_second, k_min = None, None, -1
    for k in range(len(functionals)):
        if dvs[k] == 0:
            continue
        t = -dots[k] / dvs[k]
        if t <= 0:
            continue
        if t_min is None or t < t_min:
            t_second = t_min
            t_min, k_min = t, k
        elif t == t_min:
            k_min = -2  # tie: exit facet ambiguous
        elif t_second is None or t < t_second:
            t_second = t
    if k_min != j:
        return None
    t_star = (t_min + t_second) / 2 if t_second is not None else t_min + 1
    w2 = tuple(wi + t_star * vi for wi, vi in zip(w, v))
    target = cur_bits ^ (1 << j)
    for k in range(len(functionals)):
        val = dots[k] + t_star * dvs[k]
        if val == 0 or (val > 0) != bool((target >> k) & 1):
            return None
    return w2


def enumerate_sign_chambers(functionals, dim, seed=None, neighbor_ok=None):
    """All realizable strict sign vectors of a list of integer functionals.

    Returns ``{bits: witness}`` where bit k set means functional k positive.
    ``neighbor_ok(bits, flipped_index)`` may veto candidates that a cheap
    necessary condition rules out; it must never veto a realizable vector.
    """
    if not functionals:
        return {0: tuple(rat(0) for _ in range(dim))}
    if seed is None:
        seed = _generic_seed(functionals, dim)
    start = _sign_bits(functionals, seed)
    found = {start: seed}
    dead = set()
    queue = deque([start])
    m = len(functionals)
    while queue:
        bits = queue.popleft()
        w = found[bits]
        for j in range(m):
            cand = bits ^ (1 << j)
            if cand in found or cand in dead:
                continue
            if neighbor_ok is not None and not neighbor_ok(bits, j):
                dead.add(cand)
                continue
            w2 = _ray_shoot(functionals, w, j, bits)
            if w2 is None:
                rows = [
                    tuple(c if (cand >> k) & 1 else -c for c in functionals[k])
                    for k in range(m)
                ]
                w2 = ratgeom.strict_feasible(rows, dim)
            if w2 is None:
                dead.add(cand)
            else:
                found[cand] = w2
                queue.append(cand)
    return found


# ---------------------------------------------------------------------------
# the adjoint arrangement itself


def _reduced_functionals(g: GroundSet):
    """Integer functionals of the splits in the sum-zero chart y = x[:n-1]."""
    n = len(g)
    out = []
    for mask in _side_masks(g):
        has_last = (mask >> (n - 1)) & 1
        out.append(tuple((1 if (mask >> j) & 1 else 0) - has_last for j in range(n - 1)))
    return out


def _pre_adjoint_neighbor_filter(g: GroundSet):
    """Incremental necessary test: flipping one split must keep the family
    closed under the partial product of splits (adjoint families are)."""
    n = len(g)
    full = (1 << n) - 1
    side_masks = _side_masks(g)
    index_of = {m: k for k, m in enumerate(side_masks)}

    def member(bits, mask):
        if mask & 1:
            return bool((bits >> index_of[mask]) & 1)
        return not (bits >> index_of[full ^ mask]) & 1

    def product_mask(a, b):
        if (a & b) == 0 and (a | b) != full:
            return a | b
        if (a | b) == full and (a & b) != 0:
            return a & b
        return None

    def proper_submasks(mask):
        sub = (mask - 1) & mask
        while sub:
            yield sub
            sub = (sub - 1) & mask

    def neighbor_ok(bits, j):
        cand = bits ^ (1 << j)
        s_mask = side_masks[j]
        new_mask = s_mask if (cand >> j) & 1 else full ^ s_mask
        removed = full ^ new_mask
        # (a) no surviving pair may multiply to the removed split
        for a in proper_submasks(removed):
            if member(cand, a) and member(cand, removed ^ a):
                return False
        comp = full ^ removed
        for c in proper_submasks(comp):
            if member(cand, removed | c) and member(cand, removed | (comp ^ c)):
                return False
        # (b) products with the new split must stay in the family
        for k, sm in enumerate(side_masks):
            other = sm if (cand >> k) & 1 else full ^ sm
            r = product_mask(new_mask, other)
            if r is not None and not member(cand, r):
                return False
        return True

    return neighbor_ok


def _lift_witness(g: GroundSet, y) -> ratgeom.Point:
    coords = tuple(y) + (-sum(y, ZERO),) if len(g) >= 1 else ()
    return ratgeom.Point(g, coords)


_CHAMBER_MEMO = {}


def _enumerate_uncached(g: GroundSet):
    n = len(g)
    if n == 0:
        return [AdjointChamber(g, "", ratgeom.Point(g, ()))]
    functionals = _reduced_functionals(g)
    dim = n - 1
    seed = _generic_seed(functionals, dim, recenter=True) if dim else ()
    table = enumerate_sign_chambers(
        functionals, dim, seed=seed, neighbor_ok=_pre_adjoint_neighbor_filter(g)
    )
    m = len(functionals)
    chambers = []
    for bits, w in table.items():
        signs = "".join("+" if (bits >> k) & 1 else "-" for k in range(m))
        chambers.append(AdjointChamber(g, signs, _lift_witness(g, w)))
    chambers.sort(key=lambda c: c.signs)
    return chambers


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "steinmann"


def _cache_path(cache_dir, g: GroundSet) -> Path:
    return Path(cache_dir) / f"chambers_n{len(g)}.jsonl"


def _write_cache(path: Path, g: GroundSet, chambers):
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {
        "format": CACHE_FORMAT,
        "n": len(g),
        "labels": [str(x) for x in g.labels],
        "hyperplanes": [[str(x) for x in tb.S] for tb in hyperplane_splits(g)],
    }
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(json.dumps(header, sort_keys=True) + "\n")
            for ch in chambers:
                rec = {
                    "signs": ch.signs,
                    "witness": [rat_str(v) for v in ch.witness.coords],
                }
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        os.replace(tmp, str(path))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_cache(path: Path, g: GroundSet):
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
        header = json.loads(lines[0])
        if header.get("format") != CACHE_FORMAT or header.get("n") != len(g):
            return None
        if header.get("labels") != [str(x) for x in g.labels]:
            return None
        expected = [[str(x) for x in tb.S] for tb in hyperplane_splits(g)]
        if header.get("hyperplanes") != expected:
            return None
        chambers = []
        for line in lines[1:]:
            rec = json.loads(line)
            witness = ratgeom.Point(g, tuple(parse_rat(v) for v in rec["witness"]))
            chambers.append(AdjointChamber(g, rec["signs"], witness))
        # sanity: witnesses must reproduce the recorded signs exactly
        splits = hyperplane_splits(g)
        for ch in chambers:
            for s, tb in zip(ch.signs, splits):
                v = ratgeom.pair(ch.witness, tb.weight_vector())
                if v == 0 or (v > 0) != (s == "+"):
                    return None
        return chambers
    except (ValueError, KeyError, IndexError, json.JSONDecodeError):
        return None


def enumerate_chambers(g: GroundSet, max_n: int = None, cache_dir=None, use_disk_cache: bool = True):
    """All chambers of the adjoint arrangement over ``g``, canonically sorted.

    Results are memoized per ground set; with ``use_disk_cache`` the table is
    also persisted as JSON lines under the cache directory (environment
    variable STEINMANN_CACHE_DIR overrides the default location).
    """
    n = len(g)
    if max_n is None:
        max_n = MAX_N
    if n > max_n:
        raise ResourceBoundError(
            f"chamber enumeration for n={n} exceeds the configured bound {max_n}"
        )
    memo_key = g.labels
    if memo_key in _CHAMBER_MEMO:
        return _CHAMBER_MEMO[memo_key]
    chambers = None
    path = None
    if use_disk_cache and n >= 4:
        path = _cache_path(cache_dir or default_cache_dir(), g)
        chambers = _read_cache(path, g)
    if chambers is None:
        chambers = _enumerate_uncached(g)
        if path is not None:
            _write_cache(path, g, chambers)
    _CHAMBER_MEMO[memo_key] = chambers
    return chambers


def chamber_count(g: GroundSet, **kw) -> int:
    return len(enumerate_chambers(g, **kw))


def chamber_index(g: GroundSet, **kw) -> dict:
    """Mapping sign string -> chamber."""
    return {ch.signs: ch for ch in enumerate_chambers(g, **kw)}


def clear_memo():
    """Drop in-process chamber tables (used by determinism tests)."""
    _CHAMBER_MEMO.clear()
