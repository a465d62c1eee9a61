"""Functionals on adjoint chambers: the Steinmann / Lie-coalgebra machinery.

Restricting the cone functionals of the adjoint realization to chambers
kills the higher codimensions and leaves exactly the functionals satisfying
the four-term Steinmann relations.  This module materializes that picture:

* ``c_functional`` / ``m_functional`` / ``p_functional`` build the images of
  the three dual bases as explicit chamber-value tables;
* ``steinmann_relations`` enumerates the four-term relations around
  codimension-2 faces lying on exactly two hyperplanes;
* ``derivative`` takes the discrete derivative of a Steinmann functional
  across a hyperplane by exact epsilon-perturbation of embedded witnesses;
* ``eulerian_element`` and ``comb_coefficients`` implement the Taylor-style
  expansion that reconstructs a Steinmann functional from iterated
  derivatives evaluated at Eulerian elements;
* ``dynkin`` / ``egs_expansion`` produce the primitive element of a chamber
  in the H basis, by dual-basis evaluation and by the folded Tits product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import arrangement as arr
from . import hopf
from . import preposets as pp
from . import ratgeom
from .compositions import (
    GroundSet,
    SetComposition,
    coarser_compositions,
    enumerate_compositions,
    quotient_factors,
    restrict,
)
from .errors import DomainError, GroundMismatchError
from .preposets import Preposet
from .rat import ONE, ZERO, as_rat, rat
from .zie import based_keys


@dataclass(frozen=True)
class ChamberFunctional:
    """A rational value on every chamber of the arrangement over the ground."""

    ground: GroundSet
    values: dict = field(compare=False)  # sign string -> value, all chambers present

    def __post_init__(self):
        table = arr.chamber_index(self.ground)
        values = {}
        for signs, v in self.values.items():
            if signs not in table:
                raise DomainError(f"unknown chamber {signs!r}")
            values[signs] = as_rat(v)
        for signs in table:
            values.setdefault(signs, ZERO)
        object.__setattr__(self, "values", values)

    def __call__(self, chamber) -> object:
        signs = chamber.signs if isinstance(chamber, arr.AdjointChamber) else chamber
        return self.values[signs]

    def __eq__(self, other):
        return (
            isinstance(other, ChamberFunctional)
            and self.ground == other.ground
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.ground, tuple(sorted(self.values.items()))))

    def __add__(self, other):
        if self.ground != other.ground:
            raise GroundMismatchError("functional grounds differ")
        return ChamberFunctional(
            self.ground, {k: v + other.values[k] for k, v in self.values.items()}
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = as_rat(c)
        return ChamberFunctional(self.ground, {k: c * v for k, v in self.values.items()})

    def __neg__(self):
        return self.scale(-1)

    def is_zero(self):
        return all(v == 0 for v in self.values.values())

    def __repr__(self):
        items = ", ".join(f"{k}:{v}" for k, v in sorted(self.values.items()))
        return f"Functional({items})"


@dataclass(frozen=True)
class ChamberSum:
    """A formal rational combination of chambers (the dual side of the above)."""

    ground: GroundSet
    weights: dict = field(compare=False)  # sign string -> value, sparse

    def __post_init__(self):
        table = arr.chamber_index(self.ground)
        weights = {}
        for signs, v in self.weights.items():
            if signs not in table:
                raise DomainError(f"unknown chamber {signs!r}")
            v = as_rat(v)
            if v != 0:
                weights[signs] = v
        object.__setattr__(self, "weights", weights)

    def __eq__(self, other):
        return (
            isinstance(other, ChamberSum)
            and self.ground == other.ground
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.ground, tuple(sorted(self.weights.items()))))

    def __repr__(self):
        items = " + ".join(f"{v}*[{k}]" for k, v in sorted(self.weights.items()))
        return f"ChamberSum({items})"


def evaluate(f: ChamberFunctional, e: ChamberSum):
    if f.ground != e.ground:
        raise GroundMismatchError("evaluation grounds differ")
    return sum((f.values[s] * w for s, w in e.weights.items()), ZERO)


@dataclass(frozen=True)
class FunctionalTensor:
    """Values over pairs (chamber over S, chamber over T); sparse storage."""

    left_ground: GroundSet
    right_ground: GroundSet
    values: dict = field(compare=False)  # (signs_left, signs_right) -> value

    def __post_init__(self):
        left = arr.chamber_index(self.left_ground)
        right = arr.chamber_index(self.right_ground)
        values = {}
        for (a, b), v in self.values.items():
            if a not in left or b not in right:
                raise DomainError("unknown chamber pair")
            v = as_rat(v)
            if v != 0:
                values[(a, b)] = v
        object.__setattr__(self, "values", values)

    def value(self, a, b):
        return self.values.get((a, b), ZERO)

    def swap(self) -> "FunctionalTensor":
        return FunctionalTensor(
            self.right_ground,
            self.left_ground,
            {(b, a): v for (a, b), v in self.values.items()},
        )

    def scale(self, c):
        c = as_rat(c)
        return FunctionalTensor(
            self.left_ground, self.right_ground, {k: c * v for k, v in self.values.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, FunctionalTensor)
            and self.left_ground == other.left_ground
            and self.right_ground == other.right_ground
            and self.values == other.values
        )

    def __hash__(self):
        return hash(
            (self.left_ground, self.right_ground, tuple(sorted(self.values.items())))
        )

    def contract_right(self, e: ChamberSum) -> ChamberFunctional:
        """Pair the right leg against a chamber combination."""
        if e.ground != self.right_ground:
            raise GroundMismatchError("contraction ground mismatch")
        out = {}
        for (a, b), v in self.values.items():
            w = e.weights.get(b)
            if w is not None:
                out[a] = out.get(a, ZERO) + v * w
        return ChamberFunctional(self.left_ground, out)


# ---------------------------------------------------------------------------
# the dual basis functionals


def c_functional(p: Preposet) -> ChamberFunctional:
    """Characteristic functional of a generalized permutohedral cone.

    Value 1 exactly on the chambers whose signature contains every coprobe
    split of the preposet; purely combinatorial, no feasibility calls.
    """
    g = p.ground
    splits = arr.hyperplane_splits(g)
    index = {tb.S: i for i, tb in enumerate(splits)}
    requirements = []  # (hyperplane index, required sign)
    for tb in pp.coprobes(p):
        if tb.S in index:
            requirements.append((index[tb.S], "+"))
        else:
            requirements.append((index[tb.T], "-"))
    values = {}
    for ch in arr.enumerate_chambers(g):
        ok = all(ch.signs[i] == s for i, s in requirements)
        values[ch.signs] = ONE if ok else ZERO
    return ChamberFunctional(g, values)


def m_functional(f: SetComposition) -> ChamberFunctional:
    """Alternating sum of cone functionals over coarsenings (signed interior)."""
    g = f.ground
    out = None
    for g_comp in coarser_compositions(f):
        term = c_functional(pp.preposet_of(g_comp)).scale((-1) ** (len(f) - len(g_comp)))
        out = term if out is None else out + term
    return out


def p_functional(f: SetComposition) -> ChamberFunctional:
    """Image of the shuffle-dual basis: factorial-weighted sum of m over coarsenings."""
    out = None
    for g_comp in coarser_compositions(f):
        _, fact = quotient_factors(f, g_comp)
        term = m_functional(g_comp).scale(rat(1, fact))
        out = term if out is None else out + term
    return out


def m_open_cone_value(f: SetComposition, chamber: arr.AdjointChamber):
    """Independent oracle for m values: signed open-cone membership.

    Tests whether the chamber witness is a strictly positive combination of
    the coroots of the opposite composition, with sign (-1)^(lumps-1).
    """
    from .compositions import opposite as comp_opposite

    rev = comp_opposite(f)
    p = pp.preposet_of(rev)
    gens = [
        ratgeom.coroot_point(f.ground, a, b).coords for (a, b) in p.pairs()
    ]
    if not gens:
        # no coroots: the cone is the origin and so is its relative interior
        member = all(c == 0 for c in chamber.witness.coords)
    else:
        member = ratgeom.cone_member(chamber.witness.coords, gens, open_cone=True) is not None
    if not member:
        return ZERO
    return as_rat((-1) ** (len(f) - 1))


# ---------------------------------------------------------------------------
# Steinmann relations


@dataclass(frozen=True)
class SteinmannRelation:
    """Four chambers around a codim-2 face with alternating signs.

    The chambers agree outside the two named hyperplanes and realize all
    four sign combinations on them; the (+1, -1, -1, +1) pattern pairs with
    the (+,+), (+,-), (-,+), (-,-) combinations in that order.
    """

    ground: GroundSet
    hyperplanes: tuple  # pair of hyperplane indices (i, j), i < j
    entries: tuple  # four (sign string, coefficient) pairs
    face: arr.AdjointFace

    def apply(self, f: ChamberFunctional):
        return sum((as_rat(c) * f.values[s] for s, c in self.entries), ZERO)


def _crossing(tb1, tb2) -> bool:
    s1, t1 = set(tb1.S), set(tb1.T)
    s2, t2 = set(tb2.S), set(tb2.T)
    return bool(s1 & s2) and bool(s1 & t2) and bool(t1 & s2) and bool(t1 & t2)


@lru_cache(maxsize=None)
def _relations_cached(labels: tuple):
    g = GroundSet(labels)
    n = len(g)
    splits = arr.hyperplane_splits(g)
    reduced = arr._reduced_functionals(g)
    m = len(splits)
    chamber_table = arr.chamber_index(g)
    relations = []
    for i in range(m):
        for j in range(i + 1, m):
            if not _crossing(splits[i], splits[j]):
                continue
            flat = ratgeom.kernel_basis([reduced[i], reduced[j]], n - 1)
            fdim = len(flat)
            others = [k for k in range(m) if k not in (i, j)]
            induced = {
                k: tuple(
                    sum((reduced[k][c] * flat[b][c] for c in range(n - 1)), ZERO)
                    for b in range(fdim)
                )
                for k in others
            }
            # group parallel restrictions: key = direction with leading 1
            reps, assign = [], {}
            for k in others:
                vec = induced[k]
                lead = next(v for v in vec if v != 0)
                direction = tuple(v / lead for v in vec)
                orient = 1 if lead > 0 else -1
                for idx, (d2, _) in enumerate(reps):
                    if d2 == direction:
                        assign[k] = (idx, orient)
                        break
                else:
                    assign[k] = (len(reps), orient)
                    reps.append((direction, k))
            rep_vectors = [d for d, _ in reps]
            cells = arr.enumerate_sign_chambers(rep_vectors, fdim)
            for bits in sorted(cells):
                z = cells[bits]
                y = tuple(
                    sum((flat[b][c] * z[b] for b in range(fdim)), ZERO)
                    for c in range(n - 1)
                )
                base_signs = [None] * m
                for k in others:
                    idx, orient = assign[k]
                    positive = bool((bits >> idx) & 1) == (orient == 1)
                    base_signs[k] = "+" if positive else "-"
                entries = []
                for si, sj, coeff in (("+", "+", 1), ("+", "-", -1), ("-", "+", -1), ("-", "-", 1)):
                    signs = list(base_signs)
                    signs[i], signs[j] = si, sj
                    sign_str = "".join(signs)
                    if sign_str not in chamber_table:
                        raise AssertionError(
                            "relation chamber missing; enumeration inconsistent"
                        )
                    entries.append((sign_str, coeff))
                face_signs = list(base_signs)
                face_signs[i] = face_signs[j] = "0"
                face = arr.AdjointFace(g, "".join(face_signs), arr._lift_witness(g, y))
                relations.append(
                    SteinmannRelation(g, (i, j), tuple(entries), face)
                )
    return tuple(relations)


def steinmann_relations(g: GroundSet):
    """All four-term relations from codim-2 faces on exactly two hyperplanes."""
    return list(_relations_cached(g.labels))


def is_steinmann(f: ChamberFunctional) -> bool:
    return all(rel.apply(f) == 0 for rel in steinmann_relations(f.ground))


def _c_matrix(g: GroundSet):
    """Columns: c functionals of the based keys, as chamber-indexed vectors."""
    keys = based_keys(g)
    chambers = arr.enumerate_chambers(g)
    cols = [c_functional(pp.preposet_of(k)) for k in keys]
    return keys, chambers, cols


def steinmann_basis_coords(f: ChamberFunctional):
    """Coordinates of ``f`` over the based cone functionals, or None.

    Solvable exactly when ``f`` satisfies the Steinmann relations; the
    coordinates are then unique because those functionals are independent.
    """
    keys, chambers, cols = _c_matrix(f.ground)
    rows = [[col.values[ch.signs] for col in cols] for ch in chambers]
    rhs = [f.values[ch.signs] for ch in chambers]
    sol = ratgeom.solve(rows, rhs)
    if sol is None:
        return None
    return {keys[i]: sol[i] for i in range(len(keys))}


def from_basis_coords(g: GroundSet, coords: dict) -> ChamberFunctional:
    """Assemble a functional from cone-functional coordinates."""
    out = ChamberFunctional(g, {})
    for key, coeff in coords.items():
        out = out + c_functional(pp.preposet_of(key)).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# discrete derivative


def _sub_generic_direction(g: GroundSet, base_start: int):
    """A recentered power direction strict on all proper subset sums."""
    n = len(g)
    base = base_start
    while True:
        total = sum(base**i for i in range(n))
        d = tuple(rat(base**i) - rat(total, n) for i in range(n))
        ok = True
        for mask in range(1, (1 << n) - 1):
            s = sum((d[i] for i in range(n) if (mask >> i) & 1), ZERO)
            if s == 0:
                ok = False
                break
        if ok:
            return d
        base += 1


def _perturbed_witness(ch: arr.AdjointChamber, k: int, seed: int) -> ratgeom.Point:
    """The k-th point of a deterministic schedule of interior points."""
    if k == 0:
        return ch.witness
    g = ch.ground
    n = len(g)
    if n <= 1:
        return ch.witness
    d = ratgeom.Point(g, _sub_generic_direction(g, 3 + seed))
    margins = []
    scales = []
    for tb in arr.hyperplane_splits(g):
        lam = tb.weight_vector()
        margins.append(abs(ratgeom.pair(ch.witness, lam)))
        scales.append(abs(ratgeom.pair(d, lam)))
    delta = min(mg / (2 * sc + 1) for mg, sc in zip(margins, scales))
    return ch.witness + d.scale(delta / (k + 1))


def derivative(f: ChamberFunctional, split, seed: int = 0) -> FunctionalTensor:
    """Discrete derivative of a Steinmann functional across a hyperplane.

    For each pair of chambers over the two sides, embeds their witnesses on
    the separating hyperplane, nudges off it by an exact epsilon in both
    directions, and subtracts the functional's values.  The Steinmann
    relations guarantee the result is independent of the witnesses; the
    ``seed`` steers the deterministic regeneration schedule (used to test
    exactly that independence).
    """
    s_labels, t_labels = split
    s, t = set(s_labels), set(t_labels)
    g = f.ground
    if not s or not t or (s & t) or (s | t) != g.label_set:
        raise DomainError("derivative requires a proper two-sided split")
    if not is_steinmann(f):
        raise DomainError("derivative of a non-Steinmann functional is ill-defined")
    left_g = g.subset(s)
    right_g = g.subset(t)
    splits = arr.hyperplane_splits(g)
    table = arr.chamber_index(g)
    split_index = next(
        i for i, tb in enumerate(splits) if set(tb.S) in (s, t)
    )
    oriented_positive_is_s = set(splits[split_index].S) == s
    size_s = rat(1, len(s))
    size_t = rat(1, len(t))
    w_dir = ratgeom.point(
        g, {x: size_s if x in s else -size_t for x in g.labels}
    )
    w_pairings = [ratgeom.pair(w_dir, tb.weight_vector()) for tb in splits]
    values = {}
    for ch_s in arr.enumerate_chambers(left_g):
        for ch_t in arr.enumerate_chambers(right_g):
            h = None
            for k in range(0, 2 * len(splits) + 4):
                ws = _perturbed_witness(ch_s, k, seed)
                wt = ch_t.witness
                coords = {}
                for x in left_g.labels:
                    coords[x] = ws.coord(x)
                for x in right_g.labels:
                    coords[x] = wt.coord(x)
                cand = ratgeom.point(g, coords)
                if all(
                    ratgeom.pair(cand, splits[i].weight_vector()) != 0
                    for i in range(len(splits))
                    if i != split_index
                ):
                    h = cand
                    break
            if h is None:
                raise AssertionError("witness regeneration schedule exhausted")
            pairings = [
                ratgeom.pair(h, tb.weight_vector()) if i != split_index else None
                for i, tb in enumerate(splits)
            ]
            eps_candidates = [
                abs(pairings[i]) / (2 * abs(w_pairings[i]) + 1)
                for i in range(len(splits))
                if i != split_index
            ]
            eps = min(eps_candidates) if eps_candidates else ONE
            signs_plus, signs_minus = [], []
            for i in range(len(splits)):
                if i == split_index:
                    if oriented_positive_is_s:
                        signs_plus.append("+")
                        signs_minus.append("-")
                    else:
                        signs_plus.append("-")
                        signs_minus.append("+")
                else:
                    base = pairings[i]
                    shift = eps * w_pairings[i]
                    sp = base + shift
                    sm = base - shift
                    if sp == 0 or sm == 0 or (sp > 0) != (sm > 0) or (sp > 0) != (base > 0):
                        raise AssertionError("epsilon failed to preserve strict signs")
                    signs_plus.append("+" if sp > 0 else "-")
                    signs_minus.append("+" if sm > 0 else "-")
            key_plus = "".join(signs_plus)
            key_minus = "".join(signs_minus)
            if key_plus not in table or key_minus not in table:
                raise AssertionError("perturbed points left the chamber table")
            v = f.values[key_plus] - f.values[key_minus]
            if v != 0:
                values[(ch_s.signs, ch_t.signs)] = v
    return FunctionalTensor(left_g, right_g, values)


def c_derivative_formula(f_comp: SetComposition, split) -> FunctionalTensor:
    """Closed form of the derivative of a cone functional (deconcatenation
    cocommutator); the independent comparison target for ``derivative``."""
    s_labels, t_labels = split
    s, t = set(s_labels), set(t_labels)
    g = f_comp.ground
    left_g = g.subset(s)
    right_g = g.subset(t)
    values = {}

    def add_product(fs: SetComposition, ft: SetComposition, sign):
        cs = c_functional(pp.preposet_of(fs))
        ct = c_functional(pp.preposet_of(ft))
        for a, va in cs.values.items():
            if va == 0:
                continue
            for b, vb in ct.values.items():
                if vb == 0:
                    continue
                key = (a, b)
                values[key] = values.get(key, ZERO) + sign * va * vb

    # both terms are read in (S, T)-indexed coordinates: each factor evaluates
    # on its own side of the separating hyperplane, only the sign differs
    if hopf._is_initial(f_comp, s):
        add_product(restrict(f_comp, s), restrict(f_comp, t), ONE)
    if hopf._is_initial(f_comp, t):
        add_product(restrict(f_comp, s), restrict(f_comp, t), -ONE)
    return FunctionalTensor(left_g, right_g, values)


# ---------------------------------------------------------------------------
# Eulerian elements and the expansion theorem


def _p_system(g: GroundSet):
    keys = based_keys(g)
    chambers = arr.enumerate_chambers(g)
    rows = []
    for key in keys:
        pf = p_functional(key)
        rows.append([pf.values[ch.signs] for ch in chambers])
    return keys, chambers, rows


@lru_cache(maxsize=None)
def _eulerian_cached(labels: tuple):
    g = GroundSet(labels)
    one_lump = SetComposition(g, (g.labels,))
    keys, chambers, rows = _p_system(g)
    rhs = [ONE if key == one_lump else ZERO for key in keys]
    sol = ratgeom.solve(rows, rhs)
    if sol is None:
        raise AssertionError("Eulerian defining system must be consistent")
    weights = {chambers[i].signs: sol[i] for i in range(len(chambers)) if sol[i] != 0}
    return ChamberSum(g, weights)


def eulerian_element(g: GroundSet) -> ChamberSum:
    """A chamber combination on which only the one-lump p functional is 1.

    Any solution will do (they differ by the span of the Steinmann
    relations); the solver's fixed pivot rule makes this one deterministic.
    """
    if len(g) == 0:
        raise DomainError("the Eulerian element needs a non-empty ground set")
    return _eulerian_cached(g.labels)


def uniform_eulerian_search(g: GroundSet, count: int):
    """A solution of the Eulerian system with ``count`` equal weights, or None.

    Solutions form an affine space (particular + Steinmann span); restricting
    to a pivot coordinate set makes the 0-or-1/count search finite and
    complete.
    """
    keys, chambers, rows = _p_system(g)
    one_lump = SetComposition(g, (g.labels,))
    rhs = [ONE if key == one_lump else ZERO for key in keys]
    particular = ratgeom.solve(rows, rhs)
    if particular is None:
        return None
    kernel = ratgeom.kernel_basis(rows, len(chambers))
    k = len(kernel)
    target = rat(1, count)
    if k == 0:
        weights = particular
        if sorted(v for v in weights) and all(v in (ZERO, target) for v in weights):
            if sum(1 for v in weights if v == target) == count:
                return ChamberSum(g, {chambers[i].signs: weights[i] for i in range(len(chambers))})
        return None
    pivots, _ = ratgeom.rref(kernel, width=len(chambers))
    from itertools import product as iproduct

    for assignment in iproduct((ZERO, target), repeat=k):
        rows_k = [[kernel[b][pivots[i]] for b in range(k)] for i in range(k)]
        rhs_k = [assignment[i] - particular[pivots[i]] for i in range(k)]
        t_sol = ratgeom.solve(rows_k, rhs_k)
        if t_sol is None:
            continue
        full = list(particular)
        for b in range(k):
            if t_sol[b] == 0:
                continue
            for c in range(len(chambers)):
                full[c] += t_sol[b] * kernel[b][c]
        if all(v in (ZERO, target) for v in full) and sum(
            1 for v in full if v == target
        ) == count:
            return ChamberSum(g, {chambers[i].signs: full[i] for i in range(len(chambers)) if full[i] != 0})
    return None


def comb_coefficients(f: ChamberFunctional, i0=None) -> dict:
    """Expansion coefficients of a Steinmann functional over based keys.

    Peels the last lump of each based key: differentiate at (rest, last),
    contract the right leg with the Eulerian element of the last lump, and
    recurse on the left functional.
    """
    g = f.ground
    if len(g) == 0:
        raise DomainError("expansion needs a non-empty ground set")
    if i0 is None:
        i0 = g.min_label()
    if not is_steinmann(f):
        raise DomainError("expansion requires a Steinmann functional")
    keys = [
        k for k in enumerate_compositions(g) if i0 in k.lumps[0]
    ]

    def peel(func: ChamberFunctional, lump_seq) -> object:
        if len(lump_seq) == 1:
            return evaluate(func, eulerian_element(func.ground))
        rest = tuple(x for lump in lump_seq[:-1] for x in lump)
        last = lump_seq[-1]
        tensor = derivative(func, (rest, last))
        contracted = tensor.contract_right(eulerian_element(func.ground.subset(last)))
        return peel(contracted, lump_seq[:-1])

    coeffs = {}
    for key in keys:
        coeffs[key] = peel(f, key.lumps)
    return coeffs


def reconstruct(g: GroundSet, coeffs: dict) -> ChamberFunctional:
    """Assemble ``sum a_F p_F`` from expansion coefficients."""
    out = ChamberFunctional(g, {})
    for key, coeff in coeffs.items():
        coeff = as_rat(coeff)
        if coeff != 0:
            out = out + p_functional(key).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# Dynkin elements


def dynkin(ch: arr.AdjointChamber) -> hopf.BasisElement:
    """The primitive element of a chamber: m-functional values against H keys."""
    g = ch.ground
    terms = {}
    for f in enumerate_compositions(g):
        v = m_functional(f).values[ch.signs]
        if v != 0:
            terms[f] = v
    return hopf.BasisElement(g, "H", terms)


def egs_expansion(ch: arr.AdjointChamber) -> hopf.BasisElement:
    """The folded Tits product over the chamber's signature.

    Each split (S, T) on whose positive side the chamber sits contributes a
    factor (one-lump) minus (T, S); the factors commute under the Tits
    product, so the canonical hyperplane order fixes the fold.
    """
    g = ch.ground
    one_lump = SetComposition(g, (g.labels,))
    acc = hopf.basis_vector("H", one_lump)
    for s, tb in zip(ch.signs, arr.hyperplane_splits(g)):
        member = tb if s == "+" else tb.reversed()
        factor = hopf.basis_vector("H", one_lump) - hopf.basis_vector(
            "H", SetComposition(g, (member.T, member.S))
        )
        acc = hopf.tits_h(acc, factor)
    return acc


def stein_quotient_dim(g: GroundSet) -> int:
    """Chamber count minus the rank of the Steinmann relation system."""
    chambers = arr.enumerate_chambers(g)
    pos = {ch.signs: i for i, ch in enumerate(chambers)}
    rows = []
    for rel in steinmann_relations(g):
        rows.append({pos[s]: as_rat(c) for s, c in rel.entries})
    return len(chambers) - ratgeom.rank_sparse(rows)
