"""The dual pair of Hopf algebras on set compositions.

One algebra (bases M, P, C) is commutative: multiplication quasishuffles /
shuffles / sign-quasishuffles the two lump sequences, and comultiplication is
deconcatenation.  Its dual (bases H, Q) is cocommutative: multiplication is
concatenation and comultiplication restricts (H) or deshuffles (Q).  All
coefficients are exact rationals.

Elements are sparse: a ground set, a basis tag, and a mapping from keys to
nonzero coefficients.  Keys are set compositions, except in the C basis where
genuine preposet keys are allowed as well; those normalize on demand to
composition keys through an alternating-sign expansion, so every operation
can assume composition keys internally.

The Tits product (refining one composition by another) and the primitive
series expansion in the H basis live here too, since both are expressed
directly in these bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import preposets as pp
from .compositions import (
    GroundSet,
    SetComposition,
    coarser_compositions,
    concat,
    enumerate_compositions,
    finer_compositions,
    opposite,
    quotient_factors,
    restrict,
)
from .errors import DomainError, GroundMismatchError
from .preposets import Preposet
from .rat import ONE, ZERO, as_rat, rat

DUAL_SIDE = {"M": "sigma*", "P": "sigma*", "C": "sigma*", "H": "sigma", "Q": "sigma"}
BASES = tuple(DUAL_SIDE)


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


@dataclass(frozen=True)
class BasisElement:
    """A rational linear combination of basis keys, tagged by its basis."""

    ground: GroundSet
    basis: str
    terms: dict = field(compare=False)
    _frozen_terms: tuple = field(default=None, repr=False)

    def __post_init__(self):
        if self.basis not in BASES:
            raise DomainError(f"unknown basis tag {self.basis!r}")
        terms = {}
        for key, coeff in self.terms.items():
            coeff = as_rat(coeff)
            if coeff == 0:
                continue
            if isinstance(key, Preposet):
                if self.basis != "C":
                    raise DomainError("preposet keys are only allowed in the C basis")
                if key.ground != self.ground:
                    raise GroundMismatchError("key ground mismatch")
            elif isinstance(key, SetComposition):
                if key.ground != self.ground:
                    raise GroundMismatchError("key ground mismatch")
            else:
                raise DomainError(f"invalid key type {type(key).__name__}")
            terms[key] = coeff
        object.__setattr__(self, "terms", terms)
        object.__setattr__(
            self, "_frozen_terms", tuple(sorted(terms.items(), key=lambda kv: repr(kv[0])))
        )

    def __eq__(self, other):
        return (
            isinstance(other, BasisElement)
            and self.ground == other.ground
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ground, self.basis, self._frozen_terms))

    def coeff(self, key):
        return self.terms.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BasisElement") -> "BasisElement":
        self._check_compatible(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, ZERO) + v
        return BasisElement(self.ground, self.basis, _clean(terms))

    def __sub__(self, other: "BasisElement") -> "BasisElement":
        return self + other.scale(-1)

    def scale(self, c) -> "BasisElement":
        c = as_rat(c)
        return BasisElement(self.ground, self.basis, {k: c * v for k, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def _check_compatible(self, other):
        if not isinstance(other, BasisElement):
            raise DomainError("expected a BasisElement")
        if self.ground != other.ground:
            raise GroundMismatchError("element grounds differ")
        if self.basis != other.basis:
            raise DomainError("element bases differ; convert first")

    def __repr__(self):
        if not self.terms:
            return f"0[{self.basis}]"
        bits = []
        for key, coeff in self._frozen_terms:
            bits.append(f"{coeff}*{self.basis}_{key}")
        return " + ".join(bits)


def element(ground: GroundSet, basis: str, terms: dict) -> BasisElement:
    return BasisElement(ground, basis, terms)


def basis_vector(basis: str, key) -> BasisElement:
    return BasisElement(key.ground, basis, {key: ONE})


def zero(ground: GroundSet, basis: str) -> BasisElement:
    return BasisElement(ground, basis, {})


def unit(basis: str) -> BasisElement:
    """The basis vector of the unique composition of the empty set."""
    g = GroundSet(())
    return basis_vector(basis, SetComposition(g, ()))


@dataclass(frozen=True)
class TensorElement:
    """A rational combination of key pairs over a two-sided ground split."""

    left_ground: GroundSet
    right_ground: GroundSet
    basis: str
    terms: dict = field(compare=False)

    def __post_init__(self):
        terms = {}
        for (kl, kr), coeff in self.terms.items():
            coeff = as_rat(coeff)
            if coeff == 0:
                continue
            if kl.ground != self.left_ground or kr.ground != self.right_ground:
                raise GroundMismatchError("tensor key grounds mismatch")
            terms[(kl, kr)] = coeff
        object.__setattr__(self, "terms", terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.left_ground == other.left_ground
            and self.right_ground == other.right_ground
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (
                self.left_ground,
                self.right_ground,
                self.basis,
                tuple(sorted(self.terms.items(), key=lambda kv: (repr(kv[0][0]), repr(kv[0][1])))),
            )
        )

    def is_zero(self) -> bool:
        return not self.terms

    def swap(self) -> "TensorElement":
        return TensorElement(
            self.right_ground,
            self.left_ground,
            self.basis,
            {(kr, kl): v for (kl, kr), v in self.terms.items()},
        )

    def __repr__(self):
        if not self.terms:
            return "0⊗0"
        bits = [f"{v}*({kl} ⊗ {kr})" for (kl, kr), v in self.terms.items()]
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# quasishuffles


def _interleavings(f_lumps, g_lumps, allow_merge):
    """Interleave two lump sequences, optionally merging one lump from each.

    Yields the lump sequences H with H below the two-sided concatenation:
    every F-lump keeps its order, every G-lump keeps its order, and a merged
    lump always combines exactly one lump of each side.
    """
    if not f_lumps:
        yield g_lumps
        return
    if not g_lumps:
        yield f_lumps
        return
    for tail in _interleavings(f_lumps[1:], g_lumps, allow_merge):
        yield (f_lumps[0],) + tail
    for tail in _interleavings(f_lumps, g_lumps[1:], allow_merge):
        yield (g_lumps[0],) + tail
    if allow_merge:
        merged = tuple(sorted(f_lumps[0] + g_lumps[0]))
        for tail in _interleavings(f_lumps[1:], g_lumps[1:], allow_merge):
            yield (merged,) + tail


def quasishuffles(f: SetComposition, g: SetComposition):
    """All compositions refining-compatibly below the concatenation of f and g."""
    new_ground = GroundSet(f.ground.labels + g.ground.labels)
    return [
        SetComposition(new_ground, lumps)
        for lumps in _interleavings(f.lumps, g.lumps, allow_merge=True)
    ]


def shuffles(f: SetComposition, g: SetComposition):
    new_ground = GroundSet(f.ground.labels + g.ground.labels)
    return [
        SetComposition(new_ground, lumps)
        for lumps in _interleavings(f.lumps, g.lumps, allow_merge=False)
    ]


# ---------------------------------------------------------------------------
# C-basis preposet keys


def preposet_expansion(p: Preposet) -> dict:
    """Expand a preposet C-key over composition C-keys with alternating signs.

    The expansion runs over compositions G whose order refines p while
    keeping every nonsymmetric pair of p nonsymmetric, signed by the lump
    count difference.
    """
    lp = pp.lump_count(p)
    out = {}
    for g_comp in enumerate_compositions(p.ground):
        q = pp.preposet_of(g_comp)
        if pp.preceq(q, p):
            out[g_comp] = as_rat((-1) ** (lp - len(g_comp)))
    return out


def cone_element(p: Preposet) -> BasisElement:
    """The C-basis element attached to a preposet (kept as a preposet key)."""
    g = pp.to_composition(p) if pp.is_total(p) else None
    if g is not None:
        return basis_vector("C", g)
    return BasisElement(p.ground, "C", {p: ONE})


def normalize_c_keys(x: BasisElement) -> BasisElement:
    """Rewrite preposet C-keys as composition C-keys."""
    if x.basis != "C":
        return x
    terms = {}
    for key, coeff in x.terms.items():
        if isinstance(key, SetComposition):
            terms[key] = terms.get(key, ZERO) + coeff
        else:
            for g_comp, sign in preposet_expansion(key).items():
                terms[g_comp] = terms.get(g_comp, ZERO) + coeff * sign
    return BasisElement(x.ground, "C", _clean(terms))


# ---------------------------------------------------------------------------
# change of basis


def _convert_key(key: SetComposition, src: str, dst: str) -> dict:
    """Expansion of one src-basis vector in the dst basis, as key->coeff."""
    if src == dst:
        return {key: ONE}
    if src == "P" and dst == "M":
        out = {}
        for g_comp in coarser_compositions(key):
            _, fact = quotient_factors(key, g_comp)
            out[g_comp] = rat(1, fact)
        return out
    if src == "C" and dst == "M":
        return {g_comp: ONE for g_comp in coarser_compositions(key)}
    if src == "M" and dst == "C":
        k = len(key)
        return {
            g_comp: as_rat((-1) ** (k - len(g_comp)))
            for g_comp in coarser_compositions(key)
        }
    if src == "M" and dst == "P":
        # invert the triangular P->M substitution
        out = {key: ONE}
        for g_comp in coarser_compositions(key):
            if g_comp == key:
                continue
            _, fact = quotient_factors(key, g_comp)
            for k2, v2 in _convert_key(g_comp, "M", "P").items():
                out[k2] = out.get(k2, ZERO) - rat(1, fact) * v2
        return _clean(out)
    if src == "H" and dst == "Q":
        out = {}
        for g_comp in finer_compositions(key):
            _, fact = quotient_factors(g_comp, key)
            out[g_comp] = rat(1, fact)
        return out
    if src == "Q" and dst == "H":
        out = {}
        for g_comp in finer_compositions(key):
            l, _ = quotient_factors(g_comp, key)
            out[g_comp] = as_rat((-1) ** (len(g_comp) - len(key))) / l
        return out
    if src in ("P", "C") and dst in ("P", "C"):
        via = _convert_key(key, src, "M")
        out = {}
        for k1, v1 in via.items():
            for k2, v2 in _convert_key(k1, "M", dst).items():
                out[k2] = out.get(k2, ZERO) + v1 * v2
        return _clean(out)
    raise DomainError(f"no conversion from {src} to {dst}")


def change_basis(x: BasisElement, target: str) -> BasisElement:
    """Convert within the same algebra (M/P/C together, H/Q together)."""
    if target not in BASES:
        raise DomainError(f"unknown basis tag {target!r}")
    if DUAL_SIDE[x.basis] != DUAL_SIDE[target]:
        raise DomainError(f"cannot convert across the pairing: {x.basis} -> {target}")
    x = normalize_c_keys(x)
    if x.basis == target:
        return x
    terms = {}
    for key, coeff in x.terms.items():
        for k2, v2 in _convert_key(key, x.basis, target).items():
            terms[k2] = terms.get(k2, ZERO) + coeff * v2
    return BasisElement(x.ground, target, _clean(terms))


# ---------------------------------------------------------------------------
# product, coproduct, antipode, pairing


def multiply(a: BasisElement, b: BasisElement) -> BasisElement:
    """The basis-specific product over the disjoint union of the grounds."""
    if a.basis != b.basis:
        raise DomainError("multiply requires equal basis tags; convert first")
    if a.ground.label_set & b.ground.label_set:
        raise GroundMismatchError("multiply requires disjoint grounds")
    basis = a.basis
    a = normalize_c_keys(a)
    b = normalize_c_keys(b)
    new_ground = GroundSet(a.ground.labels + b.ground.labels)
    terms = {}

    def add(key, coeff):
        terms[key] = terms.get(key, ZERO) + coeff

    for fk, fv in a.terms.items():
        for gk, gv in b.terms.items():
            c = fv * gv
            if basis == "M":
                for h in quasishuffles(fk, gk):
                    add(h, c)
            elif basis == "P":
                for h in shuffles(fk, gk):
                    add(h, c)
            elif basis == "C":
                total = len(fk) + len(gk)
                for h in quasishuffles(fk, gk):
                    add(h, c * (-1) ** (total - len(h)))
            else:  # H and Q multiply by concatenation
                add(concat(fk, gk), c)
    return BasisElement(new_ground, basis, _clean(terms))


def _is_initial(f: SetComposition, s: set) -> bool:
    """True iff s is a union of initial lumps of f."""
    remaining = set(s)
    for lump in f.lumps:
        if not remaining:
            return True
        if not set(lump) <= remaining:
            return False
        remaining -= set(lump)
    return not remaining


def comultiply(x: BasisElement, split) -> TensorElement:
    """Coproduct component at an ordered split (S, T) of the ground set."""
    s_labels, t_labels = split
    s, t = set(s_labels), set(t_labels)
    if s & t or s | t != x.ground.label_set:
        raise DomainError("comultiply requires an ordered two-sided partition of the ground")
    x = normalize_c_keys(x)
    left_g = x.ground.subset(s)
    right_g = x.ground.subset(t)
    terms = {}

    def add(kl, kr, coeff):
        key = (kl, kr)
        terms[key] = terms.get(key, ZERO) + coeff

    for key, coeff in x.terms.items():
        if x.basis in ("M", "P", "C"):
            if _is_initial(key, s):
                add(restrict(key, s), restrict(key, t), coeff)
        elif x.basis == "H":
            add(restrict(key, s), restrict(key, t), coeff)
        else:  # Q: survives iff S is a union of lumps
            if all(set(lump) <= s or set(lump) <= t for lump in key.lumps):
                add(restrict(key, s), restrict(key, t), coeff)
    return TensorElement(left_g, right_g, x.basis, terms)


def antipode(x: BasisElement) -> BasisElement:
    """The antipode, via the closed alternating formulas in the M and H bases."""
    if x.basis in ("M", "P", "C"):
        m = change_basis(x, "M")
        terms = {}
        for key, coeff in m.terms.items():
            sign = as_rat((-1) ** len(key))
            for g_comp in coarser_compositions(opposite(key)):
                terms[g_comp] = terms.get(g_comp, ZERO) + sign * coeff
        out = BasisElement(x.ground, "M", _clean(terms))
    else:
        h = change_basis(x, "H")
        terms = {}
        for key, coeff in h.terms.items():
            for g_comp in finer_compositions(opposite(key)):
                terms[g_comp] = terms.get(g_comp, ZERO) + coeff * (-1) ** len(g_comp)
        out = BasisElement(x.ground, "H", _clean(terms))
    return change_basis(out, x.basis)


def pairing(a: BasisElement, b: BasisElement):
    """The perfect pairing: <M_F, H_G> = delta, extended bilinearly."""
    if a.ground != b.ground:
        raise GroundMismatchError("pairing requires equal grounds")
    if DUAL_SIDE[a.basis] == DUAL_SIDE[b.basis]:
        raise DomainError("pairing takes one element from each side")
    if DUAL_SIDE[a.basis] == "sigma":
        a, b = b, a
    am = change_basis(a, "M")
    bh = change_basis(b, "H")
    total = ZERO
    for key, coeff in am.terms.items():
        total += coeff * bh.terms.get(key, ZERO)
    return total


# ---------------------------------------------------------------------------
# Tits product and the primitive series


def tits(f: SetComposition, g: SetComposition) -> SetComposition:
    """Refine each lump of f by g (the composition monoid product)."""
    if f.ground != g.ground:
        raise GroundMismatchError("the Tits product requires equal grounds")
    lumps = []
    for s in f.lumps:
        for t in g.lumps:
            inter = tuple(x for x in t if x in set(s))
            if inter:
                lumps.append(inter)
    return SetComposition(f.ground, tuple(lumps))


def tits_h(a: BasisElement, b: BasisElement) -> BasisElement:
    """Bilinear extension of the Tits product on H-basis elements."""
    if a.basis != "H" or b.basis != "H":
        raise DomainError("tits_h expects H-basis elements")
    if a.ground != b.ground:
        raise GroundMismatchError("tits_h requires equal grounds")
    terms = {}
    for fk, fv in a.terms.items():
        for gk, gv in b.terms.items():
            key = tits(fk, gk)
            terms[key] = terms.get(key, ZERO) + fv * gv
    return BasisElement(a.ground, "H", _clean(terms))


def eulerian_series(g: GroundSet) -> BasisElement:
    """The first Eulerian idempotent in the H basis (zero on the empty set)."""
    if len(g) == 0:
        return zero(g, "H")
    terms = {}
    for f in enumerate_compositions(g):
        k = len(f)
        terms[f] = -as_rat((-1) ** k) / k
    return BasisElement(g, "H", terms)
