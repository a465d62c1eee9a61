"""JSON encodings for every public value type.

All encoders produce plain JSON-serializable structures with deterministic
ordering; rationals are strings ``p/q`` so nothing ever goes through floats.
Labels keep their Python type (string or int) in JSON.
"""

from __future__ import annotations

from . import arrangement as arr
from . import functionals as fn
from . import hopf, zie
from .compositions import GroundSet, SetComposition, SetPartition
from .errors import DomainError
from .preposets import AdjointFamily, Preposet, TwoBlock, preposet, two_block
from .rat import parse_rat, rat_str
from .ratgeom import Point


def ground_to_json(g: GroundSet):
    return list(g.labels)


def ground_from_json(data) -> GroundSet:
    return GroundSet(tuple(data))


def composition_to_json(f: SetComposition):
    return [list(lump) for lump in f.lumps]


def composition_from_json(data, ground: GroundSet = None) -> SetComposition:
    lumps = tuple(tuple(l) for l in data)
    if ground is None:
        ground = GroundSet(tuple(x for l in lumps for x in l))
    return SetComposition(ground, lumps)


def partition_to_json(p: SetPartition):
    return [list(b) for b in p.blocks]


def partition_from_json(data, ground: GroundSet = None) -> SetPartition:
    blocks = tuple(tuple(b) for b in data)
    if ground is None:
        ground = GroundSet(tuple(x for b in blocks for x in b))
    return SetPartition(ground, blocks)


def preposet_to_json(p: Preposet):
    return {
        "ground": ground_to_json(p.ground),
        "pairs": [list(pair) for pair in p.pairs()],
    }


def preposet_from_json(data) -> Preposet:
    g = ground_from_json(data["ground"])
    return preposet(g, [tuple(pair) for pair in data["pairs"]])


def two_block_to_json(tb: TwoBlock):
    return {"S": list(tb.S), "T": list(tb.T)}


def two_block_from_json(data) -> TwoBlock:
    g = GroundSet(tuple(data["S"]) + tuple(data["T"]))
    return two_block(g, data["S"])


def family_to_json(fam: AdjointFamily):
    return {
        "ground": ground_to_json(fam.ground),
        "members": [two_block_to_json(tb) for tb in fam],
    }


def point_to_json(pt: Point):
    return {
        "ground": ground_to_json(pt.ground),
        "coords": [rat_str(c) for c in pt.coords],
    }


def point_from_json(data) -> Point:
    g = ground_from_json(data["ground"])
    return Point(g, tuple(parse_rat(c) for c in data["coords"]))


def _key_to_json(key):
    if isinstance(key, SetComposition):
        return composition_to_json(key)
    if isinstance(key, Preposet):
        return preposet_to_json(key)
    raise DomainError(f"unserializable key type {type(key).__name__}")


def _key_from_json(data, ground: GroundSet):
    if isinstance(data, dict):
        p = preposet_from_json(data)
        if p.ground != ground:
            raise DomainError("preposet key ground mismatch")
        return p
    return composition_from_json(data, ground)


def _key_sort(key):
    if isinstance(key, SetComposition):
        return (0, key.lumps)
    return (1, key.pairs())


def element_to_json(x: hopf.BasisElement):
    terms = sorted(x.terms.items(), key=lambda kv: _key_sort(kv[0]))
    return {
        "ground": ground_to_json(x.ground),
        "basis": x.basis,
        "terms": [{"key": _key_to_json(k), "coeff": rat_str(v)} for k, v in terms],
    }


def element_from_json(data) -> hopf.BasisElement:
    g = ground_from_json(data["ground"])
    terms = {}
    for item in data["terms"]:
        key = _key_from_json(item["key"], g)
        terms[key] = terms.get(key, 0) + parse_rat(item["coeff"])
    return hopf.BasisElement(g, data["basis"], terms)


def tensor_to_json(t: hopf.TensorElement):
    terms = sorted(t.terms.items(), key=lambda kv: (kv[0][0].lumps, kv[0][1].lumps))
    return {
        "left_ground": ground_to_json(t.left_ground),
        "right_ground": ground_to_json(t.right_ground),
        "basis": t.basis,
        "terms": [
            {
                "left": composition_to_json(kl),
                "right": composition_to_json(kr),
                "coeff": rat_str(v),
            }
            for (kl, kr), v in terms
        ],
    }


def tree_to_json(t: zie.Tree):
    if t.is_leaf():
        return list(t.lump)
    return [tree_to_json(t.left), tree_to_json(t.right)]


def tree_from_json(data) -> zie.Tree:
    return zie.tree_from_nested(data)


def zie_to_json(z: zie.ZieElement):
    terms = sorted(z.terms.items(), key=lambda kv: kv[0].lumps)
    return {
        "ground": ground_to_json(z.ground),
        "terms": [{"key": composition_to_json(k), "coeff": rat_str(v)} for k, v in terms],
    }


def zie_from_json(data) -> zie.ZieElement:
    g = ground_from_json(data["ground"])
    return zie.ZieElement(
        g,
        {
            composition_from_json(item["key"], g): parse_rat(item["coeff"])
            for item in data["terms"]
        },
    )


def zie_dual_to_json(d: zie.ZieDualElement):
    terms = sorted(d.terms.items(), key=lambda kv: kv[0].lumps)
    return {
        "ground": ground_to_json(d.ground),
        "basis": d.basis,
        "terms": [{"key": composition_to_json(k), "coeff": rat_str(v)} for k, v in terms],
    }


def zie_dual_from_json(data) -> zie.ZieDualElement:
    g = ground_from_json(data["ground"])
    return zie.ZieDualElement(
        g,
        data["basis"],
        {
            composition_from_json(item["key"], g): parse_rat(item["coeff"])
            for item in data["terms"]
        },
    )


def pwc_to_json(f):
    terms = sorted(f.coeffs.items(), key=lambda kv: kv[0].lumps)
    return {
        "ground": ground_to_json(f.ground),
        "basis": "Mhat",
        "terms": [{"key": composition_to_json(k), "coeff": rat_str(v)} for k, v in terms],
    }


def pwc_from_json(data):
    from .braid import PwcFunction

    g = ground_from_json(data["ground"])
    return PwcFunction(
        g,
        {
            composition_from_json(item["key"], g): parse_rat(item["coeff"])
            for item in data["terms"]
        },
    )


def chamber_to_json(ch: arr.AdjointChamber):
    return {
        "signs": ch.signs,
        "witness": [rat_str(c) for c in ch.witness.coords],
    }


def functional_to_json(f: fn.ChamberFunctional):
    return {
        "ground": ground_to_json(f.ground),
        "values": {k: rat_str(v) for k, v in sorted(f.values.items())},
    }


def functional_from_json(data) -> fn.ChamberFunctional:
    g = ground_from_json(data["ground"])
    return fn.ChamberFunctional(g, {k: parse_rat(v) for k, v in data["values"].items()})


def chamber_sum_to_json(e: fn.ChamberSum):
    return {
        "ground": ground_to_json(e.ground),
        "weights": {k: rat_str(v) for k, v in sorted(e.weights.items())},
    }


def chamber_sum_from_json(data) -> fn.ChamberSum:
    g = ground_from_json(data["ground"])
    return fn.ChamberSum(g, {k: parse_rat(v) for k, v in data["weights"].items()})


def functional_tensor_to_json(t: fn.FunctionalTensor):
    return {
        "left_ground": ground_to_json(t.left_ground),
        "right_ground": ground_to_json(t.right_ground),
        "values": [
            {"left": a, "right": b, "coeff": rat_str(v)}
            for (a, b), v in sorted(t.values.items())
        ],
    }


def relation_to_json(rel: fn.SteinmannRelation):
    return {
        "hyperplanes": list(rel.hyperplanes),
        "chambers": [s for s, _ in rel.entries],
        "signs": [c for _, c in rel.entries],
    }
