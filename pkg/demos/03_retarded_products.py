"""Walkthrough: Dynkin elements and generalized retarded products.

Run with  python demos/03_retarded_products.py

Each chamber of the adjoint arrangement carries a primitive element of the
cocommutative Hopf algebra: read the m-functional values of the chamber
against the H basis.  In the physics reading, H-basis words are operator
products of time-ordered products and the primitive element of a chamber is
the corresponding generalized retarded product.  The same element falls out
of a folded Tits product (the Epstein-Glaser-Stora expansion), and the
four-term chamber relations are exactly the linear relations these elements
satisfy.
"""

from steinmann import (
    chamber_index,
    comultiply,
    dynkin,
    egs_expansion,
    enumerate_chambers,
    eulerian_element,
    standard_ground,
    steinmann_relations,
)
from steinmann.functionals import uniform_eulerian_search
from steinmann.hopf import zero
from steinmann.rat import rat

g3 = standard_ground(3)

print("== the primitive element of a chamber, two ways ==")
ch = chamber_index(g3)["++-"]
d = dynkin(ch)
print(f"  chamber {ch.signs} with signature {sorted(repr(tb) for tb in ch.signature())}")
print(f"  via m-functional values:   {d}")
print(f"  via folded Tits product:   {egs_expansion(ch)}")
print(f"  both agree: {d == egs_expansion(ch)}")

print()
print("== primitivity: every coproduct component vanishes ==")
for split in ((("1",), ("2", "3")), (("1", "2"), ("3",)), (("1", "3"), ("2",))):
    print(f"  Delta_{split} D = 0: {comultiply(d, split).is_zero()}")

print()
print("== the Steinmann relations are the kernel ==")
g4 = standard_ground(4)
idx = chamber_index(g4)
rel = steinmann_relations(g4)[0]
total = zero(g4, "H")
for signs, coeff in rel.entries:
    total = total + dynkin(idx[signs]).scale(coeff)
print(f"  alternating sum of the four Dynkin elements around a codim-2 face: "
      f"{'0' if total.is_zero() else total}")

print()
print("== Eulerian elements: where the expansion theorem evaluates ==")
for n in (1, 2, 3):
    e = eulerian_element(standard_ground(n))
    print(f"  n={n}: " + str({k: str(v) for k, v in sorted(e.weights.items())}))

uni = uniform_eulerian_search(g4, 24)
print(f"  n=4 admits a uniform representative on 24 of {len(enumerate_chambers(g4))} "
      f"chambers, all with weight {rat(1,24)}: {uni is not None}")
if uni is not None:
    inside = sorted(uni.weights)
    print(f"  first few of its chambers: {inside[:4]} ...")
