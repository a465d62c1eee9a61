"""Walkthrough: the dual Hopf algebras of set compositions.

Run with  python demos/01_hopf_algebra_walkthrough.py

A set composition of a finite set is an ordered tuple of disjoint non-empty
lumps covering it.  Two Hopf algebras live on them:

* a commutative one with monomial (M), shuffle-dual (P) and cone (C) bases
  where multiplication interleaves lump sequences and comultiplication
  deconcatenates, and
* its cocommutative dual with the H and Q bases, where multiplication is
  concatenation and comultiplication restricts or deshuffles.

This script multiplies, comultiplies, changes bases, applies the antipode,
and plays with the Tits product, printing everything it does.
"""

from steinmann import (
    antipode,
    basis_vector,
    change_basis,
    composition,
    comultiply,
    eulerian_series,
    ground,
    multiply,
    pairing,
    standard_ground,
    tits,
)


def show(title, value):
    print(f"  {title}: {value}")


print("== products in the five bases ==")
x1 = composition([1], [[1]])
x2 = composition([2], [[2]])
for basis in ("M", "P", "C", "H", "Q"):
    prod = multiply(basis_vector(basis, x1), basis_vector(basis, x2))
    show(f"{basis}_({{1}}) * {basis}_({{2}})", prod)

print()
print("== deconcatenation versus restriction versus deshuffling ==")
f = composition([1, 2, 3], [[1, 2], [3]])
for basis in ("M", "H", "Q"):
    x = basis_vector(basis, f)
    show(f"Delta_(12|3) {basis}_(12,3)", comultiply(x, ([1, 2], [3])))
    show(f"Delta_(13|2) {basis}_(12,3)", comultiply(x, ([1, 3], [2])))

print()
print("== antipodes (alternating sums over coarsenings/refinements) ==")
show("s(M_(1,2))", antipode(basis_vector("M", composition([1, 2], [[1], [2]]))))
show("s(H_(12))", antipode(basis_vector("H", composition([1, 2], [[1, 2]]))))

print()
print("== triangular basis changes ==")
p12 = basis_vector("P", composition([1, 2], [[1], [2]]))
show("P_(1,2) in the M basis", change_basis(p12, "M"))
h = basis_vector("H", composition([1, 2], [[1], [2]]))
show("H_(1,2) in the Q basis", change_basis(h, "Q"))

print()
print("== the pairing knows the bases are dual ==")
f12 = composition([1, 2], [[1], [2]])
f21 = composition([1, 2], [[2], [1]])
show("<M_(1,2), H_(1,2)>", pairing(basis_vector("M", f12), basis_vector("H", f12)))
show("<P_(1,2), Q_(2,1)>", pairing(basis_vector("P", f12), basis_vector("Q", f21)))

print()
print("== the Tits product refines one composition by another ==")
a = composition([1, 2, 3], [[1, 2], [3]])
b = composition([1, 2, 3], [[3], [1, 2]])
show("(12,3) . (3,12)", tits(a, b))
show("(3,12) . (12,3)", tits(b, a))

print()
print("== the first Eulerian idempotent is a primitive series ==")
g3 = standard_ground(3)
e3 = eulerian_series(g3)
show("E_3 in the H basis", e3)
for split in ((("1",), ("2", "3")), (("1", "2"), ("3",))):
    show(f"Delta_{split} E_3 vanishes", comultiply(e3, split).is_zero())
