"""Walkthrough: the adjoint braid arrangement and Steinmann functionals.

Run with  python demos/02_chambers_and_steinmann.py

The adjoint braid (resonance) arrangement over a ground set lives in the
sum-zero space and has one hyperplane per unordered split.  Its chambers are
indexed by maximal unbalanced families; linear functionals on chambers that
satisfy the four-term Steinmann relations are exactly the span of
characteristic functionals of (generalized) permutohedral tangent cones, and
they form a Lie coalgebra under discrete differentiation across hyperplanes.
"""

from steinmann import (
    c_functional,
    chamber_index,
    comb_coefficients,
    composition,
    derivative,
    enumerate_chambers,
    enumerate_compositions,
    eulerian_element,
    hyperplane_splits,
    is_steinmann,
    preposet_of,
    reconstruct,
    standard_ground,
    stein_quotient_dim,
    steinmann_basis_coords,
    steinmann_relations,
)
from steinmann.functionals import ChamberFunctional
from steinmann.rat import rat
from steinmann.zie import based_keys, zie_dimension

g4 = standard_ground(4)

print("== chambers of the adjoint arrangement ==")
for n in (2, 3, 4, 5):
    print(f"  n={n}: {len(enumerate_chambers(standard_ground(n)))} chambers")
print(f"  hyperplanes at n=4 (min-containing sides): {[tb.S for tb in hyperplane_splits(g4)]}")
ch = enumerate_chambers(g4)[0]
print(f"  a chamber: signs {ch.signs}, witness "
      + str(tuple(str(c) for c in ch.witness.coords)))

print()
print("== four-term Steinmann relations ==")
rels = steinmann_relations(g4)
print(f"  n=4 has {len(rels)} relations; the first one:")
rel = rels[0]
for signs, coeff in rel.entries:
    print(f"    {'+' if coeff > 0 else '-'} f({signs})")
print(f"  quotient dimension: {stein_quotient_dim(g4)} = {zie_dimension(4)} (the Lie piece)")

print()
print("== cone functionals satisfy the relations ==")
f_comp = composition(g4, [["1", "3"], ["2"], ["4"]])
cf = c_functional(preposet_of(f_comp))
print(f"  c functional of {f_comp} is Steinmann: {is_steinmann(cf)}")
coords = steinmann_basis_coords(cf)
nonzero = {k: v for k, v in coords.items() if v != 0}
print("  its coordinates over the based cone functionals: "
      + str({repr(k): str(v) for k, v in nonzero.items()}))

print()
print("== a non-example: the indicator of a relation chamber ==")
touched = rel.entries[0][0]
indicator = ChamberFunctional(g4, {touched: rat(1)})
print(f"  indicator of chamber {touched} is Steinmann: {is_steinmann(indicator)}")

print()
print("== discrete derivative across a hyperplane ==")
g3 = standard_ground(3)
f3 = c_functional(preposet_of(composition(g3, [["1"], ["2"], ["3"]])))
tensor = derivative(f3, (("1",), ("2", "3")))
print("  derivative of the (1,2,3) cone functional at the 1|23 hyperplane:")
for (a, b), v in sorted(tensor.values.items()):
    print(f"    ({a!r}, {b!r}) -> {v}")

print()
print("== Taylor-style reconstruction from Eulerian evaluations ==")
e3 = eulerian_element(g3)
print(f"  Eulerian element at n=3: "
      + str({k: str(v) for k, v in sorted(e3.weights.items())}))
target = ChamberFunctional(
    g3, {c.signs: rat(i - 2, 3) for i, c in enumerate(enumerate_chambers(g3))}
)
coeffs = comb_coefficients(target)
print("  expansion coefficients of a random-looking Steinmann functional:")
for key in based_keys(g3):
    print(f"    {key}: {coeffs[key]}")
print(f"  reconstruct(coefficients) == original: {reconstruct(g3, coeffs) == target}")
print(f"  (n=3 relations are empty, so every functional there is Steinmann: "
      f"{len(steinmann_relations(g3))} relations, "
      f"{len(enumerate_compositions(g3))} compositions)")
