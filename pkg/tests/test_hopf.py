import itertools
import random

import pytest

from steinmann import compositions as co
from steinmann import hopf as hp
from steinmann import preposets as pp
from steinmann.errors import DomainError, GroundMismatchError
from steinmann.rat import rat


def c(labels, lumps):
    return co.composition(labels, lumps)


def mv(labels, lumps, basis="M"):
    return hp.basis_vector(basis, c(labels, lumps))


def order_theoretic_quasishuffles(f, g, length_preserving=False):
    """Oracle straight from the definition: compositions H of the union whose
    preposet refines the disjoint-union preposet while keeping all of its
    nonsymmetric pairs nonsymmetric (and the lump count, for shuffles)."""
    union = co.ground(f.ground.labels + g.ground.labels)
    pf, pg = pp.preposet_of(f), pp.preposet_of(g)
    pairs = list(pf.pairs()) + list(pg.pairs())
    disjoint = pp.transitive_closure(union, pairs)
    out = []
    for h in co.enumerate_compositions(union):
        q = pp.preposet_of(h)
        if not pp.preceq(q, disjoint):
            continue
        if length_preserving and len(h) != len(f) + len(g):
            continue
        out.append(h)
    return out


class TestProducts:
    def test_m_product_example(self):
        result = hp.multiply(mv([1], [[1]]), mv([2], [[2]]))
        assert result.terms == {
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[2], [1]]): rat(1),
            c([1, 2], [[1, 2]]): rat(1),
        }

    def test_p_product_example(self):
        result = hp.multiply(mv([1], [[1]], "P"), mv([2], [[2]], "P"))
        assert result.terms == {
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[2], [1]]): rat(1),
        }

    def test_c_product_example(self):
        result = hp.multiply(mv([1], [[1]], "C"), mv([2], [[2]], "C"))
        assert result.terms == {
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[2], [1]]): rat(1),
            c([1, 2], [[1, 2]]): rat(-1),
        }

    def test_h_q_products_are_concatenation(self):
        for basis in ("H", "Q"):
            result = hp.multiply(mv([1, 2], [[2], [1]], basis), mv([3], [[3]], basis))
            assert result.terms == {c([1, 2, 3], [[2], [1], [3]]): rat(1)}

    def test_quasishuffle_matches_order_definition(self):
        rnd = random.Random(1)
        for _ in range(12):
            cut = rnd.randint(1, 4)
            left = list(range(1, cut + 1))
            right = list(range(cut + 1, 6))
            if not right:
                continue
            f = rnd.choice(co.enumerate_compositions(co.ground(left)))
            g = rnd.choice(co.enumerate_compositions(co.ground(right)))
            assert sorted(x.lumps for x in hp.quasishuffles(f, g)) == sorted(
                x.lumps for x in order_theoretic_quasishuffles(f, g)
            )
            assert sorted(x.lumps for x in hp.shuffles(f, g)) == sorted(
                x.lumps for x in order_theoretic_quasishuffles(f, g, length_preserving=True)
            )

    def test_rejects_ground_overlap(self):
        with pytest.raises(GroundMismatchError):
            hp.multiply(mv([1], [[1]]), mv([1], [[1]]))

    def test_rejects_mixed_bases(self):
        with pytest.raises(DomainError):
            hp.multiply(mv([1], [[1]], "M"), mv([2], [[2]], "H"))


class TestCoproducts:
    def test_m_deconcatenation(self):
        x = mv([1, 2, 3], [[1, 2], [3]])
        t = hp.comultiply(x, ([1, 2], [3]))
        assert t.terms == {(c([1, 2], [[1, 2]]), c([3], [[3]])): rat(1)}
        assert hp.comultiply(x, ([1, 3], [2])).is_zero()

    def test_h_restriction_never_vanishes(self):
        t = hp.comultiply(mv([1, 2], [[2], [1]], "H"), ([1], [2]))
        assert t.terms == {(c([1], [[1]]), c([2], [[2]])): rat(1)}

    def test_q_deshuffle(self):
        x = mv([1, 2, 3], [[2], [1, 3]], "Q")
        t = hp.comultiply(x, ([2], [1, 3]))
        assert t.terms == {(c([2], [[2]]), c([1, 3], [[1, 3]])): rat(1)}
        assert hp.comultiply(x, ([1, 2], [3])).is_zero()

    def test_empty_side(self):
        x = mv([1, 2], [[1], [2]])
        t = hp.comultiply(x, ((), (1, 2)))
        assert t.terms == {(c([], []), c([1, 2], [[1], [2]])): rat(1)}


class TestAntipode:
    def test_m_example(self):
        s = hp.antipode(mv([1, 2], [[1], [2]]))
        assert s.terms == {c([1, 2], [[2], [1]]): rat(1), c([1, 2], [[1, 2]]): rat(1)}

    def test_h_example(self):
        s = hp.antipode(mv([1, 2], [[1, 2]], "H"))
        assert s.terms == {
            c([1, 2], [[1, 2]]): rat(-1),
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[2], [1]]): rat(1),
        }

    def test_unit(self):
        for basis in hp.BASES:
            u = hp.unit(basis)
            assert hp.antipode(u) == u

    @pytest.mark.parametrize("basis", hp.BASES)
    def test_involution(self, basis):
        rnd = random.Random(10)
        g = co.standard_ground(3)
        comps = co.enumerate_compositions(g)
        x = hp.BasisElement(g, basis, {k: rat(rnd.randint(-3, 3)) for k in comps})
        assert hp.antipode(hp.antipode(x)) == x


class TestPairing:
    def test_duality(self):
        f = c([1, 2], [[1], [2]])
        g2 = c([1, 2], [[2], [1]])
        assert hp.pairing(mv([1, 2], [[1], [2]]), mv([1, 2], [[1], [2]], "H")) == 1
        assert hp.pairing(hp.basis_vector("P", f), hp.basis_vector("Q", f)) == 1
        assert hp.pairing(hp.basis_vector("P", f), hp.basis_vector("Q", g2)) == 0

    def test_sides_enforced(self):
        with pytest.raises(DomainError):
            hp.pairing(mv([1], [[1]]), mv([1], [[1]], "P"))


class TestChangeBasis:
    def test_p_to_m_example(self):
        x = hp.change_basis(mv([1, 2], [[1], [2]], "P"), "M")
        assert x.terms == {
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[1, 2]]): rat(1, 2),
        }

    def test_c_to_m_example(self):
        x = hp.change_basis(mv([1, 2], [[1], [2]], "C"), "M")
        assert x.terms == {c([1, 2], [[1], [2]]): rat(1), c([1, 2], [[1, 2]]): rat(1)}

    @pytest.mark.parametrize("src,dst", [("M", "P"), ("M", "C"), ("P", "C"), ("H", "Q")])
    def test_round_trips_on_basis_vectors(self, src, dst):
        g = co.standard_ground(4)
        for key in co.enumerate_compositions(g):
            x = hp.basis_vector(src, key)
            assert hp.change_basis(hp.change_basis(x, dst), src) == x

    def test_cross_algebra_rejected(self):
        with pytest.raises(DomainError):
            hp.change_basis(mv([1], [[1]]), "H")


class TestConeElements:
    def test_expansion_of_composition_preposet(self):
        f = c([1, 2, 3], [[1, 2], [3]])
        expansion = hp.preposet_expansion(pp.preposet_of(f))
        assert expansion == {f: rat(1)}

    def test_empty_preposet_expansion(self):
        g = co.ground([1, 2])
        ce = hp.normalize_c_keys(hp.cone_element(pp.transitive_closure(g, [])))
        assert ce.terms == {
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[2], [1]]): rat(1),
            c([1, 2], [[1, 2]]): rat(-1),
        }
        # cross-check: in the M basis this is the sum over all compositions
        m = hp.change_basis(ce, "M")
        assert m.terms == {k: rat(1) for k in co.enumerate_compositions(g)}

    def test_homomorphism_on_disjoint_unions(self):
        rnd = random.Random(12)
        left = co.ground([1, 2])
        right = co.ground([3])
        for _ in range(8):
            pairs_l = [tuple(rnd.sample([1, 2], 2)) for _ in range(rnd.randint(0, 2))]
            p = pp.transitive_closure(left, pairs_l)
            q = pp.transitive_closure(right, [])
            prod = hp.multiply(
                hp.normalize_c_keys(hp.cone_element(p)),
                hp.normalize_c_keys(hp.cone_element(q)),
            )
            disjoint = pp.transitive_closure(
                co.ground([1, 2, 3]), list(p.pairs()) + list(q.pairs())
            )
            expected = hp.normalize_c_keys(hp.cone_element(disjoint))
            assert hp.change_basis(prod, "M") == hp.change_basis(expected, "M")


class TestTits:
    def test_unit_and_idempotence(self):
        g3 = co.standard_ground(3)
        one = c(["1", "2", "3"], [["1", "2", "3"]])
        for f in co.enumerate_compositions(g3):
            assert hp.tits(one, f) == f
            assert hp.tits(f, one) == f
            assert hp.tits(f, f) == f

    def test_example(self):
        f = c([1, 2, 3], [[1, 2], [3]])
        g = c([1, 2, 3], [[3], [1, 2]])
        assert hp.tits(f, g) == f

    def test_associativity(self):
        comps = co.enumerate_compositions(co.standard_ground(3))
        for f, g, h in itertools.product(comps, repeat=3):
            assert hp.tits(hp.tits(f, g), h) == hp.tits(f, hp.tits(g, h))

    def test_tits_h_bilinear(self):
        g = co.standard_ground(2)
        comps = co.enumerate_compositions(g)
        a = hp.BasisElement(g, "H", {comps[0]: rat(2), comps[1]: rat(-1)})
        b = hp.basis_vector("H", comps[2])
        result = hp.tits_h(a, b)
        expected = {}
        for k, v in a.terms.items():
            key = hp.tits(k, comps[2])
            expected[key] = expected.get(key, rat(0)) + v
        assert result.terms == {k: v for k, v in expected.items() if v != 0}


class TestEulerianSeries:
    def test_small_values(self):
        assert hp.eulerian_series(co.ground([1])).terms == {c([1], [[1]]): rat(1)}
        e2 = hp.eulerian_series(co.ground([1, 2]))
        assert e2.terms == {
            c([1, 2], [[1, 2]]): rat(1),
            c([1, 2], [[1], [2]]): rat(-1, 2),
            c([1, 2], [[2], [1]]): rat(-1, 2),
        }
        assert hp.eulerian_series(co.ground([])).is_zero()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_primitive(self, n):
        g = co.standard_ground(n)
        e = hp.eulerian_series(g)
        labels = g.labels
        for r in range(1, n):
            for s in itertools.combinations(labels, r):
                t = tuple(x for x in labels if x not in s)
                assert hp.comultiply(e, (s, t)).is_zero()


class TestEquivariance:
    def test_operations_commute_with_relabel(self):
        rnd = random.Random(17)
        g = co.ground([1, 2, 3])
        mapping = dict(zip(["x", "y", "z"], g.labels))
        comps = co.enumerate_compositions(g)
        for basis in hp.BASES:
            x = hp.BasisElement(
                g, basis, {k: rat(rnd.randint(-2, 2)) for k in rnd.sample(comps, 4)}
            )
            rx = co.relabel(x, mapping)
            assert co.relabel(hp.antipode(x), mapping) == hp.antipode(rx)
            target = "P" if basis in ("M", "P", "C") else "Q"
            assert co.relabel(hp.change_basis(x, target), mapping) == hp.change_basis(
                rx, target
            )
