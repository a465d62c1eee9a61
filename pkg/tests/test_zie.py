import itertools
import random

import pytest

from steinmann import compositions as co
from steinmann import hopf as hp
from steinmann import zie
from steinmann.errors import DomainError
from steinmann.rat import rat


def c(labels, lumps):
    return co.composition(labels, lumps)


def proper_splits(g):
    labels = g.labels
    out = []
    for r in range(1, len(labels)):
        for s in itertools.combinations(labels, r):
            out.append((s, tuple(x for x in labels if x not in s)))
    return out


class TestTrees:
    def test_debracket_figure(self):
        t = zie.tree_from_nested([[[2, 4], [[1], [9]]], [6, 7, 8]])
        assert zie.debracket(t) == c([1, 2, 4, 6, 7, 8, 9], [[2, 4], [1], [9], [6, 7, 8]])

    def test_antisym_counts(self):
        three_leaf = zie.tree_from_nested([[[1], [2]], [3]])
        assert len(zie.antisym(three_leaf)) == 4
        assert zie.antisym(zie.leaf([1])) == [(zie.leaf([1]), 1)]

    def test_rejects_overlapping_leaves(self):
        with pytest.raises(DomainError):
            zie.node(zie.leaf([1, 2]), zie.leaf([2]))

    def test_no_trees_on_empty_set(self):
        with pytest.raises(DomainError):
            zie.comb_tree(c([], []))


class TestReduce:
    def test_examples(self):
        assert zie.reduce_tree(zie.tree_from_nested([[1], [2]])).terms == {
            c([1, 2], [[1], [2]]): rat(1)
        }
        assert zie.reduce_tree(zie.tree_from_nested([[2], [1]])).terms == {
            c([1, 2], [[1], [2]]): rat(-1)
        }
        assert zie.reduce_tree(zie.tree_from_nested([[1], [[2], [3]]])).terms == {
            c([1, 2, 3], [[1], [2], [3]]): rat(1),
            c([1, 2, 3], [[1], [3], [2]]): rat(-1),
        }

    def test_reduce_respects_p_eval(self):
        # the comb coordinates of a tree are exactly its p-functional values
        rnd = random.Random(21)
        g = co.ground([1, 2, 3, 4])
        trees = [
            zie.tree_from_nested([[[1], [3]], [[2], [4]]]),
            zie.tree_from_nested([[[4], [[2], [1]]], [3]]),
            zie.tree_from_nested([[2, 3], [[4], [1]]]),
            zie.tree_from_nested([[1, 2], [3, 4]]),
        ]
        for t in trees:
            reduced = zie.reduce_tree(t)
            for key in zie.based_keys(t.ground()):
                assert reduced.terms.get(key, rat(0)) == zie.p_eval(key, t)

    def test_dimension_counts(self):
        assert [zie.zie_dimension(n) for n in range(5)] == [1, 1, 2, 6, 26]
        for n in range(5):
            g = co.standard_ground(n)
            assert len(zie.based_keys(g)) == zie.zie_dimension(n)


class TestEmbed:
    def test_examples(self):
        z = zie.ZieElement(co.ground([1, 2]), {c([1, 2], [[1], [2]]): rat(1)})
        assert zie.embed_U(z).terms == {
            c([1, 2], [[1], [2]]): rat(1),
            c([1, 2], [[2], [1]]): rat(-1),
        }
        zl = zie.ZieElement(co.ground([1, 2]), {c([1, 2], [[1, 2]]): rat(1)})
        assert zie.embed_U(zl).terms == {c([1, 2], [[1, 2]]): rat(1)}

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_images_are_primitive(self, n):
        g = co.standard_ground(n)
        for key in zie.based_keys(g):
            q = zie.embed_U(zie.ZieElement(g, {key: rat(1)}))
            for split in proper_splits(g):
                assert hp.comultiply(q, split).is_zero()


class TestProject:
    def test_examples(self):
        g = co.ground([1, 2])
        assert zie.project_Ustar(hp.basis_vector("P", c([1, 2], [[1], [2]]))).terms == {
            c([1, 2], [[1], [2]]): rat(1)
        }
        assert zie.project_Ustar(hp.basis_vector("P", c([1, 2], [[2], [1]]))).terms == {
            c([1, 2], [[1], [2]]): rat(-1)
        }

    def test_kills_products(self):
        rnd = random.Random(23)
        for cut in (1, 2):
            left = list(range(1, cut + 1))
            right = list(range(cut + 1, 4))
            fl = rnd.choice(co.enumerate_compositions(co.ground(left)))
            fr = rnd.choice(co.enumerate_compositions(co.ground(right)))
            prod = hp.multiply(hp.basis_vector("M", fl), hp.basis_vector("M", fr))
            assert zie.project_Ustar(prod).is_zero()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_generating_relations_vanish(self, n):
        # quasishuffle (m), shuffle (p) and signed quasishuffle (c) relations
        g = co.standard_ground(n)
        labels = g.labels
        rnd = random.Random(n)
        cases = []
        for s, t in proper_splits(g):
            fs = co.enumerate_compositions(g.subset(s))
            ft = co.enumerate_compositions(g.subset(t))
            cases.extend((a, b) for a in fs for b in ft)
        if len(cases) > 30:
            cases = rnd.sample(cases, 30)
        for a, b in cases:
            for basis in ("M", "P", "C"):
                prod = hp.multiply(hp.basis_vector(basis, a), hp.basis_vector(basis, b))
                assert zie.project_Ustar(prod).is_zero(), (a, b, basis)

    def test_duality_with_embedding(self):
        rnd = random.Random(29)
        g = co.standard_ground(3)
        comps = co.enumerate_compositions(g)
        for _ in range(10):
            x = hp.BasisElement(
                g, "M", {k: rat(rnd.randint(-3, 3)) for k in rnd.sample(comps, 5)}
            )
            for key in zie.based_keys(g):
                z = zie.ZieElement(g, {key: rat(1)})
                assert zie.dual_pairing(zie.project_Ustar(x), z) == hp.pairing(
                    x, zie.embed_U(z)
                )


class TestBracket:
    def test_leaf_bracket(self):
        za = zie.ZieElement(co.ground([1]), {c([1], [[1]]): rat(1)})
        zb = zie.ZieElement(co.ground([2]), {c([2], [[2]]): rat(1)})
        assert zie.bracket(za, zb).terms == {c([1, 2], [[1], [2]]): rat(1)}

    def test_antisymmetry(self):
        rnd = random.Random(31)
        za = zie.ZieElement(
            co.ground([1, 4]),
            {k: rat(rnd.randint(-2, 2)) for k in zie.based_keys(co.ground([1, 4]))},
        )
        zb = zie.ZieElement(
            co.ground([2, 3]),
            {k: rat(rnd.randint(-2, 2)) for k in zie.based_keys(co.ground([2, 3]))},
        )
        assert zie.bracket(za, zb) == zie.bracket(zb, za).scale(-1)

    def test_commutator_identity(self):
        for lumps_a, lumps_b in (
            ([[1]], [[2], [3]]),
            ([[1], [2]], [[3]]),
            ([[1, 2]], [[3], [4]]),
        ):
            ground_a = co.ground([x for l in lumps_a for x in l])
            ground_b = co.ground([x for l in lumps_b for x in l])
            za = zie.ZieElement(ground_a, {co.composition(ground_a, lumps_a): rat(1)})
            zb = zie.ZieElement(ground_b, {co.composition(ground_b, lumps_b): rat(1)})
            ua, ub = zie.embed_U(za), zie.embed_U(zb)
            comm = hp.multiply(ua, ub) - hp.multiply(ub, ua)
            assert zie.embed_U(zie.bracket(za, zb)) == comm

    def test_jacobi(self):
        za = zie.ZieElement(co.ground([1]), {c([1], [[1]]): rat(1)})
        zb = zie.ZieElement(co.ground([2]), {c([2], [[2]]): rat(1)})
        zc = zie.ZieElement(co.ground([3, 4]), {c([3, 4], [[3, 4]]): rat(1)})
        total = (
            zie.bracket(za, zie.bracket(zb, zc))
            + zie.bracket(zb, zie.bracket(zc, za))
            + zie.bracket(zc, zie.bracket(za, zb))
        )
        assert total.is_zero()


class TestPEval:
    def test_examples(self):
        f = c([1, 2], [[1], [2]])
        assert zie.p_eval(f, zie.comb_tree(f)) == 1
        g = c([1, 2], [[1, 2]])
        assert zie.p_eval(f, zie.comb_tree(g)) == 0
        assert zie.p_eval(f, zie.tree_from_nested([[2], [1]])) == -1

    def test_dual_to_combs(self):
        g = co.standard_ground(3)
        keys = zie.based_keys(g)
        for f in keys:
            for k in keys:
                assert zie.p_eval(f, zie.comb_tree(k)) == (1 if f == k else 0)


class TestCobracket:
    def test_examples(self):
        g = co.ground([1, 2])
        d = zie.ZieDualElement(g, "p", {c([1, 2], [[1], [2]]): rat(1)})
        assert zie.cobracket(d, ([1], [2])) == {
            (c([1], [[1]]), c([2], [[2]])): rat(1)
        }
        g3 = co.ground([1, 2, 3])
        dI = zie.ZieDualElement(g3, "p", {c([1, 2, 3], [[1, 2, 3]]): rat(1)})
        assert zie.cobracket(dI, ([1], [2, 3])) == {}

    def test_co_antisymmetry(self):
        rnd = random.Random(37)
        g = co.standard_ground(4)
        d = zie.ZieDualElement(
            g, "p", {k: rat(rnd.randint(-2, 2)) for k in zie.based_keys(g)}
        )
        for s, t in proper_splits(g):
            fwd = zie.cobracket(d, (s, t))
            bwd = zie.cobracket(d, (t, s))
            flipped = {(b, a): -v for (a, b), v in bwd.items()}
            assert fwd == flipped

    def test_co_jacobi(self):
        rnd = random.Random(41)
        g = co.standard_ground(4)
        labels = g.labels
        d = zie.ZieDualElement(
            g, "p", {k: rat(rnd.randint(-2, 2)) for k in zie.based_keys(g)}
        )

        def iterated(d_elem, part):
            """(cobracket at (A u B, C)) then cobracket of the left leg at (A, B),
            flattened to keys (a, b, c)."""
            a_l, b_l, c_l = part
            out = {}
            first = zie.cobracket(d_elem, (a_l + b_l, c_l))
            for (kl, kr), v in first.items():
                inner = zie.cobracket(
                    zie.ZieDualElement(kl.ground, "p", {kl: rat(1)}), (a_l, b_l)
                )
                for (k1, k2), v2 in inner.items():
                    key = (k1, k2, kr)
                    out[key] = out.get(key, rat(0)) + v * v2
            return {k: v for k, v in out.items() if v != 0}

        for assign in itertools.product(range(3), repeat=4):
            if len(set(assign)) != 3:
                continue
            part = tuple(
                tuple(l for l, a in zip(labels, assign) if a == j) for j in range(3)
            )
            a_l, b_l, c_l = part
            total = {}
            for rotated in (
                (a_l, b_l, c_l),
                (b_l, c_l, a_l),
                (c_l, a_l, b_l),
            ):
                contrib = iterated(d, rotated)
                for (k1, k2, k3), v in contrib.items():
                    slots = {k1.ground.labels: k1, k2.ground.labels: k2, k3.ground.labels: k3}
                    key = (slots[tuple(sorted(a_l))], slots[tuple(sorted(b_l))], slots[tuple(sorted(c_l))])
                    total[key] = total.get(key, rat(0)) + v
            assert all(v == 0 for v in total.values()), part

    def test_bracket_cobracket_duality(self):
        # <cobracket(d), z1 x z2> = <d, bracket(z1, z2)>
        rnd = random.Random(43)
        left = co.ground([1, 3])
        right = co.ground([2, 5])
        g = co.ground([1, 2, 3, 5])
        d = zie.ZieDualElement(
            g, "p", {k: rat(rnd.randint(-2, 2)) for k in zie.based_keys(g)}
        )
        for k1 in zie.based_keys(left):
            for k2 in zie.based_keys(right):
                z1 = zie.ZieElement(left, {k1: rat(1)})
                z2 = zie.ZieElement(right, {k2: rat(1)})
                lhs = zie.cobracket(d, (left.labels, right.labels)).get((k1, k2), rat(0))
                rhs = zie.dual_pairing(d, zie.bracket(z1, z2))
                assert lhs == rhs, (k1, k2)


class TestDualBases:
    def test_roundtrips(self):
        rnd = random.Random(47)
        g = co.standard_ground(3)
        d = zie.ZieDualElement(
            g, "m", {k: rat(rnd.randint(-3, 3)) for k in zie.based_keys(g)}
        )
        assert zie.dual_change_basis(zie.dual_change_basis(d, "p"), "m") == d
        assert zie.dual_change_basis(zie.dual_change_basis(d, "c"), "m") == d

    def test_shuffle_relation_rebasing(self):
        # p_(2,1) = -p_(1,2) over {1,2}: the shuffle relation in coordinates
        x = hp.basis_vector("P", c([1, 2], [[2], [1]]))
        assert zie.project_Ustar(x).terms == {c([1, 2], [[1], [2]]): rat(-1)}
