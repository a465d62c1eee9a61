import json
import os

import pytest

from steinmann import arrangement as arr
from steinmann import compositions as co
from steinmann import preposets as pp
from steinmann import ratgeom as rg
from steinmann.errors import ResourceBoundError


class TestHyperplanes:
    def test_count_and_orientation(self):
        for n in range(1, 6):
            g = co.standard_ground(n)
            splits = arr.hyperplane_splits(g)
            assert len(splits) == 2 ** (n - 1) - 1 if n > 0 else 0
            for tb in splits:
                assert g.min_label() in tb.S

    def test_deterministic_order(self):
        g = co.standard_ground(3)
        assert [tb.S for tb in arr.hyperplane_splits(g)] == [
            ("1",),
            ("1", "2"),
            ("1", "3"),
        ]


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 6), (4, 32)])
    def test_counts(self, n, count):
        g = co.standard_ground(n)
        assert arr.chamber_count(g) == count

    def test_witnesses_are_strict_and_consistent(self):
        g = co.standard_ground(4)
        splits = arr.hyperplane_splits(g)
        for ch in arr.enumerate_chambers(g):
            assert ch.witness.sums_to_zero()
            for s, tb in zip(ch.signs, splits):
                v = rg.pair(ch.witness, tb.weight_vector())
                assert v != 0 and (v > 0) == (s == "+")

    def test_signatures_totally_nonsymmetric(self):
        g = co.standard_ground(4)
        for ch in arr.enumerate_chambers(g):
            assert pp.classify(ch.signature())["totally_nonsymmetric"]

    def test_signature_matches_adjoint_signature_of_witness(self):
        g = co.standard_ground(3)
        for ch in arr.enumerate_chambers(g):
            assert pp.adjoint_signature(ch.witness) == ch.signature()

    def test_sorted_canonically(self):
        g = co.standard_ground(4)
        signs = [ch.signs for ch in arr.enumerate_chambers(g)]
        assert signs == sorted(signs)
        assert len(set(signs)) == len(signs)

    def test_resource_bound(self):
        with pytest.raises(ResourceBoundError):
            arr.enumerate_chambers(co.standard_ground(7))
        with pytest.raises(ResourceBoundError):
            arr.enumerate_chambers(co.standard_ground(5), max_n=4)

    def test_relabel_invariance_of_counts(self):
        assert arr.chamber_count(co.ground(["a", "b", "c", "d"])) == 32


class TestCache:
    def test_roundtrip_and_determinism(self, tmp_path):
        g = co.standard_ground(4)
        arr.clear_memo()
        first = arr.enumerate_chambers(g, cache_dir=tmp_path)
        path = arr._cache_path(tmp_path, g)
        assert path.exists()
        blob1 = path.read_bytes()
        header = json.loads(blob1.splitlines()[0])
        assert header["format"] == arr.CACHE_FORMAT and header["n"] == 4

        arr.clear_memo()
        second = arr.enumerate_chambers(g, cache_dir=tmp_path)  # read back
        assert [c.signs for c in first] == [c.signs for c in second]
        assert [c.witness.coords for c in first] == [c.witness.coords for c in second]

        os.unlink(path)
        arr.clear_memo()
        arr.enumerate_chambers(g, cache_dir=tmp_path)  # regenerate
        assert path.read_bytes() == blob1
        arr.clear_memo()

    def test_corrupt_cache_is_regenerated(self, tmp_path):
        g = co.standard_ground(4)
        arr.clear_memo()
        arr.enumerate_chambers(g, cache_dir=tmp_path)
        path = arr._cache_path(tmp_path, g)
        path.write_text('{"format": 999}\n')
        arr.clear_memo()
        chambers = arr.enumerate_chambers(g, cache_dir=tmp_path)
        assert len(chambers) == 32
        assert json.loads(path.read_text().splitlines()[0])["format"] == arr.CACHE_FORMAT
        arr.clear_memo()


class TestGenericCore:
    def test_one_dim(self):
        table = arr.enumerate_sign_chambers([(1,)], 1)
        assert set(table) == {0, 1}

    def test_line_arrangement(self):
        # three generic lines through the origin in the plane: 6 chambers
        table = arr.enumerate_sign_chambers([(1, 0), (0, 1), (1, 1)], 2)
        assert len(table) == 6

    def test_witness_signs(self):
        functionals = [(1, 0), (0, 1), (1, -1), (2, 1)]
        table = arr.enumerate_sign_chambers(functionals, 2)
        for bits, w in table.items():
            for k, f in enumerate(functionals):
                v = sum(a * b for a, b in zip(f, w))
                assert v != 0 and (v > 0) == bool((bits >> k) & 1)
