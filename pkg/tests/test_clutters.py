"""Clutters: minors, Konig/packing, extensions and incidence matrices."""

from itertools import permutations

import pytest

from clutterkit import (
    ResourceLimitExceeded,
    TRIVIAL,
    contraction,
    cover_number,
    deletion,
    edge_ideal,
    extend,
    has_koenig,
    has_packing,
    incidence_matrix,
    make_clutter,
    matching_number,
    min_vertex_covers,
    minimal_primes,
    minor,
)
from oracles import brute_cover_number, brute_matching_number, random_clutter


def paw_complement():
    # complements of the paw's edges: {3,4},{1,4},{2,4},{2,3}
    return make_clutter(4, [(3, 4), (1, 4), (2, 4), (2, 3)])


def triangle_on_234():
    return make_clutter(4, [(2, 3), (2, 4), (3, 4)])


def pentagon_clutter():
    return make_clutter(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


class TestMakeClutter:
    def test_stores_antichain_as_given(self):
        H = make_clutter(4, [(1, 2), (3, 4)])
        assert H.edge_vertex_sets() == ((1, 2), (3, 4))

    def test_normalizes_to_minimal_edges(self):
        H = make_clutter(3, [(1,), (1, 2)])
        assert H.edge_vertex_sets() == ((1,),)

    def test_triangle_with_isolated_vertex(self):
        H = triangle_on_234()
        assert H.edge_vertex_sets() == ((2, 3), (2, 4), (3, 4))
        assert H.isolated_vertices() == (1,)

    def test_rejects_empty_edge(self):
        with pytest.raises(ValueError):
            make_clutter(3, [()])

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            make_clutter(3, [(1, 4)])

    def test_deduplicates(self):
        H = make_clutter(3, [(1, 2), (2, 1)])
        assert len(H.edges) == 1


class TestEdgeIdeal:
    def test_single_edge(self):
        assert edge_ideal(make_clutter(2, [(1, 2)])).gens == ((1, 1),)

    def test_edgeless_gives_zero(self):
        assert edge_ideal(make_clutter(3, [])).is_zero

    def test_triangle(self):
        got = edge_ideal(triangle_on_234())
        assert got.gens == ((0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0))


class TestMatchingCover:
    def test_two_disjoint_edges(self):
        assert matching_number(make_clutter(4, [(1, 2), (3, 4)])) == 2

    def test_triangle_matching_one(self):
        assert matching_number(triangle_on_234()) == 1

    def test_paw_complement_matching_two(self):
        assert matching_number(paw_complement()) == 2

    def test_triangle_cover(self):
        H = triangle_on_234()
        assert cover_number(H) == 2
        assert set(min_vertex_covers(H)) == {
            frozenset({2, 3}),
            frozenset({2, 4}),
            frozenset({3, 4}),
        }

    def test_edgeless_cover_zero(self):
        assert cover_number(make_clutter(3, [])) == 0
        with pytest.raises(ValueError):
            min_vertex_covers(make_clutter(3, []))

    def test_pentagon_cover_three(self):
        assert cover_number(pentagon_clutter()) == 3

    def test_brute_force_agreement(self, rng):
        for _ in range(60):
            H = random_clutter(rng, allow_edgeless=True)
            assert matching_number(H) == brute_matching_number(H)
            assert cover_number(H) == brute_cover_number(H)

    def test_covers_equal_minimal_primes(self, rng):
        for _ in range(60):
            H = random_clutter(rng)
            assert set(min_vertex_covers(H)) == set(minimal_primes(edge_ideal(H)))

    def test_weak_duality(self, rng):
        for _ in range(120):
            H = random_clutter(rng, allow_edgeless=True)
            assert matching_number(H) <= cover_number(H)


class TestDeletionContraction:
    def test_deletion_drops_incident_edges(self):
        H = make_clutter(4, [(1, 2), (3, 4)])
        got = deletion(H, 1)
        assert got.n == 3
        assert got.edge_vertex_sets() == ((2, 3),)  # survivors 2,3,4 relabeled

    def test_deletion_of_isolated_vertex(self):
        H = triangle_on_234()
        got = deletion(H, 1)
        assert got.n == 3
        assert got.edge_vertex_sets() == ((1, 2), (1, 3), (2, 3))

    def test_deletion_from_paw_complement_gives_triangle(self):
        got = deletion(paw_complement(), 1)
        assert got.edge_vertex_sets() == ((1, 2), (1, 3), (2, 3))

    def test_contraction_reminimalizes(self):
        H = make_clutter(4, [(1, 2), (3, 4)])
        got = contraction(H, 1)
        assert got.edge_vertex_sets() == ((1,), (2, 3))

    def test_contraction_of_paw_complement(self):
        got = contraction(paw_complement(), 1)
        assert got.edge_vertex_sets() == ((1, 2), (3,))

    def test_contraction_emptying_edge_is_trivial(self):
        assert contraction(make_clutter(1, [(1,)]), 1) is TRIVIAL

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            deletion(triangle_on_234(), 5)
        with pytest.raises(ValueError):
            contraction(triangle_on_234(), 0)


class TestMinor:
    def test_identity_minor(self):
        H = paw_complement()
        assert minor(H, (), ()) == H

    def test_deletion_only(self):
        got = minor(paw_complement(), (1,), ())
        assert got.edge_vertex_sets() == ((1, 2), (1, 3), (2, 3))

    def test_trivial_propagates(self):
        H = make_clutter(3, [(1, 2), (3,)])
        assert minor(H, (), (1, 2)) is TRIVIAL

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            minor(paw_complement(), (1,), (1, 2))

    def test_order_independence(self, rng):
        # every interleaving of single-vertex operations gives the same minor
        def apply_sequence(H, ops):
            labels = list(range(1, H.n + 1))
            current = H
            for kind, v in ops:
                idx = labels.index(v) + 1
                current = (
                    deletion(current, idx) if kind == "d" else contraction(current, idx)
                )
                if current is TRIVIAL:
                    return TRIVIAL
                labels.remove(v)
            return current

        for _ in range(25):
            H = random_clutter(rng, n_max=5)
            verts = list(range(1, H.n + 1))
            rng.shuffle(verts)
            d_count = rng.randint(0, 2)
            c_count = rng.randint(0, 2)
            D = tuple(sorted(verts[:d_count]))
            C = tuple(sorted(verts[d_count:d_count + c_count]))
            expected = minor(H, D, C)
            ops = [("d", v) for v in D] + [("c", v) for v in C]
            for perm in permutations(ops):
                assert apply_sequence(H, list(perm)) == expected


class TestKoenigPacking:
    def test_edgeless_satisfies_koenig(self):
        assert has_koenig(make_clutter(3, []))

    def test_triangle_fails_koenig(self):
        assert not has_koenig(triangle_on_234())

    def test_paw_complement_satisfies_koenig(self):
        assert has_koenig(paw_complement())

    def test_trivial_minor_counts_as_koenig(self):
        assert has_koenig(TRIVIAL)

    def test_two_disjoint_edges_pack(self):
        assert has_packing(make_clutter(4, [(1, 2), (3, 4)])).packs

    def test_paw_complement_fails_with_certificate(self):
        report = has_packing(paw_complement())
        assert not report.packs
        fm = report.failing_minor
        assert (fm.deleted, fm.contracted) == ((1,), ())
        assert (fm.cover_number, fm.matching_number) == (2, 1)

    def test_pentagon_fails_at_identity(self):
        report = has_packing(pentagon_clutter())
        fm = report.failing_minor
        assert (fm.deleted, fm.contracted) == ((), ())
        assert (fm.cover_number, fm.matching_number) == (3, 2)

    def test_packing_implies_koenig(self, rng):
        for _ in range(40):
            H = random_clutter(rng, allow_edgeless=True)
            if has_packing(H).packs:
                assert has_koenig(H)

    def test_vertex_cap(self):
        H = make_clutter(13, [(1, 2), (1, 3), (2, 3)])  # fails at the identity minor
        with pytest.raises(ResourceLimitExceeded):
            has_packing(H)
        assert not has_packing(H, vertex_cap=13).packs


class TestExtend:
    def test_edgeless_stays_edgeless(self):
        got = extend(make_clutter(3, []), 2)
        assert got.n == 5 and not got.edges

    def test_adds_universal_vertices(self):
        got = extend(make_clutter(4, [(1, 2), (3, 4)]), 1)
        assert got.edge_vertex_sets() == ((1, 2, 5), (3, 4, 5))

    def test_zero_extension_is_identity(self):
        H = paw_complement()
        assert extend(H, 0) is H

    def test_uniformity_shifts(self, rng):
        for _ in range(20):
            H = random_clutter(rng)
            d = H.uniformity()
            r = rng.randint(1, 2)
            if d is None:
                assert extend(H, r).uniformity() is None
            else:
                assert extend(H, r).uniformity() == d + r

    def test_packing_preserved_on_triangle(self):
        H = triangle_on_234()
        assert not has_packing(H).packs
        assert not has_packing(extend(H, 2)).packs

    def test_packing_preserved_on_randoms(self, rng):
        for _ in range(25):
            H = random_clutter(rng, n_max=4)
            packs = has_packing(H).packs
            for r in (1, 2):
                assert has_packing(extend(H, r)).packs == packs


class TestIncidenceMatrix:
    def test_two_disjoint_edges(self):
        M = incidence_matrix(make_clutter(4, [(1, 2), (3, 4)]))
        assert M.data == ((1, 1, 0, 0), (0, 0, 1, 1))

    def test_edgeless_zero_by_two(self):
        M = incidence_matrix(make_clutter(2, []))
        assert (M.rows, M.cols, M.data) == (0, 2, ())

    def test_variable_clutter_is_identity(self):
        M = incidence_matrix(make_clutter(3, [(1,), (2,), (3,)]))
        assert M.data == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_json_roundtrip(self):
        from clutterkit import IncidenceMatrix

        M = incidence_matrix(paw_complement())
        assert IncidenceMatrix.from_json_dict(M.to_json_dict()) == M

    def test_rejects_non_binary(self):
        from clutterkit import IncidenceMatrix

        with pytest.raises(ValueError):
            IncidenceMatrix.from_rows([(0, 2)], 2)


class TestClutterJson:
    def test_wire_format(self):
        H = make_clutter(4, [(1, 2), (3, 4)])
        data = H.to_json_dict()
        assert data == {"n": 4, "edges": [[1, 2], [3, 4]]}
        from clutterkit import Clutter

        assert Clutter.from_json_dict(data) == H
