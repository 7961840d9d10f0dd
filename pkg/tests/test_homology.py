"""Homology engine tests: ranks against Fraction Gaussian elimination,
homology against known spaces, and the collapse preprocessor against a
no-collapse baseline."""

import itertools
import random
from fractions import Fraction

import pytest

from edgeideals.homology import (
    SimplicialComplex,
    _collapse,
    boundary_rank,
    closure_of_facets,
    faces_from_nonfaces,
    matrix_rank_exact,
    rational_homology,
    reduced_homology_ranks,
)


def mask(verts):
    return sum(1 << v for v in verts)


def closure_masks(facets):
    """All nonempty faces (as bitmasks) of the complex with these facets."""
    faces = set()
    for f in facets:
        for r in range(1, len(f) + 1):
            faces.update(mask(c) for c in itertools.combinations(f, r))
    return faces


def fraction_rank(rows):
    """Plain dense Gaussian elimination over Q as an independent oracle.

    `rows` is the same sparse {column: value} format matrix_rank_exact takes.
    """
    cols = sorted({c for r in rows for c in r})
    cindex = {c: i for i, c in enumerate(cols)}
    mat = [
        [Fraction(r.get(c, 0)) for c in cols]
        for r in rows
    ]
    rank = 0
    for col in range(len(cols)):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def ranks_without_collapse(faces):
    """Reduced homology by raw boundary ranks, bypassing _collapse."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    if not by_dim:
        return {-1: 1}
    top = max(by_dim)
    counts = {d: len(fs) for d, fs in by_dim.items()}
    ranks = {0: 1}  # augmentation onto the empty face
    for d in range(1, top + 1):
        ranks[d] = boundary_rank(
            sorted(by_dim.get(d - 1, [])), sorted(by_dim.get(d, []))
        )
    hom = {}
    for d in range(0, top + 1):
        h = counts.get(d, 0) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            hom[d] = h
    return hom


def boundary_sphere(k):
    """Facets of the boundary of a (k+1)-simplex: a k-sphere on k+2 verts."""
    return list(itertools.combinations(range(k + 2), k + 1))


def random_face_set(rng, nmax=7):
    n = rng.randint(2, nmax)
    facets = [
        tuple(rng.sample(range(n), rng.randint(1, min(4, n))))
        for _ in range(rng.randint(1, 7))
    ]
    return closure_masks(facets)


class TestExactRank:
    def test_against_fraction_oracle(self):
        rng = random.Random(5)
        for _ in range(80):
            rows = [
                {
                    c: rng.randint(-3, 3)
                    for c in rng.sample(range(6), rng.randint(0, 6))
                    if rng.random() < 0.8
                }
                for _ in range(rng.randint(0, 6))
            ]
            rows = [{c: v for c, v in r.items() if v} for r in rows]
            assert matrix_rank_exact(
                [dict(r) for r in rows]
            ) == fraction_rank(rows)

    def test_large_entries_exact(self):
        # Entries that would alias under floating point.
        rows = [{0: 10**20, 1: 1}, {0: 10**20, 1: 1}]
        assert matrix_rank_exact(rows) == 1
        rows = [{0: 10**20, 1: 1}, {0: 10**20 + 1, 1: 1}]
        assert matrix_rank_exact(rows) == 2


class TestHomologyAnchors:
    def test_point_is_acyclic(self):
        assert reduced_homology_ranks(closure_masks([(0,)])) == {}

    def test_simplex_is_acyclic(self):
        assert reduced_homology_ranks(closure_masks([(0, 1, 2, 3)])) == {}

    def test_two_points(self):
        assert reduced_homology_ranks({1, 2}) == {0: 1}

    def test_circle(self):
        faces = closure_masks([(0, 1), (1, 2), (0, 2)])
        assert reduced_homology_ranks(faces) == {1: 1}

    def test_spheres(self):
        for k in (1, 2, 3):
            faces = closure_masks(boundary_sphere(k))
            assert reduced_homology_ranks(faces) == {k: 1}

    def test_empty_face_only(self):
        assert reduced_homology_ranks(set()) == {-1: 1}

    def test_void_complex(self):
        assert reduced_homology_ranks(set(), has_empty_face=False) == {}
        with pytest.raises(ValueError):
            reduced_homology_ranks({1}, has_empty_face=False)

    def test_torus(self):
        # Moebius-Kantor 7-vertex triangulation: triangles {i, i+1, i+3}
        # and {i, i+2, i+3} mod 7.
        facets = [
            tuple(sorted(((i + a) % 7 for a in tri)))
            for i in range(7)
            for tri in ((0, 1, 3), (0, 2, 3))
        ]
        faces = closure_masks(facets)
        counts = {}
        for f in faces:
            counts[bin(f).count("1")] = counts.get(bin(f).count("1"), 0) + 1
        assert counts == {1: 7, 2: 21, 3: 14}  # chi = 0
        assert reduced_homology_ranks(faces) == {1: 2, 2: 1}

    def test_rational_homology_wrapper(self):
        K = SimplicialComplex.from_facets([("a", "b"), ("b", "c"), ("a", "c")])
        assert rational_homology(K) == {1: 1}
        assert rational_homology(SimplicialComplex.void()) == {}

    def test_euler_characteristic_matches_homology(self):
        rng = random.Random(10)
        for _ in range(30):
            faces = random_face_set(rng, nmax=6)
            verts = sorted(
                {v for f in faces for v in range(8) if f >> v & 1}
            )
            K = SimplicialComplex(
                [[v for v in verts if f >> v & 1] for f in faces] + [[]]
            )
            hom = rational_homology(K)
            chi = sum((-1) ** d * r for d, r in hom.items())
            assert chi == K.euler_characteristic_reduced()


class TestCollapse:
    def test_collapse_preserves_homology(self):
        rng = random.Random(7)
        for _ in range(80):
            faces = random_face_set(rng)
            collapsed, empty_left = _collapse(faces)
            baseline = ranks_without_collapse(faces)
            if not empty_left:
                assert baseline == {}
            else:
                assert ranks_without_collapse(collapsed) == baseline

    def test_collapsed_set_is_a_complex(self):
        rng = random.Random(8)
        for _ in range(40):
            faces = random_face_set(rng)
            collapsed, _ = _collapse(faces)
            cset = set(collapsed)
            for f in cset:
                rem = f
                while rem:
                    bit = rem & -rem
                    sub = f ^ bit
                    assert sub == 0 or sub in cset
                    rem ^= bit

    def test_collapse_reduces_simplex_to_nothing(self):
        collapsed, empty_left = _collapse(closure_masks([(0, 1, 2, 3, 4)]))
        assert not empty_left and not collapsed


class TestComplexFromNonfaces:
    def test_against_bruteforce(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(1, 6)
            nonfaces = frozenset(
                mask(rng.sample(range(n), rng.randint(1, n)))
                for _ in range(rng.randint(0, 4))
            )
            got = set(faces_from_nonfaces(n, nonfaces))
            expected = {
                m
                for m in range(1, 1 << n)
                if not any(nf & m == nf for nf in nonfaces)
            }
            assert got == expected

    def test_cap_raises(self):
        with pytest.raises(OverflowError):
            faces_from_nonfaces(10, frozenset(), cap=5)

    def test_closure_of_facets(self):
        got = set(closure_of_facets([mask((0, 1, 2))]))
        assert got == closure_masks([(0, 1, 2)])


class TestSimplicialComplexValidation:
    def test_from_facets_closure(self):
        K = SimplicialComplex.from_facets([(0, 1), (1, 2)])
        assert frozenset({1}) in K.faces

    def test_rejects_non_closed(self):
        with pytest.raises(ValueError):
            SimplicialComplex([(0, 1)])
