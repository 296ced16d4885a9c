"""Root systems, weight diagrams, slicing, projection, embedding checks."""

import math
from fractions import Fraction

import pytest

from e6kit.rootweight import (cartan_matrix, diagram, embed_check,
                              fundamental_weights, inverse_cartan,
                              middle_slice, orthogonal_direction, project,
                              reflect, root_system, simple_roots,
                              slice_diagram, weights_from_highest)

ROOT_COUNTS = [("A2", 6), ("B2", 8), ("C2", 8), ("G2", 12), ("A3", 12),
               ("D3", 12), ("B3", 18), ("C3", 18), ("F4", 48), ("E6", 72)]


def close(a, b, tol=1e-9):
    return max(abs(x - y) for x, y in zip(a, b)) < tol


def test_b3_cartan_and_inverse():
    d = diagram("B3")
    assert cartan_matrix(d) == [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]
    assert inverse_cartan(d) == [
        [Fraction(1), Fraction(1), Fraction(1, 2)],
        [Fraction(1), Fraction(2), Fraction(1)],
        [Fraction(1), Fraction(2), Fraction(3, 2)],
    ]


def test_c_family_long_node_first():
    # first simple root long: its row carries the -1, the short row the -2
    assert cartan_matrix(diagram("C3")) == [[2, -1, 0], [-2, 2, -1],
                                            [0, -1, 2]]


def test_b3_vector_representation_marks():
    wd = weights_from_highest(diagram("B3"), [1, 0, 0])
    marks = {w.mark for w in wd.weights}
    assert len(wd.weights) == 7
    assert marks == {(1, 0, 0), (-1, 1, 0), (0, -1, 2), (0, 0, 0),
                     (0, 1, -2), (1, -1, 0), (-1, 0, 0)}


@pytest.mark.parametrize("name,count", ROOT_COUNTS)
def test_root_counts(name, count):
    assert len(root_system(diagram(name))) == count


def test_simple_roots_match_gram():
    for name in ("A2", "B3", "F4", "G2"):
        d = diagram(name)
        roots = simple_roots(d)
        a = cartan_matrix(d)
        # Cartan integers <ri, rj> * 2 / <rj, rj> recovered from the embedding
        for i in range(d.rank):
            for j in range(d.rank):
                dot = sum(x * y for x, y in zip(roots[i], roots[j]))
                norm = sum(x * x for x in roots[j])
                assert abs(2 * dot / norm - a[j][i]) < 1e-9


def test_weyl_reflection_is_isometry():
    d = diagram("B3")
    roots = root_system(d)
    for r in simple_roots(d):
        for x in roots:
            y = reflect(x, r)
            assert abs(sum(a * a for a in x) - sum(b * b for b in y)) < 1e-9
            assert any(close(y, z) for z in roots)


def test_adjoint_diagram_of_b3_covers_roots():
    wd = weights_from_highest(diagram("B3"), [0, 1, 0])
    nonzero = [w.coords for w in wd.weights
               if max(abs(c) for c in w.coords) > 1e-9]
    roots = root_system(diagram("B3"))
    assert len(nonzero) == 18
    for r in roots:
        assert any(close(r, w) for w in nonzero)


def test_fundamental_weight_marks():
    # fundamental weights come back in simple-root coordinates; in ambient
    # coordinates they pair to the identity against the co-roots
    d = diagram("B3")
    roots = simple_roots(d)
    for i, cs in enumerate(fundamental_weights(d)):
        ambient = [sum(float(c) * r[t] for c, r in zip(cs, roots))
                   for t in range(3)]
        for j in range(3):
            dot = sum(x * y for x, y in zip(ambient, roots[j]))
            norm = sum(x * x for x in roots[j])
            want = 1 if i == j else 0
            assert abs(2 * dot / norm - want) < 1e-9


def test_f4_middle_slice_has_18_vertices():
    d = diagram("F4")
    roots = root_system(d)
    simple = simple_roots(d)
    normal = orthogonal_direction(simple[1:])
    assert len(middle_slice(roots, normal)) == 18


def test_b3_slice_along_short_root_is_b2():
    d = diagram("B3")
    roots = root_system(d)
    # a short root as slicing normal exposes the 8-vertex B2 equator
    short = min(roots, key=lambda r: sum(x * x for x in r))
    mid = middle_slice(roots, short)
    assert len(mid) == 8
    b2 = root_system(diagram("B2"))
    assert embed_check(b2, mid)


def test_b3_slice_along_simple_plane_normal_is_a2_hexagon():
    d = diagram("B3")
    roots = root_system(d)
    simple = simple_roots(d)
    normal = orthogonal_direction(simple[:2])
    mid = middle_slice(roots, normal)
    assert len(mid) == 6
    assert embed_check(root_system(diagram("A2")), mid)


def test_slice_struts_are_roots():
    d = diagram("B3")
    roots = root_system(d)
    slices, struts = slice_diagram(roots, roots[0], roots=roots)
    assert len(slices) >= 3
    for p, q in struts:
        diff = tuple(a - b for a, b in zip(p, q))
        assert any(close(diff, r) for r in roots)


def test_embed_identity_and_rejections():
    a3 = root_system(diagram("A3"))
    c3 = root_system(diagram("C3"))
    assert embed_check(a3, a3)
    # the highest-shell rule rejects A3 inside C3 (long roots missed)
    assert not embed_check(a3, c3)


def test_c3_inside_projected_c4():
    d4 = diagram("C4")
    roots4 = root_system(d4)
    first = simple_roots(d4)[0]
    image = project(roots4, first)
    image = [p for p in image if max(abs(x) for x in p) > 1e-9]
    assert embed_check(root_system(diagram("C3")), image)


def test_g2_inside_projected_b3():
    b3 = root_system(diagram("B3"))
    g2 = root_system(diagram("G2"))
    found = False
    seen = set()
    for a in b3:
        for b in b3:
            direction = tuple(x - y for x, y in zip(a, b))
            if max(abs(x) for x in direction) < 1e-9:
                continue
            key = tuple(round(x, 6) for x in direction)
            if key in seen:
                continue
            seen.add(key)
            image = [p for p in project(b3, direction)
                     if max(abs(x) for x in p) > 1e-9]
            distinct = {tuple(round(x, 7) for x in p) for p in image}
            if len(distinct) != 12:
                continue
            if embed_check(g2, [list(p) for p in distinct]):
                found = True
                break
        if found:
            break
    assert found


def test_project_drops_one_dimension():
    d = diagram("B3")
    roots = root_system(d)
    image = project(roots, (1.0, 1.0, 1.0))
    assert all(len(p) == 2 for p in image)
    # projection along a direction preserves norms orthogonal to it
    n = math.sqrt(3.0)
    for r, p in zip(roots, image):
        along = sum(r) / n
        rest = sum(x * x for x in r) - along * along
        assert abs(sum(x * x for x in p) - rest) < 1e-9


def test_e6_inverse_cartan_denominators():
    d = diagram("E6")
    inv = inverse_cartan(d)
    assert all(v.denominator in (1, 3) for row in inv for v in row)
