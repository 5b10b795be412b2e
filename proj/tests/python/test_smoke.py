from fractions import Fraction
from itertools import combinations

import pytest

import richlines


def brute_rich(points, r):
    # Sets of >= r collinear points, by pairwise cross products.
    found = set()
    for i, j in combinations(range(len(points)), 2):
        p, q = points[i], points[j]
        on = [
            k
            for k, s in enumerate(points)
            if all(
                (q[a] - p[a]) * (s[b] - p[b]) == (q[b] - p[b]) * (s[a] - p[a])
                for a in range(len(p))
                for b in range(a + 1, len(p))
            )
        ]
        if len(on) >= r:
            found.add(tuple(on))
    return found


def test_grid_rich_lines_match_brute_force():
    grid = richlines.gen_grid(2, 4)["points"]
    assert len(grid) == 16
    lines = richlines.rich_lines(grid, 4)
    assert len(lines) == 10
    assert all(line["count"] == 4 for line in lines)
    assert len(brute_rich(grid, 4)) == 10
    assert {tuple(s) for s in richlines.oracle_rich_lines(grid, 4)} == brute_rich(grid, 4)


def test_rationals_round_trip():
    pts = [[Fraction(1, 2), 0], [1, "1/3"], [Fraction(3, 2), Fraction(2, 3)]]
    lines = richlines.rich_lines(pts, 3)
    assert len(lines) == 1
    assert all(isinstance(x, Fraction) for x in lines[0]["base"])
    assert lines[0]["direction"] == [3, 2]


def test_partition_halves_each_class():
    inst = richlines.gen_random(2, 60, 40, 5)
    part = richlines.partition(inst["points"], 3)
    assert part["halving_ok"]
    s = len(part["factors"])
    assert max(part["cells"].values()) <= -(-60 // 2**s)
    assert sum(part["cells"].values()) + part["boundary"] == 60


def test_planted_hyperplane_found():
    inst = richlines.gen_planted_hyperplane(3, 80, Fraction(1, 2), 4, 11)
    res = richlines.hyperplane(inst["points"], 4)
    assert res["plane"] is not None
    assert res["count"] >= 40


def test_hypersurface_on_quadric():
    inst = richlines.gen_planted_hypersurface(3, 2, 24, 12, 3)
    rep = richlines.hypersurface(inst["points"], 12)
    assert rep["status"] == "ok"
    assert rep["degree"] < 3
    # Other rulings of the quadric can pick up r points too.
    assert rep["lines_contained"] == len(richlines.rich_lines(inst["points"], 12)) >= 24


def test_verify_report():
    rep = richlines.verify(richlines.gen_grid(2, 4)["points"], 4, oracle=True)
    assert rep["status"] == "pass"
    assert rep["rich_lines"]["count"] == 10
    assert all(c["pass"] for c in rep["checks"])


def test_instance_text_round_trip():
    inst = richlines.gen_random(3, 20, 9, 2)
    back = richlines.read_instance(inst["text"])
    assert back["points"] == inst["points"]


def test_errors():
    with pytest.raises(richlines.ParseError):
        richlines.read_instance("1 2\n")
    with pytest.raises(richlines.Error):
        richlines.rich_lines([[0, 0], [1, 2, 3]], 2)
    with pytest.raises(richlines.PreconditionError):
        richlines.gen_grid(1, 3)
