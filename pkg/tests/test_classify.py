import json

import pytest

from linpique.classify import (
    TransitivityError,
    _partition,
    automorphism_table,
    classify,
    enumerate_piques,
    render_csv,
    render_text,
    write_report,
)
from linpique.isomorphism import SearchBoundExceeded
from linpique.pique import LinearPique


def test_enumerate_piques():
    assert len(enumerate_piques(3)) == 4
    assert enumerate_piques(2) == [LinearPique(2, 1, 1)]
    reduced = enumerate_piques(8, omit_opposites=True)
    assert len(reduced) == 10
    assert all(P.rho <= P.lam for P in reduced)


def test_automorphism_table():
    assert [r.fixed_points for r in automorphism_table(16)] == [16, 2, 4, 2, 8, 2, 4, 2]
    assert [r.cycles for r in automorphism_table(8)] == [
        "(1)", "(1 3)(2 6)(5 7)", "(1 5)(3 7)", "(1 7)(2 6)(3 5)"
    ]
    rows = automorphism_table(2)
    assert len(rows) == 1 and rows[0].cycles == "(1)" and rows[0].fixed_points == 2


def _refines(fine, coarse):
    return all(any(set(b) <= set(c) for c in coarse) for b in fine)


@pytest.mark.parametrize("n", range(2, 17))
def test_refinement_chain(n):
    r = classify(n)
    chars = [c.piques for c in r.classes]
    assert sorted(P for c in chars for P in c) == sorted(r.piques)
    assert _refines(r.similarity_partition(), chars)
    assert _refines(r.isomorphism_partition(), r.similarity_partition())


def test_z3_singletons():
    r = classify(3)
    assert len(r.classes) == 4
    assert all(len(c.piques) == 1 for c in r.classes)
    assert len(r.isomorphism_partition()) == 4


def test_z5_class():
    r = classify(5)
    cls = next(c for c in r.classes if LinearPique(5, 1, 2) in c.piques)
    assert cls.piques == [LinearPique(5, 1, 2), LinearPique(5, 1, 3)]
    assert len(cls.similarity_classes) == 1
    assert len(cls.isomorphism_classes) == 2
    assert "cube_constant" in cls.pairs[0].certificate


def test_z16_top_class_pairs(z16_top_class):
    r = classify(16)
    cls = next(c for c in r.classes if z16_top_class[0] in c.piques)
    assert set(z16_top_class) <= set(cls.piques)
    assert len(cls.pairs) == len(cls.piques) * (len(cls.piques) - 1) // 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_small_n_character_equals_isomorphism(n):
    r = classify(n)
    assert sorted(map(sorted, r.isomorphism_partition())) == sorted(sorted(c.piques) for c in r.classes)


def test_genfc_each_class_one_similarity_block():
    for n in range(2, 61):
        if n % 8 == 0:
            continue
        r = classify(n, isomorphism=False)
        assert all(len(c.similarity_classes) == 1 for c in r.classes), n


def test_bound_exceeded():
    with pytest.raises(SearchBoundExceeded):
        classify(67)
    assert classify(67, isomorphism=False).isomorphism_partition() is None


def test_partition_detects_non_transitivity():
    a, b, c = LinearPique(5, 1, 1), LinearPique(5, 1, 2), LinearPique(5, 1, 3)
    rel = {(x, x): True for x in (a, b, c)}
    rel.update({(a, b): True, (b, a): True, (b, c): True, (c, b): True, (a, c): False, (c, a): False})
    with pytest.raises(TransitivityError):
        _partition([a, b, c], rel, "test")


def test_reports_are_deterministic(tmp_path):
    r1, r2 = classify(8, omit_opposites=True), classify(8, omit_opposites=True)
    assert render_text(r1) == render_text(r2)
    assert render_csv(r1) == render_csv(r2)
    paths = write_report(r1, tmp_path)
    names = sorted(p.name for p in paths)
    assert names == ["automorphisms-8.csv", "classify-8.csv", "classify-8.json", "classify-8.txt", "pairs-8.csv"]
    record = json.loads((tmp_path / "classify-8.json").read_text())
    assert record["modulus"] == 8 and len(record["piques"]) == 10


def test_parallel_matches_serial():
    assert render_text(classify(15, jobs=2)) == render_text(classify(15))
