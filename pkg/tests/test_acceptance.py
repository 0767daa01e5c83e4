"""Acceptance gate: one test per criterion, run with pytest -v for the
one-line-per-criterion summary."""

import json
from itertools import product

from semifree8.classify import (
    admissible_dim_pairs,
    catalog,
    classify_fano,
    enumerate_all,
    enumerate_case,
    match_fp_class,
    verification_report,
)
from semifree8.cli import main
from semifree8.dh import (
    b4_bound_check,
    dh_from_ring,
    dh_near_cp2,
    half_volume_cp2,
    half_volume_isolated_pair,
)
from semifree8.localization import (
    FourDimExtremalNormal,
    FourDimSplitNormal,
    PointNormal,
    SixDimNormal,
    SurfaceNormal,
    abbv_sum,
    contribution,
    contribution_series_oracle,
)
from semifree8.model import (
    betti_vector,
    fp_equivalent,
    reverse_action,
    validate,
)
from semifree8.dh import total_volume


def test_criterion_1_abbv_vanishing():
    for name, data in catalog().items():
        assert abbv_sum(data) == 0, name


def test_criterion_2_kirwan_betti():
    expected_b4 = {
        "p4-isolated-min": 1,
        "p4-sphere-min": 1,
        "q4-interior-quadric": 2,
        "q4-two-planes": 2,
        "w5-surface-and-plane": 2,
        "x8-six-points": 8,
    }
    for name, data in catalog().items():
        b = betti_vector(data)
        assert b[0] == b[4] == 1 and b[1] == b[3] == 1
        assert b[2] == expected_b4[name], name


def test_criterion_3_duistermaat_heckman():
    for k2 in range(-20, 21):
        ruled = dh_near_cp2(k2)
        assert ruled == dh_from_ring(k2)
        assert 4 * ruled.integrate(0, 2) == 176 - 16 * k2
        assert half_volume_cp2(k2) == 176 - 16 * k2
    assert half_volume_isolated_pair() == 240


def test_criterion_4_localization_oracle():
    for lam in range(5):
        w = tuple([-1] * lam + [1] * (4 - lam))
        assert contribution(w, PointNormal()) == \
            contribution_series_oracle(w, PointNormal())
    for lam in range(4):
        signs = tuple([-1] * lam + [1] * (3 - lam))
        for degrees in product(range(-5, 6), repeat=3):
            normal = SurfaceNormal(tuple(zip(degrees, signs)))
            weights = (0,) + signs
            assert contribution(weights, normal) == \
                contribution_series_oracle(weights, normal)
    for c1 in range(-5, 6):
        for c2 in range(-5, 6):
            normal = FourDimExtremalNormal(c1, c2)
            for weights in ((0, 0, 1, 1), (0, 0, -1, -1)):
                assert contribution(weights, normal) == \
                    contribution_series_oracle(weights, normal)
    for minus, plus in (((1,), (1,)), ((1, 1), (1, 1)), ((0, 2), (-1, 3))):
        normal = FourDimSplitNormal(minus, plus)
        assert contribution((0, 0, -1, 1), normal) == \
            contribution_series_oracle((0, 0, -1, 1), normal)
    for m in range(-3, 4):
        for weights in ((0, 0, 0, 1), (0, 0, 0, -1)):
            assert contribution(weights, SixDimNormal(m)) == \
                contribution_series_oracle(weights, SixDimNormal(m))


def test_criterion_5_enumeration_families():
    results = enumerate_all()
    keys = {shape: [f.key for f in r.families] for shape, r in results.items()}
    assert keys == {
        (0, 0): ["0,0"],
        (0, 4): ["0,4/with-surface", "0,4/no-surface"],
        (0, 6): ["0,6"],
        (2, 4): ["2,4"],
        (4, 4): ["4,4/negative", "4,4/positive"],
    }
    iotas = {f.key: f.iota for r in results.values() for f in r.families}
    assert iotas == {"0,0": 4, "0,4/with-surface": 3, "0,4/no-surface": 2,
                     "0,6": 5, "2,4": 5, "4,4/negative": 2, "4,4/positive": 4}
    # rejected shapes carry budget traces
    table = admissible_dim_pairs()
    rejected = {s for s, a in table.items() if not a.admissible}
    assert rejected == {(0, 2), (2, 2), (2, 6), (4, 6), (6, 6)}
    for shape in rejected:
        assert any(it.verdict == "FAIL" for it in table[shape].trace)
    # every family member passes the full verification chain
    for r in results.values():
        for fam in r.families:
            for n2 in range(fam.n2_min, fam.n2_max + 1):
                assert verification_report(fam.instantiate(n2)).ok


def test_criterion_6_middle_betti_bound():
    for shape, result in enumerate_all(b4_max=30).items():
        for fam in result.families:
            assert fam.b4_base + fam.n2_max <= 14, (shape, fam.key)
    # the extreme admissible point: b4 = 14 with the balanced (7, 7) split
    assert b4_bound_check(14, (4, 4), split=(7, 7)).verdict == "PASS"
    fam = [f for f in enumerate_case((4, 4)).families
           if f.key == "4,4/negative"][0]
    data = fam.instantiate(12)
    assert verification_report(data).ok
    assert total_volume(data) == 352 - 16 * 14


def test_criterion_7_fano_classification():
    result = classify_fano()
    assert result.survivors == ("P4", "Q4", "W5", "X8m")
    traces = dict(result.traces)
    rejected_volumes = {
        "X9m": "352 and 288, target 256",
        "X7m": "224 and 160, target 192",
        "V18": "384 and 320, target 288",
    }
    for name, words in rejected_volumes.items():
        details = [it.detail for it in traces[name] if it.id == "volume-match"]
        assert details and words in details[0], name
    assert any(it.id == "finite-automorphisms" and it.verdict == "FAIL"
               for it in traces["Q1Q2"])


def test_criterion_8_fp_class_matching():
    expected = {
        "p4-isolated-min": "a",
        "p4-sphere-min": "a",
        "q4-interior-quadric": "b",
        "q4-two-planes": "b",
        "w5-surface-and-plane": "c",
        "x8-six-points": "d",
    }
    entries = catalog()
    for name, data in entries.items():
        assert match_fp_class(data) == expected[name], name
    names = list(entries)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert not fp_equivalent(entries[a], entries[b]), (a, b)


def test_criterion_9_property_suite(capsys):
    # reversal invariance of everything computable
    samples = list(catalog().values())
    for r in enumerate_all().values():
        for fam in r.families:
            samples.append(fam.instantiate())
    for data in samples:
        rev = reverse_action(data)
        assert abbv_sum(rev) == abbv_sum(data)
        assert betti_vector(rev) == betti_vector(data)
        assert total_volume(rev) == total_volume(data)
        assert validate(rev).ok == validate(data).ok
    # Poincare symmetry of every validated vector
    for data in samples:
        b = betti_vector(data)
        assert b == b[::-1]
    # CLI byte stability
    for argv in (["catalog"], ["enumerate", "--shape", "4,4"],
                 ["classify-fano", "--json"]):
        assert main(list(argv)) == 0
        first = capsys.readouterr().out
        assert main(list(argv)) == 0
        assert capsys.readouterr().out == first
    # machine-readable verify survives a JSON round trip
    assert main(["catalog", "--name", "x8-six-points", "--emit", "file"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dimension"] == 8 and len(doc["components"]) == 8
