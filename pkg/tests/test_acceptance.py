"""Acceptance gate: one test per criterion, each at its stated tolerance.

Everything here is exact integer/rational arithmetic; the only
"tolerances" are fixed decimal renderings.  Run with -v to get one
pass/fail line per criterion.  The order-12 minimum-distance check is the
single long-running optional test and is marked slow.
"""

import json
import math
import random
from fractions import Fraction

import pytest

from leelat import analyzer, cli, constructions, hadamard, intlat, metric, xform
from leelat.analyzer import CertificateKind


def test_criterion_01_hadamard_orders_4_and_8():
    for k, order in ((2, 4), (3, 8)):
        code = hadamard.hadamard_code(hadamard.sylvester(k))
        assert code.volume == order ** (order // 2)
        assert analyzer.min_distance(code) == order
        _, q = intlat.period(code)
        assert q == order
    code12 = hadamard.hadamard_code(hadamard.paley(11))
    assert code12.volume == 12**6
    assert intlat.period(code12)[1] == 12


@pytest.mark.slow
def test_criterion_01b_hadamard_order_12_distance():
    np = pytest.importorskip("numpy")

    def span_min_lee(rows, m):
        """Subgroup of Z_m^n spanned by the rows: (min nonzero Lee weight, size).

        Elements are packed into int64 keys (4 bits per coordinate) so the
        whole 12^6-element group fits comfortably in memory.
        """
        n = len(rows[0])
        powers = 16 ** np.arange(n, dtype=np.int64)

        def pack(a):
            return a.astype(np.int64) @ powers

        vecs = np.zeros((1, n), dtype=np.int8)
        keys = pack(vecs)
        for g in rows:
            garr = np.array([v % m for v in g], dtype=np.int16)
            if not garr.any():
                continue
            gkey = int(pack(garr.reshape(1, n))[0])
            pos = int(np.searchsorted(keys, gkey))
            if pos < len(keys) and keys[pos] == gkey:
                continue  # generator already spanned
            base = vecs.copy()
            for k in range(1, m):
                shift = (k * garr) % m
                if not shift.any():
                    break
                cand = ((base.astype(np.int16) + shift) % m).astype(np.int8)
                ckeys = pack(cand)
                pos = np.clip(np.searchsorted(keys, ckeys), 0, len(keys) - 1)
                fresh = keys[pos] != ckeys
                if fresh.any():
                    vecs = np.concatenate([vecs, cand[fresh]])
                    keys = np.concatenate([keys, ckeys[fresh]])
                    order = np.argsort(keys)
                    keys, vecs = keys[order], vecs[order]
        weights = np.minimum(vecs.astype(np.int16), m - vecs.astype(np.int16)).sum(axis=1)
        nonzero = weights[weights > 0]
        return int(nonzero.min()), len(vecs)

    code = hadamard.hadamard_code(hadamard.paley(11))
    _, m = intlat.period(code)
    assert m == 12
    min_lee, size = span_min_lee(code.int_matrix.entries, m)
    assert size == 12**6
    # minimum Manhattan weight of the lattice = min(m, min Lee weight mod m)
    assert min(m, min_lee) == 12


def test_criterion_02_scaled_hadamard_family():
    for i, j in ((2, 2), (3, 2), (2, 3), (3, 3)):
        lat = hadamard.g_matrix(i, j)
        assert analyzer.min_distance(lat) == 2**j
        assert abs(intlat.det(lat.gen)) == hadamard.g_volume_formula(i, j)


def test_criterion_03_distance4_family_diameter_perfect():
    for n in range(2, 7):
        lat = constructions.gn(n)
        cert = analyzer.certify(lat)
        assert cert.kind is CertificateKind.DIAMETER_PERFECT
        assert lat.volume == 4 * n == metric.anticode_size_odd(n, 1)


def test_criterion_04_linear_doubling():
    for n, expected in ((3, (6, 4, 24, 12)), (2, (4, 4, 16, 8))):
        lat = constructions.double(constructions.gn(n))
        d = analyzer.min_distance(lat)
        p = intlat.reduce_mod_period(lat, d)
        assert (p.n, p.d, p.v, p.q) == expected


def test_criterion_05_density_values():
    mink = intlat.reduce_mod_period(constructions.minkowski3(6), 6)
    assert mink.density == Fraction(18, 19)

    five = intlat.reduce_mod_period(constructions.scaled_diameter_code(5, 4), 4)
    assert five.density == Fraction(32, 75)

    seven = intlat.reduce_mod_period(constructions.scaled_diameter_code(7, 4), 4)
    assert seven.density == Fraction(4096, 35280)
    assert analyzer.density_decimal(seven.density, places=4) == "0.1161"

    entry6 = {e.n: e for e in constructions.density_table(6)}[6]
    assert entry6.density == Fraction(648, 1805)
    assert analyzer.density_decimal(entry6.density, places=3) == "0.359"


def test_criterion_06_dim4_reconciliation(tmp_path, capsys):
    rec = constructions.dim4_reconciliation(6)
    oracle = rec["oracle"]
    assert oracle["volume"] == 74
    assert rec["discrepancy"]["note"]
    assert rec["advertised"]["volume"] == "78"
    assert rec["discrepancy"]["volume_matches"] is False
    # internal consistency: density * n! * v == d^n
    num, den = map(int, oracle["density"].split("/"))
    assert Fraction(num, den) * math.factorial(4) * oracle["volume"] == (
        oracle["min_distance"] ** 4
    )
    # the CLI emits the same reconciliation block
    out = tmp_path / "dim4.txt"
    assert cli.run(["construct", "dim4", "--d", "6", "--out", str(out)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["reconciliation"]["oracle"] == oracle
    assert doc["reconciliation"]["discrepancy"]["note"]


def test_criterion_07_anticode_formulas_and_recurrences():
    for n in range(1, 5):
        for r in range(4):
            assert len(metric.enumerate_anticode_odd(n, r)) == metric.anticode_size_odd(n, r)
            assert len(metric.enumerate_sphere(n, r)) == metric.lee_sphere_size(n, r)
    assert metric.check_anticode_recurrences(8, 8) == []


def test_criterion_08_sphere_size_formula():
    for n in range(1, 6):
        for r in range(5):
            assert len(metric.enumerate_sphere(n, r)) == metric.lee_sphere_size(n, r)


def test_criterion_09_golomb_welch_perfect():
    for n in (2, 3):
        lat = constructions.gw_perfect(n)
        assert analyzer.min_distance(lat) == 3
        cert = analyzer.certify(lat, min_dist=3)
        assert cert.kind is CertificateKind.PERFECT
        assert lat.volume == 2 * n + 1 == metric.lee_sphere_size(n, 1)


def test_criterion_10_transform_codes_and_involution():
    rng = random.Random(2024)
    for d, n_points, span in ((2, 1000, 100), (4, 200, 50)):
        spec = xform.TransformSpec.build(d)
        assert analyzer.min_distance(spec.code) == d
        for row in spec.code.int_matrix.entries:
            image = xform.t_apply(spec.h, row).to_int_vector()
            assert intlat.contains(spec.code, image)
        n = spec.h.order
        pts = [tuple(rng.randint(-span, span) for _ in range(n)) for _ in range(n_points)]
        assert xform.check_involution_discrete(spec, pts) == n_points


def test_criterion_11_discrete_box_bounds():
    spec = xform.TransformSpec.build(2)
    assert spec.rho == 1
    for radius in range(1, 7):
        rep = xform.discrete_box(spec, radius)
        bound = 2 * math.ceil((radius + 1) / 2) + 3
        assert rep.bound == bound
        assert all(e <= bound for e in rep.extents)
        assert rep.points_checked == metric.lee_sphere_size(4, radius)


def test_criterion_12_continuous_box_bounds():
    h = hadamard.sylvester(2)
    for radius in range(5):
        rep = xform.continuous_box(h, radius)
        assert rep.points_checked == metric.lee_sphere_size(4, radius)
        assert rep.max_abs <= radius
        assert rep.witness_attains


def test_criterion_13_deterministic_outputs(capsys, tmp_path):
    assert cli.run(["density", "--max-n", "10"]) == 0
    first = capsys.readouterr().out
    assert cli.run(["density", "--max-n", "10"]) == 0
    second = capsys.readouterr().out
    assert first == second

    f = tmp_path / "gn3.txt"
    assert cli.run(["construct", "gn", "--n", "3", "--out", str(f)]) == 0
    capsys.readouterr()
    assert cli.run(["analyze", str(f)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc) == [
        "n",
        "min_distance",
        "volume",
        "period",
        "q",
        "density",
        "density_decimal",
        "covering_radius",
        "certificate",
    ]
