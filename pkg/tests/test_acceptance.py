"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact (rational arithmetic, zero tolerance).  Run with
``pytest tests/test_acceptance.py`` (the lines are repeated in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""
import os
import random
import subprocess
import sys
import tempfile
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import oracle  # noqa: E402
from cli_suite import CASES, strip_timing  # noqa: E402

from chargroupoid import derivations as dv  # noqa: E402
from chargroupoid.action import ActionGroupoid, TwoCell  # noqa: E402
from chargroupoid.complex import (  # noqa: E402
    boundary,
    canonical_representative,
    lift_two_character,
    verify_exactness,
    x1_space,
    x2_space,
)
from chargroupoid.groups import named_group  # noqa: E402
from chargroupoid.presented import parallel_pair, rose  # noqa: E402

GROUPS = ["C2", "C4", "S3", "D4", "Q8", "A4", "S4"]
RESULTS = {}

_groups = {}


def group(name):
    if name not in _groups:
        g = named_group(name)
        _groups[name] = (g, ActionGroupoid(g))
    return _groups[name]


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_01_exactness():
    t0 = time.perf_counter()
    bad = []
    for name in GROUPS:
        _, gpd = group(name)
        rep = verify_exactness(gpd)
        for comp in rep.components:
            if not all(p.equal for p in comp.positions):
                bad.append((name, comp.component))
    elapsed = time.perf_counter() - t0
    record(1, not bad and elapsed < 60,
           f"all components exact at Q, X0, X1, X2 for {', '.join(GROUPS)} in {elapsed:.1f}s (limit 60s); failures {bad}")


def test_criterion_02_dimension_law():
    bad = []
    notes = []
    for name in GROUPS:
        g, gpd = group(name)
        x1, x2 = x1_space(gpd).dim, x2_space(gpd).dim
        expected = g.order - len(g.conjugacy)
        o1 = oracle.x1_dim(g.product)
        o2, exact = oracle.x2_nullity_bound(g.product)
        if not (x1 == expected == o1 and x2 == 0 == o2):
            bad.append(name)
        notes.append(f"{name}:{x1}/{o1}" + ("" if exact else "(X2 by mod-p bound)"))
    record(2, not bad, f"dim X1 = |G| - #classes and dim X2 = 0, oracle agrees [{' '.join(notes)}]; failures {bad}")


def test_criterion_03_derivation_dictionary():
    bad = []
    for name in GROUPS:
        g, gpd = group(name)
        if dv.derivation_space(g).dim != x1_space(gpd).dim:
            bad.append((name, "dim"))
        for d in dv.derivation_basis(g):
            c = dv.char_from_derivation(d, gpd)
            if c.values not in x1_space(gpd).space or dv.derivation_from_char(c) != d:
                bad.append((name, "round trip"))
                break
    record(3, not bad, f"dim Der = dim X1 and exact round trip on a basis for all groups; failures {bad}")


def test_criterion_04_bracket():
    g, gpd = group("S3")
    space = dv.derivation_space(g)
    rnd = random.Random(4)

    def draw():
        vec = space.combine([Fraction(rnd.randint(-9, 9), rnd.randint(1, 9)) for _ in range(space.dim)])
        return dv.DerivationMatrix.from_vector(g, vec)

    mismatches = 0
    for _ in range(100):
        d1, d2 = draw(), draw()
        got = dv.bracket_characters(dv.char_from_derivation(d1, gpd), dv.char_from_derivation(d2, gpd))
        if got != dv.char_from_derivation(d1.bracket(d2), gpd):
            mismatches += 1
    record(4, mismatches == 0, f"100 seeded rational pairs on S3, bracket = character of commutator; mismatches {mismatches}")


def test_criterion_05_inner_characters():
    bad = []
    pairs = 0
    for name in ("S3", "D4"):
        g, gpd = group(name)
        points = [dv.chi_point(gpd, a) for a in range(g.order)]
        for a in range(g.order):
            if dv.char_from_derivation(dv.inner_derivation_of(g, a), gpd) != points[a]:
                bad.append((name, "chi^a", g.labels[a]))
        for a in range(g.order):
            for b in range(g.order):
                pairs += 1
                lhs = dv.bracket_characters(points[a], points[b])
                rhs = points[g.product[a][b]] - points[g.product[b][a]]
                if lhs != rhs:
                    bad.append((name, g.labels[a], g.labels[b]))
    sign = dv.resolve_inner_sign(group("S3")[1], group("S3")[0].element("(12)"))
    ok = not bad and pairs == 36 + 64 and sign == {"[x,a]": True, "[a,x]": False}
    record(5, ok, f"chi^a = chi of d_a under {dv.INNER_CONVENTION}; {pairs} bracket pairs checked; failures {bad}")


def test_criterion_06_weak_inner_ideal():
    parts = []
    ok = True
    for name in ("S3", "D4"):
        g, gpd = group(name)
        rep = dv.verify_ideal(g, gpd)
        ok = ok and rep.verdict and rep.loop_triples > 0
        parts.append(f"{name}: {rep.pairs_checked} pairs, {rep.loop_triples} triples, "
                     f"loop={rep.loop_identity} composition={rep.composition_identity}")
    record(6, ok, "; ".join(parts))


def test_criterion_07_quotient_isomorphism():
    bad = []
    for name in GROUPS:
        g, gpd = group(name)
        rep = dv.verify_quotient_isomorphism(g, gpd)
        if not rep.verdict or rep.outer_dim != 0:
            bad.append(name)
    record(7, not bad, f"quotient isomorphism verified, both quotients dimension 0, for all groups; failures {bad}")


def test_criterion_08_two_characters_and_lift():
    cases = [(f"rose{r}", rose(r), (1, r, r)) for r in (1, 2, 3)] + [("parallel pair", parallel_pair(), (2, 2, 1))]
    bad = []
    for label, g, dims in cases:
        x1 = x1_space(g).space
        x2 = x2_space(g).space
        if (len(g.objects), x1.dim, x2.dim) != dims or not verify_exactness(g).verdict:
            bad.append((label, "dims"))
        phi2 = boundary(2, g)
        for v in x2.basis:
            lifted = lift_two_character(g, v)
            if phi2(lifted) != v or any(lifted[k] for k in g.tree_edges):
                bad.append((label, "lift"))
        for chi in x1.basis:
            rep = canonical_representative(g, chi)
            if phi2(rep) != phi2(chi) or any(rep[k] for k in g.tree_edges) or rep not in x1:
                bad.append((label, "canonical"))
    record(8, not bad, f"rose r=1,2,3 dims (1,r,r), parallel pair (2,2,1), lift is a tree-vanishing section; failures {bad}")


def test_criterion_09_two_category_axioms():
    g, gpd = group("S3")
    rnd = random.Random(9)
    failures = 0
    for _ in range(500):
        a = rnd.randrange(g.order)
        b = g.conj(rnd.randrange(g.order), a)
        c = g.conj(rnd.randrange(g.order), b)
        f = [rnd.choice(gpd.hom_set(a, b)) for _ in range(3)]
        h = [rnd.choice(gpd.hom_set(b, c)) for _ in range(3)]
        alpha, alpha2 = TwoCell(f[0], f[1]), TwoCell(f[1], f[2])
        beta, beta2 = TwoCell(h[0], h[1]), TwoCell(h[1], h[2])
        inter = (gpd.vcompose(gpd.hcompose(alpha, beta), gpd.hcompose(alpha2, beta2))
                 == gpd.hcompose(gpd.vcompose(alpha, alpha2), gpd.vcompose(beta, beta2)))
        vid = (gpd.vcompose(gpd.identity_cell(f[0]), alpha) == alpha
               and gpd.vcompose(alpha, gpd.identity_cell(f[1])) == alpha)
        hid = (gpd.hcompose(gpd.identity_cell(gpd.identity_at(a)), alpha) == alpha
               and gpd.hcompose(alpha, gpd.identity_cell(gpd.identity_at(b))) == alpha)
        if not (inter and vid and hid):
            failures += 1
    record(9, failures == 0, f"interchange and identity laws on 500 seeded S3 quadruples; failures {failures}")


def test_criterion_10_determinism():
    suite = os.path.join(os.path.dirname(os.path.abspath(__file__)), "cli_suite.py")
    runs = []
    for seed in ("1", "2"):
        with tempfile.TemporaryDirectory() as tmp:
            env = dict(os.environ, PYTHONHASHSEED=seed)
            subprocess.run([sys.executable, suite, tmp], check=True, env=env)
            outputs = {}
            for name in CASES:
                with open(os.path.join(tmp, name + ".json"), "rb") as fh:
                    outputs[name] = strip_timing(fh.read()).encode()
            runs.append(outputs)
    differing = [n for n in CASES if runs[0][n] != runs[1][n]]
    record(10, not differing,
           f"{len(CASES)} CLI reports byte-identical across two processes without timing; differing {differing}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
