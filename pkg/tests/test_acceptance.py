"""Acceptance gate: every numbered criterion, one test each, printed pass/fail.

All equalities are exact rational identities (tolerance zero) except the
Gauss-sum family inside criterion 10, which is floating point at 1e-9 by
design.  The fixture bodies live in swplumb.verify so the installed tool can
re-run the same gate via its command line.
"""

from swplumb import verify

_FAMILY = dict(verify.FIXTURES)


def _run(*names):
    failures = []
    for name in names:
        for label, passed, detail in _FAMILY[name]():
            flag = "PASS" if passed else "FAIL"
            print(f"[{flag}] {label}: {detail}")
            if not passed:
                failures.append((label, detail))
    assert not failures, failures


def test_criterion_01_lens_space_closed_forms():
    _run("01-lens-spaces")


def test_criterion_02_minus_two_chain_count():
    _run("02-minus-two-chains")


def test_criterion_03_dihedral_both_routes():
    _run("03-dihedral-stars")


def test_criterion_04_exceptional_stars():
    _run("04-exceptional-stars")


def test_criterion_05_three_arm_family_both_routes():
    _run("05-three-arm-family")


def test_criterion_06_three_arm_m3_torsion_route():
    _run("06-three-arm-m3")


def test_criterion_07_polygonal_stars():
    _run("07-polygonal-stars")


def test_criterion_08_nonstar_thirteen_vertices():
    _run("08-nonstar-graph")


def test_criterion_09_intersection_link_corpus():
    _run("09-intersection-links")


def test_criterion_10_property_suites():
    _run("10-normal-form-oracles", "11-cyclotomic-axioms",
         "12-dedekind-identities", "13-torsion-properties",
         "14-quadratic-identities", "15-linking-and-gauss",
         "16-blowup-stability", "17-seifert-round-trip",
         "18-eta-route-random", "19-unimodular")


def test_criterion_11_nonnegative_gap_sweep():
    _run("20-nonnegative-gap")
