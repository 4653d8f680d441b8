"""Acceptance suite: every numbered verification criterion at full scale.

Each test prints one ``ACCEPTANCE`` line (run with ``-s`` or ``-rA`` to see
them all).  Three checks fail by design, with the analysis recorded in the
assertion message: the reverse direction of the orientation reduction is
false as stated (verified counterexamples are printed), its two structural
side claims fail off complete bases, and the five-vertex figure fixture
provably does not exist at the stated size.
"""

import pytest

from homfull import harness

SEED = 2023


def _line(criterion: str, result) -> str:
    status = "PASS" if result.passed else "FAIL"
    msg = (
        f"ACCEPTANCE {criterion}: {status} "
        f"(instances={result.instances}, counterexamples={len(result.counterexamples)}, "
        f"elapsed={result.elapsed:.1f}s)"
    )
    print(msg)
    for note in result.notes:
        print(f"  note: {note}")
    for ce in result.counterexamples[:5]:
        print(f"  counterexample: {ce.description}")
        for name, g in ce.graphs.items():
            from homfull.fileio import encode_line

            print(f"    {name}: {encode_line(g)}")
    return msg


def _assert_passed(criterion: str, result, analysis: str = "") -> None:
    msg = _line(criterion, result)
    detail = "\n".join(
        [msg]
        + [f"note: {n}" for n in result.notes]
        + [f"counterexample: {c.description}" for c in result.counterexamples[:10]]
        + ([analysis] if analysis else [])
    )
    assert result.passed, detail


@pytest.fixture(scope="module")
def elementary_suite():
    collected = []
    result = harness.check_oriented_elementary(4, 5, 1000, SEED, collected)
    return result, collected


def test_c01_five_way_equivalence():
    result = harness.check_five_way(6)
    assert result.instances == 2 ** 15
    assert result.elapsed < 120, f"five-way suite exceeded 2 minutes: {result.elapsed:.0f}s"
    _assert_passed("1 five_way_equivalence", result)


def test_c02_antisym_equivalence():
    result = harness.check_antisym_equivalence(4, (5, 6), 10000, SEED)
    assert result.instances >= 3 ** 6 + 10000
    _assert_passed("2 antisym_equivalence", result)


def test_c03_oriented_elementary_sufficiency(elementary_suite):
    result, _ = elementary_suite
    assert result.instances >= 3 ** 6 + 1000
    _assert_passed("3 oriented_elementary_sufficiency", result)


def test_c04_pinned_examples():
    result = harness.check_pinned_examples()
    _assert_passed("4 pinned_examples", result)


def test_c05_closure_and_core(elementary_suite):
    _, homfull_instances = elementary_suite
    assert homfull_instances, "suite 3 found no hom-full instances"
    result = harness.check_closure_core(homfull_instances)
    _assert_passed("5a closure_core", result)
    lemma = harness.check_closure_quotient_lemma(1000, 8, SEED)
    assert lemma.instances >= 1000
    _assert_passed("5b closure_quotient_lemma", lemma)


def test_c06_embedding_theorem():
    result = harness.check_embed_in_oclique(4, 5, 200, SEED)
    _assert_passed("6 embed_in_oclique", result)


def test_c07_dagiso_reduction():
    result = harness.check_dagiso(4, 5, 500, SEED)
    assert result.instances >= 500
    _assert_passed("7 dagiso_reduction", result)


def test_c08_homfull_reduction():
    result = harness.check_homfull_reduction(4)
    # The derived gadget has six vertices: no five-vertex candidate satisfies
    # the constraints (exhaustive search), so the output order is
    # |G1| + 2|G2| + 7 and the core order |G1| + 2|G2| + 5, one more than
    # the nominal five-vertex arithmetic.  The suite checks the parametric
    # formulas and records the offset in its notes.
    assert any("gadget has 6 vertices" in n for n in result.notes)
    _assert_passed("8 homfull_reduction", result)


def test_c09_fullorient_reduction():
    result = harness.check_fullorient_reduction(5, SEED, 20000)
    _assert_passed(
        "9a fullorient_reduction",
        result,
        analysis=(
            "The reverse direction of the orientation reduction is false as "
            "stated: the apex vertex joined to every base vertex lets the "
            "gadget route any bipartition-separable non-adjacent base pair "
            "through itself, so gadgets of bases with no oriented-clique "
            "orientation (already the two-isolated-vertex base) admit "
            "oriented-clique orientations.  Each counterexample above stores "
            "the base and a verified homomorphically full orientation of its "
            "gadget.  See /root/notes/decisions.md."
        ),
    )


def test_c09_fullorient_structural_claims():
    result = harness.check_fullorient_claims(4, (5, 6, 7, 8), 100, SEED)
    _assert_passed(
        "9b fullorient_claims",
        result,
        analysis=(
            "Both structural side claims fail off complete bases: bases with "
            "an isolated or pendant vertex give comparable pairs in the "
            "gadget, and the apex is a common neighbour of every base pair, "
            "so every non-adjacent base pair lies on a length-2 path through "
            "the complete part."
        ),
    )


def test_c10_orientation_theorem():
    result = harness.check_orientation_theorem(5, 1000, 8, 20, 50, SEED)
    assert not any("exceeded 1s" in n for n in result.notes), result.notes
    _assert_passed("10 orientation_theorem", result)


@pytest.fixture(scope="module")
def gadget_result():
    return harness.check_gadget_derivation()


def test_c11_gadget_j_derivation(gadget_result):
    result = gadget_result
    j_failures = [c for c in result.counterexamples if "gadget" in c.description]
    print(_fmt_c11(result))
    assert not j_failures, "\n".join(c.description for c in j_failures)


def test_c11_fig1_fixture_derivation(gadget_result):
    result = gadget_result
    fixture_failures = [c for c in result.counterexamples if "fixture" in c.description]
    status = "FAIL" if fixture_failures else "PASS"
    print(f"ACCEPTANCE 11b fig1_fixture: {status}")
    assert not fixture_failures, (
        "The five-vertex fixture does not exist: no homomorphically full "
        "oriented graph on at most five vertices has a non-comparable "
        "elementary pair (exhaustive over all 3^10 orientations), and the "
        "widened six-vertex search is empty as well because the arc-deletion "
        "count can never match the quotient.  See /root/notes/decisions.md.\n"
        + "\n".join(c.description for c in fixture_failures)
    )


def _fmt_c11(result) -> str:
    ok = all("gadget" not in c.description for c in result.counterexamples)
    lines = [f"ACCEPTANCE 11a gadget_j: {'PASS' if ok else 'FAIL'}"]
    for note in result.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)
