import json
from fractions import Fraction

import pytest

import qzeta


def test_q_integer():
    assert qzeta.q_integer(3, "1/2") == "7/4"


def test_zeta_q_encloses_bruteforce_and_respects_tol():
    lo, hi = qzeta.enclosure(qzeta.zeta_q("2", "1/2", "1e-12"))
    assert hi - lo <= Fraction(1, 10**12)
    partial = Fraction(qzeta.zeta_q_bruteforce("2", "1/2", 60))
    assert partial <= hi
    assert abs(float(lo) - 0.68601) < 1e-5


def test_classical_zeta2():
    lo, hi = qzeta.enclosure(qzeta.zeta_classical("2", "1e-8"))
    assert lo <= Fraction(16449340668, 10**10) <= hi


def test_identities_verified():
    assert qzeta.verify("qdecomp", 2, 3, "1/2", "1e-20")["status"] == "verified"
    assert qzeta.verify("stuffle", 3, 2, "3/4", "1e-20")["status"] == "verified"
    assert qzeta.verify("euler", 2, 2, tol="1e-6")["q"] is None


def test_symbolic():
    assert qzeta.verify_lemma(4, 3)
    assert qzeta.verify_operator(2, 3)
    assert qzeta.verify_q1_reduction(3, 3)
    assert qzeta.verify_parfrac(3, 2)
    assert qzeta.lemma_text(1, 1).startswith("\\frac{1}{X*Y} =")


def test_stuffle_terms():
    terms = qzeta.identity_terms("stuffle", 2, 3)
    assert ("1", 1, "zeta[4]") in terms
    assert len(terms) == 4


def test_errors():
    with pytest.raises(ValueError, match="s1 must be"):
        qzeta.zeta_q("1,2", "1/2")
    with pytest.raises(ValueError):
        qzeta.zeta_q("2", "3/2")
    with pytest.raises(qzeta.DomainError):
        qzeta.verify("qdecomp", 1, 2, "1/2")


def test_cli_json():
    code, out, _ = qzeta.run_cli(["verify", "qdecomp", "--s", "2", "--t", "2", "--q", "1/2", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["records"][0]["status"] == "verified"
    assert doc["records"][0]["q"] == "1/2"
