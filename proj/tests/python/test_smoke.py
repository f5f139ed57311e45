import math
from fractions import Fraction

import pytest

import sp11


def test_quaternion_table():
    i, j, k = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    assert sp11.qmul(i, j) == pytest.approx(k)
    assert sp11.qmul(j, i) == pytest.approx((0, 0, 0, -1))


def test_killing_matrices():
    su2 = sp11.killing_matrix("su2")
    assert su2 == [[Fraction(-8) if r == c else 0 for c in range(3)] for r in range(3)]
    sp = sp11.killing_matrix("sp11")
    assert [sp[r][r] for r in range(10)] == [-12] * 6 + [24] * 4
    with pytest.raises(sp11.ConfigError):
        sp11.killing_matrix("so3")


def test_jn_binomial():
    assert sp11.jn(4) == [[Fraction(math.comb(4, r)) if r == c else 0 for c in range(5)] for r in range(5)]


def test_sigma_and_action():
    q = (0.1, -0.2, 0.3, 0.05)
    g = sp11.sigma(q)
    assert sp11.is_sp11(g) < 1e-14
    assert sp11.mobius(g, (0, 0, 0, 0)) == pytest.approx(q, abs=1e-15)
    u, v = sp11.j_factor(g, (0.2, 0, 0, 0))
    assert sum(c * c for c in u) == pytest.approx(1.0)
    assert sum(c * c for c in v) == pytest.approx(1.0)


def test_rn_unit():
    r = sp11.rn((1, 0, 0, 0), 3)
    assert all(abs(r[a][b] - (1 if a == b else 0)) < 1e-15 for a in range(4) for b in range(4))


def test_q_kl_regular_and_reproduced():
    assert sp11.p_kl(1, 0, 0) == {(1, 0, 0, 0): (1, 0, 0, 0), (0, 1, 0, 0): (0, 1, 0, 0)}
    assert all(sp11.q_kl_is_regular(3, k, l) for l in range(4) for k in range(l + 1))
    q0 = (0.1, 0.0, -0.1, 0.2)
    value = sp11.cauchy_reproduce_q_kl(2, 1, 2, q0, 0.5, 5)
    terms = sp11.q_kl(2, 1, 2)
    exact = [0.0] * 4
    for (a, b, c, d), coeff in terms.items():
        mono = q0[0] ** a * q0[1] ** b * q0[2] ** c * q0[3] ** d
        exact = [e + float(x) * mono for e, x in zip(exact, coeff)]
    assert value == pytest.approx(exact, abs=1e-8)


def test_hurwitz_and_level():
    assert len(sp11.hurwitz_of_norm(1)) == 24
    assert len(sp11.hurwitz_of_norm(3)) == 96
    counts = sp11.gamma_n_counts(2, 2)
    assert counts["agree"] == counts["found"]


def test_verify_report():
    report = sp11.verify("lie")
    assert report["suite"] == "lie" and report["passed"]
    ids = {c["id"] for c in report["checks"]}
    assert {"lie.killing_su2", "lie.root_bracket_cartan"} <= ids
    with pytest.raises(sp11.ConfigError):
        sp11.verify("cauchy", level=0)
    assert sp11.suite_names()[0] == "lie"
