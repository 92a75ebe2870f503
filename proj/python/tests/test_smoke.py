import pytest

import lienil


def test_polynomials():
    x1 = lienil.NCPoly.generator(2, 1)
    x2 = lienil.NCPoly.generator(2, 2)
    c = lienil.commutator(x1, x2)
    assert str(c) == "x1*x2 - x2*x1"
    assert lienil.NCPoly.parse(str(c), 2) == c
    assert c == x1 * x2 - x2 * x1
    assert lienil.member_of_m(c, 2)
    assert not lienil.member_of_m(c, 3)
    with pytest.raises(lienil.ModeMismatch):
        x1 + lienil.NCPoly.generator(2, 1, "mod5")


def test_series():
    assert lienil.hilbert_q(2, 3, 6) == [1, 2, 4, 6, 8, 10, 12]
    assert lienil.q_dimension(2, 2, [2, 1]) == 1
    dim = lienil.lambda_dim(3, 4, mode=lienil.BOTH_PRIMES[0])
    assert dim["dimension"] == 18 and dim["stabilized"]


def test_null_pairs():
    assert lienil.check_null_pair(2, 3)["is_null"]
    r = lienil.check_null_pair(2, 2, lienil.BOTH_PRIMES)
    assert not r["is_null"] and r["consensus"] and len(r["verdicts"]) == 2
    scan = lienil.scan_null_pairs(5, "mod2147483647")
    assert scan["not_null"] == [[2, 2]]
    with pytest.raises(lienil.ResourceLimitError):
        lienil._core._check_null_pair(7, 7, ["mod2147483647"])


def test_identities():
    assert lienil.verify_r_identity(1, 2, 3, 4, 5)
    with pytest.raises(ValueError):
        lienil.verify_r_identity(1, 2, 3, 4, 5, "mod3")
    assert lienil.check_gupta_levin(2, 2, [1, 1, 1, 1])["holds"]


def test_presentation_and_forms():
    assert lienil.verify_presentation(2, 3, 5)["passed"]
    mutant = lienil.verify_presentation(2, 4, 6, "mod2147483647", "quadratic")
    assert not mutant["passed"] and mutant["first_failure"] == [2, 3]
    x1, x2 = lienil.Form.x(2, 1), lienil.Form.x(2, 2)
    comm = lienil.star(x1, x2) - lienil.star(x2, x1)
    assert str(comm) == "2*dx{1,2}"
    assert lienil.fs_check(2, 4)["passed"]


def test_characters():
    assert lienil.weyl_dimension([2, 1], 3) == 8
    assert lienil.kostka_weights([2, 1], 3)["total"] == 8
    c = lienil.verify_corollary_k3(2)
    assert c["passed"]
    assert c["decomposition"]["text"] == "1 * s(2,1) + 1 * s(2,2)"
