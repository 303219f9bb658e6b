from fractions import Fraction

import pytest

import dioph


def test_digits():
    d = dioph.digits("rat:1/3", base=10, count=4)
    assert d["rendered"] == "0.3333 certified:4"
    assert d["digits"] == [3, 3, 3, 3]
    e = dioph.digits("e", count=5)
    assert e["integer_part"] == 2
    assert e["digits"] == [7, 1, 8, 2, 8]


def test_continued_fraction():
    cf = dioph.continued_fraction("e", terms=12)
    assert cf["quotients"] == [2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8]
    assert cf["convergents"][1] == Fraction(3)
    assert dioph.continued_fraction("rat:22/7")["terminated"]


def test_big_integers_are_python_ints():
    cf = dioph.continued_fraction("shallit", terms=40)
    q = cf["convergents"][-1].denominator
    assert isinstance(q, int)
    assert q > 2**64


def test_mu():
    mu = dioph.mu_estimate("surd:1,2,5", terms=40)
    assert mu["tail_max"] == pytest.approx(2.0)


def test_words():
    assert dioph.complexity("word:0110", n_max=2) == [2, 3]
    assert dioph.sturmian("surd:-1,2,5", 8) == dioph.sturmian("surd:-1,2,5", 8, Fraction(0))
    fib = dioph.complexity("sturmian:fibonacci", base=2, prefix=2000, n_max=20)
    assert fib == list(range(2, 22))


def test_repetition():
    r = dioph.dio("word:0000000000")
    assert (r["global"]["u"], r["global"]["v"], r["global"]["m"]) == (0, 1, 10)
    assert r["global"]["score"] == Fraction(10)
    assert dioph.ice("word:0100101001001")["global"]["score"] == Fraction(11, 5)


def test_approximant_and_report():
    a = dioph.approximant("rat:1/3", prefix=20)
    assert Fraction(a["p"], a["q"]) == Fraction(1, 3)
    assert dioph.report("rat:1/7")["status"] == "rational"


def test_errors():
    with pytest.raises(ValueError):
        dioph.digits("rat:1/x")
    with pytest.raises(ValueError):
        dioph.dio("word:0")
