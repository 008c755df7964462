import math
from fractions import Fraction

import pytest

import kalpha

G = (math.sqrt(5) - 1) / 2


def test_farey_list():
    assert kalpha.farey_list(2) == ["0", "001", "01", "011", "1"]
    assert kalpha.word_from_rational("2/5") == "00101"
    assert kalpha.runlength("00101") == [2, 1, 1, 1]


def test_qumterval_and_locate():
    J = kalpha.qumterval("001")
    assert J["pseudocenter"] == "1/3"
    assert J["alpha_minus_float"] == pytest.approx(2 - math.sqrt(3))
    assert kalpha.locate("9/20")["word"] == "01"


def test_bifurcation():
    assert kalpha.bin_interval("00101") == ("9/62", "5/31")
    assert kalpha.cardioid_angles("2/5") == ("9/31", "10/31")
    assert kalpha.eb_member("5/31")
    assert not kalpha.eb_member("1/4")
    assert kalpha.minkowski(kalpha.phi("3/16")) == "3/8"


def test_matching():
    assert kalpha.matching_identity("00101")
    assert kalpha.verify_matching("001", ["1/3", "3/10"])
    assert kalpha.orbit("1/2", "1/2", 3) == ["1/2", "0/1"]


def test_entropy():
    s = kalpha.entropy("9/20")
    assert s["h"] == pytest.approx(math.pi**2 / (6 * math.log(1 + G)), abs=1e-12)
    assert s["h_str"].startswith("3.41831597061")
    rows = kalpha.entropy_curve("1/10", "9/10", 20, 2)
    assert len(rows) == 20
    for r in rows:
        mirrored = kalpha.entropy(str(1 - Fraction(r["alpha"])))
        assert r["h"] == pytest.approx(mirrored["h"], abs=1e-9)


def test_errors():
    with pytest.raises(ValueError):
        kalpha.locate("0")
    with pytest.raises(ValueError):
        kalpha.qumterval("0110")
