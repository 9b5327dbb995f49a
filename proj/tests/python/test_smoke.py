import pytest

import epimorph


def test_generators():
    assert epimorph.standard_prefix("per=01", 10) == "0100101001"
    assert epimorph.example3_prefix(10) == "0110220110"
    assert epimorph.fixed_point_prefix("0:01,1:02,2:0", 7) == "0102010"


def test_defect():
    assert epimorph.defect("0100101001") == 0
    assert epimorph.defect("110100110010") == 1
    assert epimorph.palindromes("010") == [1, 2, 0, 1]


def test_morphisms():
    phi = "0:0100,1:01011,2:010111"
    assert epimorph.apply_morphism(phi, "01") == "010001011"
    assert epimorph.classify(phi)["Pret"] == "010"
    assert epimorph.classify("0:01,1:0")["P"] == "0"
    assert epimorph.classify("0:01,1:10") == {"P": None, "standardP": None, "Pret": None}
    assert epimorph.is_pret(phi, "010")


def test_projection_and_s():
    assert epimorph.project("0120", "0") == "ABBA"
    v = "0110100"
    for first in (0, 1):
        assert epimorph.s_operator(epimorph.s_preimage(v, first)) == v


def test_return_words_and_checks():
    words = epimorph.return_words("per=01023", "00", 10000)
    assert "0010201" in words and "0010301" in words
    assert epimorph.check_rich_crw("0100101001", 10)["verdict"] == "PASS"
    rows = epimorph.h_profile("01" * 500, 10)
    assert rows == [(4, 4)] * 10
    with pytest.raises(epimorph.EpimorphError):
        epimorph.h_profile(epimorph.standard_prefix("per=01", 3000), 10)


def test_cli_and_errors():
    code, out, _ = epimorph.run_cli(["gen", "--periodic", "01", "--n", "4"])
    assert (code, out) == (0, "0101\n")
    code, _, _ = epimorph.run_cli(["gen", "--directive", "per=", "--n", "4"])
    assert code == 2
    assert "remark7" in epimorph.experiments()
    with pytest.raises(epimorph.EpimorphError):
        epimorph.s_preimage("012", 0)
