import json

import pytest

from symcomm import catalog
from symcomm.catalog import TABLE3, Certificate, rank1_d_value
from symcomm.errors import ArgumentError, UnsupportedFamilyError
from symcomm.pairs import Family, build_pair
from symcomm.structure import ab_diagram_of, is_nilpotent, is_p_distinguished


@pytest.mark.parametrize("fam,d", [(("AI", 2), 3), (("AII", 2), 6), (("CII", 3, 1), 5),
                                   (("A0", 2), 4), (("AIII", 4, 1), 4), (("CII", 1, 1), 5)])
def test_rank1_examples(fam, d):
    got, cert = rank1_d_value(*fam)
    assert got == d and cert.verified


def test_table3_cells():
    assert len(TABLE3) == 17
    certs = catalog.table3_report()
    assert all(c.verified for c in certs)
    assert [c.claimed["d"] for c in certs] == list(TABLE3.values())
    assert all(c.claimed["d"] >= 2 for c in certs)


def test_aiii_table_records_both_readings():
    _, cert = rank1_d_value("AIII", 3, 1)
    assert cert.notes["cell (rank-one table)"] == 3
    assert cert.notes["cell (bounds table, 1 = p < q row)"] == "q"
    assert cert.notes["ab(z)"] == "ab,a,a" and cert.notes["dim p^z"] == 3


def test_rank1_rejects_higher_rank():
    with pytest.raises(ArgumentError):
        rank1_d_value("CII", 2, 2)


def test_rank1_isomorphic_realizations_agree():
    # (so_6, gl_3) = (sl_4, sl_3 + t_1), (so_6, so_5) = (sl_4, sp_4), (sp_2, gl_1) = (sl_2, so_2)
    assert rank1_d_value("DIII", 3)[0] == rank1_d_value("AIII", 3, 1)[0] == 3
    assert rank1_d_value("BDI", 5, 1)[0] == rank1_d_value("AII", 2)[0]
    assert rank1_d_value("CI", 1)[0] == rank1_d_value("AI", 2)[0]
    assert rank1_d_value("BDI", 1, 2)[0] == rank1_d_value("BDI", 2, 1)[0]


@pytest.mark.parametrize("fam", [("AIII", 3, 1), ("AIII", 1, 3), ("CII", 3, 1), ("DIII", 3)])
def test_dichotomy(fam):
    cert = catalog.subregular_dichotomy(*fam, samples=20)
    assert cert.verified, cert.failures()


def test_dichotomy_values_sl4():
    cert = catalog.subregular_dichotomy("AIII", 3, 1, samples=10)
    row = dict((n, g) for n, _, g in cert.transcript)
    assert row["i(z, 1z)"] == row["i(z, 2z)"] == 2


def test_dichotomy_rejects_non_carriers():
    with pytest.raises(UnsupportedFamilyError):
        catalog.subregular_dichotomy("AI", 2)


@pytest.mark.parametrize("l,eps,r,dim", [(0, 1, 0, 0), (1, 0, 0, 3), (1, 1, 0, 3), (1, 0, 1, 8)])
def test_aiii_tableaux(l, eps, r, dim):
    cert = catalog.aiii_rigid_pair(l, eps, r)
    assert cert.verified, cert.failures()
    n_b = (l + eps) * (l + 1)
    assert cert.claimed == {"dim_k_zy": dim, "i": -n_b}
    assert cert.family == Family.of("AIII", n_b + l + 1 + r, n_b)


def test_aiii_tableau_sl10():
    cert = catalog.aiii_rigid_pair(1, 1, 0)
    assert build_pair(cert.family).n == 10


def test_aiii_inadmissible():
    for args in [(0, 0, 0), (-1, 1, 0), (1, 2, 0), (1, 1, -1)]:
        with pytest.raises(ArgumentError):
            catalog.aiii_rigid_pair(*args)


@pytest.mark.parametrize("make,ab", [(catalog.cii_sp12_rigid_pair, "aba,aba,ab,ba,b,b"),
                                     (catalog.diii_so12_rigid_pair, "aba,bab,ab,ab,a,b")])
def test_twelve_dimensional_pairs(make, ab):
    cert = make(check_distinguished=True)
    assert cert.verified, cert.failures()
    assert cert.claimed == {"dim_k_zy": 6, "i": -3}
    pair = build_pair(cert.family)
    z, y = cert.elements["z"], cert.elements["y"]
    assert str(ab_diagram_of(pair, z)) == str(ab_diagram_of(pair, y)) == ab
    assert is_nilpotent(z) and is_nilpotent(y)


def test_catalog_rigid_z_are_p_distinguished():
    for l, eps, r in [(0, 1, 0), (1, 0, 0)]:
        cert = catalog.aiii_rigid_pair(l, eps, r, check_distinguished=True)
        assert cert.verified
    pair = build_pair("DIII", 6)
    assert is_p_distinguished(pair, catalog.so12_elements()[0])


def test_sp8_slices():
    cert = catalog.cii_sp8_c_value(20)
    assert cert.verified, cert.failures()
    assert cert.claimed == {"codim": 2, "c_t": 4}
    with pytest.raises(ArgumentError):
        catalog.cii_sp8_c_value(5)


@pytest.mark.parametrize("fam,i", [(("CII", 3, 3), -3), (("DIII", 6), -3), (("AIII", 2, 3), -1),
                                   (("CII", 1, 2), -1), (("AIII", 4, 1), -1), (("CII", 2, 3), -1),
                                   (("CII", 4, 4), -3), (("DIII", 5), -1), (("DIII", 3), -1)])
def test_reducibility(fam, i):
    cert = catalog.reducibility_certificate(*fam)
    assert cert.verified, cert.failures()
    assert cert.notes["i"] == i


@pytest.mark.parametrize("fam", [("AIII", 2, 2), ("CII", 2, 2), ("CII", 1, 1), ("DIII", 4),
                                 ("AI", 3), ("BDI", 2, 3)])
def test_reducibility_unsupported(fam):
    with pytest.raises(UnsupportedFamilyError):
        catalog.reducibility_certificate(*fam)


def test_certificate_bookkeeping():
    c = Certificate("rank1_d", Family.of("AI", 2))
    assert not c.verified  # no checks yet
    assert c.check("a", 1, 1) and c.verified
    assert not c.check("b", 2, 3)
    assert not c.verified and c.failures() == [("b", 2, 3)]
    d = c.to_dict()
    assert d["verified"] is False and d["transcript"][1] == {"check": "b", "expected": 2, "got": 3}
    json.dumps(d)


def test_certificate_json_elements():
    d = catalog.cii_sp12_rigid_pair().to_dict()
    assert d["kind"] == "rigid_pair" and d["family"] == "CII" and d["params"] == [3, 3]
    assert d["elements"]["z"][0][1] == "1"
    assert json.loads(json.dumps(d)) == d


def test_op_helper():
    m = catalog.op(3, {2: [(1, 1)], 3: [(2, 1), (-1, 2)]})
    assert m.tolist()[0][1] == 1 and m.tolist()[0][2] == 2 and m.tolist()[1][2] == -1


def test_self_large_dims_recorded():
    c = catalog.cii_sp12_rigid_pair()
    assert c.notes["dim p^z"] == c.notes["dim p - dim K.z"] == 12
