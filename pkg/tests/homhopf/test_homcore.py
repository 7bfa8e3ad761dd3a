# -*- coding: UTF-8 -*-
# pylint:disable=missing-function-docstring
from fractions import Fraction

import pytest

from homhopf.catalog import catalog_kz2, catalog_taft, catalog_taft_twisted, taft_automorphism
from homhopf.exactlin import LinMap, identity_map
from homhopf.homcore import (HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, check_all, check_bialgebra_morphism,
                             check_derived_coassoc_identities, check_hom_algebra, check_hom_bialgebra,
                             check_hom_coalgebra, check_hom_hopf, check_yau_automorphism, convolution, yau_twist)
from homhopf.report import DimensionError, StructureError

KS = ["1", "2", "-1", "3/2"]


@pytest.fixture
def twisted():
    return catalog_taft_twisted("2")


def with_mul(H: HomHopfAlgebra, mul: LinMap) -> HomHopfAlgebra:
    return HomHopfAlgebra.from_constants(H.basis, mul, H.unit, H.comul, H.counit, H.antipode, H.gamma, H.name)


@pytest.mark.parametrize("k", KS)
def test_twisted_taft_passes_everything(k):
    report = check_all(catalog_taft_twisted(k))
    assert report.passed, report.failures
    for name in ["HA1 multiplicativity", "HA2 associativity", "HC1 comultiplicativity", "HC2 coassociativity",
                 "comul multiplicative", "counit multiplicative", "antipode left", "antipode right",
                 "coassociativity fourfold"]:
        assert name in report


@pytest.mark.parametrize("H", [catalog_kz2(), catalog_taft()])
def test_ordinary_hopf_algebras_pass(H):
    assert check_all(H).passed


def test_twisted_multiplication(twisted):  # pylint:disable=redefined-outer-name
    # x·g = α(xg) = α(-gx) = -2gx
    assert list(twisted.mul.column(2 * 4 + 1)) == [0, 0, 0, -2]
    assert twisted.gamma == LinMap.diagonal([1, 1, 2, 2])
    # comultiplication of x picks up the factor k
    assert twisted.comul.column(2)[2 * 4 + 1] == 2
    assert twisted.comul.column(2)[0 * 4 + 2] == 2


def test_twist_with_k_one_is_the_taft_algebra():
    assert catalog_taft_twisted("1") == catalog_taft()


def test_yau_automorphism():
    assert check_yau_automorphism(catalog_taft(), taft_automorphism("5/3")).passed
    report = check_yau_automorphism(catalog_taft(), LinMap.diagonal([1, -1, 1, -1]))
    assert not report.passed
    assert not report["automorphism comultiplicative"].passed
    singular = check_yau_automorphism(catalog_taft(), LinMap.diagonal([1, 1, 0, 0]))
    assert not singular["automorphism bijective"].passed


def test_yau_twist_rejects_bad_input(twisted):  # pylint:disable=redefined-outer-name
    with pytest.raises(StructureError):
        yau_twist(twisted, taft_automorphism("2"))
    with pytest.raises(StructureError):
        yau_twist(catalog_taft(), LinMap.diagonal([1, -1, 1, -1]))
    with pytest.raises(StructureError):
        catalog_taft_twisted("0")


def test_associativity_witness():
    # x·g = +gx breaks associativity at (g, x, g)
    taft = catalog_taft()
    mul = taft.mul.entries.copy()
    mul[3, 2 * 4 + 1] = Fraction(1)
    broken = yau_twist(with_mul(taft, LinMap(mul)), taft_automorphism("2"))
    report = check_hom_algebra(broken.algebra)
    assert report["HA1 multiplicativity"].passed
    failure = report["HA2 associativity"]
    assert not failure.passed
    assert failure.witness == (1, 2, 1)
    assert failure.variables == ("a", "a'", "a''")


def test_counit_witness(twisted):  # pylint:disable=redefined-outer-name
    comul = twisted.comul.entries.copy()
    comul[0 * 4 + 2, 2] = Fraction(0)
    coalgebra = HomCoalgebra(4, twisted.basis, LinMap(comul), twisted.counit, twisted.gamma)
    report = check_hom_coalgebra(coalgebra)
    assert report["HC2 coassociativity"].passed
    assert report["HC2 right counit"].passed
    failure = report["HC2 left counit"]
    assert not failure.passed
    assert failure.witness == (2,)


def test_bialgebra_witness(twisted):  # pylint:disable=redefined-outer-name
    coalgebra = HomCoalgebra(4, twisted.basis, twisted.comul, LinMap([[1, 0, 0, 0]]), twisted.gamma)
    report = check_hom_bialgebra(HomBialgebra(twisted.algebra, coalgebra))
    assert not report["counit multiplicative"].passed
    assert report["counit multiplicative"].witness == (1, 1)


def test_antipode_witness(twisted):  # pylint:disable=redefined-outer-name
    H = HomHopfAlgebra(twisted.bialgebra, identity_map(4))
    report = check_hom_hopf(H)
    assert not report["antipode left"].passed
    assert report["antipode left"].witness == (2,)
    assert report["antipode commutes with structure map"].passed


def test_convolution_with_antipode(twisted):  # pylint:disable=redefined-outer-name
    unit_counit = twisted.eta @ twisted.counit
    assert convolution(twisted, twisted.antipode, identity_map(4)) == unit_counit
    assert convolution(twisted, identity_map(4), twisted.antipode) == unit_counit


def test_derived_coassociativity(twisted):  # pylint:disable=redefined-outer-name
    report = check_derived_coassoc_identities(twisted.coalgebra)
    assert report.names() == ["coassociativity rearranged right", "coassociativity rearranged left",
                              "coassociativity fourfold"]
    assert report.passed


def test_singular_structure_map():
    A = HomAlgebra(2, ["1", "a"], LinMap.zero(2, 4), [1, 0], LinMap.diagonal([1, 0]))
    with pytest.raises(StructureError, match="not an automorphism"):
        check_hom_algebra(A)


def test_shape_errors():
    with pytest.raises(DimensionError):
        HomAlgebra(2, ["1", "a"], LinMap.zero(2, 3), [1, 0], identity_map(2))
    with pytest.raises(DimensionError):
        HomAlgebra(2, ["1"], LinMap.zero(2, 4), [1, 0], identity_map(2))
    with pytest.raises(DimensionError):
        HomAlgebra(2, ["1", "a"], LinMap.zero(2, 4), [1, 0, 0], identity_map(2))
    with pytest.raises(StructureError):
        HomAlgebra(2, ["1", "1"], LinMap.zero(2, 4), [1, 0], identity_map(2))


def test_bialgebra_needs_one_structure_map():
    kz2 = catalog_kz2()
    coalgebra = HomCoalgebra(2, kz2.basis, kz2.comul, kz2.counit, LinMap.diagonal([1, -1]))
    with pytest.raises(StructureError):
        HomBialgebra(kz2.algebra, coalgebra)


def test_structure_map_is_a_morphism(twisted):  # pylint:disable=redefined-outer-name
    report = check_bialgebra_morphism(twisted.gamma, twisted, twisted)
    assert report.passed
    assert not check_bialgebra_morphism(LinMap.diagonal([1, 1, 1, 0]), twisted, twisted).passed
    with pytest.raises(DimensionError):
        check_bialgebra_morphism(identity_map(2), twisted, twisted)
