# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf Taft taft
# pylint:disable=missing-function-docstring
import json
from fractions import Fraction

import pytest

from homhopf.actions import regular_action, trivial_action
from homhopf.catalog import (catalog_ground_field, catalog_kz2, catalog_section5_action, catalog_section5_smash,
                             catalog_taft_twisted)
from homhopf.exactlin import LinMap, identity_map, permute, render_vector, tensor
from homhopf.homcore import check_all, check_bialgebra_morphism, check_hom_algebra, check_hom_hopf
from homhopf.report import PreconditionError, StructureError
from homhopf.smash import (TwistMap, action_induced_twist, antipode_agreement, build_r_smash, build_smash,
                           build_tensor_hom_coalgebra, check_R_coalgebra_map, check_twist_conditions,
                           hom_tensor_twist, product_basis, r_smash_algebra, smash_antipode_from_action)

KS = ["1", "2", "-1", "3/2"]


@pytest.fixture(scope="module")
def product():
    return catalog_section5_smash("2")


def test_product_basis():
    assert product_basis(["1", "g"], ["1", "a"]) == ["1⊗1", "1⊗a", "g⊗1", "g⊗a"]


def test_hom_tensor_twist_satisfies_conditions():
    A = catalog_taft_twisted("2")
    B = catalog_kz2()
    twist = hom_tensor_twist(A, B)
    assert twist.left is B and twist.right is A
    assert check_twist_conditions(twist).passed
    assert check_R_coalgebra_map(twist).passed


def test_flip_degenerates_to_tensor_product():
    kz2 = catalog_kz2()
    twist = hom_tensor_twist(kz2, kz2)
    assert twist.R == permute([2, 2], [1, 0])
    built = build_r_smash(kz2, kz2, twist).underlying
    assert built.mul == tensor(kz2.mul, kz2.mul) @ permute([2, 2, 2, 2], [0, 2, 1, 3])
    assert list(built.unit) == [1, 0, 0, 0]
    assert built.comul == build_tensor_hom_coalgebra(kz2, kz2).comul
    assert built.counit == tensor(kz2.counit, kz2.counit)
    assert built.antipode == identity_map(4)
    assert built.gamma == identity_map(4)
    assert check_all(built).passed


def test_unit_violating_twist():
    kz2 = catalog_kz2()
    doubled = TwistMap(kz2, kz2, hom_tensor_twist(kz2, kz2).R.scaled(2))
    report = check_twist_conditions(doubled)
    assert not report["C1 unit of B"].passed
    assert not report["C1 unit of A"].passed
    assert report["intertwining"].passed
    with pytest.raises(PreconditionError) as info:
        r_smash_algebra(kz2, kz2, doubled)
    assert not info.value.report.passed
    forced = r_smash_algebra(kz2, kz2, doubled, force=True)
    algebra_report = check_hom_algebra(forced)
    assert not algebra_report["HA2 right unit"].passed
    assert not algebra_report["HA2 left unit"].passed


@pytest.mark.parametrize("k", KS)
def test_section5_smash_is_a_hom_hopf_algebra(k):
    built = catalog_section5_smash(k)
    assert built.dim == 8
    assert check_all(built.underlying).passed
    assert antipode_agreement(built).passed


def test_section5_multiplication(product):  # pylint:disable=redefined-outer-name
    # (1⊗a)(x⊗1) = -k x⊗a
    col = product.underlying.mul.column(1 * 8 + 4)
    assert render_vector(col, product.basis) == "-2 x⊗a"
    # (x⊗1)(1⊗a) = x⊗a scaled by α
    assert render_vector(product.underlying.mul.column(4 * 8 + 1), product.basis) == "2 x⊗a"


def test_section5_antipode(product, shared_datadir):  # pylint:disable=redefined-outer-name
    with open(shared_datadir / "smash_antipode.json", "r", encoding="utf-8") as f:
        expected = json.load(f)
    assert product.basis == expected["basis"]
    S = product.underlying.antipode
    for i, name in enumerate(product.basis):
        assert render_vector(S.column(i), product.basis) == expected["images"][name]
    for name, printed in expected["misprinted"].items():
        assert render_vector(S.column(product.basis.index(name)), product.basis) != printed


def test_antipode_formulas_agree(product):  # pylint:disable=redefined-outer-name
    direct = smash_antipode_from_action(product.left, product.right, product.action)
    assert direct == product.underlying.antipode
    report = check_hom_hopf(product.underlying)
    assert report["antipode left"].passed and report["antipode right"].passed


def test_embeddings_are_morphisms(product):  # pylint:disable=redefined-outer-name
    i, j = product.embed_left(), product.embed_right()
    assert check_bialgebra_morphism(i, product.left, product.underlying).passed
    assert check_bialgebra_morphism(j, product.right, product.underlying).passed
    # i(x) = x⊗1, j(a) = 1⊗a
    assert render_vector(i.column(2), product.basis) == "x⊗1"
    assert render_vector(j.column(1), product.basis) == "1⊗a"


def test_induced_twist(product):  # pylint:disable=redefined-outer-name
    twist = action_induced_twist(product.action)
    assert twist == product.twist
    # R(a⊗x) = a▷x⊗a
    col = twist.R.column(1 * 4 + 2)
    assert render_vector(col, product_basis(product.left.basis, product.right.basis)) == "-2 x⊗a"
    assert check_twist_conditions(twist).passed
    assert check_R_coalgebra_map(twist).passed


def test_build_smash_rejects_bad_action():
    act = catalog_section5_action("2")
    entries = act.act.entries.copy()
    entries[:, 1 * 4 + 2] = [Fraction(0), Fraction(0), Fraction(2), Fraction(0)]
    bad = act.__class__(act.acting, act.carrier, LinMap(entries))
    with pytest.raises(PreconditionError) as info:
        build_smash(act.carrier, act.acting, bad)
    assert "HMA1" in [r.name for r in info.value.report.failures]


def test_regular_action_gives_no_smash_product():
    H = catalog_taft_twisted("2")
    twist = action_induced_twist(regular_action(H), force=True)
    assert not check_R_coalgebra_map(twist).passed
    with pytest.raises(PreconditionError):
        build_r_smash(H, H, twist)


def test_antipode_agreement_needs_an_action():
    kz2 = catalog_kz2()
    built = build_r_smash(kz2, kz2, hom_tensor_twist(kz2, kz2))
    with pytest.raises(StructureError):
        antipode_agreement(built)


def test_smash_with_the_ground_field():
    A, K = catalog_taft_twisted("2"), catalog_ground_field()
    built = build_smash(A, K, trivial_action(K, A))
    assert built.dim == A.dim
    assert built.underlying.mul == A.mul
    assert built.underlying.gamma == A.gamma
    assert check_hom_hopf(built.underlying).passed
