# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf homcore cocommutation
"""Twist maps, R-smash products and smash products built from module actions.

A twist map ``R: B⊗A -> A⊗B`` is written ``R(b⊗a) = a_R⊗b_R``. Sweedler expressions are evaluated
as chains of structure maps and factor permutations over flat tensor indices.
"""
import logging
from typing import Any, List

from homhopf.actions import (HomModuleAction, check_cocommutation_condition, check_hom_module,
                             check_module_hom_algebra, check_module_hom_coalgebra)
from homhopf.exactlin import LinMap, compose_all, identity_map, invert, permute, swap, tensor, tensor_all
from homhopf.homcore import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra
from homhopf.report import CheckReport, ConditionResult, DimensionError, PreconditionError, StructureError, compare_maps


def product_basis(left: List[str], right: List[str]) -> List[str]:
    """Names of ``e⊗f`` in flat order."""
    return [f"{a}⊗{b}" for a in left for b in right]


class TwistMap:
    """A linear map ``R: B⊗A -> A⊗B`` between the Hom-algebras ``(B, beta)`` (left) and ``(A, alpha)`` (right)."""

    def __init__(self, left: HomAlgebra | HomBialgebra, right: HomAlgebra | HomBialgebra, R: LinMap,
                 name: str = "") -> None:
        expected = left.dim * right.dim
        if R.dom_dim != expected or R.cod_dim != expected:
            raise DimensionError(f"Twist map must be {expected}x{expected}, got {R.cod_dim}x{R.dom_dim}")
        self.left = left
        self.right = right
        self.R: LinMap = R
        self.name: str = name or f"R: {left.name}⊗{right.name}"

    def r_alpha(self) -> LinMap:
        """``b⊗a ↦ α(α⁻¹(a)_R)⊗b_R``, the form in which ``R`` enters the compatibility conditions."""
        return compose_all(tensor(self.right.alpha, identity_map(self.left.dim)), self.R,
                           tensor(identity_map(self.left.dim), invert(self.right.alpha)))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, TwistMap):
            return all([self.left == other.left, self.right == other.right, self.R == other.R])
        return False

    def __repr__(self) -> str:
        return f"TwistMap({self.name})"


def hom_tensor_twist(A: HomAlgebra | HomBialgebra, B: HomAlgebra | HomBialgebra) -> TwistMap:
    """``R(b⊗a) = α(a)⊗β(b)``; with trivial structure maps this is the flip."""
    R = tensor(A.alpha, B.alpha) @ swap(B.dim, A.dim)
    return TwistMap(B, A, R, name=f"tensor twist {B.name}⊗{A.name}")


def check_twist_conditions(twist: TwistMap) -> CheckReport:
    """Verify the intertwining condition and (C1)-(C3).

    Witness variable orders: intertwining over ``(b, a)``, (C1) over ``(a,)`` and ``(b,)``,
    (C2) over ``(b, b', a)``, (C3) over ``(b, a, a')``.
    """
    A, B, R = twist.right, twist.left, twist.R
    na, nb = A.dim, B.dim
    alpha, beta = A.alpha, B.alpha
    beta_inv = invert(beta)
    invert(alpha)
    id_a, id_b = identity_map(na), identity_map(nb)
    report = CheckReport(twist.name)
    report.add(compare_maps("intertwining", R @ tensor(beta, alpha), tensor(alpha, beta) @ R, [nb, na], ("b", "a")))
    report.add(compare_maps("C1 unit of B", R @ tensor(B.eta, id_a), tensor(alpha, B.eta), [na], ("a",)))
    report.add(compare_maps("C1 unit of A", R @ tensor(id_b, A.eta), tensor(A.eta, beta), [nb], ("b",)))
    c2_rhs = compose_all(tensor(id_a, B.mul @ tensor(beta_inv, id_b)),
                         tensor(R @ tensor(beta, id_a), id_b),
                         tensor(id_b, R))
    report.add(compare_maps("C2", R @ tensor(B.mul, alpha), c2_rhs, [nb, nb, na], ("b", "b'", "a")))
    c3_lhs = compose_all(tensor(alpha, id_b), R, tensor(beta, A.mul))
    c3_rhs = compose_all(tensor(A.mul @ tensor(alpha, id_a), id_b),
                         tensor(id_a, R @ tensor(id_b, alpha)),
                         tensor(R, id_a))
    report.add(compare_maps("C3", c3_lhs, c3_rhs, [nb, na, na], ("b", "a", "a'")))
    return report


def tensor_comul(C: HomCoalgebra | HomBialgebra, D: HomCoalgebra | HomBialgebra) -> LinMap:
    """``c⊗d ↦ c1⊗d1⊗c2⊗d2``."""
    return permute([C.dim, C.dim, D.dim, D.dim], [0, 2, 1, 3]) @ tensor(C.comul, D.comul)


def build_tensor_hom_coalgebra(C: HomCoalgebra | HomBialgebra, D: HomCoalgebra | HomBialgebra) -> HomCoalgebra:
    """The tensor product Hom-coalgebra with structure map ``β_C⊗β_D``."""
    beta_c = C.beta
    beta_d = D.beta
    return HomCoalgebra(C.dim * D.dim, product_basis(C.basis, D.basis), tensor_comul(C, D),
                        tensor(C.counit, D.counit), tensor(beta_c, beta_d), name=f"{C.name}⊗{D.name}")


def check_R_coalgebra_map(twist: TwistMap) -> CheckReport:
    """``R`` is a coalgebra map ``B⊗A -> A⊗B`` for the tensor product Hom-coalgebras, over ``(b, a)``."""
    A, B, R = twist.right, twist.left, twist.R
    if not (isinstance(A, HomBialgebra) and isinstance(B, HomBialgebra)):
        raise StructureError("Both sides of the twist need a coalgebra structure")
    report = CheckReport(twist.name)
    report.add(compare_maps("R comultiplicative", tensor_comul(A, B) @ R, tensor(R, R) @ tensor_comul(B, A),
                            [B.dim, A.dim], ("b", "a")))
    report.add(compare_maps("R counital", tensor(A.counit, B.counit) @ R, tensor(B.counit, A.counit),
                            [B.dim, A.dim], ("b", "a")))
    return report


def _smash_mul(A: HomAlgebra | HomBialgebra, B: HomAlgebra | HomBialgebra, R: LinMap) -> LinMap:
    """``(a⊗b)(a'⊗b') = a·α⁻¹(a')_R ⊗ β⁻¹(b_R)·b'``."""
    na, nb = A.dim, B.dim
    id_a, id_b = identity_map(na), identity_map(nb)
    middle = R @ tensor(id_b, invert(A.alpha))
    return compose_all(tensor(A.mul, B.mul @ tensor(invert(B.alpha), id_b)), tensor_all(id_a, middle, id_b))


def _enforce(report: CheckReport, force: bool, what: str):
    if report.passed:
        return
    failed = ", ".join(r.name for r in report.failures)
    if force:
        logging.getLogger().warning("Forcing %s although %s fail", what, failed)
        return
    raise PreconditionError(f"Cannot build {what}: {failed} violated", report)


def r_smash_algebra(A: HomAlgebra | HomBialgebra, B: HomAlgebra | HomBialgebra, twist: TwistMap,
                    force: bool = False) -> HomAlgebra:
    """The R-smash product Hom-algebra on ``A⊗B`` with unit ``1_A⊗1_B`` and structure map ``α⊗β``.

    Args:
        A (HomAlgebra): right hand algebra of the twist
        B (HomAlgebra): left hand algebra of the twist
        twist (TwistMap): ``R: B⊗A -> A⊗B``
        force (bool): build even when the twist conditions fail

    Raises:
        PreconditionError: the twist conditions fail and ``force`` is not set
    """
    _enforce(check_twist_conditions(twist), force, "R-smash product")
    unit = tensor(A.eta, B.eta).column(0)
    return HomAlgebra(A.dim * B.dim, product_basis(A.basis, B.basis), _smash_mul(A, B, twist.R), unit,
                      tensor(A.alpha, B.alpha), name=f"{A.name}#{B.name}")


def r_smash_antipode(A: HomHopfAlgebra, B: HomHopfAlgebra, twist: TwistMap) -> LinMap:
    """``S̄(a⊗b) = α⁻¹(S_A(a))_R ⊗ β⁻¹(S_B(b)_R)``."""
    return compose_all(tensor(identity_map(A.dim), invert(B.gamma)), twist.R,
                       tensor(B.antipode, invert(A.gamma) @ A.antipode), swap(A.dim, B.dim))


class SmashProduct:
    """A Hom-Hopf algebra on ``A⊗B`` together with the data it was built from."""

    def __init__(self, underlying: HomHopfAlgebra, left: HomHopfAlgebra, right: HomHopfAlgebra, twist: TwistMap,
                 action: HomModuleAction | None = None) -> None:
        self.underlying: HomHopfAlgebra = underlying
        self.left: HomHopfAlgebra = left
        self.right: HomHopfAlgebra = right
        self.twist: TwistMap = twist
        self.action: HomModuleAction | None = action

    @property
    def dim(self) -> int:
        return self.underlying.dim

    @property
    def basis(self) -> List[str]:
        return self.underlying.basis

    def embed_left(self) -> LinMap:
        """``i(a) = a⊗1_B``."""
        return tensor(identity_map(self.left.dim), self.right.eta)

    def embed_right(self) -> LinMap:
        """``j(b) = 1_A⊗b``."""
        return tensor(self.left.eta, identity_map(self.right.dim))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, SmashProduct):
            return all([self.underlying == other.underlying, self.left == other.left,
                        self.right == other.right, self.twist == other.twist])
        return False

    def __repr__(self) -> str:
        return f"SmashProduct({self.underlying.name})"


def build_r_smash(A: HomHopfAlgebra, B: HomHopfAlgebra, twist: TwistMap, force: bool = False,
                  name: str = "") -> SmashProduct:
    """The R-smash product Hom-Hopf algebra.

    The twist must satisfy (C1)-(C3) and be a coalgebra map; ``force`` builds regardless and only
    logs a warning.
    """
    report = check_twist_conditions(twist)
    report.extend(check_R_coalgebra_map(twist))
    _enforce(report, force, "R-smash product")
    algebra = r_smash_algebra(A, B, twist, force=True)
    coalgebra = build_tensor_hom_coalgebra(A, B)
    name = name or f"{A.name}#{B.name}"
    algebra.name = coalgebra.name = name
    underlying = HomHopfAlgebra(HomBialgebra(algebra, coalgebra), r_smash_antipode(A, B, twist), name)
    logging.getLogger().info("Built R-smash product %s of dimension %d", name, underlying.dim)
    return SmashProduct(underlying, A, B, twist)


def action_induced_twist(act: HomModuleAction, force: bool = False) -> TwistMap:
    """``R(h⊗a) = h1▷a⊗h2`` for a module Hom-algebra ``A`` over ``H``."""
    report = check_hom_module(act)
    report.extend(check_module_hom_algebra(act))
    _enforce(report, force, "action-induced twist")
    H, A = act.acting, act.carrier
    nh, na = H.dim, A.dim
    R = compose_all(tensor(act.act, identity_map(nh)), permute([nh, nh, na], [0, 2, 1]),
                    tensor(H.comul, identity_map(na)))
    return TwistMap(H, A, R, name=f"twist induced by {act.name}")


def smash_antipode_from_action(A: HomHopfAlgebra, H: HomHopfAlgebra, act: HomModuleAction) -> LinMap:
    """``S(a⊗h) = S_H(h)1▷α⁻¹(S_A(a)) ⊗ β⁻¹(S_H(h)2)``, computed from the action directly."""
    nh, na = H.dim, A.dim
    return compose_all(tensor(act.act, invert(H.gamma)),
                       permute([nh, nh, na], [0, 2, 1]),
                       tensor(H.comul @ H.antipode, invert(A.gamma) @ A.antipode),
                       swap(na, nh))


def build_smash(A: HomHopfAlgebra, H: HomHopfAlgebra, act: HomModuleAction, force: bool = False,
                name: str = "") -> SmashProduct:
    """The smash product Hom-Hopf algebra ``A♮H`` of a module Hom-algebra and Hom-coalgebra.

    Raises:
        PreconditionError: one of the module conditions fails, the report names which
        StructureError: the two antipode formulas disagree
    """
    report = check_hom_module(act)
    report.extend(check_module_hom_algebra(act))
    report.extend(check_module_hom_coalgebra(act))
    report.extend(check_cocommutation_condition(act))
    _enforce(report, force, "smash product")
    twist = action_induced_twist(act, force=True)
    product = build_r_smash(A, H, twist, force=force, name=name or f"{A.name}#{H.name}")
    product.action = act
    direct = smash_antipode_from_action(A, H, act)
    if direct != product.underlying.antipode:
        diff = compare_maps("antipode formulas agree", product.underlying.antipode, direct, [A.dim, H.dim], ("a", "h"))
        if not force:
            raise StructureError(f"Antipode formulas disagree at {diff.witness}")
        logging.getLogger().warning("Antipode formulas disagree at %s", diff.witness)
    return product


def antipode_agreement(product: SmashProduct) -> ConditionResult:
    """Compare the stored antipode with the action formula, for products built from an action."""
    if product.action is None:
        raise StructureError("The smash product was not built from an action")
    direct = smash_antipode_from_action(product.left, product.right, product.action)
    return compare_maps("antipode formulas agree", product.underlying.antipode, direct,
                        [product.left.dim, product.right.dim], ("a", "h"))
