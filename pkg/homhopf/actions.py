# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf homcore cocommutation
"""Left Hom-modules and the module Hom-algebra / module Hom-coalgebra conditions."""
from typing import Any

from homhopf.exactlin import LinMap, compose_all, identity_map, invert, permute, tensor, tensor_all
from homhopf.homcore import HomAlgebra, HomBialgebra, HomCoalgebra
from homhopf.report import CheckReport, DimensionError, StructureError, compare_maps


class HomModuleAction:
    """An action ``act: H⊗A -> A`` of the Hom-bialgebra ``(H, beta)`` on ``(A, alpha)``.

    The carrier is a Hom-algebra, a Hom-coalgebra or both (a Hom-bialgebra); which checks apply
    depends on what it carries.
    """

    def __init__(self, acting: HomBialgebra, carrier: HomAlgebra | HomCoalgebra | HomBialgebra, act: LinMap,
                 name: str = "") -> None:
        if act.cod_dim != carrier.dim or act.dom_dim != acting.dim * carrier.dim:
            raise DimensionError(f"Action must be {carrier.dim}x{acting.dim * carrier.dim}, got {act.cod_dim}x{act.dom_dim}")
        self.acting = acting
        self.carrier = carrier
        self.act: LinMap = act
        self.name: str = name or f"{acting.name} on {carrier.name}"

    @property
    def alpha(self) -> LinMap:
        """Structure map of the carrier."""
        if isinstance(self.carrier, HomCoalgebra):
            return self.carrier.beta
        return self.carrier.alpha

    @property
    def beta(self) -> LinMap:
        """Structure map of the acting Hom-bialgebra."""
        return self.acting.gamma

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, HomModuleAction):
            return all([self.acting == other.acting, self.carrier == other.carrier, self.act == other.act])
        return False

    def __repr__(self) -> str:
        return f"HomModuleAction({self.name})"


def _has_algebra(carrier) -> bool:
    return isinstance(carrier, (HomAlgebra, HomBialgebra))


def _has_coalgebra(carrier) -> bool:
    return isinstance(carrier, (HomCoalgebra, HomBialgebra))


def check_hom_module(act: HomModuleAction) -> CheckReport:
    """Verify (HM1) and (HM2) over ``(h, m)`` and ``(h, h', m)``."""
    H = act.acting
    nh, na = H.dim, act.carrier.dim
    alpha, beta, rho = act.alpha, act.beta, act.act
    invert(alpha)
    report = CheckReport(act.name)
    report.add(compare_maps("HM1", alpha @ rho, rho @ tensor(beta, alpha), [nh, na], ("h", "m")))
    report.add(compare_maps("HM2 associativity", rho @ tensor(beta, rho), rho @ tensor(H.mul, alpha), [nh, nh, na],
                            ("h", "h'", "m")))
    report.add(compare_maps("HM2 unit", rho @ tensor(H.eta, identity_map(na)), alpha, [na], ("m",)))
    return report


def check_module_hom_algebra(act: HomModuleAction) -> CheckReport:
    """Verify (HMA1) over ``(h, a, a')`` and (HMA2) over ``(h,)``."""
    if not _has_algebra(act.carrier):
        raise StructureError("The carrier of a module Hom-algebra must be a Hom-algebra")
    H, A = act.acting, act.carrier
    nh, na = H.dim, A.dim
    rho, beta = act.act, act.beta
    ident = identity_map(na)
    report = CheckReport(act.name)
    lhs = rho @ tensor(beta @ beta, A.mul)
    rhs = compose_all(A.mul, tensor(rho, rho), permute([nh, nh, na, na], [0, 2, 1, 3]), tensor_all(H.comul, ident, ident))
    report.add(compare_maps("HMA1", lhs, rhs, [nh, na, na], ("h", "a", "a'")))
    report.add(compare_maps("HMA2", rho @ tensor(identity_map(nh), A.eta), A.eta @ H.counit, [nh], ("h",)))
    return report


def check_module_hom_coalgebra(act: HomModuleAction) -> CheckReport:
    """The action respects comultiplication and counit of the carrier, over ``(h, a)``."""
    if not _has_coalgebra(act.carrier):
        raise StructureError("The carrier of a module Hom-coalgebra must be a Hom-coalgebra")
    H, A = act.acting, act.carrier
    nh, na = H.dim, A.dim
    rho = act.act
    report = CheckReport(act.name)
    rhs = compose_all(tensor(rho, rho), permute([nh, nh, na, na], [0, 2, 1, 3]), tensor(H.comul, A.comul))
    report.add(compare_maps("module coalgebra comul", A.comul @ rho, rhs, [nh, na], ("h", "a")))
    report.add(compare_maps("module coalgebra counit", A.counit @ rho, tensor(H.counit, A.counit), [nh, na], ("h", "a")))
    return report


def check_cocommutation_condition(act: HomModuleAction) -> CheckReport:
    """``h1⊗(h2▷a) = h2⊗(h1▷a)`` as maps ``H⊗A -> H⊗A``."""
    H = act.acting
    nh, na = H.dim, act.carrier.dim
    side = tensor(identity_map(nh), act.act)
    split = tensor(H.comul, identity_map(na))
    report = CheckReport(act.name)
    report.add(compare_maps("cocommutation", side @ split, compose_all(side, permute([nh, nh, na], [1, 0, 2]), split),
                            [nh, na], ("h", "a")))
    return report


def regular_action(H: HomBialgebra) -> HomModuleAction:
    """``H`` acting on itself by multiplication."""
    return HomModuleAction(H, H, H.mul, name=f"regular action of {H.name}")


def trivial_action(H: HomBialgebra, A: HomAlgebra | HomCoalgebra | HomBialgebra) -> HomModuleAction:
    """``h▷m = ε(h)α(m)``."""
    alpha = A.beta if isinstance(A, HomCoalgebra) else A.alpha
    return HomModuleAction(H, A, tensor(H.counit, alpha), name=f"trivial action of {H.name} on {A.name}")
