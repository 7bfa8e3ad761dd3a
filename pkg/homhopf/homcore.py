# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf homcore coassoc unflatten
"""Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras with their axiom checkers.

Every "for all elements" axiom is multilinear in its free variables, so it is checked on basis
tuples only: both sides are built as linear maps on the tensor power and compared column by column.
"""
import logging
from typing import Any, List, Sequence

import numpy as np

from homhopf.exactlin import LinMap, compose_all, fraction_array, identity_map, invert, permute, tensor, tensor_all
from homhopf.report import CheckReport, ConditionResult, DimensionError, StructureError, compare_maps


def _check_basis(dim: int, basis: Sequence[str] | None) -> List[str]:
    if dim < 1:
        raise DimensionError(f"Dimension must be positive, got {dim}")
    if basis is None:
        return [f"e{i}" for i in range(dim)]
    basis = [str(b) for b in basis]
    if len(basis) != dim:
        raise DimensionError(f"{len(basis)} basis names given for dimension {dim}")
    if len(set(basis)) != dim:
        raise StructureError(f"Basis names must be distinct: {basis}")
    return basis


def _check_shape(label: str, f: LinMap, cod_dim: int, dom_dim: int):
    if f.cod_dim != cod_dim or f.dom_dim != dom_dim:
        raise DimensionError(f"{label} must be {cod_dim}x{dom_dim}, got {f.cod_dim}x{f.dom_dim}")


class HomAlgebra:
    """A Hom-algebra ``(A, mul, 1_A, alpha)`` given by structure constants.

    ``mul`` maps ``A⊗A -> A`` (a ``dim x dim²`` matrix), ``unit`` is the coordinate vector of
    ``1_A`` and ``alpha`` the twisting automorphism.
    """

    def __init__(self, dim: int, basis: Sequence[str] | None, mul: LinMap, unit: Sequence, alpha: LinMap,
                 name: str = "") -> None:
        self.dim: int = int(dim)
        self.basis: List[str] = _check_basis(self.dim, basis)
        _check_shape("mul", mul, self.dim, self.dim * self.dim)
        _check_shape("alpha", alpha, self.dim, self.dim)
        unit_vec = fraction_array(unit)
        if unit_vec.shape != (self.dim,):
            raise DimensionError(f"unit must have {self.dim} coordinates, got {unit_vec.shape[0]}")
        self.mul: LinMap = mul
        self.unit: np.ndarray = unit_vec
        self.alpha: LinMap = alpha
        self.name: str = name

    @property
    def eta(self) -> LinMap:
        """The unit as a map ``K -> A``."""
        return LinMap(self.unit.reshape(self.dim, 1))

    def product(self, i: int, j: int) -> np.ndarray:
        """Coordinates of ``e_i · e_j``."""
        return self.mul.column(i * self.dim + j)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, HomAlgebra):
            return all([
                self.dim == other.dim,
                self.basis == other.basis,
                self.mul == other.mul,
                bool(np.array_equal(self.unit, other.unit)),
                self.alpha == other.alpha,
            ])
        return False

    def __repr__(self) -> str:
        return f"HomAlgebra({self.name or self.basis})"


class HomCoalgebra:
    """A Hom-coalgebra ``(C, comul, counit, beta)``; ``comul`` is ``dim² x dim``, ``counit`` is ``1 x dim``."""

    def __init__(self, dim: int, basis: Sequence[str] | None, comul: LinMap, counit: LinMap, beta: LinMap,
                 name: str = "") -> None:
        self.dim: int = int(dim)
        self.basis: List[str] = _check_basis(self.dim, basis)
        _check_shape("comul", comul, self.dim * self.dim, self.dim)
        _check_shape("counit", counit, 1, self.dim)
        _check_shape("beta", beta, self.dim, self.dim)
        self.comul: LinMap = comul
        self.counit: LinMap = counit
        self.beta: LinMap = beta
        self.name: str = name

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, HomCoalgebra):
            return all([
                self.dim == other.dim,
                self.basis == other.basis,
                self.comul == other.comul,
                self.counit == other.counit,
                self.beta == other.beta,
            ])
        return False

    def __repr__(self) -> str:
        return f"HomCoalgebra({self.name or self.basis})"


class HomBialgebra:
    """An algebra and a coalgebra on the same space sharing one structure map ``gamma``."""

    def __init__(self, algebra: HomAlgebra, coalgebra: HomCoalgebra, name: str = "") -> None:
        if algebra.dim != coalgebra.dim:
            raise DimensionError(f"Algebra has dimension {algebra.dim} but coalgebra has dimension {coalgebra.dim}")
        if algebra.basis != coalgebra.basis:
            raise StructureError(f"Algebra basis {algebra.basis} differs from coalgebra basis {coalgebra.basis}")
        if algebra.alpha != coalgebra.beta:
            raise StructureError("A Hom-bialgebra needs one structure map, but alpha and beta differ")
        self.algebra: HomAlgebra = algebra
        self.coalgebra: HomCoalgebra = coalgebra
        self.name: str = name or algebra.name

    dim = property(lambda self: self.algebra.dim)
    basis = property(lambda self: self.algebra.basis)
    mul = property(lambda self: self.algebra.mul)
    unit = property(lambda self: self.algebra.unit)
    eta = property(lambda self: self.algebra.eta)
    comul = property(lambda self: self.coalgebra.comul)
    counit = property(lambda self: self.coalgebra.counit)
    gamma = property(lambda self: self.algebra.alpha)
    alpha = gamma
    beta = gamma

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, HomBialgebra):
            return all([self.algebra == other.algebra, self.coalgebra == other.coalgebra])
        return False

    def __repr__(self) -> str:
        return f"HomBialgebra({self.name or self.basis})"


class HomHopfAlgebra(HomBialgebra):
    """A Hom-bialgebra with an antipode."""

    def __init__(self, bialgebra: HomBialgebra, antipode: LinMap, name: str = "") -> None:
        super().__init__(bialgebra.algebra, bialgebra.coalgebra, name or bialgebra.name)
        _check_shape("antipode", antipode, self.dim, self.dim)
        self.antipode: LinMap = antipode

    @property
    def bialgebra(self) -> HomBialgebra:
        return HomBialgebra(self.algebra, self.coalgebra, self.name)

    @classmethod
    def from_constants(cls, basis: Sequence[str], mul: LinMap, unit: Sequence, comul: LinMap, counit: LinMap,
                       antipode: LinMap, gamma: LinMap, name: str = "") -> "HomHopfAlgebra":
        dim = len(basis)
        return cls(HomBialgebra(HomAlgebra(dim, basis, mul, unit, gamma, name),
                                HomCoalgebra(dim, basis, comul, counit, gamma, name)), antipode, name)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, HomHopfAlgebra):
            return all([super().__eq__(other), self.antipode == other.antipode])
        return False

    def __repr__(self) -> str:
        return f"HomHopfAlgebra({self.name or self.basis})"


def _one() -> LinMap:
    return identity_map(1)


def check_hom_algebra(A: HomAlgebra) -> CheckReport:
    """Verify (HA1) and (HA2).

    Raises:
        StructureError: ``alpha`` is not invertible
    """
    invert(A.alpha)
    n = A.dim
    ident = identity_map(n)
    mu, alpha, eta = A.mul, A.alpha, A.eta
    report = CheckReport(A.name or "hom-algebra")
    report.add(compare_maps("HA1 multiplicativity", alpha @ mu, mu @ tensor(alpha, alpha), [n, n], ("a", "a'")))
    report.add(compare_maps("HA1 unit", alpha @ eta, eta, [], ()))
    report.add(compare_maps("HA2 associativity", mu @ tensor(alpha, mu), mu @ tensor(mu, alpha), [n, n, n],
                            ("a", "a'", "a''")))
    report.add(compare_maps("HA2 right unit", mu @ tensor(ident, eta), alpha, [n], ("a",)))
    report.add(compare_maps("HA2 left unit", mu @ tensor(eta, ident), alpha, [n], ("a",)))
    return report


def check_hom_coalgebra(C: HomCoalgebra) -> CheckReport:
    """Verify (HC1) and (HC2).

    Raises:
        StructureError: ``beta`` is not invertible
    """
    invert(C.beta)
    n = C.dim
    ident = identity_map(n)
    delta, eps, beta = C.comul, C.counit, C.beta
    report = CheckReport(C.name or "hom-coalgebra")
    report.add(compare_maps("HC1 comultiplicativity", delta @ beta, tensor(beta, beta) @ delta, [n], ("c",)))
    report.add(compare_maps("HC1 counit", eps @ beta, eps, [n], ("c",)))
    report.add(compare_maps("HC2 coassociativity", tensor(beta, delta) @ delta, tensor(delta, beta) @ delta, [n], ("c",)))
    report.add(compare_maps("HC2 left counit", tensor(eps, ident) @ delta, beta, [n], ("c",)))
    report.add(compare_maps("HC2 right counit", tensor(ident, eps) @ delta, beta, [n], ("c",)))
    return report


def check_derived_coassoc_identities(C: HomCoalgebra) -> CheckReport:
    """The rearrangements of twisted coassociativity into the triple and quadruple tensor power.

    * ``c1⊗c21⊗c22 = β⁻¹(c11)⊗c12⊗β(c2)``
    * ``c11⊗c12⊗c2 = β(c1)⊗c21⊗β⁻¹(c22)``
    * ``c11⊗c12⊗c21⊗c22 = β(c1)⊗β⁻¹(c211)⊗β⁻¹(c212)⊗c22``
    """
    n = C.dim
    ident = identity_map(n)
    delta, beta = C.comul, C.beta
    beta_inv = invert(beta)
    report = CheckReport(C.name or "hom-coalgebra")
    report.add(compare_maps("coassociativity rearranged right",
                            tensor(ident, delta) @ delta,
                            compose_all(tensor_all(beta_inv, ident, beta), tensor(delta, ident), delta),
                            [n], ("c",)))
    report.add(compare_maps("coassociativity rearranged left",
                            tensor(delta, ident) @ delta,
                            compose_all(tensor_all(beta, ident, beta_inv), tensor(ident, delta), delta),
                            [n], ("c",)))
    report.add(compare_maps("coassociativity fourfold",
                            tensor(delta, delta) @ delta,
                            compose_all(tensor_all(beta, beta_inv, beta_inv, ident), tensor_all(ident, delta, ident),
                                        tensor(ident, delta), delta),
                            [n], ("c",)))
    return report


def check_hom_bialgebra(H: HomBialgebra) -> CheckReport:
    """Verify that comultiplication and counit are morphisms of Hom-algebras."""
    n = H.dim
    mu, delta, eps, eta = H.mul, H.comul, H.counit, H.eta
    report = CheckReport(H.name or "hom-bialgebra")
    mul_tensor = tensor(mu, mu) @ permute([n, n, n, n], [0, 2, 1, 3])
    report.add(compare_maps("comul multiplicative", delta @ mu, mul_tensor @ tensor(delta, delta), [n, n], ("h", "h'")))
    report.add(compare_maps("comul unit", delta @ eta, tensor(eta, eta), [], ()))
    report.add(compare_maps("counit multiplicative", eps @ mu, tensor(eps, eps), [n, n], ("h", "h'")))
    report.add(compare_maps("counit unit", eps @ eta, _one(), [], ()))
    return report


def convolution(H: HomBialgebra, f: LinMap, g: LinMap) -> LinMap:
    """The convolution product ``f∗g = mul∘(f⊗g)∘comul`` of two endomorphisms of ``H``."""
    return compose_all(H.mul, tensor(f, g), H.comul)


def check_hom_hopf(H: HomHopfAlgebra) -> CheckReport:
    """Verify the antipode identities and that the antipode commutes with ``gamma``."""
    n = H.dim
    ident = identity_map(n)
    S = H.antipode
    unit_counit = H.eta @ H.counit
    report = CheckReport(H.name or "hom-hopf")
    report.add(compare_maps("antipode left", convolution(H, S, ident), unit_counit, [n], ("h",)))
    report.add(compare_maps("antipode right", convolution(H, ident, S), unit_counit, [n], ("h",)))
    report.add(compare_maps("antipode commutes with structure map", S @ H.gamma, H.gamma @ S, [n], ("h",)))
    return report


def check_all(H: HomAlgebra | HomCoalgebra | HomBialgebra) -> CheckReport:
    """Run every suite that applies to ``H``."""
    report = CheckReport(getattr(H, "name", "") or type(H).__name__)
    if isinstance(H, HomBialgebra):
        report.extend(check_hom_algebra(H.algebra))
        report.extend(check_hom_coalgebra(H.coalgebra))
        report.extend(check_derived_coassoc_identities(H.coalgebra))
        report.extend(check_hom_bialgebra(H))
        if isinstance(H, HomHopfAlgebra):
            report.extend(check_hom_hopf(H))
    elif isinstance(H, HomAlgebra):
        report.extend(check_hom_algebra(H))
    elif isinstance(H, HomCoalgebra):
        report.extend(check_hom_coalgebra(H))
        report.extend(check_derived_coassoc_identities(H))
    else:
        raise StructureError(f"Nothing to check on {type(H).__name__}")
    return report


def check_yau_automorphism(H: HomHopfAlgebra, auto: LinMap) -> CheckReport:
    """Check that ``auto`` is an automorphism of the ordinary Hopf algebra ``H``."""
    n = H.dim
    report = CheckReport(f"automorphism of {H.name or 'hopf algebra'}")
    try:
        invert(auto)
        report.add(ConditionResult("automorphism bijective", True))
    except StructureError:
        report.add(ConditionResult("automorphism bijective", False, note="singular"))
    except DimensionError:
        report.add(ConditionResult("automorphism bijective", False, note=f"shape {auto.cod_dim}x{auto.dom_dim}"))
        return report
    report.add(compare_maps("automorphism multiplicative", auto @ H.mul, H.mul @ tensor(auto, auto), [n, n], ("h", "h'")))
    report.add(compare_maps("automorphism unital", auto @ H.eta, H.eta, [], ()))
    report.add(compare_maps("automorphism comultiplicative", H.comul @ auto, tensor(auto, auto) @ H.comul, [n], ("h",)))
    report.add(compare_maps("automorphism counital", H.counit @ auto, H.counit, [n], ("h",)))
    report.add(compare_maps("automorphism commutes with antipode", auto @ H.antipode, H.antipode @ auto, [n], ("h",)))
    return report


def yau_twist(H: HomHopfAlgebra, auto: LinMap, name: str = "") -> HomHopfAlgebra:
    """Twist an ordinary Hopf algebra along a Hopf automorphism.

    Returns ``(H, auto∘mul, 1, comul∘auto, counit, auto)`` with the same antipode.

    Raises:
        StructureError: ``H`` is already twisted, or ``auto`` is not a Hopf automorphism
    """
    if not H.gamma.is_identity():
        raise StructureError("The Yau twist needs an ordinary Hopf algebra (structure map = identity)")
    report = check_yau_automorphism(H, auto)
    if not report.passed:
        raise StructureError(f"Not a Hopf automorphism: {', '.join(r.name for r in report.failures)} violated")
    twisted = HomHopfAlgebra.from_constants(H.basis, auto @ H.mul, H.unit, H.comul @ auto, H.counit,
                                            H.antipode, auto, name or H.name)
    logging.getLogger().info("Built Yau twist %s of dimension %d", twisted.name, twisted.dim)
    return twisted


def check_bialgebra_morphism(f: LinMap, H: HomBialgebra, H2: HomBialgebra) -> CheckReport:
    """Check that ``f: H -> H2`` is a Hom-bialgebra map."""
    if f.dom_dim != H.dim or f.cod_dim != H2.dim:
        raise DimensionError(f"Map is {f.cod_dim}x{f.dom_dim} but the algebras need {H2.dim}x{H.dim}")
    n = H.dim
    report = CheckReport(f"morphism {H.name} -> {H2.name}")
    report.add(compare_maps("morphism commutes with structure maps", f @ H.gamma, H2.gamma @ f, [n], ("h",)))
    report.add(compare_maps("morphism multiplicative", f @ H.mul, H2.mul @ tensor(f, f), [n, n], ("h", "h'")))
    report.add(compare_maps("morphism unital", f @ H.eta, H2.eta, [], ()))
    report.add(compare_maps("morphism comultiplicative", H2.comul @ f, tensor(f, f) @ H.comul, [n], ("h",)))
    report.add(compare_maps("morphism counital", H2.counit @ f, H.counit, [n], ("h",)))
    return report
