# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf cobraid cobraiding upsilon
"""Bilinear forms, cobraiding forms, skew pairings and cobraidings of R-smash products.

A form ``V⊗W -> K`` is a ``dim V x dim W`` matrix; as a linear map it is the ``1 x (dim V·dim W)`` row
of the same entries in left-factor-major order.
"""
import logging
from typing import Any, NamedTuple, Tuple

import numpy as np

from homhopf.actions import HomModuleAction
from homhopf.exactlin import LinMap, compose_all, fraction_array, identity_map, invert, permute, tensor, tensor_all
from homhopf.homcore import HomHopfAlgebra
from homhopf.report import CheckReport, DimensionError, PreconditionError, StructureError, compare_maps
from homhopf.smash import SmashProduct, TwistMap, action_induced_twist


class BilinearForm:
    """A bilinear form on ``V⊗W``."""

    def __init__(self, entries, left_dim: int | None = None, right_dim: int | None = None, name: str = "") -> None:
        arr = fraction_array(entries)
        if arr.ndim == 1 and left_dim is not None and right_dim is not None:
            arr = arr.reshape(left_dim, right_dim)
        if arr.ndim != 2:
            raise DimensionError(f"A bilinear form needs a 2-d table, got shape {arr.shape}")
        if (left_dim is not None and arr.shape[0] != left_dim) or (right_dim is not None and arr.shape[1] != right_dim):
            raise DimensionError(f"Form table is {arr.shape[0]}x{arr.shape[1]}, expected {left_dim}x{right_dim}")
        arr.setflags(write=False)
        self.entries: np.ndarray = arr
        self.name: str = name

    @property
    def left_dim(self) -> int:
        return self.entries.shape[0]

    @property
    def right_dim(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def from_map(cls, f: LinMap, left_dim: int, right_dim: int, name: str = "") -> "BilinearForm":
        if f.cod_dim != 1 or f.dom_dim != left_dim * right_dim:
            raise DimensionError(f"A {left_dim}x{right_dim} form needs a 1x{left_dim * right_dim} map, got {f.cod_dim}x{f.dom_dim}")
        return cls(f.entries.reshape(left_dim, right_dim), name=name)

    @classmethod
    def counit_pairing(cls, A: HomHopfAlgebra, B: HomHopfAlgebra, name: str = "") -> "BilinearForm":
        """``(a, b) ↦ ε_A(a)ε_B(b)``."""
        return cls.from_map(tensor(A.counit, B.counit), A.dim, B.dim, name=name or "counit pairing")

    def as_map(self) -> LinMap:
        return LinMap(self.entries.reshape(1, -1))

    def evaluate(self, u, v):
        """``σ(u, v)`` for coordinate vectors ``u`` and ``v``."""
        return np.dot(fraction_array(u), np.dot(self.entries, fraction_array(v)))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, BilinearForm):
            return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))
        return False

    def __repr__(self) -> str:
        return f"BilinearForm({self.name}, {self.left_dim}x{self.right_dim})"


class CobraidingData(NamedTuple):
    """The four restrictions of a cobraiding on ``A⊗B``."""
    tau: BilinearForm
    upsilon: BilinearForm
    phi: BilinearForm
    psi: BilinearForm


def check_cobraiding(H: HomHopfAlgebra, sigma: BilinearForm) -> CheckReport:
    """Verify (CHA1)-(CHA5); (CHA2) and (CHA3) over ``(h, g, l)``, (CHA4) as maps ``H⊗H -> H``."""
    n = H.dim
    if sigma.left_dim != n or sigma.right_dim != n:
        raise DimensionError(f"Form is {sigma.left_dim}x{sigma.right_dim} on an algebra of dimension {n}")
    s = sigma.as_map()
    ident = identity_map(n)
    alpha, mu, delta = H.gamma, H.mul, H.comul
    quad = [n, n, n, n]
    report = CheckReport(f"{sigma.name or 'form'} on {H.name}")
    report.add(compare_maps("CHA1 right unit", s @ tensor(ident, H.eta), H.counit, [n], ("h",)))
    report.add(compare_maps("CHA1 left unit", s @ tensor(H.eta, ident), H.counit, [n], ("h",)))
    report.add(compare_maps("CHA2", s @ tensor(mu, alpha),
                            compose_all(tensor(s, s), permute(quad, [0, 2, 1, 3]), tensor_all(alpha, alpha, delta)),
                            [n, n, n], ("h", "g", "l")))
    report.add(compare_maps("CHA3", s @ tensor(alpha, mu),
                            compose_all(tensor(s, s), permute(quad, [0, 3, 1, 2]), tensor_all(delta, alpha, alpha)),
                            [n, n, n], ("h", "g", "l")))
    split = tensor(delta, delta)
    report.add(compare_maps("CHA4",
                            compose_all(tensor(s, mu), permute(quad, [0, 2, 1, 3]), split),
                            compose_all(tensor(mu, s), permute(quad, [2, 0, 1, 3]), split),
                            [n, n], ("h", "g")))
    report.add(compare_maps("CHA5", s @ tensor(alpha, alpha), s, [n, n], ("h", "g")))
    return report


def check_skew_pairing(A: HomHopfAlgebra, B: HomHopfAlgebra, theta: BilinearForm) -> CheckReport:
    """Verify (SP1)-(SP4); (SP2) over ``(a, a', b)`` and (SP3) over ``(a, b, b')``."""
    na, nb = A.dim, B.dim
    if theta.left_dim != na or theta.right_dim != nb:
        raise DimensionError(f"Form is {theta.left_dim}x{theta.right_dim}, the pairing needs {na}x{nb}")
    t = theta.as_map()
    alpha, beta = A.gamma, B.gamma
    report = CheckReport(f"{theta.name or 'form'} on {A.name}⊗{B.name}")
    report.add(compare_maps("SP1 unit of B", t @ tensor(identity_map(na), B.eta), A.counit, [na], ("a",)))
    report.add(compare_maps("SP1 unit of A", t @ tensor(A.eta, identity_map(nb)), B.counit, [nb], ("b",)))
    report.add(compare_maps("SP2", t @ tensor(A.mul, beta),
                            compose_all(tensor(t, t), permute([na, na, nb, nb], [0, 2, 1, 3]),
                                        tensor_all(alpha, alpha, B.comul)),
                            [na, na, nb], ("a", "a'", "b")))
    report.add(compare_maps("SP3", t @ tensor(alpha, B.mul),
                            compose_all(tensor(t, t), permute([na, na, nb, nb], [0, 3, 1, 2]),
                                        tensor_all(A.comul, beta, beta)),
                            [na, nb, nb], ("a", "b", "b'")))
    report.add(compare_maps("SP4", t @ tensor(alpha, beta), t, [na, nb], ("a", "b")))
    return report


def convolution_inverse_candidate(A: HomHopfAlgebra, B: HomHopfAlgebra,
                                  theta: BilinearForm) -> Tuple[BilinearForm, CheckReport]:
    """The form ``(a, b) ↦ ϑ(S_A(a), b)`` and whether it is a two-sided convolution inverse.

    The convolution of forms on ``A⊗B`` is ``(f∗g)(a, b) = f(a1, b1)·g(a2, b2)``; the identities are
    reported, not assumed.
    """
    na, nb = A.dim, B.dim
    t = theta.as_map()
    cand = t @ tensor(A.antipode, identity_map(nb))
    candidate = BilinearForm.from_map(cand, na, nb, name=f"{theta.name} inverse candidate")
    split = permute([na, na, nb, nb], [0, 2, 1, 3]) @ tensor(A.comul, B.comul)
    unit = tensor(A.counit, B.counit)
    report = CheckReport(f"convolution inverse of {theta.name or 'form'}")
    report.add(compare_maps("form ∗ candidate", tensor(t, cand) @ split, unit, [na, nb], ("a", "b")))
    report.add(compare_maps("candidate ∗ form", tensor(cand, t) @ split, unit, [na, nb], ("a", "b")))
    if not report.passed:
        logging.getLogger().warning("Convolution inverse candidate of %s fails: %s", theta.name,
                                    ", ".join(r.name for r in report.failures))
    return candidate, report


def _forms(data: CobraidingData) -> Tuple[LinMap, LinMap, LinMap, LinMap]:
    return data.tau.as_map(), data.upsilon.as_map(), data.phi.as_map(), data.psi.as_map()


def _d_conditions(A: HomHopfAlgebra, B: HomHopfAlgebra, r_alpha: LinMap, data: CobraidingData,
                  mark: str, subject: str) -> CheckReport:
    """(D1)-(D6) for ``r_alpha(b⊗a) = α(α⁻¹(a)_R)⊗b_R``.

    Witness variable orders: D1 and D3 over ``(a, b, b')``, D2 and D4 over ``(a, a', b)``,
    D5 over ``(b, a)``, D6 over ``(a, b)``.
    """
    na, nb = A.dim, B.dim
    tau, ups, phi, psi = _forms(data)
    alpha, beta = A.gamma, B.gamma
    abbb = [na, nb, nb, nb]
    aaab = [na, na, na, nb]
    report = CheckReport(subject)

    lhs = compose_all(tensor(phi, ups), permute(abbb, [0, 2, 1, 3]), tensor(r_alpha, B.comul),
                      permute([na, nb, nb], [2, 0, 1]))
    rhs = compose_all(tensor(ups, phi), permute(abbb, [3, 1, 0, 2]), tensor_all(alpha, B.comul, beta))
    report.add(compare_maps(f"D1{mark}", lhs, rhs, [na, nb, nb], ("a", "b", "b'")))

    lhs = compose_all(tensor(tau, psi), permute([na, nb, na, na], [0, 2, 1, 3]), tensor(r_alpha, A.comul),
                      permute([na, na, nb], [2, 0, 1]))
    rhs = compose_all(tensor(psi, tau), permute(aaab, [3, 1, 0, 2]), tensor_all(alpha, A.comul, beta))
    report.add(compare_maps(f"D2{mark}", lhs, rhs, [na, na, nb], ("a", "a'", "b")))

    lhs = compose_all(tensor(ups, psi), permute([nb, nb, na, nb], [0, 3, 1, 2]), tensor(B.comul, r_alpha),
                      permute([na, nb, nb], [1, 2, 0]))
    rhs = compose_all(tensor(psi, ups), permute(abbb, [1, 0, 2, 3]), tensor_all(alpha, B.comul, beta))
    report.add(compare_maps(f"D3{mark}", lhs, rhs, [na, nb, nb], ("a", "b", "b'")))

    lhs = compose_all(tensor(phi, tau), permute(aaab, [0, 3, 1, 2]), tensor(A.comul, r_alpha),
                      permute([na, na, nb], [0, 2, 1]))
    rhs = compose_all(tensor(tau, phi), permute(aaab, [0, 2, 1, 3]), tensor_all(A.comul, alpha, beta))
    report.add(compare_maps(f"D4{mark}", lhs, rhs, [na, na, nb], ("a", "a'", "b")))

    split_ba = tensor(B.comul, A.comul)
    lhs = compose_all(tensor(psi, r_alpha), permute([nb, nb, na, na], [0, 2, 1, 3]), split_ba)
    rhs = compose_all(tensor(tensor(alpha, beta), psi), permute([nb, nb, na, na], [2, 0, 1, 3]), split_ba)
    report.add(compare_maps(f"D5{mark}", lhs, rhs, [nb, na], ("b", "a")))

    split_ab = tensor(A.comul, B.comul)
    lhs = compose_all(tensor(phi, tensor(alpha, beta)), permute([na, na, nb, nb], [0, 2, 1, 3]), split_ab)
    rhs = compose_all(tensor(r_alpha, phi), permute([na, na, nb, nb], [2, 0, 1, 3]), split_ab)
    report.add(compare_maps(f"D6{mark}", lhs, rhs, [na, nb], ("a", "b")))
    return report


def check_D_conditions(A: HomHopfAlgebra, B: HomHopfAlgebra, twist: TwistMap, data: CobraidingData) -> CheckReport:
    """The compatibility conditions (D1)-(D6) between the four forms and the twist map."""
    return _d_conditions(A, B, twist.r_alpha(), data, "", f"D-conditions on {A.name}#{B.name}")


def action_r_alpha(act: HomModuleAction) -> LinMap:
    """``h⊗a ↦ β(h1)▷a⊗h2``."""
    H = act.acting
    nh, na = H.dim, act.carrier.dim
    return compose_all(tensor(act.act @ tensor(H.gamma, identity_map(na)), identity_map(nh)),
                       permute([nh, nh, na], [0, 2, 1]),
                       tensor(H.comul, identity_map(na)))


def check_D_prime_conditions(A: HomHopfAlgebra, H: HomHopfAlgebra, act: HomModuleAction,
                             data: CobraidingData) -> CheckReport:
    """(D1)′-(D6)′ written with the action, plus agreement with the induced twist."""
    report = _d_conditions(A, H, action_r_alpha(act), data, "′", f"D′-conditions on {A.name}#{H.name}")
    induced = action_induced_twist(act, force=True).r_alpha()
    report.add(compare_maps("action substitution", action_r_alpha(act), induced, [H.dim, A.dim], ("h", "a")))
    return report


def check_unit_identities(A: HomHopfAlgebra, B: HomHopfAlgebra, data: CobraidingData) -> CheckReport:
    """Values of the four forms at a unit in either slot."""
    na, nb = A.dim, B.dim
    tau, ups, phi, psi = _forms(data)
    id_a, id_b = identity_map(na), identity_map(nb)
    report = CheckReport("unit identities")
    report.add(compare_maps("tau(1, a)", tau @ tensor(A.eta, id_a), A.counit, [na], ("a",)))
    report.add(compare_maps("tau(a, 1)", tau @ tensor(id_a, A.eta), A.counit, [na], ("a",)))
    report.add(compare_maps("upsilon(1, b)", ups @ tensor(B.eta, id_b), B.counit, [nb], ("b",)))
    report.add(compare_maps("upsilon(b, 1)", ups @ tensor(id_b, B.eta), B.counit, [nb], ("b",)))
    report.add(compare_maps("phi(1, b)", phi @ tensor(A.eta, id_b), B.counit, [nb], ("b",)))
    report.add(compare_maps("phi(a, 1)", phi @ tensor(id_a, B.eta), A.counit, [na], ("a",)))
    report.add(compare_maps("psi(1, a)", psi @ tensor(B.eta, id_a), A.counit, [na], ("a",)))
    report.add(compare_maps("psi(b, 1)", psi @ tensor(id_b, A.eta), B.counit, [nb], ("b",)))
    return report


def check_invariance(A: HomHopfAlgebra, B: HomHopfAlgebra, data: CobraidingData) -> CheckReport:
    """Each form is invariant under the structure maps of its arguments."""
    na, nb = A.dim, B.dim
    tau, ups, phi, psi = _forms(data)
    alpha, beta = A.gamma, B.gamma
    report = CheckReport("structure map invariance")
    report.add(compare_maps("tau invariant", tau @ tensor(alpha, alpha), tau, [na, na], ("a", "a'")))
    report.add(compare_maps("upsilon invariant", ups @ tensor(beta, beta), ups, [nb, nb], ("b", "b'")))
    report.add(compare_maps("phi invariant", phi @ tensor(alpha, beta), phi, [na, nb], ("a", "b")))
    report.add(compare_maps("psi invariant", psi @ tensor(beta, alpha), psi, [nb, na], ("b", "a")))
    return report


def check_components(A: HomHopfAlgebra, B: HomHopfAlgebra, data: CobraidingData) -> CheckReport:
    """Cobraiding axioms for ``tau`` and ``upsilon``, skew pairing axioms for ``phi`` and ``psi``."""
    report = CheckReport(f"components on {A.name}#{B.name}")
    report.extend(check_cobraiding(A, data.tau))
    report.extend(check_cobraiding(B, data.upsilon))
    report.extend(check_skew_pairing(A, B, data.phi))
    report.extend(check_skew_pairing(B, A, data.psi))
    return report


def assemble_sigma(A: HomHopfAlgebra, B: HomHopfAlgebra, data: CobraidingData, twist: TwistMap | None = None,
                   force: bool = False) -> BilinearForm:
    """The cobraiding on ``A⊗B`` built from its four components.

    ``σ(x⊗u, y⊗v) = φ(a1, b'1)·τ(a2, a'1)·υ(b1, b'2)·ψ(b2, a'2)`` with ``a = α⁻¹(x)``, ``b = β⁻¹(u)``,
    ``a' = α⁻¹(y)``, ``b' = β⁻¹(v)``.

    Args:
        A (HomHopfAlgebra): left tensor factor
        B (HomHopfAlgebra): right tensor factor
        data (CobraidingData): the four component forms
        twist (TwistMap | None): when given, the D-conditions are enforced as well
        force (bool): assemble even when a precondition fails

    Returns:
        BilinearForm: a ``(dim A·dim B) x (dim A·dim B)`` form

    Raises:
        PreconditionError: a component or D-condition fails and ``force`` is not set
    """
    report = check_components(A, B, data)
    if twist is not None:
        report.extend(check_D_conditions(A, B, twist, data))
    if not report.passed:
        failed = ", ".join(r.name for r in report.failures)
        if not force:
            raise PreconditionError(f"Cannot assemble the cobraiding: {failed} violated", report)
        logging.getLogger().warning("Assembling the cobraiding although %s fail", failed)
    na, nb = A.dim, B.dim
    tau, ups, phi, psi = _forms(data)
    alpha_inv, beta_inv = invert(A.gamma), invert(B.gamma)
    sigma = compose_all(tensor_all(phi, tau, ups, psi),
                        permute([na, na, nb, nb, na, na, nb, nb], [0, 6, 1, 4, 2, 7, 3, 5]),
                        tensor_all(A.comul, B.comul, A.comul, B.comul),
                        tensor_all(alpha_inv, beta_inv, alpha_inv, beta_inv))
    logging.getLogger().info("Assembled a cobraiding on %s#%s", A.name, B.name)
    return BilinearForm.from_map(sigma, na * nb, na * nb, name="sigma")


def decompose_sigma(product: SmashProduct, sigma: BilinearForm, force: bool = False,
                    check: bool = True) -> CobraidingData:
    """Restrict a cobraiding of a smash product along the embeddings of its factors.

    With ``check`` the restrictions are verified: they pass their own axioms and the D-conditions,
    and assembling them gives ``sigma`` back.

    Raises:
        PreconditionError: ``sigma`` is not a cobraiding and ``force`` is not set
        StructureError: ``check`` is set and the restrictions do not reassemble to ``sigma``
    """
    report = check_cobraiding(product.underlying, sigma)
    if not report.passed:
        failed = ", ".join(r.name for r in report.failures)
        if not force:
            raise PreconditionError(f"Not a cobraiding: {failed} violated", report)
        logging.getLogger().warning("Decomposing a form that fails %s", failed)
    s = sigma.as_map()
    i, j = product.embed_left(), product.embed_right()
    na, nb = product.left.dim, product.right.dim
    data = CobraidingData(
        tau=BilinearForm.from_map(s @ tensor(i, i), na, na, name="tau"),
        upsilon=BilinearForm.from_map(s @ tensor(j, j), nb, nb, name="upsilon"),
        phi=BilinearForm.from_map(s @ tensor(i, j), na, nb, name="phi"),
        psi=BilinearForm.from_map(s @ tensor(j, i), nb, na, name="psi"),
    )
    if check:
        _verify_decomposition(product, sigma, data, force)
    return data


def _verify_decomposition(product: SmashProduct, sigma: BilinearForm, data: CobraidingData, force: bool) -> None:
    A, B = product.left, product.right
    report = check_components(A, B, data)
    report.extend(check_D_conditions(A, B, product.twist, data))
    rebuilt = assemble_sigma(A, B, data, force=True)
    n = product.dim
    report.add(compare_maps("reassembly", rebuilt.as_map(), sigma.as_map(), [n, n], ("u", "v")))
    if report.passed:
        return
    failed = ", ".join(r.name for r in report.failures)
    if not force:
        raise StructureError(f"The restrictions of the cobraiding fail {failed}")
    logging.getLogger().warning("The restrictions of the cobraiding fail %s", failed)

