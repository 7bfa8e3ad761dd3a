# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf cobraiding upsilon Taft
"""Built-in objects: the group algebra of Z2, the four dimensional Taft algebra, its Yau twist,
the action of Z2 on the twist and the cobraiding data of their smash product.
"""
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from homhopf.actions import HomModuleAction
from homhopf.cobraid import BilinearForm, CobraidingData, assemble_sigma
from homhopf.exactlin import LinMap, identity_map, parse_scalar
from homhopf.homcore import HomHopfAlgebra, yau_twist
from homhopf.report import StructureError
from homhopf.smash import SmashProduct, build_smash


KZ2_BASIS = ["1", "a"]
TAFT_BASIS = ["1", "g", "x", "gx"]


def _structure(dim: int, entries: Sequence[Tuple[int, int, int, int]], mul: bool) -> LinMap:
    """Dense multiplication (``mul=True``) or comultiplication from ``(i, j, k, c)`` entries.

    For a multiplication ``e_i·e_j = Σ c e_k``; for a comultiplication ``Δ(e_i) = Σ c e_j⊗e_k``.
    """
    if mul:
        m = LinMap.zero(dim, dim * dim).entries.copy()
        for i, j, k, c in entries:
            m[k, i * dim + j] += Fraction(c)
    else:
        m = LinMap.zero(dim * dim, dim).entries.copy()
        for i, j, k, c in entries:
            m[j * dim + k, i] += Fraction(c)
    return LinMap(m)


def _check_k(k) -> Fraction:
    k = parse_scalar(k)
    if k == 0:
        raise StructureError("k must be nonzero, otherwise the twist is not an automorphism")
    return k


def catalog_ground_field() -> HomHopfAlgebra:
    """The one dimensional Hopf algebra ``K``."""
    one = identity_map(1)
    return HomHopfAlgebra.from_constants(["1"], one, [1], one, one, one, one, name="K")


def catalog_kz2() -> HomHopfAlgebra:
    """The group algebra ``K{1, a}`` with ``a² = 1``, group-like basis and ``S = id``."""
    mul = _structure(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], mul=True)
    comul = _structure(2, [(0, 0, 0, 1), (1, 1, 1, 1)], mul=False)
    return HomHopfAlgebra.from_constants(KZ2_BASIS, mul, [1, 0], comul, LinMap([[1, 1]]),
                                         identity_map(2), identity_map(2), name="KZ2")


def catalog_taft() -> HomHopfAlgebra:
    """Taft's algebra ``K{1, g, x, gx}`` with ``g² = 1``, ``x² = 0``, ``xg = -gx``."""
    one, g, x, gx = range(4)
    products = [
        (one, one, one, 1), (one, g, g, 1), (one, x, x, 1), (one, gx, gx, 1),
        (g, one, g, 1), (g, g, one, 1), (g, x, gx, 1), (g, gx, x, 1),
        (x, one, x, 1), (x, g, gx, -1),
        (gx, one, gx, 1), (gx, g, x, -1),
    ]
    coproducts = [
        (one, one, one, 1),
        (g, g, g, 1),
        (x, x, g, 1), (x, one, x, 1),
        (gx, gx, one, 1), (gx, g, gx, 1),
    ]
    antipode = LinMap.from_columns([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], 4)
    return HomHopfAlgebra.from_constants(TAFT_BASIS, _structure(4, products, mul=True), [1, 0, 0, 0],
                                         _structure(4, coproducts, mul=False), LinMap([[1, 1, 0, 0]]),
                                         antipode, identity_map(4), name="T")


def taft_automorphism(k) -> LinMap:
    """``1 ↦ 1, g ↦ g, x ↦ kx, gx ↦ kgx``."""
    k = _check_k(k)
    return LinMap.diagonal([1, 1, k, k])


def catalog_taft_twisted(k) -> HomHopfAlgebra:
    """The Yau twist of the Taft algebra along :func:`taft_automorphism`."""
    k = _check_k(k)
    return yau_twist(catalog_taft(), taft_automorphism(k), name=f"H_alpha(k={k})")


def catalog_section5_action(k) -> HomModuleAction:
    """``1▷m = α(m)`` and ``a▷m = α(θ(m))`` with ``θ`` fixing ``1, g`` and negating ``x, gx``."""
    k = _check_k(k)
    H = catalog_kz2()
    A = catalog_taft_twisted(k)
    theta = LinMap.diagonal([1, 1, -1, -1])
    act = LinMap.zero(4, 8).entries.copy()
    act[:, 0:4] = A.gamma.entries
    act[:, 4:8] = (A.gamma @ theta).entries
    return HomModuleAction(H, A, LinMap(act), name=f"KZ2 on H_alpha(k={k})")


def catalog_section5_forms(k) -> CobraidingData:
    """The four component forms; they do not depend on ``k``."""
    _check_k(k)
    return CobraidingData(
        tau=BilinearForm([[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], name="tau"),
        upsilon=BilinearForm([[1, 1], [1, -1]], name="upsilon"),
        phi=BilinearForm([[1, 1], [1, -1], [0, 0], [0, 0]], name="phi"),
        psi=BilinearForm([[1, 1, 0, 0], [1, -1, 0, 0]], name="psi"),
    )


def catalog_section5_smash(k) -> SmashProduct:
    """The smash product of the twisted Taft algebra with ``KZ2``."""
    act = catalog_section5_action(k)
    return build_smash(act.carrier, act.acting, act, name=f"H_alpha(k={parse_scalar(k)})#KZ2")


def catalog_section5_sigma(k) -> BilinearForm:
    """The cobraiding of :func:`catalog_section5_smash`, assembled from the component forms."""
    product = catalog_section5_smash(k)
    return assemble_sigma(product.left, product.right, catalog_section5_forms(k), twist=product.twist)


CATALOG: Dict[str, Tuple[Callable, bool]] = {
    "ground_field": (lambda k: catalog_ground_field(), False),
    "kz2": (lambda k: catalog_kz2(), False),
    "taft": (lambda k: catalog_taft(), False),
    "taft_twisted": (catalog_taft_twisted, True),
    "section5_action": (catalog_section5_action, True),
    "section5_smash": (catalog_section5_smash, True),
    "section5_sigma": (catalog_section5_sigma, True),
    "section5_tau": (lambda k: catalog_section5_forms(k).tau, True),
    "section5_upsilon": (lambda k: catalog_section5_forms(k).upsilon, True),
    "section5_phi": (lambda k: catalog_section5_forms(k).phi, True),
    "section5_psi": (lambda k: catalog_section5_forms(k).psi, True),
}


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def catalog_object(name: str, k="2"):
    """Look up a catalog entry by name; ``k`` is ignored by entries that do not depend on it."""
    if name not in CATALOG:
        raise KeyError(f"Unknown catalog entry '{name}', expected one of {', '.join(catalog_names())}")
    factory, uses_k = CATALOG[name]
    return factory(_check_k(k) if uses_k else k)
