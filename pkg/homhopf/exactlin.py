# -*- coding: UTF-8 -*-
# cSpell:ignore exactlin kron unflatten tensordot moveaxis
"""Exact rational linear algebra on which everything else is built.

Maps are dense ``numpy`` object arrays of ``Fraction``. Tensor products use the left-factor-major
basis ordering everywhere: the basis vector ``e_i ⊗ f_j`` of ``V ⊗ W`` has flat index
``i * dim(W) + j``.

Tensor products of maps and factor permutations are kept unexpanded until their entries are
needed; :func:`compose` contracts them factor by factor, so a form on an eightfold tensor power
never materialises a square matrix of that size.
"""
import re
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from homhopf.report import DimensionError, StructureError


_SCALAR_RE = re.compile(r"^\s*[-+]?\d+(\s*/\s*\d+)?\s*$")


def parse_scalar(text: str | int | Fraction) -> Fraction:
    """Parse an exact scalar from ``"p/q"`` or ``"p"``.

    Floats are refused since they are never exact.

    Args:
        text (str | int | Fraction): textual form or an already exact value

    Returns:
        Fraction: the value in lowest terms
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or not isinstance(text, (int, str)):
        raise ValueError(f"Not an exact scalar: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not _SCALAR_RE.match(text):
        raise ValueError(f"Not an exact scalar: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_scalar(value: Fraction) -> str:
    """Canonical text of a scalar, ``"p/q"`` or ``"p"`` when the denominator is one."""
    return str(Fraction(value))


def fraction_array(data, shape: Tuple[int, ...] | None = None) -> np.ndarray:
    """Build an object array of ``Fraction`` from nested lists or an array."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    flat = [Fraction(v) for v in arr.reshape(-1)]
    out = np.empty(len(flat), dtype=object)
    out[:] = flat
    return out.reshape(arr.shape)


def _size(dims: Iterable[int]) -> int:
    dims = list(dims)
    return int(np.prod(dims, dtype=object)) if dims else 1


class TensorIndex:
    """Multi-index arithmetic for a tensor product of spaces with the given dimensions."""

    def __init__(self, factor_dims: Sequence[int]):
        if any(int(d) < 1 for d in factor_dims):
            raise DimensionError(f"Factor dimensions must be positive, got {list(factor_dims)}")
        self.factor_dims: Tuple[int, ...] = tuple(int(d) for d in factor_dims)

    @property
    def size(self) -> int:
        """Dimension of the whole tensor product."""
        return _size(self.factor_dims)

    def flat(self, *idx: int) -> int:
        """Flat position of the multi-index ``idx``."""
        if len(idx) != len(self.factor_dims):
            raise DimensionError(f"Expected {len(self.factor_dims)} indices, got {len(idx)}")
        if not self.factor_dims:
            return 0
        return int(np.ravel_multi_index(idx, self.factor_dims))

    def unflatten(self, position: int) -> Tuple[int, ...]:
        """Inverse of :meth:`flat`."""
        if not 0 <= position < self.size:
            raise DimensionError(f"Flat index {position} outside 0..{self.size - 1}")
        if not self.factor_dims:
            return ()
        return tuple(int(i) for i in np.unravel_index(position, self.factor_dims))

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        """All multi-indices in lexicographic (= flat) order."""
        return iter(product(*(range(d) for d in self.factor_dims)))

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorIndex):
            return self.factor_dims == other.factor_dims
        return False

    def __repr__(self) -> str:
        return f"TensorIndex({list(self.factor_dims)})"


class LinMap:
    """A linear map ``K^dom_dim -> K^cod_dim`` stored as a ``cod_dim x dom_dim`` matrix.

    Instances are treated as immutable; the underlying array is marked read-only.
    """

    def __init__(self, entries, dom_dim: int | None = None, cod_dim: int | None = None):
        arr = fraction_array(entries)
        if arr.ndim == 1 and dom_dim is not None and cod_dim is not None:
            arr = arr.reshape((cod_dim, dom_dim))
        if arr.ndim != 2:
            raise DimensionError(f"A linear map needs a 2-d matrix, got shape {arr.shape}")
        if dom_dim is not None and arr.shape[1] != dom_dim:
            raise DimensionError(f"Matrix has {arr.shape[1]} columns but domain dimension is {dom_dim}")
        if cod_dim is not None and arr.shape[0] != cod_dim:
            raise DimensionError(f"Matrix has {arr.shape[0]} rows but codomain dimension is {cod_dim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionError(f"Dimensions must be positive, got {arr.shape}")
        arr.setflags(write=False)
        self._entries: np.ndarray | None = arr

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dom_dim(self) -> int:
        return self.entries.shape[1]

    @property
    def cod_dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, cod_dim: int, dom_dim: int) -> "LinMap":
        return cls([[Fraction(0)] * dom_dim for _ in range(cod_dim)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "LinMap":
        n = len(values)
        return cls([[Fraction(values[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], cod_dim: int) -> "LinMap":
        """Build a map from the images of the basis vectors."""
        return cls([[Fraction(col[r]) for col in columns] for r in range(cod_dim)])

    def column(self, j: int) -> np.ndarray:
        """Image of the ``j``-th basis vector."""
        return self.entries[:, j]

    def apply(self, vector: Sequence) -> np.ndarray:
        """Apply the map to a coordinate vector."""
        v = fraction_array(vector)
        if v.shape != (self.dom_dim,):
            raise DimensionError(f"Vector of length {v.shape[0]} does not fit domain dimension {self.dom_dim}")
        return np.dot(self.entries, v)

    def scaled(self, factor) -> "LinMap":
        return LinMap(self.entries * Fraction(factor))

    def __add__(self, other: "LinMap") -> "LinMap":
        if self.entries.shape != other.entries.shape:
            raise DimensionError(f"Cannot add maps of shapes {self.entries.shape} and {other.entries.shape}")
        return LinMap(self.entries + other.entries)

    def __sub__(self, other: "LinMap") -> "LinMap":
        if self.entries.shape != other.entries.shape:
            raise DimensionError(f"Cannot subtract maps of shapes {self.entries.shape} and {other.entries.shape}")
        return LinMap(self.entries - other.entries)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinMap):
            return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))
        return False

    def __hash__(self):
        return hash((self.entries.shape, tuple(self.entries.reshape(-1))))

    def is_identity(self) -> bool:
        return self.dom_dim == self.cod_dim and self == LinMap.identity(self.dom_dim)

    def __repr__(self) -> str:
        rows = [[str(v) for v in row] for row in self.entries]
        return f"LinMap({self.cod_dim}x{self.dom_dim}, {rows})"


def _kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    outer = np.multiply.outer(a, b)  # (c1, d1, c2, d2)
    return outer.transpose(0, 2, 1, 3).reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


class TensorProduct(LinMap):
    """``f1⊗f2⊗...⊗fn``, expanded into a matrix only when its entries are asked for."""

    def __init__(self, factors: Sequence[LinMap]):  # pylint:disable=super-init-not-called
        flat: List[LinMap] = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, TensorProduct) else [f])
        if not flat:
            raise DimensionError("A tensor product needs at least one factor")
        self.factors: Tuple[LinMap, ...] = tuple(flat)
        self._entries = None

    @property
    def entries(self) -> np.ndarray:
        if self._entries is None:
            arr = fraction_array(reduce(_kron, (f.entries for f in self.factors)))
            arr.setflags(write=False)
            self._entries = arr
        return self._entries

    def entries_pending(self) -> bool:
        """True while the product has not been expanded into a matrix."""
        return self._entries is None and len(self.factors) > 1

    @property
    def dom_dim(self) -> int:
        return _size(f.dom_dim for f in self.factors)

    @property
    def cod_dim(self) -> int:
        return _size(f.cod_dim for f in self.factors)


class FactorPermutation(LinMap):
    """Reordering of tensor factors; output factor ``k`` is input factor ``order[k]``."""

    def __init__(self, dims: Sequence[int], order: Sequence[int]):  # pylint:disable=super-init-not-called
        if sorted(order) != list(range(len(dims))):
            raise DimensionError(f"{list(order)} is not a permutation of {len(dims)} factors")
        self.dims: Tuple[int, ...] = TensorIndex(dims).factor_dims
        self.order: Tuple[int, ...] = tuple(int(o) for o in order)
        self._entries = None

    @property
    def entries(self) -> np.ndarray:
        if self._entries is None:
            ident = LinMap.identity(_size(self.dims)).entries
            self._entries = _permute_codomain(ident, self.dims, self.order)
            self._entries.setflags(write=False)
        return self._entries

    @property
    def dom_dim(self) -> int:
        return _size(self.dims)

    @property
    def cod_dim(self) -> int:
        return _size(self.dims)


def _permute_domain(f: np.ndarray, dims: Tuple[int, ...], order: Tuple[int, ...]) -> np.ndarray:
    """Entries of ``f ∘ P`` for the factor permutation ``P``."""
    n = len(dims)
    t = f.reshape((f.shape[0],) + tuple(dims[o] for o in order))
    t = t.transpose((0,) + tuple(1 + order.index(m) for m in range(n)))
    return t.reshape(f.shape[0], -1)


def _permute_codomain(g: np.ndarray, dims: Tuple[int, ...], order: Tuple[int, ...]) -> np.ndarray:
    """Entries of ``P ∘ g`` for the factor permutation ``P``."""
    n = len(dims)
    t = g.reshape(tuple(dims) + (g.shape[1],))
    t = t.transpose(tuple(order) + (n,))
    return t.reshape(-1, g.shape[1])


def compose(f: LinMap, g: LinMap) -> LinMap:
    """Return ``f ∘ g``."""
    if g.cod_dim != f.dom_dim:
        raise DimensionError(f"Cannot compose: inner codomain dimension {g.cod_dim} does not match domain dimension {f.dom_dim}")
    if isinstance(g, FactorPermutation):
        return LinMap(_permute_domain(f.entries, g.dims, g.order))
    if isinstance(f, FactorPermutation):
        return LinMap(_permute_codomain(g.entries, f.dims, f.order))
    if isinstance(g, TensorProduct) and g.entries_pending():
        t = f.entries.reshape((f.cod_dim,) + tuple(h.cod_dim for h in g.factors))
        for h in g.factors:
            # contracted axis is always 1; the new one goes last
            t = np.tensordot(t, h.entries, axes=([1], [0]))
        return LinMap(t.reshape(f.cod_dim, g.dom_dim))
    if isinstance(f, TensorProduct) and f.entries_pending():
        t = g.entries.reshape(tuple(h.dom_dim for h in f.factors) + (g.dom_dim,))
        for k, h in enumerate(f.factors):
            t = np.moveaxis(np.tensordot(h.entries, t, axes=([1], [k])), 0, k)
        return LinMap(t.reshape(f.cod_dim, g.dom_dim))
    return LinMap(np.dot(f.entries, g.entries))


def compose_all(*maps: LinMap) -> LinMap:
    """Compose right to left, ``compose_all(f, g, h) = f ∘ g ∘ h``."""
    return reduce(compose, maps)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Tensor product consistent with :class:`TensorIndex`: ``(f⊗g)(v⊗w) = f(v)⊗g(w)``."""
    return TensorProduct([f, g])


def tensor_all(*maps: LinMap) -> LinMap:
    """Tensor product of several maps, left factor most significant."""
    return TensorProduct(maps)


def invert(f: LinMap) -> LinMap:
    """Exact inverse by Gauss-Jordan elimination over the rationals.

    Raises:
        DimensionError: the matrix is not square
        StructureError: the matrix is singular, i.e. the map is not an automorphism
    """
    if f.dom_dim != f.cod_dim:
        raise DimensionError(f"Only square maps can be inverted, got {f.cod_dim}x{f.dom_dim}")
    n = f.dom_dim
    work = np.hstack((f.entries.copy(), LinMap.identity(n).entries.copy()))
    for i in range(n):
        for j in range(i, n):
            if work[j, i] != 0:
                if i != j:
                    work[[i, j]] = work[[j, i]]
                break
        else:
            raise StructureError("not an automorphism: the map is singular")
        work[i, :] = work[i, :] / work[i, i]
        for j in range(n):
            if j != i and work[j, i] != 0:
                work[j, :] = work[j, :] - work[j, i] * work[i, :]
    return LinMap(work[:, n:])


def permute(dims: Sequence[int], order: Sequence[int]) -> LinMap:
    """Reorder tensor factors.

    Output factor ``k`` is input factor ``order[k]``, so ``permute([p, q], [1, 0])`` maps
    ``e_i⊗f_j`` to ``f_j⊗e_i``.
    """
    return FactorPermutation(dims, order)


def swap(dim_a: int, dim_b: int) -> LinMap:
    """The flip ``e_i⊗f_j ↦ f_j⊗e_i`` of ``A⊗B`` onto ``B⊗A``."""
    return permute([dim_a, dim_b], [1, 0])


def identity_map(n: int) -> LinMap:
    return LinMap.identity(n)


def zero_map(cod_dim: int, dom_dim: int) -> LinMap:
    return LinMap.zero(cod_dim, dom_dim)


def basis_vector(n: int, i: int) -> np.ndarray:
    vec = np.full(n, Fraction(0), dtype=object)
    vec[i] = Fraction(1)
    return vec


def render_vector(vector: Iterable, labels: List[str]) -> str:
    """Human readable linear combination, eg ``"-2 x⊗a + 1⊗a"``."""
    terms = []
    for coeff, label in zip(vector, labels):
        coeff = Fraction(coeff)
        if coeff == 0:
            continue
        if coeff == 1:
            text = label
        elif coeff == -1:
            text = f"-{label}"
        else:
            text = f"{coeff} {label}"
        terms.append(text)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
