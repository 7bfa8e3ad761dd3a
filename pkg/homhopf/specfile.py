# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf cobraid upsilon ndindex
"""Structure-constant files.

Every object of the engine can be written as a JSON document with exact ``"p/q"`` scalars. Structure
constants are stored as sparse lists of nonzero entries in lexicographic index order, small maps
(``alpha``, ``antipode``, forms) as dense matrices. Documents are written with sorted keys so that
writing a loaded file reproduces it byte for byte.

An algebra referenced from another document (the two sides of a form, twist or action, the factors
of a smash product) is either embedded as a whole document or given as a path relative to the
referencing file.
"""
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, NamedTuple, Sequence, Set, Tuple

import numpy as np
from jsonschema import Draft202012Validator

from homhopf.actions import HomModuleAction
from homhopf.cobraid import BilinearForm
from homhopf.exactlin import LinMap, format_scalar, parse_scalar
from homhopf.homcore import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra
from homhopf.report import DimensionError, SpecFileError, StructureError
from homhopf.schema import action_schema, algebra_schema, form_schema, twist_schema
from homhopf.smash import SmashProduct, TwistMap


ALGEBRA_KINDS = ("hom_algebra", "hom_coalgebra", "hom_bialgebra", "hom_hopf")
SCHEMAS: Dict[str, dict] = {
    **{kind: algebra_schema for kind in ALGEBRA_KINDS},
    "twist": twist_schema,
    "action": action_schema,
    "form": form_schema,
}
_ALGEBRAS = (HomAlgebra, HomBialgebra)
_STRUCTURES = (HomAlgebra, HomCoalgebra, HomBialgebra)


class FormDocument(NamedTuple):
    """A bilinear form together with the algebras of its two arguments."""
    form: BilinearForm
    left: Any
    right: Any
    role: str = ""


class _Origin(NamedTuple):
    """The file a document came from, for diagnostics and relative references."""
    path: Path
    text: str

    def line_of(self, key: str) -> int | None:
        """First line mentioning ``"key"``, 1-based."""
        needle = f'"{key}"'
        for number, line in enumerate(self.text.splitlines(), start=1):
            if needle in line:
                return number
        return None

    def error(self, message: str, key: str) -> SpecFileError:
        return SpecFileError(message, self.path, self.line_of(key.split(".")[0]) if key else None, key)


class _Layout(NamedTuple):
    """How the index tuples of a sparse entry list sit in a dense matrix."""
    bounds: Tuple[int, ...]
    shape: Tuple[int, int]
    place: Callable[..., Tuple[int, int]]


def _mul_layout(n: int) -> _Layout:
    return _Layout((n, n, n), (n, n * n), lambda i, j, k: (k, i * n + j))


def _comul_layout(n: int) -> _Layout:
    return _Layout((n, n, n), (n * n, n), lambda i, j, k: (j * n + k, i))


def _twist_layout(nb: int, na: int) -> _Layout:
    return _Layout((nb, na, na, nb), (na * nb, nb * na), lambda b, a, a2, b2: (a2 * nb + b2, b * na + a))


def _action_layout(nh: int, nm: int) -> _Layout:
    return _Layout((nh, nm, nm), (nm, nh * nm), lambda h, m, m2: (m2, h * nm + m))


def _entries_document(f: LinMap, layout: _Layout) -> List[list]:
    entries = []
    m = f.entries
    for idx in np.ndindex(*layout.bounds):
        value = m[layout.place(*idx)]
        if value != 0:
            entries.append([int(i) for i in idx] + [format_scalar(value)])
    return entries


def _vector_document(values: Sequence) -> List[str]:
    return [format_scalar(v) for v in values]


def _matrix_document(f: LinMap | np.ndarray) -> List[List[str]]:
    m = f.entries if isinstance(f, LinMap) else f
    return [_vector_document(row) for row in m]


def _kind_of(obj: Any) -> str:
    if isinstance(obj, HomHopfAlgebra):
        return "hom_hopf"
    if isinstance(obj, HomBialgebra):
        return "hom_bialgebra"
    if isinstance(obj, HomAlgebra):
        return "hom_algebra"
    if isinstance(obj, HomCoalgebra):
        return "hom_coalgebra"
    raise TypeError(f"Cannot write {obj!r} as an algebra document")


def algebra_document(H: HomAlgebra | HomCoalgebra | HomBialgebra) -> Dict[str, Any]:
    """The document of an algebra, coalgebra, bialgebra or Hopf algebra."""
    kind = _kind_of(H)
    doc: Dict[str, Any] = {"kind": kind, "dim": H.dim, "basis": list(H.basis)}
    if H.name:
        doc["name"] = H.name
    if kind != "hom_coalgebra":
        doc["mul"] = _entries_document(H.mul, _mul_layout(H.dim))
        doc["unit"] = _vector_document(H.unit)
        doc["alpha"] = _matrix_document(H.alpha)
    else:
        doc["alpha"] = _matrix_document(H.beta)
    if kind != "hom_algebra":
        doc["comul"] = _entries_document(H.comul, _comul_layout(H.dim))
        doc["counit"] = _vector_document(H.counit.entries[0])
    if kind == "hom_hopf":
        doc["antipode"] = _matrix_document(H.antipode)
    return doc


def _reference(obj: Any) -> Any:
    if isinstance(obj, (str, Path)):
        return Path(obj).as_posix()
    return spec_document(obj)


def smash_document(product: SmashProduct, left_ref: Any = None, right_ref: Any = None) -> Dict[str, Any]:
    """The document of a smash product: its Hopf algebra plus a ``provenance`` block."""
    doc = algebra_document(product.underlying)
    na, nb = product.left.dim, product.right.dim
    provenance = {
        "left": _reference(left_ref if left_ref is not None else product.left),
        "right": _reference(right_ref if right_ref is not None else product.right),
        "twist": _entries_document(product.twist.R, _twist_layout(nb, na)),
    }
    if product.action is not None:
        provenance["action"] = _entries_document(product.action.act, _action_layout(nb, na))
    doc["provenance"] = provenance
    return doc


def twist_document(twist: TwistMap, left_ref: Any = None, right_ref: Any = None) -> Dict[str, Any]:
    doc = {
        "kind": "twist",
        "left": _reference(left_ref if left_ref is not None else twist.left),
        "right": _reference(right_ref if right_ref is not None else twist.right),
        "entries": _entries_document(twist.R, _twist_layout(twist.left.dim, twist.right.dim)),
    }
    if twist.name:
        doc["name"] = twist.name
    return doc


def action_document(act: HomModuleAction, acting_ref: Any = None, carrier_ref: Any = None) -> Dict[str, Any]:
    doc = {
        "kind": "action",
        "acting": _reference(acting_ref if acting_ref is not None else act.acting),
        "carrier": _reference(carrier_ref if carrier_ref is not None else act.carrier),
        "entries": _entries_document(act.act, _action_layout(act.acting.dim, act.carrier.dim)),
    }
    if act.name:
        doc["name"] = act.name
    return doc


def form_document(doc: FormDocument) -> Dict[str, Any]:
    out = {
        "kind": "form",
        "left": _reference(doc.left),
        "right": _reference(doc.right),
        "matrix": _matrix_document(doc.form.entries),
    }
    if doc.form.name:
        out["name"] = doc.form.name
    if doc.role:
        out["role"] = doc.role
    return out


def spec_document(obj: Any) -> Dict[str, Any]:
    """The document of any object that has a file form."""
    if isinstance(obj, SmashProduct):
        return smash_document(obj)
    if isinstance(obj, TwistMap):
        return twist_document(obj)
    if isinstance(obj, HomModuleAction):
        return action_document(obj)
    if isinstance(obj, FormDocument):
        return form_document(obj)
    if isinstance(obj, dict):
        return obj
    return algebra_document(obj)


def dumps_spec(obj: Any, indent: int = 2) -> str:
    """Canonical text of a document: sorted keys, UTF-8 names, trailing newline."""
    return json.dumps(spec_document(obj), sort_keys=True, ensure_ascii=False, indent=indent) + "\n"


def dump_spec(obj: Any, path: str | Path, indent: int = 2) -> None:
    """Write the canonical document of ``obj`` to ``path``."""
    path = Path(path)
    path.write_text(dumps_spec(obj, indent), encoding="utf-8")
    logging.getLogger().info("Wrote %s", path)


class SpecLoader:
    """Reads spec files and the files they reference; each referenced path is loaded once."""

    def __init__(self) -> None:
        self.log = logging.getLogger()
        self._cache: Dict[Path, Any] = {}
        self._loading: Set[Path] = set()

    def read(self, path: str | Path) -> Tuple[dict, _Origin]:
        """Parse and validate a file without building anything."""
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise SpecFileError(f"Cannot read file: {e.strerror}", path) from e
        except UnicodeDecodeError as e:
            raise SpecFileError(f"Not UTF-8 text: {e.reason} at byte {e.start}", path) from e
        return self.parse(text, path)

    def parse(self, text: str, path: str | Path) -> Tuple[dict, _Origin]:
        origin = _Origin(Path(path), text)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecFileError(f"Invalid JSON: {e.msg}", origin.path, e.lineno) from e
        if not isinstance(data, dict):
            raise SpecFileError("A spec file must hold a JSON object", origin.path, 1)
        self.validate(data, origin)
        return data, origin

    def validate(self, data: dict, origin: _Origin) -> None:
        """Validate a document against the schema of its ``kind``."""
        kind = data.get("kind")
        if not isinstance(kind, str) or kind not in SCHEMAS:
            raise origin.error(f"Unknown kind {kind!r}, expected one of {', '.join(SCHEMAS)}", "kind")
        v = Draft202012Validator(SCHEMAS[kind])
        errors = sorted(v.iter_errors(data), key=lambda e: e.path)
        if errors:
            self.log.error("Failed to validate `%s` using json schema.", origin.path)
            for error in errors:
                s = f"{list(error.schema_path)}, {list(error.absolute_path)}, {error.message}"
                self.log.error("  %s", s)
            first = errors[0]
            raise origin.error(first.message, _error_key(first))

    def load(self, path: str | Path) -> Any:
        """Load the object described by a file."""
        path = Path(path).resolve()
        if path in self._cache:
            return self._cache[path]
        if path in self._loading:
            raise SpecFileError("Circular reference", path)
        self._loading.add(path)
        try:
            data, origin = self.read(path)
            obj = self.build(data, origin)
        finally:
            self._loading.discard(path)
        self._cache[path] = obj
        return obj

    def loads(self, text: str, path: str | Path = "<string>") -> Any:
        """Load an object from document text; relative references resolve against ``path``."""
        data, origin = self.parse(text, path)
        return self.build(data, origin)

    def smash(self, path: str | Path) -> SmashProduct:
        """Load a smash product, rebuilt from the ``provenance`` block of its file."""
        data, origin = self.read(path)
        if data["kind"] != "hom_hopf" or "provenance" not in data:
            raise origin.error("Not a smash product: a hom_hopf document with a provenance block is needed",
                               "provenance" if "provenance" in data else "kind")
        return self._build_smash(data, origin, self.load(path))

    def smash_from_text(self, text: str, path: str | Path = "<string>") -> SmashProduct:
        data, origin = self.parse(text, path)
        if data["kind"] != "hom_hopf" or "provenance" not in data:
            raise origin.error("Not a smash product: a hom_hopf document with a provenance block is needed", "kind")
        return self._build_smash(data, origin, self.build(data, origin))

    def build(self, data: dict, origin: _Origin) -> Any:
        kind = data["kind"]
        try:
            if kind in ALGEBRA_KINDS:
                return self._build_algebra(data, origin)
            if kind == "twist":
                return self._build_twist(data, origin)
            if kind == "action":
                return self._build_action(data, origin)
            return self._build_form(data, origin)
        except (DimensionError, StructureError) as e:
            raise origin.error(str(e), "kind") from e

    def _reference(self, value: Any, origin: _Origin, key: str) -> Any:
        if isinstance(value, str):
            target = origin.path.parent.joinpath(value)
            if not target.exists():
                raise origin.error(f"Referenced file {value} does not exist", key)
            return self.load(target)
        self.validate(value, origin)
        return self.build(value, origin)

    def _side(self, value: Any, origin: _Origin, key: str, kinds: tuple, what: str) -> Any:
        side = self._reference(value, origin, key)
        if not isinstance(side, kinds):
            raise origin.error(f"{what}, got {type(side).__name__}", key)
        return side

    def _scalar(self, text: str, origin: _Origin, key: str):
        try:
            return parse_scalar(text)
        except (ValueError, ZeroDivisionError) as e:
            raise origin.error(f"Bad scalar {text!r}", key) from e

    def _vector(self, values: Sequence[str], n: int, origin: _Origin, key: str) -> List:
        if len(values) != n:
            raise origin.error(f"{key} needs {n} coordinates, got {len(values)}", key)
        return [self._scalar(v, origin, key) for v in values]

    def _matrix(self, rows: Sequence[Sequence[str]], n_rows: int, n_cols: int, origin: _Origin, key: str) -> LinMap:
        if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
            raise origin.error(f"{key} must be a {n_rows}x{n_cols} matrix", key)
        return LinMap([[self._scalar(v, origin, key) for v in row] for row in rows])

    def _sparse(self, entries: Sequence[list], layout: _Layout, origin: _Origin, key: str) -> LinMap:
        m = LinMap.zero(*layout.shape).entries.copy()
        seen: Set[Tuple[int, ...]] = set()
        for entry in entries:
            idx = tuple(entry[:-1])
            for i, bound in zip(idx, layout.bounds):
                if i >= bound:
                    raise origin.error(f"Index {i} of entry {entry} is out of range for dimension {bound}", key)
            if idx in seen:
                raise origin.error(f"Entry {list(idx)} is given twice", key)
            seen.add(idx)
            m[layout.place(*idx)] = self._scalar(entry[-1], origin, key)
        return LinMap(m)

    def _build_algebra(self, data: dict, origin: _Origin) -> Any:
        kind, n, basis = data["kind"], data["dim"], data["basis"]
        if len(basis) != n:
            raise origin.error(f"{len(basis)} basis names given for dimension {n}", "basis")
        name = data.get("name", "")
        alpha = self._matrix(data["alpha"], n, n, origin, "alpha")
        algebra = coalgebra = None
        if kind != "hom_coalgebra":
            algebra = HomAlgebra(n, basis, self._sparse(data["mul"], _mul_layout(n), origin, "mul"),
                                 self._vector(data["unit"], n, origin, "unit"), alpha, name)
        if kind != "hom_algebra":
            counit = LinMap([self._vector(data["counit"], n, origin, "counit")])
            coalgebra = HomCoalgebra(n, basis, self._sparse(data["comul"], _comul_layout(n), origin, "comul"),
                                     counit, alpha, name)
        if kind == "hom_algebra":
            return algebra
        if kind == "hom_coalgebra":
            return coalgebra
        bialgebra = HomBialgebra(algebra, coalgebra, name)
        if kind == "hom_bialgebra":
            return bialgebra
        return HomHopfAlgebra(bialgebra, self._matrix(data["antipode"], n, n, origin, "antipode"), name)

    def _build_smash(self, data: dict, origin: _Origin, underlying: HomHopfAlgebra) -> SmashProduct:
        provenance = data["provenance"]
        left = self._reference(provenance["left"], origin, "left")
        right = self._reference(provenance["right"], origin, "right")
        for side, key in ((left, "left"), (right, "right")):
            if not isinstance(side, HomHopfAlgebra):
                raise origin.error("The factors of a smash product must be Hom-Hopf algebras", key)
        na, nb = left.dim, right.dim
        if underlying.dim != na * nb:
            raise origin.error(f"Dimension {underlying.dim} is not {na}·{nb}", "dim")
        twist = TwistMap(right, left, self._sparse(provenance["twist"], _twist_layout(nb, na), origin, "twist"))
        action = None
        if "action" in provenance:
            action = HomModuleAction(right, left, self._sparse(provenance["action"], _action_layout(nb, na), origin,
                                                               "action"))
        return SmashProduct(underlying, left, right, twist, action)

    def _build_twist(self, data: dict, origin: _Origin) -> TwistMap:
        left = self._side(data["left"], origin, "left", _ALGEBRAS, "The sides of a twist must be Hom-algebras")
        right = self._side(data["right"], origin, "right", _ALGEBRAS, "The sides of a twist must be Hom-algebras")
        R = self._sparse(data["entries"], _twist_layout(left.dim, right.dim), origin, "entries")
        return TwistMap(left, right, R, name=data.get("name", ""))

    def _build_action(self, data: dict, origin: _Origin) -> HomModuleAction:
        acting = self._reference(data["acting"], origin, "acting")
        if not isinstance(acting, HomBialgebra):
            raise origin.error("The acting side of an action must be a Hom-bialgebra", "acting")
        carrier = self._side(data["carrier"], origin, "carrier", _STRUCTURES,
                             "The carrier of an action must be a Hom-algebra or a Hom-coalgebra")
        act = self._sparse(data["entries"], _action_layout(acting.dim, carrier.dim), origin, "entries")
        return HomModuleAction(acting, carrier, act, name=data.get("name", ""))

    def _build_form(self, data: dict, origin: _Origin) -> FormDocument:
        left = self._side(data["left"], origin, "left", _STRUCTURES, "A form pairs two Hom-structures")
        right = self._side(data["right"], origin, "right", _STRUCTURES, "A form pairs two Hom-structures")
        matrix = self._matrix(data["matrix"], left.dim, right.dim, origin, "matrix")
        return FormDocument(BilinearForm(matrix.entries, name=data.get("name", "")), left, right, data.get("role", ""))


def _error_key(error) -> str:
    """Dotted location of a schema error; for a missing property, the property."""
    path = [str(p) for p in error.absolute_path]
    if error.validator == "required" and isinstance(error.instance, dict):
        missing = [k for k in error.validator_value if k not in error.instance]
        if missing:
            path.append(missing[0])
    return ".".join(path)


def load_spec(path: str | Path) -> Any:
    """Load the object described by a spec file."""
    return SpecLoader().load(path)


def loads_spec(text: str, path: str | Path = "<string>") -> Any:
    return SpecLoader().loads(text, path)


def load_smash(path: str | Path) -> SmashProduct:
    """Load a smash product file written by :func:`dump_spec`."""
    return SpecLoader().smash(path)
