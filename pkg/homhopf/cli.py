# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf cobraid cobraiding upsilon
"""Command line: check, smash, cobraid, decompose, table and catalog.

Exit codes: 0 when everything checked passes, 1 when an axiom or precondition fails, 2 when the
input cannot be read or does not fit together.
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Sequence

import pandas as pd

from homhopf.actions import (HomModuleAction, check_cocommutation_condition, check_hom_module,
                             check_module_hom_algebra, check_module_hom_coalgebra)
from homhopf.catalog import catalog_kz2, catalog_names, catalog_object, catalog_section5_smash, catalog_taft_twisted
from homhopf.cobraid import (BilinearForm, CobraidingData, assemble_sigma, check_cobraiding, check_skew_pairing,
                             decompose_sigma)
from homhopf.config import Configuration
from homhopf.exactlin import format_scalar, render_vector
from homhopf.homcore import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, check_all
from homhopf.report import CheckReport, PreconditionError, SpecFileError
from homhopf.smash import (SmashProduct, TwistMap, antipode_agreement, build_r_smash, build_smash,
                           check_R_coalgebra_map, check_twist_conditions, product_basis)
from homhopf.specfile import FormDocument, SpecLoader, dump_spec, dumps_spec, smash_document


EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

TABLE_OPERATIONS = ["mul", "unit", "comul", "counit", "antipode", "alpha", "sigma", "twist", "act"]
COBRAIDING_ROLES = ("sigma", "tau", "upsilon", "cobraiding")


def render_report(report: CheckReport, witnesses: bool = True) -> str:
    """Human readable report: one row per condition."""
    rows = []
    for r in report.results:
        row = {"condition": r.name, "result": "pass" if r.passed else "FAIL"}
        if witnesses:
            if r.witness is None:
                row["witness"] = row["lhs"] = row["rhs"] = ""
            else:
                if r.variables and len(r.variables) == len(r.witness):
                    row["witness"] = ", ".join(f"{v}={i}" for v, i in zip(r.variables, r.witness))
                else:
                    row["witness"] = str(r.witness)
                row["lhs"] = "[" + ", ".join(format_scalar(v) for v in r.lhs) + "]"
                row["rhs"] = "[" + ", ".join(format_scalar(v) for v in r.rhs) + "]"
        rows.append(row)
    header = f"{report.subject}: {'PASS' if report.passed else 'FAIL'}"
    if not rows:
        return header
    return header + "\n" + pd.DataFrame(rows).to_string(index=False)


def operation_table(obj: Any, op: str) -> pd.DataFrame:
    """A named operation of a loaded object as a basis-labelled table."""
    if isinstance(obj, FormDocument):
        if op not in ("sigma", "form", obj.role):
            raise ValueError(f"A form file only has the table 'sigma', not '{op}'")
        return pd.DataFrame([[format_scalar(v) for v in row] for row in obj.form.entries],
                            index=obj.left.basis, columns=obj.right.basis)
    if isinstance(obj, TwistMap):
        if op != "twist":
            raise ValueError(f"A twist file only has the table 'twist', not '{op}'")
        labels = product_basis(obj.right.basis, obj.left.basis)
        images = [render_vector(obj.R.column(c), labels) for c in range(obj.R.dom_dim)]
        return pd.DataFrame({"R": images}, index=product_basis(obj.left.basis, obj.right.basis))
    if isinstance(obj, HomModuleAction):
        if op != "act":
            raise ValueError(f"An action file only has the table 'act', not '{op}'")
        nm = obj.carrier.dim
        cells = [[render_vector(obj.act.column(h * nm + m), obj.carrier.basis) for m in range(nm)]
                 for h in range(obj.acting.dim)]
        return pd.DataFrame(cells, index=obj.acting.basis, columns=obj.carrier.basis)
    if isinstance(obj, SmashProduct):
        obj = obj.underlying
    basis, n = obj.basis, obj.dim
    has_algebra = isinstance(obj, (HomAlgebra, HomBialgebra))
    has_coalgebra = isinstance(obj, (HomCoalgebra, HomBialgebra))
    if op == "mul" and has_algebra:
        cells = [[render_vector(obj.mul.column(i * n + j), basis) for j in range(n)] for i in range(n)]
        return pd.DataFrame(cells, index=basis, columns=basis)
    if op == "unit" and has_algebra:
        return pd.DataFrame({"unit": [format_scalar(v) for v in obj.unit]}, index=basis)
    if op == "comul" and has_coalgebra:
        labels = product_basis(basis, basis)
        return pd.DataFrame({"comul": [render_vector(obj.comul.column(i), labels) for i in range(n)]}, index=basis)
    if op == "counit" and has_coalgebra:
        return pd.DataFrame({"counit": [format_scalar(v) for v in obj.counit.entries[0]]}, index=basis)
    if op == "antipode" and isinstance(obj, HomHopfAlgebra):
        return pd.DataFrame({"antipode": [render_vector(obj.antipode.column(i), basis) for i in range(n)]},
                            index=basis)
    if op == "alpha":
        alpha = obj.beta if isinstance(obj, HomCoalgebra) else obj.alpha
        return pd.DataFrame({"alpha": [render_vector(alpha.column(i), basis) for i in range(n)]}, index=basis)
    raise ValueError(f"{obj!r} has no table '{op}'")


def check_object(obj: Any) -> CheckReport:
    """Every check that applies to a loaded object."""
    if isinstance(obj, SmashProduct):
        report = check_all(obj.underlying)
        report.extend(check_twist_conditions(obj.twist))
        report.extend(check_R_coalgebra_map(obj.twist))
        if obj.action is not None:
            report.add(antipode_agreement(obj))
        return report
    if isinstance(obj, TwistMap):
        report = check_twist_conditions(obj)
        if isinstance(obj.left, HomBialgebra) and isinstance(obj.right, HomBialgebra):
            report.extend(check_R_coalgebra_map(obj))
        return report
    if isinstance(obj, HomModuleAction):
        report = check_hom_module(obj)
        if isinstance(obj.carrier, (HomAlgebra, HomBialgebra)):
            report.extend(check_module_hom_algebra(obj))
        if isinstance(obj.carrier, (HomCoalgebra, HomBialgebra)):
            report.extend(check_module_hom_coalgebra(obj))
        report.extend(check_cocommutation_condition(obj))
        return report
    if isinstance(obj, FormDocument):
        for side in (obj.left, obj.right):
            if not isinstance(side, HomHopfAlgebra):
                raise SpecFileError("Forms are checked on Hom-Hopf algebras only", key="left")
        if obj.role in COBRAIDING_ROLES or (not obj.role and obj.left == obj.right):
            return check_cobraiding(obj.left, obj.form)
        return check_skew_pairing(obj.left, obj.right, obj.form)
    return check_all(obj)


def _load_checked(loader: SpecLoader, path: str) -> Any:
    data, _ = loader.read(path)
    if data["kind"] == "hom_hopf" and "provenance" in data:
        return loader.smash(path)
    return loader.load(path)


def _relative(target: str | Path, out: str | Path) -> str:
    return Path(os.path.relpath(Path(target).resolve(), Path(out).resolve().parent)).as_posix()


def _emit_report(report: CheckReport, args: argparse.Namespace, config: Configuration) -> int:
    if args.json:
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=config.indent))
    else:
        print(render_report(report, config.witnesses))
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_check(args: argparse.Namespace, config: Configuration) -> int:
    report = check_object(_load_checked(SpecLoader(), args.path))
    return _emit_report(report, args, config)


def cmd_smash(args: argparse.Namespace, config: Configuration) -> int:
    loader = SpecLoader()
    left, right = loader.load(args.left), loader.load(args.right)
    for side, path in ((left, args.left), (right, args.right)):
        if not isinstance(side, HomHopfAlgebra):
            raise SpecFileError("Smash products need Hom-Hopf algebras", path, key="kind")
    if args.action:
        act = loader.load(args.action)
        if not isinstance(act, HomModuleAction):
            raise SpecFileError("Not an action file", args.action, key="kind")
        if act.carrier != left or act.acting != right:
            raise SpecFileError("The action does not act by the right algebra on the left one", args.action,
                                key="carrier")
        product = build_smash(left, right, act, force=args.force, name=args.name or "")
    else:
        twist = loader.load(args.twist)
        if not isinstance(twist, TwistMap):
            raise SpecFileError("Not a twist file", args.twist, key="kind")
        if twist.right != left or twist.left != right:
            raise SpecFileError("The twist does not map right⊗left to left⊗right", args.twist, key="left")
        product = build_r_smash(left, right, twist, force=args.force, name=args.name or "")
    document = smash_document(product, _relative(args.left, args.out), _relative(args.right, args.out))
    dump_spec(document, args.out, config.indent)
    if not args.json:
        print(f"Wrote {product.underlying.name} of dimension {product.dim} to {args.out}")
    return EXIT_PASS


def _load_form(loader: SpecLoader, path: str, left: HomHopfAlgebra, right: HomHopfAlgebra) -> BilinearForm:
    doc = loader.load(path)
    if not isinstance(doc, FormDocument):
        raise SpecFileError("Not a form file", path, key="kind")
    if doc.left != left or doc.right != right:
        raise SpecFileError(f"The form is not defined on {left.name}⊗{right.name}", path, key="left")
    return doc.form


def cmd_cobraid(args: argparse.Namespace, config: Configuration) -> int:
    loader = SpecLoader()
    product = loader.smash(args.smash)
    A, B = product.left, product.right
    data = CobraidingData(
        tau=_load_form(loader, args.tau, A, A),
        upsilon=_load_form(loader, args.upsilon, B, B),
        phi=_load_form(loader, args.phi, A, B),
        psi=_load_form(loader, args.psi, B, A),
    )
    sigma = assemble_sigma(A, B, data, twist=product.twist, force=args.force)
    ref = _relative(args.smash, args.out)
    dump_spec(FormDocument(sigma, ref, ref, "sigma"), args.out, config.indent)
    if not args.json:
        print(f"Wrote the cobraiding of {product.underlying.name} to {args.out}")
    return EXIT_PASS


def cmd_decompose(args: argparse.Namespace, config: Configuration) -> int:
    loader = SpecLoader()
    product = loader.smash(args.smash)
    doc = loader.load(args.sigma)
    if not isinstance(doc, FormDocument):
        raise SpecFileError("Not a form file", args.sigma, key="kind")
    if doc.left != product.underlying or doc.right != product.underlying:
        raise SpecFileError("The form is not defined on the given smash product", args.sigma, key="left")
    data = decompose_sigma(product, doc.form, force=args.force)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    A, B = product.left, product.right
    sides = {"tau": (A, A), "upsilon": (B, B), "phi": (A, B), "psi": (B, A)}
    for role, (left, right) in sides.items():
        dump_spec(FormDocument(getattr(data, role), left, right, role), out.joinpath(f"{role}.json"), config.indent)
    if not args.json:
        print(f"Wrote tau, upsilon, phi and psi to {out}")
    return EXIT_PASS


def cmd_table(args: argparse.Namespace, config: Configuration) -> int:
    table = operation_table(_load_checked(SpecLoader(), args.path), args.operation)
    if args.json:
        print(json.dumps({"index": list(table.index), "columns": list(table.columns),
                          "data": table.values.tolist()}, ensure_ascii=False, indent=config.indent))
    else:
        print(table.to_string())
    return EXIT_PASS


def catalog_document(name: str, k: str) -> Any:
    """The catalog entry ``name`` in the form it is written to a file."""
    obj = catalog_object(name, k)
    if isinstance(obj, BilinearForm):
        if name == "section5_sigma":
            product = catalog_section5_smash(k)
            return FormDocument(obj, product.underlying, product.underlying, "sigma")
        A, H = catalog_taft_twisted(k), catalog_kz2()
        sides = {"tau": (A, A), "upsilon": (H, H), "phi": (A, H), "psi": (H, A)}
        role = name.rsplit("_", 1)[1]
        left, right = sides[role]
        return FormDocument(obj, left, right, role)
    return obj


def cmd_catalog(args: argparse.Namespace, config: Configuration) -> int:
    if not args.name:
        print("\n".join(catalog_names()))
        return EXIT_PASS
    try:
        document = catalog_document(args.name, args.k or config.default_k)
    except KeyError as e:
        raise SpecFileError(e.args[0], key="name") from e
    if args.out:
        dump_spec(document, args.out, config.indent)
    else:
        sys.stdout.write(dumps_spec(document, config.indent))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine readable output")
    common.add_argument("--config", default=None, help="YAML configuration file")
    common.add_argument("--verbose", action="store_true", help="Log every condition as it is checked")

    parser = argparse.ArgumentParser(prog="homhopf", description="Exact checks and constructions for finite dimensional "
                                                                 "Hom-Hopf algebras, smash products and cobraidings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Check every axiom that applies to a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("smash", parents=[common], help="Build the smash product of two Hom-Hopf algebras")
    p.add_argument("left", help="Hom-Hopf algebra A")
    p.add_argument("right", help="Hom-Hopf algebra B, or H for an action")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--twist", help="Twist map R: B⊗A -> A⊗B")
    how.add_argument("--action", help="Action of H on A")
    p.add_argument("--out", required=True)
    p.add_argument("--name", default=None)
    p.add_argument("--force", action="store_true", help="Build even when a precondition fails")
    p.set_defaults(func=cmd_smash)

    p = sub.add_parser("cobraid", parents=[common], help="Assemble the cobraiding of a smash product")
    p.add_argument("--smash", required=True)
    for role in ("tau", "upsilon", "phi", "psi"):
        p.add_argument(f"--{role}", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true", help="Assemble even when a component or D-condition fails")
    p.set_defaults(func=cmd_cobraid)

    p = sub.add_parser("decompose", parents=[common], help="Split a cobraiding of a smash product into its four forms")
    p.add_argument("sigma")
    p.add_argument("--smash", required=True)
    p.add_argument("--out", required=True, help="Directory for tau.json, upsilon.json, phi.json and psi.json")
    p.add_argument("--force", action="store_true", help="Decompose even when the form is not a cobraiding")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("table", parents=[common], help="Print an operation as a table")
    p.add_argument("path")
    p.add_argument("operation", choices=TABLE_OPERATIONS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("catalog", parents=[common], help="Write a built-in object")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--k", default=None, help="Parameter of the twisted Taft algebra, eg 2 or 3/2")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    log = logging.getLogger()
    try:
        config = Configuration.from_file(args.config)
        log.setLevel(logging.DEBUG if args.verbose else config.log_level)
        return args.func(args, config)
    except PreconditionError as err:
        print(f"[failed] {err}", file=sys.stderr)
        if args.json:
            print(json.dumps(err.report.to_dict(), ensure_ascii=False, indent=2))
        else:
            print(render_report(err.report))
        return EXIT_FAIL
    except (ValueError, OSError) as err:
        print(f"[error] {err}", file=sys.stderr)
        return EXIT_ERROR
