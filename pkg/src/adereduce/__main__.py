import json
import sys
import warnings
from argparse import ArgumentParser, Namespace
from typing import Dict, List, Optional

from . import __version__
from ._an_reduction import reduction, weyl_cover_bindings
from ._artin import (
    ArtinWord,
    artin_coxeter_element,
    garside_element,
    generic_origin_loop,
    project_to_weyl,
    weyl_shadows,
)
from ._curves import CurveSpec, deformation_structure, divisor_report
from ._errors import AdeError
from ._monodromy import classification_table, origin_loop_monodromy
from ._roots import (
    RootSystem,
    as_product_type,
    coxeter_number,
    exponents,
    root_system,
    weyl_group_order,
)
from ._strata import (
    census_records,
    census_table,
    generic_fiber_singularities,
    orbit_census,
)
from ._wonderful import divisor_records

__all__ = ["main", "DEFAULT_MAX_RANK"]

#: strata and divisors refuse a larger ambient rank without --force
DEFAULT_MAX_RANK = 7


def _emit(args: Namespace, document: object, text: str):
    if args.json:
        print(json.dumps(document, indent=2, ensure_ascii=False))
    else:
        print(text)


def _guarded_root_system(args: Namespace) -> RootSystem:
    rs = root_system(args.type)
    if rs.rank > DEFAULT_MAX_RANK:
        if not args.force:
            raise AdeError(
                rs.type_label, f"rank above {DEFAULT_MAX_RANK} needs --force"
            )
        if args.codim is None:
            raise AdeError(rs.type_label, "--force at this rank also needs --codim")
    return rs


# ----------------------------------------------------------------------------
#   Sub-commands


def _info(args: Namespace):
    label = as_product_type(args.type)
    rs = root_system(label)
    factors: List[Dict[str, object]] = [
        {
            "type": str(t),
            "coxeter_number": coxeter_number(t),
            "exponents": exponents(t),
            "weyl_group_order": weyl_group_order(t),
        }
        for t in label.factors
    ]
    document = {
        "type": str(label),
        "rank": rs.rank,
        "roots": len(rs.roots),
        "positive_roots": rs.num_positive,
        "weyl_group_order": weyl_group_order(label),
        "factors": factors,
    }
    lines = [
        f"{label.pretty()}: rank {rs.rank}, {len(rs.roots)} roots, "
        f"|W| = {document['weyl_group_order']}"
    ]
    for factor in factors:
        listed = ",".join(str(m) for m in factor["exponents"])  # type: ignore
        lines.append(
            f"{factor['type']}: h = {factor['coxeter_number']}, exponents {listed}"
        )
    _emit(args, document, "\n".join(lines))


def _strata(args: Namespace):
    rs = _guarded_root_system(args)
    codims = [args.codim] if args.codim is not None else range(1, rs.rank + 1)
    census = [sc for codim in codims for sc in orbit_census(rs, codim)]
    records = census_records(census)
    for record, sc in zip(records, census):
        record["fiber"] = str(generic_fiber_singularities(sc))
    _emit(args, {"type": str(rs.type_label), "strata": records}, census_table(census))


def _divisors(args: Namespace):
    rs = _guarded_root_system(args)
    document = divisor_records(rs, args.codim)
    rows = [("Type", "Count")] + [
        (d["type"], str(d["count"])) for d in document["divisors"]  # type: ignore
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(2)]
    lines = [
        " | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    lines.append("Blow-up order:")
    for step in document["blowup_order"]:  # type: ignore
        lines.append(f"  dim {step['dim']}: {', '.join(step['types'])}")
    _emit(args, document, "\n".join(lines))


def _monodromy(args: Namespace):
    types = list(dict.fromkeys(as_product_type(args.type).factors))
    rows = classification_table(types, (args.dim,))
    lines = [
        f"{t} in dimension {args.dim}: {origin_loop_monodromy(t, args.dim).summary()}"
        for t in types
    ]
    _emit(args, rows, "\n".join(lines))


def _an_reduce(args: Namespace):
    r = reduction(args.n, args.m, args.chart)
    weyl = weyl_cover_bindings(r.n)
    lines = [
        f"A{r.n} with {r.m} fiber variables, {r.chart} chart, "
        f"valid for char(k) > {r.family.characteristic_above}",
        "Weyl cover: " + ", ".join(f"{k} = {v}" for k, v in weyl.items()),
        "Base change: " + ", ".join(f"{k} = {v}" for k, v in r.cover.items()),
        "Base relations: "
        + (", ".join(f"{p} = 0" for p in r.family.base_relations) or "none"),
        f"Family: {r.family.equation} = 0",
        "Blow up: (" + ", ".join(str(p) for p in r.ideal) + ")",
        "Desingularization: ("
        + ", ".join(str(p) for p in r.desingularization_ideal)
        + ")",
    ]
    if r.desingularization_weights is not None:
        weights = ", ".join(str(w) for w in r.desingularization_weights)
        lines[-1] += f" with weights ({weights})"
    lines.append(f"Tail: {r.tail.summary()}")
    _emit(args, r.to_json(), "\n".join(lines))


def _curve(args: Namespace):
    cs = CurveSpec.of(args.genus, args.sing, args.dim)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = divisor_report(cs, args.depth)
    for warning in caught:
        print(f"adereduce: warning: {warning.message}", file=sys.stderr)
    structure = deformation_structure(cs)
    document = {"deformation": structure.to_json(), "report": report.to_json()}
    text = "\n".join(
        [
            f"Deformation space: {structure.base}, "
            f"dimension {structure.singular_dimension} + m",
            f"Discriminant: {structure.discriminant}",
            report.format(),
        ]
    )
    _emit(args, document, text)


def _projection(rs: RootSystem, name: str, word: ArtinWord) -> Dict[str, object]:
    image = project_to_weyl(rs, word)
    return {
        "name": name,
        "word": str(word),
        "letters": len(word),
        "weyl_length": image.length(rs),
        "weyl_order": image.order(),
        "weyl_matrix": image.matrix.tolist(),
    }


def _artin(args: Namespace):
    rs = root_system(args.type)
    if args.word is not None:
        words = [_projection(rs, "word", ArtinWord.parse(args.word))]
        checks: Optional[Dict[str, bool]] = None
    else:
        words = [
            _projection(rs, "Π", artin_coxeter_element(rs.rank)),
            _projection(rs, "𝔇", garside_element(rs)),
            _projection(rs, "σ", generic_origin_loop(rs)),
        ]
        checks = weyl_shadows(rs, force=args.force)
    lines = []
    for w in words:
        letters = str(w["word"])
        if len(letters) > 80:
            letters = f"{w['letters']} letters"
        lines.append(
            f"{w['name']} = {letters} ↦ length {w['weyl_length']}, "
            f"order {w['weyl_order']}"
        )
    for name, ok in (checks or {}).items():
        lines.append(f"{name.replace('_', ' ')}: {'yes' if ok else 'no'}")
    document = {"type": str(rs.type_label), "words": words, "checks": checks}
    _emit(args, document, "\n".join(lines))


# ----------------------------------------------------------------------------
#   Parser


def _parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="adereduce",
        description="Weyl covers, strata, wonderful boundaries, monodromy and "
        "A_n reductions for ADE singularities",
    )
    parser.add_argument("-v", "--version", action="version", version=__version__)
    common = ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print one JSON document")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("info", parents=[common], help="Root system data")
    sub.add_argument("type", help="Type label such as E6 or A1,A2")
    sub.set_defaults(func=_info)

    for name, func, summary, codim_help in (
        ("strata", _strata, "W-orbits of strata", "Only this codimension"),
        ("divisors", _divisors, "Boundary divisor census", "Only up to this codim"),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=summary)
        sub.add_argument("type", help="Type label such as E6 or A1,A2")
        sub.add_argument("--codim", type=int, help=codim_help)
        sub.add_argument(
            "--force",
            action="store_true",
            help=f"Allow rank above {DEFAULT_MAX_RANK}, with --codim",
        )
        sub.set_defaults(func=func)

    sub = subparsers.add_parser(
        "monodromy", parents=[common], help="Unipotency around boundary divisors"
    )
    sub.add_argument("type", help="Divisor types such as A2 or A1,A2,E6")
    sub.add_argument("--dim", type=int, default=1, help="Dimension of the fibers")
    sub.set_defaults(func=_monodromy)

    sub = subparsers.add_parser(
        "an-reduce", parents=[common], help="Semi-stable reduction of A_n"
    )
    sub.add_argument("n", type=int, help="Index of the A_n singularity")
    sub.add_argument("--m", type=int, default=2, help="Number of fiber variables")
    sub.add_argument("--chart", choices=("odd", "even"), help="Default by parity")
    sub.set_defaults(func=_an_reduce)

    sub = subparsers.add_parser(
        "curve", parents=[common], help="Boundary report for a singular curve"
    )
    sub.add_argument("--genus", type=int, required=True, help="Arithmetic genus")
    sub.add_argument("--sing", required=True, help="Singularities such as A2,A1")
    sub.add_argument("--dim", type=int, default=1, help="Dimension of the fibers")
    sub.add_argument("--depth", type=int, default=1, help="Divisors in local cover")
    sub.set_defaults(func=_curve)

    sub = subparsers.add_parser(
        "artin", parents=[common], help="Artin words and their Weyl group images"
    )
    sub.add_argument("type", help="Type label such as A3")
    sub.add_argument("--word", help='Word to project, such as "t1 t2 t1^-1"')
    sub.add_argument(
        "--force", action="store_true", help="Enumerate W above the usual rank"
    )
    sub.set_defaults(func=_artin)
    return parser


def main(args=None):
    parser = _parser()
    parsed = parser.parse_args(args)
    try:
        parsed.func(parsed)
    except AdeError as e:
        parser.exit(2, f"{parser.prog}: error: {e}\n")


# test with: python -m adereduce
if __name__ == "__main__":
    main()
