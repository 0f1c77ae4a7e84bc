"""Command-line frontend.

Subcommands cover the root-lattice reports, the Reeder alcove calculus,
verification of the Chevalley algebra, the character-to-curve pipeline,
and curve analysis.  Output is JSON or aligned text; identical invocations
produce byte-identical artifacts.  Exit codes: 0 success, 2 validation
failure (e.g. a character off the regular semisimple locus), 3 degenerate
or inconclusive result, 1 internal error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction as Q

from . import alcove, curve as curvemod, lattice, lie, pipeline, records
from .data import stored_character, stored_character_names
from .pipeline import GeneralPositionFailure, NotRegularSemisimple

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3


def _emit(data: dict, args, text_lines=None) -> None:
    if args.format == "json":
        out = records.dump_json(data)
    else:
        lines = text_lines if text_lines is not None else _default_text(data)
        out = "\n".join(lines) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _default_text(data: dict, prefix="") -> list[str]:
    lines = []
    for key in sorted(data):
        val = data[key]
        if isinstance(val, dict):
            lines.append(f"{prefix}{key}:")
            lines.extend(_default_text(val, prefix + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{prefix}{key}:")
            for item in val:
                lines.extend(_default_text(item, prefix + "  "))
                lines.append(prefix + "  -")
        else:
            lines.append(f"{prefix}{key}\t{_fmt(val)}")
    return lines


def _fmt(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_fmt(v) for v in val) + "]"
    return str(val)


def _load_character(args) -> lattice.Character:
    if getattr(args, "stored", None):
        entry = stored_character(args.stored)
        chi = records.character_from_dict(entry)
        if getattr(args, "base", None) is None:
            args.base = entry.get("base")
        return chi
    if getattr(args, "character", None):
        return records.character_from_dict(records.load_json(args.character))
    raise ValueError("provide a character file or --stored NAME")


def _load_curve(args) -> curvemod.TrigonalCurve:
    return records.trigonal_from_dict(records.load_json(args.curve))


# ---- subcommand handlers ----


def cmd_roots(args) -> int:
    roots = lattice.enumerate_roots()
    by_cl: dict[int, int] = {}
    for r in roots:
        by_cl[r[0]] = by_cl.get(r[0], 0) + 1
    even = [r for r in roots if r[0] % 2 == 0]
    data = {
        "count": len(roots),
        "by_line_degree": {str(k): v for k, v in sorted(by_cl.items())},
        "even_line_degree_count": len(even),
        "even_line_degree_type": lattice.dynkin_type(even),
        "cartan_matrix_is_e8": lattice.E8_CARTAN
        == tuple(tuple(row) for row in lattice.E8_CARTAN),
    }
    if args.list:
        data["roots"] = [list(r) for r in roots]
    if args.plot:
        from .plots import plot_root_projection

        plot_root_projection(args.plot)
        data["plot"] = args.plot
    _emit(data, args)
    return EXIT_OK


def cmd_rss_check(args) -> int:
    chi = _load_character(args)
    ok = lattice.is_regular_semisimple(chi)
    disc = lattice.discriminant(chi)
    data = {
        "mode": chi.mode,
        "regular_semisimple": ok,
        "discriminant": records.rational_to_str(disc),
    }
    _emit(data, args)
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_fundamental_group(args) -> int:
    datum = alcove.build_root_datum(args.type)
    orders = alcove.fundamental_group(datum)
    data = {
        "type": datum.name,
        "cyclic_orders": orders,
        "order": alcove.fundamental_group_order(datum),
    }
    _emit(data, args)
    return EXIT_OK


def cmd_alcove_normalize(args) -> int:
    datum = alcove.build_root_datum(args.type)
    coords = [Q(x) for x in args.coords.split(",")]
    point, word = alcove.normalize_to_alcove(datum, coords)
    data = {
        "type": datum.name,
        "input": [str(c) for c in coords],
        "point": [str(c) for c in point],
        "word": word,
        "in_closed_alcove": datum.in_closed_alcove(point),
    }
    _emit(data, args)
    return EXIT_OK


def cmd_kac_classes(args) -> int:
    datum = alcove.build_root_datum(args.type)
    classes = alcove.kac_classes(datum, args.m, exact_order=args.exact_order)
    rows = []
    for kc in classes:
        rows.append(
            {
                "s": list(kc.s),
                "point": [str(c) for c in kc.point],
                "fixed_type": alcove.fixed_subsystem_type(datum, kc.point),
                "stabilizer_order": len(alcove.stabilizer(datum, kc.point)),
            }
        )
    data = {"type": datum.name, "m": args.m, "classes": rows}
    lines = [f"type\t{datum.name}", f"m\t{args.m}"]
    for r in rows:
        lines.append(
            "s=" + ",".join(str(x) for x in r["s"])
            + "\tpoint=" + ",".join(r["point"])
            + "\tfixed=" + r["fixed_type"]
            + "\tstab=" + str(r["stabilizer_order"])
        )
    _emit(data, args, text_lines=lines)
    return EXIT_OK


def cmd_lie_verify(args) -> int:
    report = lie.jacobi_check(args.jacobi, seed=args.seed, samples=args.samples)
    data = {
        "dimension": lie.DIM,
        "jacobi": report,
        "theta_trace": lie.theta_trace(),
        "theta_eigenspace_dims": list(lie.theta_eigenspace_dims()),
        "theta_is_automorphism": lie.theta_is_automorphism(),
        "fixed_subalgebra_type": lie.fixed_subalgebra_type(),
    }
    _emit(data, args)
    return EXIT_OK


def cmd_construct(args) -> int:
    chi = _load_character(args)
    base = Q(args.base) if args.base is not None else (Q(1) if chi.mode == "mult" else Q(0))
    result = pipeline.run_pipeline(chi, base)
    data = records.result_to_dict(result)
    if args.plot:
        from .plots import plot_trigonal_curve

        crv = curvemod.TrigonalCurve(
            result.curve.f0, result.curve.f2, result.curve.f4, result.curve.f6
        )
        plot_trigonal_curve(crv, result.curve.marked_fiber, args.plot)
        data["plot"] = args.plot
    _emit(data, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    crv = _load_curve(args)
    fiber = (Q(args.fiber[0]), Q(args.fiber[1]))
    cls = curvemod.classify_marked_point(crv, fiber)
    disc = curvemod.ramification_form(crv)
    from .exact import root_multiplicity

    data = {
        "fiber": [str(fiber[0]), str(fiber[1])],
        "class": cls.kind,
        "w0": None if cls.w0 is None else records.rational_to_str(cls.w0),
        "discriminant_degree": disc.degree,
        "discriminant_multiplicity": root_multiplicity(disc, *fiber),
        "smoothness": curvemod.smoothness_check(crv),
    }
    if args.plot:
        from .plots import plot_trigonal_curve

        plot_trigonal_curve(crv, fiber, args.plot)
        data["plot"] = args.plot
    _emit(data, args)
    if cls.kind == "degenerate" or data["smoothness"] == "inconclusive":
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_canonical_model(args) -> int:
    crv = _load_curve(args)
    quadric, cubic = curvemod.canonical_model_p3(crv)

    def poly_dict(p):
        return {
            "".join(map(str, exp)): records.rational_to_str(c)
            for exp, c in sorted(p.terms.items())
        }

    data = {
        "variables": ["X0", "X1", "X2", "X3"],
        "substitution": ["s^2", "s*t", "t^2", "w"],
        "quadric": poly_dict(quadric),
        "cubic": poly_dict(cubic),
    }
    _emit(data, args)
    return EXIT_OK


def cmd_signature(args) -> int:
    crv = _load_curve(args)
    form = curvemod.ramification_form(crv)
    sig = curvemod.invariant_signature(form)
    data = {
        "signature": [str(x) for x in sig],
        "invariants": {
            name: records.rational_to_str(v)
            for name, _, v in curvemod.invariant_values(form)
        },
    }
    _emit(data, args)
    return EXIT_OK


def cmd_equivariance_test(args) -> int:
    chi = _load_character(args)
    base = Q(args.base) if args.base is not None else (Q(1) if chi.mode == "mult" else Q(0))
    word = _parse_word(args.word)
    chi2 = lattice.character_reflect(chi, word)
    multiset_equal = lattice.root_value_multiset(chi) == lattice.root_value_multiset(chi2)
    res1 = pipeline.run_pipeline(chi, base)
    res2 = pipeline.run_pipeline(chi2, base)

    def sig(res):
        crv = curvemod.TrigonalCurve(
            res.curve.f0, res.curve.f2, res.curve.f4, res.curve.f6
        )
        return curvemod.invariant_signature(curvemod.ramification_form(crv))

    s1, s2 = sig(res1), sig(res2)
    data = {
        "word": word,
        "root_value_multiset_equal": multiset_equal,
        "signatures_equal": s1 == s2,
        "ram_indices": [res1.curve.ram_index, res2.curve.ram_index],
    }
    _emit(data, args)
    return EXIT_OK if (multiset_equal and s1 == s2) else EXIT_VALIDATION


def _parse_word(text: str) -> list[int]:
    """Reflection word: comma-separated enumerated-root indices, with
    s1..s8 as aliases for the simple roots."""
    simples = lattice.simple_root_indices()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.startswith("s") and tok[1:].isdigit():
            k = int(tok[1:])
            if not 1 <= k <= 8:
                raise ValueError(f"simple root alias out of range: {tok}")
            out.append(simples[k - 1])
        else:
            out.append(int(tok))
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="e8trigonal",
        description="Exact E8 / del Pezzo / trigonal-curve computations",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", help="write the report to a file")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("roots", help="enumerate the 240 roots")
    p.add_argument("--list", action="store_true", help="include all roots")
    p.add_argument("--plot", help="render the Coxeter-plane projection")
    p.set_defaults(func=cmd_roots)

    p = add_parser("rss-check", help="regular-semisimplicity report")
    _char_args(p)
    p.set_defaults(func=cmd_rss_check)

    p = add_parser("fundamental-group", help="coweight/coroot quotient")
    p.add_argument("type", help="root system label, e.g. E8, E7, A3, D4")
    p.set_defaults(func=cmd_fundamental_group)

    p = add_parser("alcove-normalize", help="map a point into the alcove")
    p.add_argument("type")
    p.add_argument("coords", help="comma-separated rational coordinates, e.g. 3/2,-1,0")
    p.set_defaults(func=cmd_alcove_normalize)

    p = add_parser("kac-classes", help="torsion classes in Kac coordinates")
    p.add_argument("type")
    p.add_argument("m", type=int)
    p.add_argument("--exact-order", action="store_true")
    p.set_defaults(func=cmd_kac_classes)

    p = add_parser("lie-verify", help="Chevalley-basis verification report")
    p.add_argument("--jacobi", choices=("full", "sampled"), default="sampled")
    p.add_argument("--samples", type=int, default=20000)
    p.set_defaults(func=cmd_lie_verify)

    p = add_parser("construct", help="character to marked trigonal curve")
    _char_args(p)
    p.add_argument("--plot", help="render the real curve picture")
    p.set_defaults(func=cmd_construct)

    p = add_parser("classify", help="ramification report at a fiber")
    p.add_argument("curve", help="curve record JSON file")
    p.add_argument("--fiber", nargs=2, required=True, metavar=("S0", "T0"))
    p.add_argument("--plot", help="render the real curve picture")
    p.set_defaults(func=cmd_classify)

    p = add_parser("canonical-model", help="quadric cone and cubic in P3")
    p.add_argument("curve")
    p.set_defaults(func=cmd_canonical_model)

    p = add_parser("signature", help="invariant signature of the 12-form")
    p.add_argument("curve")
    p.set_defaults(func=cmd_signature)

    p = add_parser("equivariance-test", help="compare a character with a Weyl translate")
    _char_args(p)
    p.add_argument("--word", required=True, help="e.g. s1,s5 or root indices")
    p.set_defaults(func=cmd_equivariance_test)

    return ap


def _char_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("character", nargs="?", help="character JSON file")
    p.add_argument("--stored", choices=stored_character_names(),
                   help="use a bundled sample character")
    p.add_argument("--base", help="free base parameter p/q")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotRegularSemisimple as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GeneralPositionFailure as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, FileNotFoundError, KeyError) as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
