"""Command-line front end: ``fuskit <area> <command> [options]``.

Exit codes: 0 ok / consistent, 1 usage or parse error, 2 hypotheses not
applicable, 3 contradiction.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys

from . import catalog
from .analysis import (
    alperin_decompose,
    alperin_family,
    centric_radical_table,
)
from .fsaut import AutGroupU, FusionAut, induced_fusion_aut_from_group, preserves_fusion
from .fusion import (
    FusionSystem,
    check_saturation,
    f_conjugacy_classes,
    fusion_from_group,
    inner_fusion_system,
)
from .permgroup import (
    CapExceededError,
    ContradictionError,
    GroupHom,
    PermGroup,
    caps,
    characteristic_subgroups,
    center,
    isomorphic_to,
    load_group,
    nilpotency_data,
    parse_cycles,
    prime_divisors,
    sylow_subgroup,
)
from .theorems import (
    TheoremReport,
    check_lemma_semidirect,
    check_theorem_A,
    check_theorem_B,
    is_nilpotent_fusion,
    sigma4_free,
)

EXIT_OK, EXIT_USAGE, EXIT_NOT_APPLICABLE, EXIT_CONTRADICTION = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Input parsing


def resolve_group(source: str) -> PermGroup:
    """``name:<catalog spec>`` or a path to a group file."""
    if source.startswith("name:"):
        return catalog.make_named_group(source[5:])
    if not os.path.exists(source):
        raise UsageError(f"group file not found: {source}")
    try:
        G = load_group(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc}") from None
    if G.name is None:
        G.name = os.path.basename(source)
    return G


def parse_fusion_arg(text: str) -> dict:
    """``group=<src>,p=<prime>`` or ``inner=<src>``."""
    out = {}
    for part in catalog.split_top_level(text):
        key, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"malformed --fusion component: {part!r}")
        out[key.strip()] = value.strip()
    if ("group" in out) == ("inner" in out):
        raise UsageError("--fusion needs exactly one of group=... or inner=...")
    if "group" in out and "p" not in out:
        raise UsageError("--fusion group=... needs p=<prime>")
    return out


def _prime(value) -> int:
    try:
        p = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"not a prime: {value!r}") from None
    if p < 2 or p not in prime_divisors(p):
        raise UsageError(f"not a prime: {p}")
    return p


def resolve_fusion(args) -> tuple[FusionSystem, PermGroup | None]:
    """Returns (F, G) where G is the ambient group (None for inner systems)."""
    if args.fusion and args.group:
        raise UsageError("give either --fusion or --group, not both")
    if args.fusion:
        spec = parse_fusion_arg(args.fusion)
        if "inner" in spec:
            S = resolve_group(spec["inner"])
            if len(prime_divisors(S.order())) > 1:
                raise UsageError("inner=... needs a p-group")
            return inner_fusion_system(S), None
        G = resolve_group(spec["group"])
        return fusion_from_group(G, _prime(spec["p"])), G
    if not args.group:
        raise UsageError("a group source is required (--group or --fusion)")
    if args.p is None:
        raise UsageError("--p is required with --group")
    G = resolve_group(args.group)
    return fusion_from_group(G, _prime(args.p)), G


_ARROW = re.compile(r"^\s*(\([^>]*\)|\(\))\s*->\s*(\([^>]*\)|\(\))\s*$")


def parse_image_list(text: str, degree: int) -> list[tuple]:
    """``"(1,2,3)->(1,3,2);(1,2)->(2,3)"`` -> [(source, image), ...]."""
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _ARROW.match(chunk)
        if not m:
            raise UsageError(f"malformed image pair: {chunk.strip()!r}")
        try:
            pairs.append((parse_cycles(m.group(1), degree), parse_cycles(m.group(2), degree)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not pairs:
        raise UsageError("empty image list")
    return pairs


def automorphism_from_arg(F: FusionSystem, G: PermGroup | None, text: str) -> FusionAut:
    """Images of generators of S give an automorphism of S; images of
    generators of G give an automorphism of G, restricted to an invariant Sylow."""
    pairs = parse_image_list(text, F.S.degree)
    gens, images = [a for a, _ in pairs], [b for _, b in pairs]
    span = PermGroup(gens, degree=F.S.degree)
    try:
        if span.elements == F.S.elements:
            phi = GroupHom.from_images(F.S, F.S, gens, images)
            if not preserves_fusion(F, phi, exhaustive=True):
                raise UsageError("the automorphism does not preserve the fusion system")
            return FusionAut(F, phi, check=False)
        if G is not None and span.elements == G.elements:
            phi = GroupHom.from_images(G, G, gens, images)
            if phi.image_elements() != G.elements:
                raise UsageError("the map is not onto G")
            return induced_fusion_aut_from_group(G, phi, F.p).aut
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("the listed sources generate neither S nor G")


# ---------------------------------------------------------------------------
# JSON encoding


def perm_str(x) -> str:
    return str(x)


def subgroup_json(P: PermGroup) -> dict:
    return {"order": P.order(), "generators": [perm_str(g) for g in P.gens]}


def hom_json(phi: GroupHom) -> dict:
    return {perm_str(g): perm_str(y) for g, y in phi.generator_images()}


def report_json(report: TheoremReport) -> dict:
    hyps = []
    for h in report.hypotheses:
        hyps.append({"name": h.name, "holds": h.holds, "witness": _witness_json(h.witness)})
    return {
        "theorem": report.theorem,
        "hypotheses": hyps,
        "applicable": report.applicable,
        "conclusion_holds": report.conclusion_holds,
        "contradiction": report.contradiction,
        "details": report.details,
    }


def _witness_json(w):
    if w is None or isinstance(w, (int, str, bool)):
        return w
    if isinstance(w, PermGroup):
        return subgroup_json(w)
    if isinstance(w, tuple) and len(w) == 2 and hasattr(w[1], "L"):
        P, model = w
        return {"subgroup": subgroup_json(P), "model_order": model.L.order(),
                "model_is_sym4": isomorphic_to(model.L, catalog.sym(4))}
    return repr(w)


def _report_exit(report: TheoremReport) -> int:
    if report.contradiction:
        return EXIT_CONTRADICTION
    return EXIT_OK if report.applicable else EXIT_NOT_APPLICABLE


def system_header(F: FusionSystem) -> dict:
    return {"p": F.p, "sylow": subgroup_json(F.S)}


# ---------------------------------------------------------------------------
# Commands; each returns (payload, exit code)


def cmd_group_info(args):
    G = resolve_group(args.group)
    out = {
        "name": G.name,
        "degree": G.degree,
        "order": G.order(),
        "generators": [perm_str(g) for g in G.gens],
        "abelian": G.is_abelian(),
        "center_order": center(G).order(),
        "nilpotent": nilpotency_data(G).nilpotent,
        "sylow_orders": {str(p): sylow_subgroup(G, p).order() for p in prime_divisors(G.order())},
    }
    if args.p is not None:
        p = _prime(args.p)
        S = sylow_subgroup(G, p)
        ch = characteristic_subgroups(S, p)
        out["p"] = p
        out["sylow"] = subgroup_json(S)
        out["characteristic"] = {
            "center": ch.center.order(),
            "omega_center": ch.omega_center.order(),
            "thompson": ch.thompson.order(),
            "omega_center_thompson": ch.omega_center_thompson.order(),
        }
    return out, EXIT_OK


def cmd_fusion_build(args):
    F, _ = resolve_fusion(args)
    classes = []
    for cls in f_conjugacy_classes(F):
        rep = cls[0]
        entry = {"representative": subgroup_json(rep), "size": len(cls), "aut_order": len(F.aut(rep))}
        if args.dump_homs:
            entry["isomorphisms"] = [hom_json(phi) for phi in F.isomorphisms_from(rep)]
        classes.append(entry)
    out = system_header(F)
    out.update({"subgroups": len(F.subgroups), "morphisms": F.morphism_count(), "classes": classes})
    return out, EXIT_OK


def cmd_fusion_saturation(args):
    F, _ = resolve_fusion(args)
    rep = check_saturation(F)
    out = system_header(F)
    out.update({
        "saturated": rep.saturated,
        "axiom_I_failures": [{"subgroup": subgroup_json(P), "reason": why} for P, why in rep.axiom_I_failures],
        "axiom_II_failures": [{"morphism": hom_json(e.phi), "N_phi": subgroup_json(e.N_phi)}
                              for e in rep.axiom_II_failures],
    })
    return out, EXIT_OK


def cmd_fusion_nilpotent(args):
    F, _ = resolve_fusion(args)
    return {"nilpotent": is_nilpotent_fusion(F)}, EXIT_OK


def cmd_fusion_centric_radical(args):
    F, _ = resolve_fusion(args)
    rows = []
    for r in centric_radical_table(F):
        rows.append({
            "subgroup": subgroup_json(r.subgroup),
            "fully_centralized": r.fully_centralized,
            "fully_normalized": r.fully_normalized,
            "centric": r.centric,
            "radical": r.radical,
            "aut_order": r.aut_order,
            "out_order": r.out_order,
        })
    out = system_header(F)
    out["rows"] = rows
    return out, EXIT_OK


def cmd_fusion_alperin(args):
    F, _ = resolve_fusion(args)
    if not args.from_:
        raise UsageError("fusion alperin needs --from <generator images>")
    pairs = parse_image_list(args.from_, F.S.degree)
    gens = [a for a, _ in pairs]
    try:
        P = F.subgroup(PermGroup(gens, degree=F.S.degree))
        Q = F.subgroup(PermGroup([b for _, b in pairs], degree=F.S.degree))
        phi = GroupHom.from_images(P, Q, gens, [b for _, b in pairs])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not F.contains_morphism(phi):
        raise UsageError("the map is not a morphism of the fusion system")
    dec = alperin_decompose(F, phi, alperin_family(F))
    if not dec.is_valid():
        raise ContradictionError("Alperin witness does not recompose")
    out = system_header(F)
    out["morphism"] = hom_json(phi)
    out["steps"] = [{"subgroup": subgroup_json(st.Q), "automorphism": hom_json(st.psi),
                     "source": subgroup_json(st.source), "target": subgroup_json(st.target)}
                    for st in dec.steps]
    out["recomposes"] = True
    return out, EXIT_OK


def cmd_check_theorem_a(args):
    F, G = resolve_fusion(args)
    U = AutGroupU(F, [automorphism_from_arg(F, G, a) for a in args.aut or []])
    rep = check_theorem_A(F, U)
    out = report_json(rep)
    out.update(system_header(F))
    return out, _report_exit(rep)


def cmd_check_theorem_b(args):
    F, G = resolve_fusion(args)
    if not args.aut or len(args.aut) != 1:
        raise UsageError("check theorem-b needs exactly one --aut")
    rep = check_theorem_B(F, automorphism_from_arg(F, G, args.aut[0]))
    out = report_json(rep)
    out.update(system_header(F))
    return out, _report_exit(rep)


def cmd_check_lemma(args):
    try:
        case = catalog.semidirect_case(args.case)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        rep = check_lemma_semidirect(case.V, case.H, case.action, case.p)
    except ValueError as exc:
        return {"case": args.case, "precondition": False, "reason": str(exc)}, EXIT_NOT_APPLICABLE
    out = {
        "case": args.case,
        "p": case.p,
        "precondition": rep.precondition,
        "group_order": rep.group_order,
        "sylow_order": rep.sylow_order,
        "aut_F_order": rep.aut_F_order,
        "subgroups_examined": rep.subgroups_examined,
        "t_automorphism_groups": [{"order": U.order(), "branch": res.branch} for U, res in rep.t_automorphism_groups],
        "holds": rep.holds,
    }
    return out, EXIT_OK if rep.holds else EXIT_CONTRADICTION


def cmd_check_sigma4(args):
    F, _ = resolve_fusion(args)
    res = sigma4_free(F)
    out = system_header(F)
    out["sigma4_free"] = res.free
    out["witness"] = _witness_json(res.witness)
    out["models"] = [{"subgroup": subgroup_json(M.P), "model_order": M.L.order()} for M in res.models]
    return out, EXIT_OK if res.free else EXIT_NOT_APPLICABLE


def example_l217() -> dict:
    G = catalog.psl2(17)
    F = fusion_from_group(G, 2)
    normal_auts = {}
    for Q in F.subgroups:
        if F.normalizer_in_S(Q).order() == F.S.order():
            normal_auts[str(Q.order())] = sorted({*normal_auts.get(str(Q.order()), []), len(F.aut(Q))})
    s4 = sigma4_free(F)
    rep = check_theorem_A(F)
    return {
        "group_order": G.order(),
        "sylow": subgroup_json(F.S),
        "sylow_is_dihedral16": isomorphic_to(F.S, catalog.dihedral(16)),
        "saturated": check_saturation(F).saturated,
        "nilpotent": is_nilpotent_fusion(F),
        "normal_subgroup_aut_orders": normal_auts,
        "normal_auts_are_2_groups": all(n & (n - 1) == 0 for v in normal_auts.values() for n in v),
        "sigma4_free": s4.free,
        "witness": _witness_json(s4.witness),
        "theorem_A": report_json(rep),
    }


def example_a4() -> dict:
    ex = catalog.make_fpf_example("a4_conj12")
    G, phi = ex.group, ex.automorphism
    ind = induced_fusion_aut_from_group(G, phi, 3)
    rep = check_theorem_B(ind.aut.system, ind.aut)
    fixed = sorted(x for x in phi.fixed_points() if not x.is_identity())
    return {
        "group_order": G.order(),
        "automorphism_fixed_points": [perm_str(x) for x in fixed],
        "sylow": subgroup_json(ind.S),
        "invariant_sylows": ind.invariant_sylows,
        "theorem_B": report_json(rep),
    }


EXAMPLES = {"l217": example_l217, "a4": example_a4}


def cmd_examples(args):
    out = EXAMPLES[args.name]()
    out["example"] = args.name
    return out, EXIT_OK


# ---------------------------------------------------------------------------
# Output


def render_table(payload: dict) -> str:
    lines = []
    rows = payload.get("rows")
    for key in sorted(payload):
        if key in ("rows", "schema"):
            continue
        lines.append(f"{key}: {_flat(payload[key])}")
    if rows:
        cols = ["order", "generators"] + [k for k in rows[0] if k != "subgroup"]
        table = [cols]
        for r in rows:
            table.append([str(r["subgroup"]["order"]), " ".join(r["subgroup"]["generators"]) or "()"]
                         + [_flat(r[k]) for k in cols[2:]])
        widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
        for row in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _flat(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, ensure_ascii=False)
    return str(v)


def emit(payload: dict, fmt: str, stream) -> None:
    payload = {"schema": 1, **payload}
    if fmt == "json":
        stream.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write(render_table(payload) + "\n")


# ---------------------------------------------------------------------------
# Argument parser


def _common(p: argparse.ArgumentParser, fusion: bool = True) -> None:
    p.add_argument("--group", help="group file or name:<catalog spec>")
    p.add_argument("--p", help="prime")
    if fusion:
        p.add_argument("--fusion", help="group=<src>,p=<prime> or inner=<src>")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--cap-elements", type=int)
    p.add_argument("--cap-subgroups", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuskit", description="Saturated fusion systems of finite groups.")
    parser.add_argument("-v", "--verbose", action="store_true")
    areas = parser.add_subparsers(dest="area", required=True)

    group = areas.add_parser("group").add_subparsers(dest="command", required=True)
    p = group.add_parser("info")
    _common(p, fusion=False)
    p.set_defaults(func=cmd_group_info)

    fusion = areas.add_parser("fusion").add_subparsers(dest="command", required=True)
    for name, func in [("build", cmd_fusion_build), ("saturation", cmd_fusion_saturation),
                       ("nilpotent", cmd_fusion_nilpotent), ("centric-radical", cmd_fusion_centric_radical),
                       ("alperin", cmd_fusion_alperin)]:
        p = fusion.add_parser(name)
        _common(p)
        p.set_defaults(func=func)
        if name == "build":
            p.add_argument("--dump-homs", action="store_true", help="list every isomorphism out of each class representative")
        if name == "alperin":
            p.add_argument("--from", dest="from_", help="generator images of the morphism to decompose")

    check = areas.add_parser("check").add_subparsers(dest="command", required=True)
    for name, func in [("theorem-a", cmd_check_theorem_a), ("theorem-b", cmd_check_theorem_b),
                       ("sigma4-free", cmd_check_sigma4)]:
        p = check.add_parser(name)
        _common(p)
        p.set_defaults(func=func)
        if name.startswith("theorem"):
            p.add_argument("--aut", action="append", help="automorphism as generator images; repeatable for theorem-a")
    p = check.add_parser("lemma-semidirect")
    p.add_argument("--case", required=True, choices=sorted(catalog.SEMIDIRECT_CASES))
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--cap-elements", type=int)
    p.add_argument("--cap-subgroups", type=int)
    p.set_defaults(func=cmd_check_lemma)

    p = areas.add_parser("examples")
    p.add_argument("name", choices=sorted(EXAMPLES))
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--cap-elements", type=int)
    p.add_argument("--cap-subgroups", type=int)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr)
    overrides = {}
    if args.cap_elements is not None:
        overrides["elements"] = args.cap_elements
    if args.cap_subgroups is not None:
        overrides["subgroups"] = args.cap_subgroups
    try:
        with caps(**overrides):
            payload, code = args.func(args)
    except CapExceededError as exc:
        stderr.write(f"fuskit: cap exceeded: {exc}\n")
        return EXIT_USAGE
    except ContradictionError as exc:
        stderr.write(f"fuskit: CONTRADICTION: {exc}\n")
        return EXIT_CONTRADICTION
    except (UsageError, ValueError) as exc:
        stderr.write(f"fuskit: {exc}\n")
        return EXIT_USAGE
    emit(payload, args.format, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
