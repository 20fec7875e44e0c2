"""Command-line front end.

Deterministic output only: identical invocations produce byte-identical
documents (no timestamps, fixed orderings).  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import groups as groups_mod
from . import induction, mckay, spectra, theorems
from .characters import character_table, normalize_irrep_name
from .exactnum import format_value
from .groups import ContractViolation, FiniteGroup

SCHEMA = "spaceforms/1"
GROUP_ALIASES = {"2T": "2T", "T'": "2T", "2O": "2O", "O'": "2O",
                 "2I": "2I", "Y'": "2I"}


class UsageError(ValueError):
    pass


def resolve_group(selector: str, cache: str | None = None) -> FiniteGroup:
    sel = selector.strip().upper().replace("′", "'")
    if sel in ("T'", "O'", "Y'"):
        sel = GROUP_ALIASES[sel]
    if sel in GROUP_ALIASES:
        name = GROUP_ALIASES[sel]
        if cache:
            path = os.path.join(cache, f"{name}.json")
            if os.path.exists(path):
                return groups_mod.load_group(path)
            G = groups_mod.binary_polyhedral(name)
            os.makedirs(cache, exist_ok=True)
            groups_mod.save_group(G, path)
            return G
        return groups_mod.binary_polyhedral(name)
    if sel.startswith("Z"):
        try:
            q = int(sel[1:])
        except ValueError:
            raise UsageError(f"bad cyclic selector {selector!r}") from None
        return groups_mod.cyclic_group(q)
    raise UsageError(f"unknown group selector {selector!r} "
                     "(expected 2T, 2O, 2I, T', O', Y' or Z<q>)")


def emit(doc, fmt: str, text_renderer) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text_renderer())


# -- subcommands --------------------------------------------------------


def cmd_group(args) -> int:
    G = resolve_group(args.selector, args.cache)
    if args.what == "order":
        doc = {"schema": SCHEMA, "kind": "group_order", "group": G.name,
               "order": len(G)}
        emit(doc, args.format, lambda: str(len(G)))
        return 0
    if args.what == "classes":
        rows = [{"label": lab, "size": size, "element_order": G.orders[rep]}
                for lab, size, rep in zip(G.class_labels, G.class_sizes,
                                          G.class_reps)]
        doc = {"schema": SCHEMA, "kind": "classes", "group": G.name,
               "count": G.num_classes, "classes": rows,
               "aliases": dict(sorted(G.class_aliases.items()))}

        def text():
            lines = [f"{G.name}: {G.num_classes} conjugacy classes"]
            for r in rows:
                lines.append(f"  [{r['label']}]  size {r['size']:3d}  "
                             f"element order {r['element_order']}")
            if G.class_aliases:
                alias = ", ".join(f"[{a}]=[{p}]"
                                  for a, p in sorted(G.class_aliases.items()))
                lines.append(f"  fused labels: {alias}")
            return "\n".join(lines)

        emit(doc, args.format, text)
        return 0
    if args.what == "chartab":
        table = character_table(G)
        emit(table.to_json(), args.format, table.to_text)
        return 0
    raise UsageError(f"unknown group query {args.what!r}")


def cmd_induce(args) -> int:
    G = resolve_group(args.selector, args.cache)
    if args.gen is None:
        if args.r is not None:
            raise UsageError("--r needs --gen")
        if G.num_classes == len(G):
            raise UsageError("induction columns need a polyhedral group")
        doc = {
            "schema": SCHEMA, "kind": "induction_tables", "group": G.name,
            "columns": {gen: [{"twist": row.twist,
                               "constituents": row.as_dict()}
                              for row in induction.induction_table(G, gen)]
                        for gen in ("T", "S", "R", "RST")},
        }
        emit(doc, args.format, lambda: induction.render_all_columns(G))
        return 0
    if args.gen not in G.generators:
        raise UsageError(f"{G.name} has no generator {args.gen!r}")
    q = G.cyclic_subgroup(args.gen).order
    if args.r is None:
        rows = induction.induction_table(G, args.gen)
    else:
        if not 0 <= args.r < q:
            raise UsageError(f"twist {args.r} out of range 0..{q - 1} "
                             f"for <{args.gen}>")
        rows = [induction.induce_twist(G, args.gen, args.r)]
    doc = {
        "schema": SCHEMA, "kind": "induction", "group": G.name,
        "generator": args.gen, "subgroup_order": q,
        "rows": [{"twist": row.twist, "constituents": row.as_dict()}
                 for row in rows],
    }
    emit(doc, args.format,
         lambda: "\n".join(f"{row.twist}^({args.gen}) = {row.render()}"
                           for row in rows))
    return 0


def _parse_twist(args, G: FiniteGroup):
    if args.irrep is not None and args.r is not None:
        raise UsageError("give either --r or --irrep, not both")
    if args.gen is not None:
        if args.gen not in G.generators:
            raise UsageError(f"{G.name} has no generator {args.gen!r}")
        H = G.cyclic_subgroup(args.gen)
        if args.irrep is not None:
            raise UsageError("lens twists on a subgroup use --r")
        return H, (args.r or 0)
    if args.irrep is not None:
        return G, normalize_irrep_name(args.irrep)
    return G, (args.r if args.r is not None else
               (0 if G.num_classes == len(G) else "1"))


def cmd_spectrum(args) -> int:
    G = resolve_group(args.selector, args.cache)
    target, twist = _parse_twist(args, G)
    series = spectra.degeneracy_series(target, twist, args.nmax)
    weighted = None
    if args.weight != "none":
        if args.weight in ("heat", "zeta", "counting") and args.param is None:
            raise UsageError(f"--weight {args.weight} requires --param")
        if args.weight == "raw":
            w = spectra.SpectralWeight.raw()
        elif args.weight == "heat":
            w = spectra.SpectralWeight.heat(args.param)
        elif args.weight == "zeta":
            w = spectra.SpectralWeight.zeta(args.param)
        elif args.weight == "counting":
            w = spectra.SpectralWeight.counting(args.param)
        else:
            raise UsageError(f"unknown weight {args.weight!r}")
        weighted = spectra.spectral_sum(series, w)
    if args.format == "csv":
        sys.stdout.write(series.to_csv())
        return 0
    doc = series.to_json()
    if weighted is not None:
        doc["weighted_sum"] = {"kind": args.weight, "param": args.param,
                               "value": weighted.value,
                               "truncation_bound": weighted.truncation_bound}

    def text():
        lines = [f"twist {series.twist.describe()}, levels 0..{series.n_max}"]
        lines += [f"  n={n:3d}  lambda={n * (n + 2):5d}  d={d}"
                  for n, d in enumerate(series.entries) if d or n <= 2]
        if weighted is not None:
            lines.append(f"  {args.weight} sum = {weighted.value!r}"
                         + (f" (tail bound {weighted.truncation_bound:.3e})"
                            if weighted.truncation_bound is not None else ""))
        return "\n".join(lines)

    emit(doc, args.format, text)
    return 0


def cmd_torsion(args) -> int:
    lt = spectra.lens_torsion(args.q, args.r)
    doc = {"schema": SCHEMA, "kind": "lens_torsion", "q": lt.q, "r": lt.r,
           "value": lt.value, "log": lt.log_value,
           "exact": format_value(lt.exact)}
    emit(doc, args.format,
         lambda: f"torsion(q={lt.q}, r={lt.r}) = {format_value(lt.exact)}"
                 f" = {lt.value!r} (log {lt.log_value!r})")
    return 0


def cmd_mckay(args) -> int:
    G = resolve_group(args.selector, args.cache)
    if args.class_version:
        diagram = mckay.compactified_diagram(G)
        if args.format == "dot":
            sys.stdout.write(mckay.export_dot(diagram))
            return 0
        doc = diagram.to_json()

        def text():
            lines = [f"{G.name} compactified class diagram: poles [E], [-E]"]
            for gen, arc in diagram.arcs.items():
                chain = " - ".join(["[E]"] + [f"[{lab}]" for lab in arc] + ["[-E]"])
                lines.append(f"  {gen}-arc ({len(arc)} internal): {chain}"
                             f"  (reflection: {diagram.reflection[gen]})")
            return "\n".join(lines)

        emit(doc, args.format, text)
        return 0
    graph = mckay.mckay_graph(G)
    if args.format == "dot":
        sys.stdout.write(mckay.export_dot(graph))
        return 0
    doc = graph.to_json()

    def text():
        lines = [f"{G.name} McKay graph: {graph.ade_name}"]
        k = len(graph.nodes)
        for i in range(k):
            nbrs = [f"{graph.nodes[j]}" + (f" x{graph.adjacency[i][j]}"
                                           if graph.adjacency[i][j] > 1 else "")
                    for j in range(k) if graph.adjacency[i][j]]
            lines.append(f"  {graph.nodes[i]} (mark {graph.marks[i]}): "
                         + ", ".join(nbrs))
        return "\n".join(lines)

    emit(doc, args.format, text)
    return 0


# -- verify -------------------------------------------------------------


def _verify_items(which: str, n_max: int, cache: str | None):
    gs = [resolve_group(n, cache) for n in ("2T", "2O", "2I")]
    items: list[theorems.CheckResult] = []

    def want(key):
        return which in ("all", key)

    if want("tables"):
        from ._reference_tables import REFERENCE_INDUCTIONS
        for G in gs:
            ref = REFERENCE_INDUCTIONS[G.name]
            for gen, rows in ref.items():
                got = induction.induction_table(G, gen)
                ok = all(got[r].as_dict() == rows[r] for r in range(len(rows)))
                items.append(theorems.CheckResult(
                    f"{G.name}:table:{gen}", ok))
                items.append(theorems.CheckResult(
                    f"{G.name}:column_regular:{gen}",
                    induction.column_sum_is_regular(G, gen)))
    if want("isospectral"):
        for G in gs:
            items += theorems.verify_isospectrality(G, n_max)
    if want("dimension"):
        for G in gs:
            items.append(theorems.verify_dimension_relation(G, n_max))
    if want("relations"):
        for G in gs:
            items += theorems.verify_central_relations(G, n_max)
    if want("matrices"):
        for G in gs:
            for sector in ("spinor", "nonspinor"):
                comp = theorems.compare_reference_matrices(G, sector)
                expected = _expected_matrix_statuses(G.name, sector)
                ok = comp.statuses() == expected
                items.append(theorems.CheckResult(
                    f"{G.name}:matrix:{sector}", ok, comp.summary()))
                items.append(theorems.CheckResult(
                    f"{G.name}:matrix_roundtrip:{sector}",
                    comp.solution.round_trip_is_identity()))
    if want("conjugations"):
        for G in gs:
            for name, ok, detail in groups_mod.verify_generator_conjugations(G):
                items.append(theorems.CheckResult(
                    f"{G.name}:conjugation:{name}", ok, detail))
    if want("induced-matrices"):
        for G in gs:
            for gen in ("R", "S", "T", "RST"):
                H = G.cyclic_subgroup(gen)
                for r in range(H.order):
                    ok = induction.verify_monomial_rep(G, gen, r)
                    items.append(theorems.CheckResult(
                        f"{G.name}:induced_matrices:{r};{gen}", ok))
    if want("mckay"):
        for G in gs:
            graph = mckay.mckay_graph(G)
            diagram = mckay.compactified_diagram(G)
            l, m, n = G.presentation
            items.append(theorems.CheckResult(
                f"{G.name}:mckay:ade", graph.ade_name in ("E6~", "E7~", "E8~"),
                graph.ade_name))
            items.append(theorems.CheckResult(
                f"{G.name}:mckay:marks", graph.mark_equation_holds()))
            items.append(theorems.CheckResult(
                f"{G.name}:mckay:arcs",
                sorted(diagram.arc_sizes.values()) == sorted((l - 1, m - 1, n - 1))))
            items.append(theorems.CheckResult(
                f"{G.name}:mckay:relink",
                mckay.relink_matches_mckay(diagram, graph) is not None))
            cc = mckay.class_correspondence(G)
            items.append(theorems.CheckResult(
                f"{G.name}:mckay:two_to_one",
                cc["two_to_one"] and cc["covers_all_nontrivial_classes"]))
    if want("sunada"):
        G = gs[0]
        v1 = theorems.sunada_check(G, G.cyclic_subgroup("S"),
                                   G.cyclic_subgroup("T"), 1, 5, n_max)
        items.append(theorems.CheckResult(
            "2T:sunada:(1,5)", v1.equivalent and v1.isospectral_verified,
            v1.detail))
        v2 = theorems.sunada_check(G, G.cyclic_subgroup("S"),
                                   G.cyclic_subgroup("T"), 1, 1, n_max)
        items.append(theorems.CheckResult(
            "2T:sunada:(1,1)-inequivalent", not v2.equivalent, v2.detail))
    if want("artin"):
        for G in gs:
            items += theorems.artin_sufficiency(G)
    if want("oracle"):
        for G in gs + [resolve_group("Z2"), resolve_group("Z4"),
                       resolve_group("Z6")]:
            ok = True
            detail = ""
            if G.num_classes == len(G):
                twists = list(range(len(G)))
            else:
                twists = [ir.name for ir in character_table(G)]
            for tw in twists:
                for lev in range(0, spectra.ORACLE_MAX_LEVEL + 1):
                    o = spectra.oracle_projector_degeneracy(G, tw, lev)
                    f = spectra.degeneracy(G, tw, lev)
                    if o != f:
                        ok = False
                        detail = f"twist {tw} level {lev}: oracle {o} != {f}"
                        break
                if not ok:
                    break
            items.append(theorems.CheckResult(f"{G.name}:oracle", ok, detail))
    if want("torsion"):
        anchors = (((4, 1), 2), ((6, 1), 1), ((6, 3), 4))
        ok = all(spectra.lens_torsion(q, r).exact.as_integer() == v
                 for (q, r), v in anchors)
        lhs = spectra.lens_torsion(4, 1).log_value
        rhs = (spectra.lens_torsion(6, 1).log_value
               + spectra.lens_torsion(6, 3).log_value / 2)
        items.append(theorems.CheckResult(
            "torsion:anchors", ok and abs(lhs - rhs) < 1e-12,
            f"log residual {abs(lhs - rhs):.2e}"))
    if not items:
        raise UsageError(f"unknown verify item {which!r}")
    return items


def _expected_matrix_statuses(name: str, sector: str) -> dict:
    """Documented comparison outcome per reference matrix."""
    if name == "2I" and sector == "nonspinor":
        return {"1": "exact", "3": "permuted", "3'": "permuted",
                "4": "exact", "5": "exact"}
    if name == "2T" and sector == "spinor":
        return {"2s": "scaled", "2s'": "scaled_permuted",
                "2s''": "scaled_permuted"}
    rows = {("2T", "nonspinor"): ["1", "1'", "1''", "3"],
            ("2O", "spinor"): ["2s", "2s'", "4s"],
            ("2O", "nonspinor"): ["1", "1'", "2", "3", "3'"],
            ("2I", "spinor"): ["2s", "2s'", "4s", "6s"]}[(name, sector)]
    return {r: "exact" for r in rows}


def cmd_verify(args) -> int:
    items = _verify_items(args.item, args.nmax, args.cache)
    failures = [i for i in items if not i.passed]
    if args.format == "json":
        doc = {"schema": SCHEMA, "kind": "verification_report",
               "item": args.item, "n_max": args.nmax,
               "total": len(items), "failed": len(failures),
               "results": [i.as_dict() for i in items]}
        print(json.dumps(doc, indent=2))
    else:
        for i in items:
            mark = "PASS" if i.passed else "FAIL"
            line = f"{mark}  {i.key}"
            if i.detail:
                line += f"  [{i.detail}]"
            print(line)
        print(f"{len(items) - len(failures)}/{len(items)} checks passed")
    return 1 if failures else 0


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spaceforms",
        description="Exact deck-group representation theory and twisted "
                    "Laplacian spectra on spherical space forms.")
    p.add_argument("--cache", metavar="DIR", default=None,
                   help="directory for cached group JSON documents")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="orders, classes, character tables")
    g.add_argument("selector")
    g.add_argument("what", choices=["order", "classes", "chartab"])
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.set_defaults(func=cmd_group)

    i = sub.add_parser("induce", help="decompose Ind(omega^r) from a cyclic subgroup")
    i.add_argument("selector")
    i.add_argument("--gen", choices=["R", "S", "T", "RST"], default=None,
                   help="cyclic subgroup; omit for the full T/S/R layout")
    i.add_argument("--r", type=int, default=None,
                   help="twist index; omit for the whole column")
    i.add_argument("--format", choices=["text", "json"], default="text")
    i.set_defaults(func=cmd_induce)

    s = sub.add_parser("spectrum", help="twisted degeneracy series")
    s.add_argument("selector")
    s.add_argument("--gen", choices=["R", "S", "T", "RST"], default=None,
                   help="use the lens space of this cyclic subgroup")
    s.add_argument("--r", type=int, default=None, help="cyclic twist index")
    s.add_argument("--irrep", default=None, help="irrep twist by display name")
    s.add_argument("--nmax", type=int, default=24)
    s.add_argument("--weight", choices=["none", "raw", "heat", "zeta", "counting"],
                   default="none")
    s.add_argument("--param", type=float, default=None,
                   help="t for heat, s for zeta, lambda cutoff for counting")
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.set_defaults(func=cmd_spectrum)

    t = sub.add_parser("torsion", help="lens space analytic torsion")
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_torsion)

    m = sub.add_parser("mckay", help="McKay graph / compactified class diagram")
    m.add_argument("selector")
    m.add_argument("--class-version", action="store_true",
                   help="the compactified class diagram instead of the irrep graph")
    m.add_argument("--format", choices=["text", "json", "dot"], default="text")
    m.set_defaults(func=cmd_mckay)

    v = sub.add_parser("verify", help="run verification items")
    v.add_argument("item", choices=["all", "tables", "isospectral", "dimension",
                                    "relations", "matrices", "conjugations",
                                    "induced-matrices", "mckay", "sunada", "artin",
                                    "oracle", "torsion"])
    v.add_argument("--nmax", type=int, default=60)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
