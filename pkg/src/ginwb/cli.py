"""`ginwb` command line.

Exit codes: 0 success, 1 discrepancy found (report still written), 2 usage
error, 3 internal error.
"""

from __future__ import annotations

import sys
import traceback
from dataclasses import replace
from pathlib import Path

import click

from . import audit as audit_mod
from .curves import (
    ParameterizationError,
    check_kernel_by_substitution,
    forms_vector,
    image_degree_genus,
    implicitize as run_implicitize,
    proportional,
    solve_syzygy_constraints,
    syzygy_splitting_type,
)
from .enumeration import (
    REFERENCE_P3_STAIRCASES,
    ConstraintSet,
    default_threads,
    diff_against_reference,
    enumerate_curve_gins,
    enumerate_hyperplane_gins_p3,
    enumerate_hyperplane_gins_p4,
    gplusi_bound,
    make_record,
    reference_ideals,
)
from .fixtures import FIXTURES, fixture_forms, fixture_relations, load_param_file
from .groebner import DEFAULT_MODULUS, PolyParseError, format_poly
from .monomial import IdealError, ParseError, colength, cone_genus, is_borel_fixed, parse_ideal
from .report import ReportDocument
from .surfaces import (
    CUBIC_SCROLL_CHI,
    PLANE_CHI,
    QUADRIC_SURFACE_CHI,
    blowup6_solutions,
    divisor_stats,
    format_rational_polynomial,
    koszul_chi,
    liaison_bounds,
    liaison_residual_chi,
    normal_sheaf_bound,
    parse_class,
    solve_classes,
    surface,
)
from .trees import borel_generators

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

# errors caused by malformed user input map to the usage exit code
_INPUT_ERRORS = (ParseError, PolyParseError, IdealError, ParameterizationError, audit_mod.AuditError)

DEFAULT_HYPERPLANE = {"F0": (1, 2), "F1": (1, 2), "F2": (1, 3), "F3": (1, 3)}
SURFACES = ("F0", "F1", "F2", "F3", "Bl6P2")


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.exceptions.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except _INPUT_ERRORS as exc:
            raise click.UsageError(str(exc), ctx) from exc
        except Exception:  # noqa: BLE001
            traceback.print_exc(file=sys.stderr)
            click.echo("ginwb: internal error", err=True)
            ctx.exit(EXIT_INTERNAL)


def _output_options(f):
    f = click.option("--json", "as_json", is_flag=True, help="Print JSON to stdout instead of text.")(f)
    f = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="Write the JSON report here.")(f)
    return f


def _threads_option(f):
    return click.option(
        "--threads", type=click.IntRange(min=1), default=default_threads, show_default="GINWB_THREADS or 1",
        help="Worker threads for enumeration frontiers.",
    )(f)


def _source_options(f):
    f = click.option("--modulus", type=int, default=DEFAULT_MODULUS, show_default=True)(f)
    f = click.option("--param-file", type=click.Path(exists=True, dir_okay=False, path_type=Path))(f)
    f = click.option("--fixture", type=click.Choice(sorted(FIXTURES)))(f)
    return f


def _emit(doc: ReportDocument, out: Path | None, as_json: bool) -> None:
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(doc.dumps())
    click.echo(doc.dumps() if as_json else doc.render_text(), nl=False)
    ctx = click.get_current_context()
    ctx.exit(EXIT_DISCREPANCY if doc.discrepancies else EXIT_OK)


def _forms(fixture, param_file, modulus):
    if (fixture is None) == (param_file is None):
        raise click.UsageError("give exactly one of --fixture or --param-file")
    if fixture is not None:
        return fixture_forms(fixture, modulus), {"fixture": fixture}
    return load_param_file(param_file, modulus), {"param_file": param_file.name}


@click.group(cls=_Group, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact", prog_name="ginwb")
def main():
    """Verification tools for degree-11 curve gins, Gröbner kernels and codimension audits."""


# ----------------------------------------------------------------------------


@main.command("enumerate")
@click.option("--ambient", type=click.Choice(["p3", "p4"]), default="p4", show_default=True)
@click.option("--degree", type=click.IntRange(min=1), default=11, show_default=True)
@click.option("--max-regularity", type=int, default=None, help="Default 5 in P^4 and 6 in P^3.")
@_threads_option
@_output_options
def enumerate_cmd(ambient, degree, max_regularity, threads, out, as_json):
    """Enumerate hyperplane-section gins of the given degree."""
    inputs = {"ambient": ambient, "degree": degree, "max_regularity": max_regularity}
    doc = ReportDocument("enumerate", inputs)
    if ambient == "p4":
        cons = ConstraintSet(max_regularity=5 if max_regularity is None else max_regularity)
        with doc.timed("enumerate"):
            recs = enumerate_hyperplane_gins_p4(degree, cons, threads)
        doc.add("records", [r.to_json() for r in recs])
        doc.add("bound_multiset", sorted(r.bound for r in recs))
        if degree == 11:
            diff = diff_against_reference(recs)
            doc.add("reference", {
                "matched": list(diff.matched),
                "missing": list(diff.missing),
                "unlisted": len(diff.extra),
                "reference_multiset": list(diff.reference_multiset),
            })
            if diff.bound_multiset != diff.reference_multiset:
                doc.flag("bound multiset", list(diff.reference_multiset), list(diff.bound_multiset))
            for note in diff.notes:
                doc.flag("classification", "listed", note)
    else:
        reg = 6 if max_regularity is None else max_regularity
        with doc.timed("enumerate"):
            stairs = enumerate_hyperplane_gins_p3(degree, reg)
        doc.add("records", [
            {"staircase": list(s.parts), "ideal": str(s.ideal), "regularity": s.regularity,
             "cone_genus": s.cone_genus}
            for s in stairs
        ])
        if degree == 11:
            got = sorted(tuple(s.parts) for s in stairs)
            ref = sorted(tuple(x for x in p if x) for p in REFERENCE_P3_STAIRCASES)
            if got != ref:
                doc.flag("staircases", [list(p) for p in ref], [list(p) for p in got])
    _emit(doc, out, as_json)


@main.command()
@click.option("--ideal", "literal", required=True, help='Ideal literal, e.g. "Borel(x2^4, x1*x2^2, x0^2)".')
@click.option("--ambient", type=click.Choice(["p3", "p4"]), default="p4", show_default=True)
@_output_options
def bound(literal, ambient, out, as_json):
    """Colength, regularity, cone genus and the g+i bound of one hyperplane gin."""
    doc = ReportDocument("bound", {"ideal": literal, "ambient": ambient})
    if ambient == "p4":
        ideal = parse_ideal(literal, 3)
        rec = make_record(ideal)
        for k, ref, ref_bound in reference_ideals():
            if ref == rec.ideal:
                rec = replace(rec, matches_reference=k)
                if ref_bound != rec.bound:
                    doc.flag(f"bound for listed item {k}", ref_bound, rec.bound)
        doc.add("record", rec.to_json())
    else:
        ideal = parse_ideal(literal, 2)
        doc.add("record", {
            "ideal": str(ideal),
            "colength": colength(ideal),
            "regularity": ideal.max_degree(),
            "cone_genus": cone_genus(ideal, ambient=4),
        })
    _emit(doc, out, as_json)


@main.command("curve-gins")
@click.option("--ideal", "literal", required=True, help="Hyperplane gin in x0,x1,x2.")
@click.option("--genus", "genera", type=int, multiple=True, help="Target genera (default 0, 1, 2).")
@click.option("--max-regularity", type=int, default=None)
@click.option("--key-inference", is_flag=True, help="Drop histories that violate the key inference.")
@_threads_option
@_output_options
def curve_gins(literal, genera, max_regularity, key_inference, threads, out, as_json):
    """Curve gins reachable from the cone over a hyperplane gin."""
    genera = tuple(sorted(set(genera))) or (0, 1, 2)
    hyp = parse_ideal(literal, 3)
    gamma = cone_genus(hyp)
    budgets = sorted({gamma - g for g in genera if 0 <= g <= gamma})
    inputs = {"ideal": literal, "genera": list(genera), "max_regularity": max_regularity,
              "key_inference": key_inference}
    doc = ReportDocument("curve-gins", inputs)
    cons = ConstraintSet(max_regularity=max_regularity, uniform_position=False, key_inference=key_inference)
    with doc.timed("enumerate"):
        recs = enumerate_curve_gins(hyp, budgets, cons, threads)
    bnd = gplusi_bound(hyp)
    top = max((r.g + r.i for r in recs), default=None)
    doc.add("hyperplane_gin", {"ideal": f"Borel({borel_generators(hyp)})", "cone_genus": gamma, "bound": bnd})
    doc.add("summary", {"records": len(recs), "max_g_plus_i": top,
                        "max_i": max((r.i for r in recs), default=None)})
    doc.add("records", [r.to_json() for r in recs])
    if top is not None and top > bnd:
        doc.flag("g+i bound", f"<= {bnd}", top)
    _emit(doc, out, as_json)


@main.command()
@_source_options
@click.option("--order", type=click.Choice(["grevlex", "elim"]), default="grevlex", show_default=True)
@_output_options
def implicitize(fixture, param_file, modulus, order, out, as_json):
    """Reduced Gröbner basis of the kernel of a parameterization P^1 -> P^n."""
    forms, src = _forms(fixture, param_file, modulus)
    doc = ReportDocument("implicitize", {**src, "modulus": modulus, "order": order})
    with doc.timed("implicitize"):
        res = run_implicitize(forms, order=order)
    d, g = image_degree_genus(res)
    initial = res.initial_ideal
    doc.add("kernel", {
        "basis_size": len(res.basis),
        "generator_degrees": list(res.generator_degrees()),
        "max_generator_degree": res.max_generator_degree(),
        "initial_ideal": str(initial),
        "borel_fixed": is_borel_fixed(initial),
        "image_degree": d,
        "arithmetic_genus": g,
        "substitution_check": check_kernel_by_substitution(res, forms),
        "basis": [format_poly(p) for p in res.basis],
    })
    if fixture is not None and modulus == DEFAULT_MODULUS:
        fx = FIXTURES[fixture]
        if res.max_generator_degree() > fx["max_generator_degree"]:
            doc.flag("max generator degree", f"<= {fx['max_generator_degree']}", res.max_generator_degree())
        if "initial_ideal" in fx:
            printed = parse_ideal(fx["initial_ideal"], initial.nvars)
            if printed != initial:
                doc.flag("initial ideal", str(printed), str(initial))
        if "genus" in fx and fx["genus"] != g:
            doc.flag("arithmetic genus", fx["genus"], g)
    _emit(doc, out, as_json)


@main.command()
@_source_options
@_output_options
def splitting(fixture, param_file, modulus, out, as_json):
    """Syzygy degrees, splitting type and Betti table of a parameterization."""
    forms, src = _forms(fixture, param_file, modulus)
    doc = ReportDocument("splitting", {**src, "modulus": modulus})
    with doc.timed("syzygies"):
        rec, split = syzygy_splitting_type(forms)
    doc.add("syzygies", {
        "form_degree": rec.form_degree,
        "degrees": list(rec.degrees),
        "splitting": list(split),
        "betti": rec.betti_text().splitlines(),
    })
    if fixture is not None and "splitting" in FIXTURES[fixture]:
        fx = FIXTURES[fixture]
        if tuple(rec.degrees) != fx["syzygy_degrees"]:
            doc.flag("syzygy degrees", list(fx["syzygy_degrees"]), list(rec.degrees))
        if tuple(split) != fx["splitting"]:
            doc.flag("splitting type", list(fx["splitting"]), list(split))
    _emit(doc, out, as_json)


@main.command("syzygy-solve")
@click.option("--fixture", type=click.Choice([k for k in sorted(FIXTURES) if "relations" in FIXTURES[k]]),
              required=True)
@click.option("--modulus", type=int, default=DEFAULT_MODULUS, show_default=True)
@_output_options
def syzygy_solve(fixture, modulus, out, as_json):
    """Solve the linear conditions sum c_k f_k = 0 for the coefficients of f_0..f_4."""
    doc = ReportDocument("syzygy-solve", {"fixture": fixture, "modulus": modulus})
    d = FIXTURES[fixture]["degree"]
    with doc.timed("solve"):
        sol = solve_syzygy_constraints(fixture_relations(fixture, modulus), d, 5, modulus)
    printed = forms_vector(fixture_forms(fixture, modulus), d, modulus)
    match = sol.nullity == 1 and proportional(sol.representative, printed, modulus)
    doc.add("solution", {
        "unknowns": 5 * (d + 1),
        "rank": sol.rank,
        "nullity": sol.nullity,
        "matches_printed_forms": match,
        "forms": [format_poly(f) for f in sol.forms()],
    })
    if not match:
        doc.flag("solution space", "one-dimensional, spanned by the printed forms",
                 f"nullity {sol.nullity}, proportional: {match}")
    _emit(doc, out, as_json)


@main.command("surface")
@click.option("--surface", "name", type=click.Choice(SURFACES), required=True)
@click.option("--degree", type=int, default=11, show_default=True)
@click.option("--genus", "genera", type=int, multiple=True, help="Target genera (default 0..12).")
@click.option("--hyperplane", help="Hyperplane class as a,b (default e+2f on F0/F1, e+3f on F2/F3).")
@click.option("--no-effective", is_flag=True, help="Disable the C.e >= 0, C.f >= 0 filter.")
@click.option("--class", "cls", help='Also report one class, e.g. "F1:(4,7)".')
@click.option("--drop", multiple=True, type=click.Choice(["res1", "res2", "res3", "res3a", "res3b", "res4"]),
              help="Bl6P2 only: conditions to drop.")
@_output_options
def surface_cmd(name, degree, genera, hyperplane, no_effective, cls, drop, out, as_json):
    """Solve for curve classes of given degree and genus on a rational surface."""
    genera = tuple(sorted(set(genera))) or tuple(range(13))
    inputs = {"surface": name, "degree": degree, "genera": list(genera), "effective": not no_effective,
              "hyperplane": hyperplane, "class": cls, "drop": sorted(drop)}
    doc = ReportDocument("surface", inputs)
    if name == "Bl6P2":
        sols = blowup6_solutions(drop=tuple(drop))
        doc.add("solutions", [f"({a};{','.join(str(b) for b in bs)})" for a, *bs in sols])
    else:
        model = surface(name)
        try:
            h = tuple(int(x) for x in hyperplane.split(",")) if hyperplane else DEFAULT_HYPERPLANE[name]
        except ValueError as exc:
            raise click.BadParameter(f"expected a,b not {hyperplane!r}", param_hint="--hyperplane") from exc
        H = model.cls(*h)
        sols = solve_classes(model, H, degree, set(genera), effective=not no_effective)
        rows = []
        for a, b in sols:
            C = model.cls(a, b)
            st = divisor_stats(C, H)
            deg_bound, sec_bound = normal_sheaf_bound(C)
            rows.append({
                "class": str(C), "genus": int(st.genus), "self_intersection": st.self_intersection,
                "chi": int(st.chi), "C.e": C.dot(model.cls(1, 0)),
                "normal_degree_bound": deg_bound, "normal_section_bound": sec_bound,
            })
        doc.add("solutions", rows)
    if cls:
        try:
            C = parse_class(cls)
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--class") from exc
        model = C.model
        H = model.cls(*DEFAULT_HYPERPLANE[model.kind]) if model.kind in DEFAULT_HYPERPLANE else None
        if H is None:
            raise click.UsageError("--class is only supported on F0..F3")
        st = divisor_stats(C, H)
        doc.add("class", {
            "class": str(C), "degree": st.degree, "self_intersection": st.self_intersection,
            "canonical_degree": st.canonical_degree, "genus": str(st.genus), "chi": str(st.chi),
            "normal_sheaf_bound": list(normal_sheaf_bound(C)),
        })
    _emit(doc, out, as_json)


@main.command()
@click.option("--ci", type=click.Choice(["333", "44"]), help="Complete-intersection type for a single bound.")
@click.option("-m", "m", type=click.IntRange(min=0), help="Degree of the base curve Y.")
@click.option("-g", "g", type=int, default=2, show_default=True)
@click.option("--gY", "gY", type=int, default=0, show_default=True)
@_output_options
def liaison(ci, m, g, gY, out, as_json):
    """Linkage arithmetic: Koszul Euler characteristics, residual surfaces and contact bounds."""
    doc = ReportDocument("liaison", {"ci": ci, "m": m, "g": g, "gY": gY})
    if ci is not None:
        if m is None:
            raise click.UsageError("-m is required with --ci")
        doc.add("bounds", liaison_bounds(ci, m, g, gY).as_dict())
        _emit(doc, out, as_json)
        return
    fmt = format_rational_polynomial
    doc.add("koszul", {
        "(3,3,3) in P4": fmt(koszul_chi((3, 3, 3), 4)),
        "(3,3) in P4": fmt(koszul_chi((3, 3), 4)),
        "(1,2) in P4": fmt(koszul_chi((1, 2), 4)),
    })
    link = koszul_chi((3, 3), 4)
    residuals = {}
    for label, chi in (("cubic scroll", CUBIC_SCROLL_CHI), ("quadric surface", QUADRIC_SURFACE_CHI),
                       ("plane", PLANE_CHI)):
        res, genus = liaison_residual_chi(link, chi)
        residuals[label] = {"chi": fmt(res), "sectional_genus": str(genus)}
    doc.add("residuals", residuals)
    doc.add("contact_lower_bounds", {
        f"m={mm}": liaison_bounds("333", mm, 2, gy).contact_lower_bound for mm, gy in ((2, 0), (3, 1), (4, 3))
    })
    doc.add("contact_codimensions", [
        {"case": c.case, "contact": c.contributions[1].value} for c in audit_mod._contact_cases()
    ])
    for d in audit_mod.surface_discrepancies():
        if "residual" in d.item:
            doc.flag(d.item, d.printed, d.computed, module=d.module)
    _emit(doc, out, as_json)


@main.command("audit")
@click.option("--all", "everything", is_flag=True,
              help="Also recompute every module's printed-vs-computed discrepancies (includes a Gröbner run).")
@_output_options
def audit_cmd(everything, out, as_json):
    """Evaluate the codimension case corpus."""
    doc = ReportDocument("audit", {"all": everything})
    with doc.timed("audit"):
        rep = audit_mod.run_audit(discrepancies=everything, heavy=everything)
    body = rep.to_json()
    doc.add("summary", body["summary"])
    doc.add("cases", body["cases"])
    for c in rep.mismatches:
        doc.flag(f"verdict: {c.case}", "nonproblematic" if c.expected else "not settled",
                 f"{'nonproblematic' if c.verdict else 'not settled'} (codimension {c.codimension}, g+i = {c.g + c.i})",
                 module="case_audit")
    for d in rep.discrepancies:
        doc.flag(d.item, d.printed, d.computed, module=d.module)
    _emit(doc, out, as_json)


if __name__ == "__main__":  # pragma: no cover
    main()
