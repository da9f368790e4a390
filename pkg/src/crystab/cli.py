"""Command line: classify, region, verify, table."""

import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial

import click

from . import classify as cl
from .characters import RamifiedCharacter
from .expr import ParseError, evaluate, needs_quad, parse
from .fpmod import ConsistencyError
from .padic import DomainError, PadicConfig, PrecisionError, default_precision

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_PRECISION, EXIT_INTERNAL = 0, 1, 2, 3, 4

CSV_COLUMNS = ("p", "n", "kappa", "c", "k_mod", "slope", "nu", "in_region", "determined",
               "label", "mu")


def _dump(obj):
    return json.dumps(obj, indent=2, ensure_ascii=True)


def _precision(value):
    return value if value is not None else default_precision()


def _build(p, n, kappa, c, a_text, precision):
    tree = parse(a_text)
    cfg = PadicConfig(p, n, _precision(precision), quad=needs_quad(tree))
    chi = RamifiedCharacter(cfg, kappa, c)
    return cfg, chi, evaluate(tree, cfg, chi)


def _fail(as_json, kind, exc, code):
    if as_json:
        click.echo(_dump({"error": {"kind": kind, "message": str(exc)}}))
    else:
        click.echo(f"error ({kind}): {exc}", err=True)
    return code


def _guarded(as_json, fn):
    try:
        return fn()
    except ParseError as exc:
        return _fail(as_json, "parse", exc, EXIT_PARSE)
    except DomainError as exc:
        return _fail(as_json, "domain", exc, EXIT_DOMAIN)
    except PrecisionError as exc:
        return _fail(as_json, "precision", exc, EXIT_PRECISION)
    except ConsistencyError as exc:
        return _fail(as_json, "consistency", exc, EXIT_INTERNAL)


def classification_report(p, n, k, kappa, c, a_text, precision=None):
    cfg, chi, a = _build(p, n, kappa, c, a_text, precision)
    res = cl.classify_galois(k, a, chi)
    ban = cl.to_banach(res)

    def side(r):
        if r.determined:
            return r.label.to_dict()
        return {"kind": "candidate-set", "pi": r.pi.to_dict()}

    return {
        "input": {"p": p, "n": n, "k": k, "kappa": kappa, "c": c, "a": a_text, "precision": cfg.M},
        "slope": cl.fmt_fraction(res.slope),
        "nu": res.nu,
        "region": {"alpha": res.nu, "member": res.in_region},
        "k_plus_kappa_mod": res.k_mod,
        "galois": side(res),
        "banach": side(ban),
        "determined": res.determined,
        "candidates": [x.to_dict() for x in res.candidates],
        "banach_candidates": [x.to_dict() for x in ban.candidates],
    }


def _text_report(rep):
    lines = [f"slope {rep['slope']}  nu {rep['nu']}  region D_{rep['region']['alpha']}: "
             f"{'member' if rep['region']['member'] else 'not a member'}  "
             f"k+kappa = {rep['k_plus_kappa_mod']} mod p-1"]
    if rep["determined"]:
        lines.append(f"galois: {rep['galois']['text']}")
        lines.append(f"banach: {rep['banach']['text']}")
        if "mu" in rep["galois"]:
            lines.append(f"mu = {rep['galois']['mu']}  lambda in {rep['galois']['lambda_field']}: "
                         f"{', '.join(rep['galois']['lambda'])}")
        elif "mu_power" in rep["galois"]:
            g = rep["galois"]
            lines.append(f"mu^{g['exponent']} = {g['mu_power']}  roots in {g['field']}: "
                         f"{', '.join(g['branch_set'])} (branch not fixed)")
    else:
        lines.append("candidates:")
        for x in rep["candidates"]:
            lines.append(f"  {x['text']}")
    return "\n".join(lines)


@click.group()
def cli():
    """Mod p reductions of two-dimensional crystabelline representations."""


def _common(f):
    f = click.option("--precision", type=int, default=None,
                     help="p-adic precision M (default: CRYSTAB_PRECISION or 16)")(f)
    f = click.option("--c", "c", type=int, default=1, show_default=True,
                     help="eps_p(1+p) = zeta_(p^(n-1))^c")(f)
    f = click.option("--kappa", type=int, default=0, show_default=True)(f)
    f = click.option("--n", "n", type=int, default=2, show_default=True)(f)
    f = click.option("--p", "p", type=int, required=True)(f)
    return f


@cli.command("classify")
@_common
@click.option("--k", "k", type=int, required=True)
@click.option("--a", "a_text", required=True, help='eigenvalue expression, e.g. "sqrt(Z-1)"')
@click.option("--json", "as_json", is_flag=True)
def cmd_classify(p, n, kappa, c, precision, k, a_text, as_json):
    """Reduction of V_(k,a,eps) and its Banach counterpart."""
    def run():
        rep = classification_report(p, n, k, kappa, c, a_text, precision)
        click.echo(_dump(rep) if as_json else _text_report(rep))
        return EXIT_OK
    return _guarded(as_json, run)


@cli.command("region")
@_common
@click.option("--a", "a_text", required=True)
@click.option("--alpha", type=int, default=None, help="default: every alpha in 1..(p-1)/2")
@click.option("--json", "as_json", is_flag=True)
def cmd_region(p, n, kappa, c, precision, a_text, alpha, as_json):
    """Membership of a in the disks D_alpha."""
    def run():
        cfg, chi, a = _build(p, n, kappa, c, a_text, precision)
        alphas = [alpha] if alpha is not None else range(1, (p - 1) // 2 + 1)
        rows = [{"alpha": al, "member": cl.region_member(a, al, chi)} for al in alphas]
        w = a.w()
        if as_json:
            click.echo(_dump({"slope": cl.fmt_fraction(w), "regions": rows}))
        else:
            click.echo(f"slope {cl.fmt_fraction(w)}")
            for row in rows:
                click.echo(f"D_{row['alpha']}: {'member' if row['member'] else 'not a member'}")
        return EXIT_OK
    return _guarded(as_json, run)


@cli.command("verify")
@click.option("--suite", type=click.Choice(("eta", "filtration", "cosets", "delta", "constants",
                                            "vandermonde", "nice", "identities", "all")),
              required=True)
@click.option("--p", "p", type=int, default=3, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--k", "k", type=int, default=None, help="weight for the delta suite")
def cmd_verify(suite, p, n, k):
    """Run verification suites; exit status 1 when any check fails."""
    from .verify import run_suite

    def run():
        checks = run_suite(suite, p, n, k)
        for chk in checks:
            click.echo(chk.line())
        failed = sum(1 for chk in checks if not chk.ok)
        click.echo(f"{len(checks) - failed} passed, {failed} failed")
        return 1 if failed else EXIT_OK
    return _guarded(False, run)


# ---------------------------------------------------------------------------
# tables


def _sample_expression(slope, nu, p, center):
    """An eigenvalue expression of the given slope: the centre of D_nu for
    half-integers (when asked), otherwise a power of S."""
    if center and slope == nu - Fraction(1, 2):
        m = 2 * nu - 1
        return f"sqrt((Z - 1)^{m} / {factorial(m)})"
    j = slope * 2 * p
    if j.denominator != 1:
        raise DomainError(f"slope {slope} is not a multiple of 1/(2p)")
    return f"S^{j.numerator}"


def table_row(task):
    p, n, kappa, c, k, precision, a_text = task
    row = {"p": p, "n": n, "kappa": kappa, "c": c, "k_mod": k % (p - 1), "slope": "", "nu": "",
           "in_region": "", "determined": "", "label": "", "mu": ""}
    if a_text.startswith("?"):
        row["label"] = f"error: {a_text[1:]}"
        return row
    try:
        cfg, chi, a = _build(p, n, kappa, c, a_text, precision)
        w, nu, _ = cl.slope_and_nu(a)
        row["slope"], row["nu"] = cl.fmt_fraction(w), nu
        res = cl.classify_galois(k, a, chi)
        row["in_region"] = str(res.in_region).lower()
        row["determined"] = str(res.determined).lower()
        row["label"] = " | ".join(str(x) for x in res.candidates)
        if isinstance(res.pi, cl.Reducible):
            mu = res.pi.mu
            row["mu"] = str(mu.mu) if not mu.ambiguous else \
                f"mu^{mu.exponent}={mu.mu_power} roots {' '.join(str(z) for z in mu.branch_set)}"
    except DomainError as exc:
        row["label"] = f"error: {exc}"
    except PrecisionError as exc:
        row["label"] = f"precision error: {exc}"
    except (ParseError, ConsistencyError) as exc:
        row["label"] = f"error: {exc}"
    return row


def table_tasks(p, n, kappa, c, precision, slopes, k_mods, center=True):
    tasks = []
    for k_mod in k_mods:
        k = 2 + (k_mod - 2) % (p - 1)
        for slope in slopes:
            nu = -(-slope.numerator // slope.denominator)
            try:
                a_text = _sample_expression(slope, nu, p, center)
            except DomainError as exc:
                a_text = f"?{exc}"
            tasks.append((p, n, kappa, c, k, precision, a_text))
    return tasks


def _parse_slopes(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if part:
            out.append(Fraction(part))
    return out


def render_table(rows, fmt):
    if fmt == "json":
        return _dump(rows)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


@cli.command("table")
@_common
@click.option("--slopes", default="1/2,3/2", show_default=True,
              help="comma-separated slopes (empty for none)")
@click.option("--k-mods", default=None, help="comma-separated k mod p-1 (default: all)")
@click.option("--center/--no-center", default=True, show_default=True,
              help="use the centre of D_nu for half-integer slopes")
@click.option("--format", "fmt", type=click.Choice(("csv", "json")), default="csv",
              show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
def cmd_table(p, n, kappa, c, precision, slopes, k_mods, center, fmt, jobs):
    """One row per (component, slope)."""
    def run():
        sl = _parse_slopes(slopes)
        km = range(p - 1) if k_mods is None else [int(x) for x in k_mods.split(",") if x.strip()]
        tasks = table_tasks(p, n, kappa, c, _precision(precision), sl, km, center)
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                rows = list(pool.map(table_row, tasks))
        else:
            rows = [table_row(t) for t in tasks]
        click.echo(render_table(rows, fmt))
        return EXIT_OK
    return _guarded(fmt == "json", run)


def main(argv=None):
    try:
        code = cli.main(args=argv, prog_name="crystab", standalone_mode=False)
    except click.exceptions.UsageError as exc:
        exc.show()
        code = EXIT_PARSE
    except click.exceptions.Abort:
        code = EXIT_PARSE
    except DomainError as exc:
        click.echo(f"error (domain): {exc}", err=True)
        code = EXIT_DOMAIN
    sys.exit(code or 0)
