"""Command-line interface.

Usage:
    linpique autperm --modulus 16
    linpique char --pique 8:5:3 --words R,L,L2,RL
    linpique similar --a 5:1:2 --b 5:1:3 --witness
    linpique iso --a 5:1:2 --b 5:1:3 --magma
    linpique classify --modulus 16 --omit-opposites --out reports/

Exit codes: 0 success or relation holds, 1 relation fails, 2 usage/input
error, 3 internal diagnostic (non-transitive verdicts, failed re-verification).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from linpique.character import character_table, default_words
from linpique.classify import (
    TransitivityError,
    automorphism_table,
    classify,
    render_csv,
    render_text,
    write_report,
)
from linpique.isomorphism import (
    DEFAULT_SEARCH_BOUND,
    SearchBoundExceeded,
    linear_isomorphic,
    pique_isomorphic,
    verify_isomorphism,
)
from linpique.modarith import check_modulus
from linpique.pique import LinearPique, parse_pique, parse_word
from linpique.report import character_rows, csv_text, text_table
from linpique.similarity import permutationally_similar, verify_witness

FORMATS = click.Choice(["table", "csv", "json"])

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE, EXIT_DIAGNOSTIC = 0, 1, 2, 3


class PiqueParam(click.ParamType):
    name = "n:rho:lambda"

    def convert(self, value, param, ctx):
        if isinstance(value, LinearPique):
            return value
        try:
            return parse_pique(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class ModulusParam(click.ParamType):
    name = "n"

    def convert(self, value, param, ctx):
        try:
            return check_modulus(int(value))
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


PIQUE = PiqueParam()
MODULUS = ModulusParam()


def _emit_record(record: dict) -> None:
    click.echo(json.dumps(record, ensure_ascii=False, sort_keys=False))


def _same_modulus(a: LinearPique, b: LinearPique) -> None:
    if a.n != b.n:
        raise click.UsageError(f"piques have different moduli ({a.n} and {b.n})")


def _diagnostic(message: str):
    click.echo(f"internal diagnostic: {message}", err=True)
    sys.exit(EXIT_DIAGNOSTIC)


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Linear piques on Z/n: characters, permutational similarity, isomorphism."""


@cli.command("autperm")
@click.option("--modulus", "-n", type=MODULUS, required=True)
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
def cmd_autperm(modulus, fmt):
    """List each automorphism x -> ux of Z/n with its cycles and fixed points."""
    rows = [[r.unit, r.cycles, r.fixed_points] for r in automorphism_table(modulus)]
    if fmt == "table":
        click.echo(text_table(["Autom.", "Permutation", "Fixed points"], rows), nl=False)
    elif fmt == "csv":
        click.echo(csv_text(["unit", "permutation", "fixed_points"], rows), nl=False)
    else:
        _emit_record({
            "command": "autperm",
            "inputs": {"modulus": modulus},
            "verdict": None,
            "table": [{"unit": u, "permutation": c, "fixed_points": f} for u, c, f in rows],
        })


@cli.command("char")
@click.option("--pique", "piques", type=PIQUE, multiple=True, required=True,
              help="Pique literal n:rho:lambda; repeat for several rows.")
@click.option("--words", default=None,
              help="Comma-separated words such as R,L,L2,RL,R-1L2. "
                   "Default: all R^a L^b below the generator orders.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
def cmd_char(piques, words, fmt):
    """Permutation character table of one or more piques."""
    if len({P.n for P in piques}) > 1:
        raise click.UsageError("all piques in one table must share a modulus")
    if words is None:
        word_list = default_words(piques[0])
    else:
        try:
            word_list = [parse_word(t) for t in words.split(",") if t.strip()]
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--words") from None
    if fmt == "json":
        _emit_record({
            "command": "char",
            "inputs": {"piques": [str(P) for P in piques],
                       "words": [w.label(unicode=False) for w in word_list]},
            "verdict": None,
            "table": [
                {"pique": P.to_record(),
                 "values": {w.label(unicode=False): v for w, v in character_table(P, word_list).entries}}
                for P in piques
            ],
        })
        return
    headers, rows = character_rows(piques, word_list, ascii_headers=(fmt == "csv"))
    render = text_table if fmt == "table" else csv_text
    click.echo(render(headers, rows), nl=False)


@cli.command("similar")
@click.option("--a", "a", type=PIQUE, required=True)
@click.option("--b", "b", type=PIQUE, required=True)
@click.option("--witness", is_flag=True, help="Print the conjugating permutation.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
def cmd_similar(a, b, witness, fmt):
    """Decide permutational similarity; exit 0 if similar, 1 if not."""
    _same_modulus(a, b)
    w = permutationally_similar(a, b)
    if w is not None and not verify_witness(w.pi, a, b):
        _diagnostic(f"similarity witness {w.pi} failed verification")
    verdict = "similar" if w is not None else "not-similar"
    _report_verdict("similar", a, b, verdict, str(w.pi) if w else None, witness, fmt, {})
    sys.exit(EXIT_HOLDS if w is not None else EXIT_FAILS)


@cli.command("iso")
@click.option("--a", "a", type=PIQUE, required=True)
@click.option("--b", "b", type=PIQUE, required=True)
@click.option("--linear", is_flag=True, help="Only linear isomorphisms x -> ux.")
@click.option("--magma", is_flag=True, help="Drop the requirement 0 -> 0.")
@click.option("--witness", is_flag=True, help="Print the isomorphism.")
@click.option("--bound", default=DEFAULT_SEARCH_BOUND, show_default=True,
              help="Largest modulus for the general search.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
def cmd_iso(a, b, linear, magma, witness, bound, fmt):
    """Decide isomorphism of two piques; exit 0 if isomorphic, 1 if not."""
    _same_modulus(a, b)
    if linear and magma:
        raise click.UsageError("--linear and --magma are mutually exclusive")
    if linear:
        w = linear_isomorphic(a, b)
        mode = "linear"
    else:
        try:
            w = pique_isomorphic(a, b, pointed=not magma, bound=bound)
        except SearchBoundExceeded as exc:
            raise click.UsageError(str(exc)) from None
        mode = "magma" if magma else "pointed"
    if w is not None and not verify_isomorphism(w.map, a, b, pointed=not magma):
        _diagnostic(f"isomorphism witness {w.map} failed verification")
    verdict = "isomorphic" if w is not None else "not-isomorphic"
    _report_verdict("iso", a, b, verdict, str(w.map) if w else None, witness, fmt,
                    {"mode": mode, "kind": w.kind if w else None})
    sys.exit(EXIT_HOLDS if w is not None else EXIT_FAILS)


def _report_verdict(command, a, b, verdict, wtext, show_witness, fmt, extra):
    if fmt == "json":
        record = {"command": command, "inputs": {"a": str(a), "b": str(b), **extra},
                  "verdict": verdict}
        if wtext is not None:
            record["witness"] = wtext
        _emit_record(record)
    elif fmt == "csv":
        headers = ["a", "b", "verdict"] + (["witness"] if show_witness else [])
        row = [str(a), str(b), verdict] + ([wtext or ""] if show_witness else [])
        click.echo(csv_text(headers, [row]), nl=False)
    else:
        click.echo(verdict)
        if show_witness and wtext is not None:
            click.echo(f"witness: {wtext}")


@cli.command("classify")
@click.option("--modulus", "-n", type=MODULUS, required=True)
@click.option("--omit-opposites", is_flag=True, help="Keep one pique per opposite pair.")
@click.option("--no-iso", is_flag=True, help="Skip the isomorphism refinement.")
@click.option("--magma", is_flag=True, help="Isomorphism without requiring 0 -> 0.")
@click.option("--iso-bound", default=DEFAULT_SEARCH_BOUND, show_default=True)
@click.option("--jobs", "-j", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Write classify-<n>.{txt,csv,json}, pairs-<n>.csv, automorphisms-<n>.csv here.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
def cmd_classify(modulus, omit_opposites, no_iso, magma, iso_bound, jobs, out_dir, fmt):
    """Classify all piques on Z/n by character, similarity and isomorphism."""
    try:
        report = classify(modulus, omit_opposites=omit_opposites, isomorphism=not no_iso,
                          iso_bound=iso_bound, magma=magma, jobs=jobs)
    except SearchBoundExceeded as exc:
        raise click.UsageError(f"{exc} (use --no-iso or raise --iso-bound)") from None
    except TransitivityError as exc:
        _diagnostic(str(exc))
    except AssertionError as exc:
        _diagnostic(str(exc))
    if out_dir is not None:
        for path in write_report(report, out_dir):
            click.echo(f"wrote {path}", err=True)
    if fmt == "table":
        click.echo(render_text(report), nl=False)
    elif fmt == "csv":
        click.echo(render_csv(report), nl=False)
    else:
        _emit_record({"command": "classify", "inputs": {"modulus": modulus},
                      "verdict": "ok", "table": report.to_record()})


def main():
    cli()


if __name__ == "__main__":
    main()
