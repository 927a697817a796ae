"""Classification of all linear piques on Z/n by character, similarity and isomorphism."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from linpique.character import character_key, character_table, default_words
from linpique.isomorphism import (
    DEFAULT_SEARCH_BOUND,
    SearchBoundExceeded,
    identity_fingerprint,
    pique_isomorphic,
    verify_isomorphism,
)
from linpique.modarith import check_modulus, unit_group
from linpique.permutation import automorphism_permutation, fixed_point_count, format_cycles
from linpique.pique import LinearPique, Word
from linpique.report import character_rows, csv_text, text_table
from linpique.similarity import permutationally_similar, verify_witness


class TransitivityError(RuntimeError):
    """Pairwise verdicts that do not form an equivalence relation."""

    def __init__(self, relation: str, a: LinearPique, b: LinearPique, c: LinearPique):
        self.relation = relation
        self.triple = (a, b, c)
        super().__init__(
            f"{relation} is not transitive: {a.formula} ~ {b.formula} ~ {c.formula} "
            f"but {a.formula} !~ {c.formula}"
        )


def enumerate_piques(n: int, omit_opposites: bool = False) -> list[LinearPique]:
    """All piques ordered by ``(rho, lambda)``; optionally one per opposite pair."""
    units = unit_group(n)
    return [
        LinearPique(n, r, l) for r in units for l in units if not (omit_opposites and r > l)
    ]


@dataclass(frozen=True)
class AutomorphismRow:
    unit: int
    cycles: str
    fixed_points: int


def automorphism_table(n: int) -> list[AutomorphismRow]:
    rows = []
    for u in unit_group(n):
        p = automorphism_permutation(u, n)
        rows.append(AutomorphismRow(u, format_cycles(p), fixed_point_count(p)))
    return rows


@dataclass
class PairVerdict:
    a: LinearPique
    b: LinearPique
    similar: str | None  # witness in cycle notation
    isomorphic: str | None
    certificate: str = ""  # why not isomorphic, when known


@dataclass
class CharacterClass:
    piques: list[LinearPique]
    words: list[Word]
    values: list[int]
    similarity_classes: list[list[LinearPique]] = field(default_factory=list)
    isomorphism_classes: list[list[LinearPique]] | None = None
    pairs: list[PairVerdict] = field(default_factory=list)


@dataclass
class ClassificationReport:
    modulus: int
    omit_opposites: bool
    piques: list[LinearPique]
    automorphisms: list[AutomorphismRow]
    classes: list[CharacterClass]
    isomorphism_checked: bool

    def similarity_partition(self) -> list[list[LinearPique]]:
        return [s for c in self.classes for s in c.similarity_classes]

    def isomorphism_partition(self) -> list[list[LinearPique]] | None:
        if not self.isomorphism_checked:
            return None
        return [s for c in self.classes for s in (c.isomorphism_classes or [])]

    def to_record(self) -> dict:
        def fmt(P):
            return str(P)

        return {
            "modulus": self.modulus,
            "omit_opposites": self.omit_opposites,
            "piques": [P.to_record() for P in self.piques],
            "automorphisms": [
                {"unit": r.unit, "permutation": r.cycles, "fixed_points": r.fixed_points}
                for r in self.automorphisms
            ],
            "character_classes": [
                {
                    "piques": [fmt(P) for P in c.piques],
                    "character": {w.label(unicode=False): v for w, v in zip(c.words, c.values)},
                    "similarity_classes": [[fmt(P) for P in s] for s in c.similarity_classes],
                    "isomorphism_classes": (
                        None
                        if c.isomorphism_classes is None
                        else [[fmt(P) for P in s] for s in c.isomorphism_classes]
                    ),
                    "pairs": [
                        {
                            "a": fmt(v.a),
                            "b": fmt(v.b),
                            "similar": v.similar is not None,
                            "similarity_witness": v.similar,
                            "isomorphic": None if not self.isomorphism_checked else v.isomorphic is not None,
                            "isomorphism_witness": v.isomorphic,
                            "certificate": v.certificate,
                        }
                        for v in c.pairs
                    ],
                }
                for c in self.classes
            ],
        }


def _partition(members: list[LinearPique], related: dict, relation: str) -> list[list[LinearPique]]:
    """Blocks of an equivalence given on unordered pairs; raises if it is not transitive."""
    blocks: list[list[LinearPique]] = []
    for P in members:
        for block in blocks:
            if related[block[0], P]:
                for Q in block[1:]:
                    if not related[Q, P]:
                        raise TransitivityError(relation, Q, block[0], P)
                block.append(P)
                break
        else:
            blocks.append([P])
    # A member related to two different blocks also breaks transitivity.
    for b1, b2 in combinations(blocks, 2):
        for P in b1:
            for Q in b2:
                if related[P, Q]:
                    raise TransitivityError(relation, b1[0], P, Q)
    return blocks


def _pair_task(args):
    a, b, check_iso, iso_bound, magma = args
    w = permutationally_similar(a, b)
    sim = None
    if w is not None:
        if not verify_witness(w.pi, a, b):
            raise AssertionError(f"similarity witness failed verification for {a}, {b}")
        sim = str(w.pi)
    iso = None
    cert = ""
    if check_iso:
        pointed = not magma
        fa, fb = identity_fingerprint(a), identity_fingerprint(b)
        diff = fa.differences(fb)
        if diff:
            cert = "fingerprint differs: " + ", ".join(diff)
        else:
            iw = pique_isomorphic(a, b, pointed=pointed, bound=iso_bound, prefilter=False)
            if iw is None:
                cert = "exhaustive search: no isomorphism"
            else:
                if not verify_isomorphism(iw.map, a, b, pointed=pointed):
                    raise AssertionError(f"isomorphism witness failed verification for {a}, {b}")
                iso = str(iw.map)
    return PairVerdict(a, b, sim, iso, cert)


def classify(
    n: int,
    omit_opposites: bool = False,
    isomorphism: bool = True,
    iso_bound: int = DEFAULT_SEARCH_BOUND,
    magma: bool = False,
    jobs: int = 1,
) -> ClassificationReport:
    """Group the piques on Z/n by character, then refine by similarity and isomorphism.

    Raises ``TransitivityError`` if pairwise verdicts inside a class are not an
    equivalence, and ``SearchBoundExceeded`` if isomorphism is requested above
    ``iso_bound``.
    """
    check_modulus(n)
    if isomorphism and n > iso_bound:
        raise SearchBoundExceeded(f"modulus {n} exceeds isomorphism search bound {iso_bound}")
    piques = enumerate_piques(n, omit_opposites)

    groups: dict[tuple, list[LinearPique]] = {}
    for P in piques:
        groups.setdefault(character_key(P), []).append(P)

    tasks = []
    for members in groups.values():
        tasks.extend((a, b, isomorphism, iso_bound, magma) for a, b in combinations(members, 2))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_pair_task, tasks, chunksize=16))
    else:
        verdicts = [_pair_task(t) for t in tasks]
    by_pair = {(v.a, v.b): v for v in verdicts}

    classes = []
    for members in groups.values():
        words = default_words(members[0])
        table = character_table(members[0], words)
        sim_rel, iso_rel = {}, {}
        pairs = []
        for P in members:
            sim_rel[P, P] = iso_rel[P, P] = True
        for a, b in combinations(members, 2):
            v = by_pair[a, b]
            pairs.append(v)
            sim_rel[a, b] = sim_rel[b, a] = v.similar is not None
            iso_rel[a, b] = iso_rel[b, a] = v.isomorphic is not None
        cc = CharacterClass(members, words, table.values, pairs=pairs)
        cc.similarity_classes = _partition(members, sim_rel, "permutational similarity")
        if isomorphism:
            cc.isomorphism_classes = _partition(members, iso_rel, "isomorphism")
        classes.append(cc)

    return ClassificationReport(
        modulus=n,
        omit_opposites=omit_opposites,
        piques=piques,
        automorphisms=automorphism_table(n),
        classes=classes,
        isomorphism_checked=isomorphism,
    )


def _names(block: list[LinearPique]) -> str:
    return "{" + ", ".join(P.formula for P in block) + "}"


def render_text(report: ClassificationReport) -> str:
    n = report.modulus
    out = [f"Linear piques on Z/{n}: {len(report.piques)} piques"
           + (" (opposites omitted)" if report.omit_opposites else ""), ""]
    out.append("Automorphisms")
    out.append(text_table(
        ["Autom.", "Permutation", "Fixed points"],
        [[r.unit, r.cycles, r.fixed_points] for r in report.automorphisms],
    ))
    for i, c in enumerate(report.classes, 1):
        out.append(f"Character class {i}: {_names(c.piques)}")
        headers, rows = character_rows(c.piques, c.words)
        out.append(text_table(headers, rows))
        out.append("  similarity classes: " + ", ".join(_names(s) for s in c.similarity_classes))
        if c.isomorphism_classes is not None:
            out.append("  isomorphism classes: " + ", ".join(_names(s) for s in c.isomorphism_classes))
        for v in c.pairs:
            sim = f"similar via {v.similar}" if v.similar else "not similar"
            line = f"    {v.a.formula} vs {v.b.formula}: {sim}"
            if report.isomorphism_checked:
                line += f"; isomorphic via {v.isomorphic}" if v.isomorphic else f"; not isomorphic ({v.certificate})"
            out.append(line)
        out.append("")
    return "\n".join(out).rstrip() + "\n"


def render_csv(report: ClassificationReport) -> str:
    """One row per pique with its class indices."""
    sim_index, iso_index = {}, {}
    for k, s in enumerate(report.similarity_partition(), 1):
        for P in s:
            sim_index[P] = k
    for k, s in enumerate(report.isomorphism_partition() or [], 1):
        for P in s:
            iso_index[P] = k
    rows = []
    for ci, c in enumerate(report.classes, 1):
        for P in c.piques:
            rows.append([P.n, P.rho, P.lam, P.formula, ci, sim_index[P], iso_index.get(P, "")])
    rows.sort(key=lambda r: (r[1], r[2]))
    return csv_text(
        ["modulus", "rho", "lambda", "multiplication", "character_class",
         "similarity_class", "isomorphism_class"],
        rows,
    )


def render_pairs_csv(report: ClassificationReport) -> str:
    rows = []
    for ci, c in enumerate(report.classes, 1):
        for v in c.pairs:
            rows.append([
                ci, str(v.a), str(v.b), int(v.similar is not None), v.similar or "",
                "" if not report.isomorphism_checked else int(v.isomorphic is not None),
                v.isomorphic or "", v.certificate,
            ])
    return csv_text(
        ["character_class", "a", "b", "similar", "similarity_witness",
         "isomorphic", "isomorphism_witness", "certificate"],
        rows,
    )


def render_automorphisms_csv(n: int) -> str:
    return csv_text(
        ["unit", "permutation", "fixed_points"],
        [[r.unit, r.cycles, r.fixed_points] for r in automorphism_table(n)],
    )


def write_report(report: ClassificationReport, out_dir: Path) -> list[Path]:
    """Write the report files under ``out_dir`` with stable names."""
    out_dir.mkdir(parents=True, exist_ok=True)
    n = report.modulus
    files = {
        f"classify-{n}.txt": render_text(report),
        f"classify-{n}.csv": render_csv(report),
        f"classify-{n}.json": json.dumps(report.to_record(), indent=2, ensure_ascii=False) + "\n",
        f"pairs-{n}.csv": render_pairs_csv(report),
        f"automorphisms-{n}.csv": render_automorphisms_csv(n),
    }
    paths = []
    for name, text in files.items():
        path = out_dir / name
        path.write_text(text, encoding="utf-8")
        paths.append(path)
    return paths
