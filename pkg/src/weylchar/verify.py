"""Sweep engine checking character bounds and identities over finite families.

Each check runs over a deterministic enumeration, collecting findings
instead of raising: assertion-grade failures ("violation" severity,
statements with proofs) and conjecture-grade ones ("candidate" severity,
open directions where a hit is a discovery, not a bug).  Families shard
deterministically across worker processes, and serial runs can
checkpoint and resume.
"""
from __future__ import annotations

import itertools
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from weylchar.diagrams import (
    CapExceeded,
    DEFAULT_CAP,
    Diagram,
    PatternGrid,
    contains_pattern,
    count_132,
    count_below,
    diagram,
    diagram_to_json_obj,
    has_unstable_pair,
    is_northwest,
    parse_pattern,
    rank,
    render_pattern,
    rinv_weight,
    rothe,
    skyline,
)
from weylchar.polynomials import (
    principal_specialization,
    render_monomial,
    zero_one_witness,
)
from weylchar.schubert import key, macdonald_specialization, schubert
from weylchar.weyl import character_support, dual_character

__all__ = [
    "DiagramFamily",
    "all_diagrams",
    "all_rothe",
    "all_skyline",
    "explicit_list",
    "Finding",
    "VerificationReport",
    "merge_reports",
    "verify_lower_bound",
    "verify_equality_iff_unstable",
    "verify_zero_one_implication",
    "verify_zero_one_characterization",
    "verify_upper_bound",
    "verify_schubert_identities",
    "verify_key_identities",
]


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagramFamily:
    """A finite, deterministically ordered collection of sweep instances.

    ``kind`` selects the enumeration; only the parameters that kind uses
    are meaningful.  Explicit lists carry their members as (columns, n)
    pairs so the family stays hashable and picklable.
    """

    kind: str
    n: int = 0
    max_boxes: int | None = None
    max_part: int = 0
    max_len: int = 0
    members: tuple = ()

    def describe(self) -> str:
        if self.kind == "all_diagrams":
            return f"AllDiagrams(n={self.n}, max_boxes={self.max_boxes})"
        if self.kind == "all_rothe":
            return f"AllRothe(n={self.n})"
        if self.kind == "all_skyline":
            return f"AllSkyline(max_part={self.max_part}, max_len={self.max_len})"
        if self.kind == "explicit":
            return f"ExplicitList({len(self.members)} diagrams)"
        if self.kind == "permutations":
            return f"Permutations(n={self.n})"
        if self.kind == "compositions":
            return f"Compositions(max_part={self.max_part}, max_len={self.max_len})"
        raise ValueError(f"unknown family kind {self.kind!r}")

    def instances(self):
        """Yield (index, payload) pairs in the family's canonical order."""
        if self.kind == "all_diagrams":
            yield from enumerate(_iter_all_diagrams(self.n, self.max_boxes))
        elif self.kind == "all_rothe":
            perms = itertools.permutations(range(1, self.n + 1))
            yield from enumerate(rothe(w) for w in perms)
        elif self.kind == "all_skyline":
            comps = itertools.product(range(self.max_part + 1), repeat=self.max_len)
            yield from enumerate(skyline(alpha) for alpha in comps)
        elif self.kind == "explicit":
            yield from enumerate(Diagram(cols, n) for cols, n in self.members)
        elif self.kind == "permutations":
            yield from enumerate(itertools.permutations(range(1, self.n + 1)))
        elif self.kind == "compositions":
            yield from enumerate(
                itertools.product(range(self.max_part + 1), repeat=self.max_len)
            )
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")


def _iter_all_diagrams(n, max_boxes):
    """Subsets of the n x n grid by ascending bitmask; bit (j-1)*n+(i-1) is box (i, j)."""
    limit = n * n if max_boxes is None else max_boxes
    for mask in range(1 << (n * n)):
        if mask.bit_count() > limit:
            continue
        cols = tuple(
            tuple(i for i in range(1, n + 1) if mask >> ((j - 1) * n + (i - 1)) & 1)
            for j in range(1, n + 1)
        )
        yield Diagram(cols, n)


def all_diagrams(n: int, max_boxes: int | None = None) -> DiagramFamily:
    return DiagramFamily(kind="all_diagrams", n=n, max_boxes=max_boxes)


def all_rothe(n: int) -> DiagramFamily:
    return DiagramFamily(kind="all_rothe", n=n)


def all_skyline(max_part: int, max_len: int) -> DiagramFamily:
    return DiagramFamily(kind="all_skyline", max_part=max_part, max_len=max_len)


def explicit_list(diagrams) -> DiagramFamily:
    members = tuple((d.columns, d.n) for d in diagrams)
    return DiagramFamily(kind="explicit", members=members)


# ---------------------------------------------------------------------------
# Findings and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    """One failed instance: what was compared, on what, with a witness."""

    instance_index: int
    instance: str
    lhs: str
    rhs: str
    witness: str
    severity: str = "violation"

    def to_json_obj(self) -> dict:
        return {
            "instance_index": self.instance_index,
            "instance": self.instance,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    check: str
    family: str
    checked: int
    violations: list = field(default_factory=list)
    candidates: list = field(default_factory=list)
    truncated: bool = False
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.truncated

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "family": self.family,
            "checked": self.checked,
            "violations": [f.to_json_obj() for f in self.violations],
            "candidates": [f.to_json_obj() for f in self.candidates],
            "truncated": self.truncated,
            "elapsed_s": self.elapsed_s,
        }

    def render(self) -> str:
        lines = [
            f"check: {self.check}",
            f"family: {self.family}",
            f"checked: {self.checked}",
            f"violations: {len(self.violations)}",
            f"candidates: {len(self.candidates)}",
            f"truncated: {str(self.truncated).lower()}",
            f"elapsed_s: {self.elapsed_s:.3f}",
        ]
        for f in self.violations:
            lines.append(
                f"  violation #{f.instance_index} {f.instance}: "
                f"{f.lhs} vs {f.rhs} ({f.witness})"
            )
        for f in self.candidates:
            lines.append(
                f"  candidate #{f.instance_index} {f.instance}: "
                f"{f.lhs} vs {f.rhs} ({f.witness})"
            )
        return "\n".join(lines)


def _finding_from_json(obj, severity) -> Finding:
    return Finding(
        instance_index=obj["instance_index"],
        instance=obj["instance"],
        lhs=obj["lhs"],
        rhs=obj["rhs"],
        witness=obj["witness"],
        severity=severity,
    )


def report_from_json_obj(obj) -> VerificationReport:
    return VerificationReport(
        check=obj["check"],
        family=obj["family"],
        checked=obj["checked"],
        violations=[_finding_from_json(f, "violation") for f in obj["violations"]],
        candidates=[_finding_from_json(f, "candidate") for f in obj.get("candidates", [])],
        truncated=obj["truncated"],
        elapsed_s=obj["elapsed_s"],
    )


def merge_reports(reports) -> VerificationReport:
    """Combine shard reports for one (check, family) run.

    Commutative and associative: findings are re-sorted by instance
    index, counts add, truncation flags combine by OR.
    """
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    first = reports[0]
    if any(r.check != first.check or r.family != first.family for r in reports):
        raise ValueError("cannot merge reports from different runs")
    violations = sorted(
        (f for r in reports for f in r.violations),
        key=lambda f: (f.instance_index, f.witness),
    )
    candidates = sorted(
        (f for r in reports for f in r.candidates),
        key=lambda f: (f.instance_index, f.witness),
    )
    return VerificationReport(
        check=first.check,
        family=first.family,
        checked=sum(r.checked for r in reports),
        violations=violations,
        candidates=candidates,
        truncated=any(r.truncated for r in reports),
        elapsed_s=sum(r.elapsed_s for r in reports),
    )


# ---------------------------------------------------------------------------
# Instance serialization for witnesses
# ---------------------------------------------------------------------------

def _show_instance(payload) -> str:
    if isinstance(payload, Diagram):
        return json.dumps(diagram_to_json_obj(payload), separators=(",", ":"))
    return ",".join(str(v) for v in payload)


# ---------------------------------------------------------------------------
# Per-instance checks
# ---------------------------------------------------------------------------

def _check_lower_bound(idx, d, ctx):
    findings = []
    shown = _show_instance(d)
    bound = rank(d) + 1
    support = len(character_support(d, ctx["cap"]))
    if support < bound:
        findings.append(Finding(idx, shown, str(support), str(bound), "distinct weights below the bound"))
    if not ctx.get("support_only"):
        total = principal_specialization(dual_character(d, ctx["cap"]))
        if total < bound:
            findings.append(Finding(idx, shown, str(total), str(bound), "all-ones value below the bound"))
    return findings


def _check_equality_iff_unstable(idx, d, ctx):
    shown = _show_instance(d)
    bound = rank(d) + 1
    total = principal_specialization(dual_character(d, ctx["cap"]))
    pair = has_unstable_pair(d)
    if total == bound and pair is not None:
        return [Finding(idx, shown, str(total), str(bound), f"equality despite unstable pair {pair}")]
    if total != bound and pair is None:
        return [Finding(idx, shown, str(total), str(bound), "strict inequality without an unstable pair")]
    return []


def _check_zero_one_implication(idx, d, ctx):
    shown = _show_instance(d)
    bound = rank(d) + 1
    chi = dual_character(d, ctx["cap"])
    total = principal_specialization(chi)
    if total == bound:
        offender = zero_one_witness(chi)
        if offender is not None:
            m, c = offender
            return [
                Finding(idx, shown, str(total), str(bound),
                        f"coefficient {c} at {render_monomial(m)} despite equality")
            ]
    return []


def _check_zero_one_characterization(idx, d, ctx):
    findings = []
    shown = _show_instance(d)
    chi = dual_character(d, ctx["cap"])
    offender = zero_one_witness(chi)
    hits = [p for p in ctx["patterns"] if contains_pattern(d, p)]
    if hits and offender is None:
        findings.append(
            Finding(idx, shown, "zero-one", "pattern hit",
                    "contains a flagged configuration yet has zero-one character")
        )
    if offender is not None and not hits:
        m, c = offender
        findings.append(
            Finding(idx, shown, f"coefficient {c} at {render_monomial(m)}", "no pattern hit",
                    "not zero-one yet matches no supplied configuration",
                    severity="candidate")
        )
    return findings


def _check_upper_bound(idx, d, ctx):
    findings = []
    shown = _show_instance(d)
    total = principal_specialization(dual_character(d, ctx["cap"]))
    below = count_below(d)
    if total > below:
        findings.append(Finding(idx, shown, str(total), str(below), "all-ones value above the ideal size"))
    equal = total == below
    nw_pattern = ctx.get("northwest_pattern")
    if nw_pattern is not None and is_northwest(d):
        hit = contains_pattern(d, nw_pattern)
        if equal == hit:
            findings.append(
                Finding(idx, shown, str(total), str(below),
                        "northwest equality criterion failed: "
                        + ("equality with a pattern hit" if hit else "strict without a pattern hit"))
            )
    general = ctx.get("general_pattern")
    if general is not None:
        hit = contains_pattern(d, general)
        if equal == hit:
            findings.append(
                Finding(idx, shown, str(total), str(below),
                        "general equality criterion failed: "
                        + ("equality with a pattern hit" if hit else "strict without a pattern hit"),
                        severity="candidate")
            )
    return findings


def _check_schubert(idx, w, ctx):
    findings = []
    shown = _show_instance(w)
    p132 = count_132(w)
    dw = rothe(w)
    r = rank(dw)
    if p132 != r:
        findings.append(Finding(idx, shown, str(p132), str(r), "132-count differs from diagram rank"))
    total = macdonald_specialization(w)
    if total < 1 + p132:
        findings.append(Finding(idx, shown, str(total), str(1 + p132), "all-ones value below the 132 bound"))
    if len(w) <= ctx["full_character_max_n"]:
        s = schubert(w)
        if s != dual_character(dw, ctx["cap"]):
            findings.append(
                Finding(idx, shown, "schubert(w)", "dual_character(rothe(w))", "polynomials differ")
            )
        if principal_specialization(s) != total:
            findings.append(
                Finding(idx, shown, str(principal_specialization(s)), str(total),
                        "reduced-word evaluation differs from the polynomial value")
            )
    return findings


def _check_key(idx, alpha, ctx):
    findings = []
    shown = _show_instance(alpha)
    k = key(alpha)
    if k != dual_character(skyline(alpha), ctx["cap"]):
        findings.append(
            Finding(idx, shown, "key(alpha)", "dual_character(skyline(alpha))", "polynomials differ")
        )
    bound = 1 + rinv_weight(alpha)
    total = principal_specialization(k)
    if total < bound:
        findings.append(Finding(idx, shown, str(total), str(bound), "all-ones value below the inversion bound"))
    return findings


_CHECKS = {
    "lower_bound": _check_lower_bound,
    "equality_iff_unstable": _check_equality_iff_unstable,
    "zero_one_implication": _check_zero_one_implication,
    "zero_one_characterization": _check_zero_one_characterization,
    "upper_bound": _check_upper_bound,
    "schubert_identities": _check_schubert,
    "key_identities": _check_key,
}


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------

def _run_shard(args):
    check_name, family, ctx, shard, nshards, start_index = args
    check = _CHECKS[check_name]
    findings = []
    checked = 0
    truncated = False
    for idx, payload in family.instances():
        if idx % nshards != shard or idx < start_index:
            continue
        try:
            findings.extend(check(idx, payload, ctx))
        except CapExceeded:
            truncated = True
            break
        checked += 1
    return checked, findings, truncated


def _write_checkpoint(path, check_name, family, cursor, checked, findings):
    payload = {
        "check": check_name,
        "family": family.describe(),
        "shard_cursor": cursor,
        "checked": checked,
        "findings": [
            dict(f.to_json_obj(), severity=f.severity) for f in findings
        ],
    }
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".checkpoint-")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(payload, handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_checkpoint(path, check_name, family):
    if not path or not os.path.exists(path):
        return 0, 0, []
    with open(path) as handle:
        payload = json.load(handle)
    if payload.get("check") != check_name or payload.get("family") != family.describe():
        raise ValueError(f"checkpoint {path} belongs to a different run")
    findings = [
        _finding_from_json(f, f.get("severity", "violation"))
        for f in payload["findings"]
    ]
    return payload["shard_cursor"], payload["checked"], findings


def _run_serial(check_name, family, ctx, checkpoint_path, checkpoint_every):
    check = _CHECKS[check_name]
    start, checked, findings = _load_checkpoint(checkpoint_path, check_name, family)
    truncated = False
    for idx, payload in family.instances():
        if idx < start:
            continue
        try:
            findings.extend(check(idx, payload, ctx))
        except CapExceeded:
            truncated = True
            break
        checked += 1
        if checkpoint_path and (idx + 1) % checkpoint_every == 0:
            _write_checkpoint(checkpoint_path, check_name, family, idx + 1, checked, findings)
    if checkpoint_path and os.path.exists(checkpoint_path):
        os.unlink(checkpoint_path)
    return checked, findings, truncated


def run_check(
    check_name: str,
    family: DiagramFamily,
    ctx: dict,
    *,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """Run one named check over a family and assemble the report."""
    if check_name not in _CHECKS:
        raise ValueError(f"unknown check {check_name!r}")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers > 1 and checkpoint_path:
        raise ValueError("checkpointing requires a serial run")
    start_time = time.perf_counter()
    if workers == 1:
        checked, findings, truncated = _run_serial(
            check_name, family, ctx, checkpoint_path, checkpoint_every
        )
    else:
        jobs = [
            (check_name, family, ctx, shard, workers, 0) for shard in range(workers)
        ]
        checked, findings, truncated = 0, [], False
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for shard_checked, shard_findings, shard_truncated in pool.map(_run_shard, jobs):
                checked += shard_checked
                findings.extend(shard_findings)
                truncated = truncated or shard_truncated
    elapsed = time.perf_counter() - start_time
    violations = sorted(
        (f for f in findings if f.severity == "violation"),
        key=lambda f: (f.instance_index, f.witness),
    )
    candidates = sorted(
        (f for f in findings if f.severity == "candidate"),
        key=lambda f: (f.instance_index, f.witness),
    )
    return VerificationReport(
        check=check_name,
        family=family.describe(),
        checked=checked,
        violations=violations,
        candidates=candidates,
        truncated=truncated,
        elapsed_s=elapsed,
    )


# ---------------------------------------------------------------------------
# Public check entry points
# ---------------------------------------------------------------------------

def verify_lower_bound(
    family: DiagramFamily,
    *,
    support_only: bool = False,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """All-ones value and distinct-weight count both reach rank + 1.

    With ``support_only`` the check skips the character entirely and
    verifies just the weight-count bound, which is what the chain
    argument actually needs.
    """
    ctx = {"cap": cap, "support_only": support_only}
    return run_check(
        "lower_bound", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )


def verify_equality_iff_unstable(
    family: DiagramFamily,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """Equality at rank + 1 holds exactly when no unstable pair exists."""
    ctx = {"cap": cap}
    return run_check(
        "equality_iff_unstable", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )


def verify_zero_one_implication(
    family: DiagramFamily,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """Equality at rank + 1 forces every coefficient to be 0 or 1."""
    ctx = {"cap": cap}
    return run_check(
        "zero_one_implication", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )


def verify_zero_one_characterization(
    family: DiagramFamily,
    patterns,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """Pattern hits against zero-one characters, in both directions.

    The proved direction (hit implies a repeated coefficient) reports
    violations; the open converse reports candidates only.
    """
    patterns = tuple(patterns)
    if not patterns:
        raise ValueError("at least one pattern is required")
    ctx = {"cap": cap, "patterns": patterns}
    return run_check(
        "zero_one_characterization", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )


def verify_upper_bound(
    family: DiagramFamily,
    northwest_pattern: PatternGrid | None = None,
    general_pattern: PatternGrid | None = None,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """All-ones value never exceeds the ideal size; equality criteria optional.

    The northwest biconditional (proved) runs on northwest instances
    when its pattern is supplied; the general biconditional (open) runs
    everywhere when its pattern is supplied, reporting candidates.
    """
    ctx = {
        "cap": cap,
        "northwest_pattern": northwest_pattern,
        "general_pattern": general_pattern,
    }
    return run_check(
        "upper_bound", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )


def verify_schubert_identities(
    n: int,
    *,
    full_character_max_n: int = 5,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """Per permutation of [n]: rank/132 identity, the all-ones lower bound,
    and (up to ``full_character_max_n``) full agreement of the Schubert
    polynomial with the Rothe-diagram character."""
    family = DiagramFamily(kind="permutations", n=n)
    ctx = {"cap": cap, "full_character_max_n": full_character_max_n}
    return run_check(
        "schubert_identities", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )


def verify_key_identities(
    max_part: int,
    max_len: int,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 64,
) -> VerificationReport:
    """Per composition with bounded parts: the key polynomial matches the
    skyline character and its all-ones value meets the inversion bound."""
    family = DiagramFamily(kind="compositions", max_part=max_part, max_len=max_len)
    ctx = {"cap": cap}
    return run_check(
        "key_identities", family, ctx,
        workers=workers, checkpoint_path=checkpoint_path, checkpoint_every=checkpoint_every,
    )
