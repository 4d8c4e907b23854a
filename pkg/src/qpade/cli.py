"""Command-line entry point: ``qpade verify|qrt|weyl|suite``.

Exit codes: 0 when no check failed, 1 when at least one failed, 2 for an
invalid configuration, 3 when admissible sampling ran out of retries.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import qrt as qrt_mod
from . import weyl as weyl_mod
from .lax import DivisibilityFailure
from .qkernel import Inadmissible, ParamSet, SamplingExhausted, random_rational, sample_params
from .verify import (
    CheckReport,
    float_sanity,
    lax_ready,
    special_values,
    verify_det_solution,
    verify_directions,
    verify_e6,
    verify_kernel,
    verify_lax,
    verify_pade,
    verify_qp6,
)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_EXHAUSTED = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """``p/q`` or an integer, optional sign; nothing else."""
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        if not num.lstrip("+-").isdigit() or (den and not den.isdigit()):
            raise ValueError
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from None


def parse_rationals(text: str) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(t) for t in text.split(","))


@dataclass
class RunConfig:
    command: str
    target: Optional[str] = None
    seed: int = 0
    samples: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    q: Optional[Fraction] = None
    a: Optional[Tuple[Fraction, ...]] = None
    json_path: Optional[str] = None
    csv_path: Optional[str] = None
    fmt: str = "text"
    float_sanity: bool = False
    variant: str = qrt_mod.QP6
    steps: int = 25
    x0: Optional[Fraction] = None
    y0: Optional[Fraction] = None


# ---------------------------------------------------------------------------
# Parameter orchestration
# ---------------------------------------------------------------------------

# target -> (check function, m range, n range, default samples)
PADE_TARGETS: Dict[str, Tuple[Callable[[ParamSet], List[CheckReport]], range, range, int]] = {
    "pade": (verify_pade, range(0, 3), range(0, 3), 5),
    "lax": (verify_lax, range(0, 3), range(0, 3), 5),
    "d5": (verify_qp6, range(0, 3), range(0, 3), 5),
    "e6": (verify_e6, range(1, 3), range(0, 3), 5),
    "solutions": (lambda p: special_values(p) + verify_det_solution(p), range(0, 3), range(0, 3), 5),
    "directions": (
        lambda p: verify_directions(p) + weyl_mod.weyl_vs_pade(p),
        range(1, 3),
        range(1, 3),
        3,
    ),
}
PRE_HOOK = {"lax": lax_ready}


def _tag(reports: Iterable[CheckReport], sample: int) -> List[CheckReport]:
    out = []
    for r in reports:
        r.witness = dict(r.witness)
        r.witness["sample"] = str(sample)
        out.append(r)
    return out


def _guarded(fn: Callable[[ParamSet], List[CheckReport]], target: str) -> Callable[[ParamSet], List[CheckReport]]:
    """Divisibility failures are genuine failures, never a reason to resample."""

    def run(p: ParamSet) -> List[CheckReport]:
        hook = PRE_HOOK.get(target)
        if hook:
            hook(p)
        try:
            return fn(p)
        except DivisibilityFailure as exc:
            return [CheckReport(f"{target}_divisibility", p.as_dict(), "fail", witness={"error": str(exc)})]

    return run


def _pairs(cfg: RunConfig, m_range: range, n_range: range) -> List[Tuple[int, int]]:
    ms = [cfg.m] if cfg.m is not None else list(m_range)
    ns = [cfg.n] if cfg.n is not None else list(n_range)
    if min(ms) < m_range.start:
        raise ConfigError(f"{cfg.target} needs m >= {m_range.start}")
    if min(ns) < n_range.start:
        raise ConfigError(f"{cfg.target} needs n >= {n_range.start}")
    return [(m, n) for m in ms for n in ns]


def _explicit(cfg: RunConfig) -> Optional[ParamSet]:
    if cfg.q is None and cfg.a is None:
        return None
    if cfg.q is None or cfg.a is None or len(cfg.a) != 4:
        raise ConfigError("explicit parameters need --q and four values in --a")
    m = 1 if cfg.m is None else cfg.m
    n = 1 if cfg.n is None else cfg.n
    try:
        return ParamSet(cfg.q, *cfg.a, m=m, n=n).check()
    except Inadmissible as exc:
        raise ConfigError(f"inadmissible parameters: {exc}") from exc


def _samples(cfg: RunConfig, default: int) -> int:
    k = default if cfg.samples is None else cfg.samples
    if k < 1:
        raise ConfigError("--samples must be >= 1")
    return k


def run_pade_target(cfg: RunConfig) -> List[CheckReport]:
    fn, m_range, n_range, default = PADE_TARGETS[cfg.target]
    run = _guarded(fn, cfg.target)
    p = _explicit(cfg)
    if p is not None:
        _pairs(RunConfig(cfg.command, cfg.target, m=p.m, n=p.n), m_range, n_range)
        try:
            return _tag(run(p), 0)
        except (ArithmeticError, ValueError) as exc:
            raise ConfigError(f"parameters are degenerate for {cfg.target}: {exc}") from exc
    k = _samples(cfg, default)
    out: List[CheckReport] = []
    idx = 0
    for m, n in _pairs(cfg, m_range, n_range):
        for j in range(k):
            rng = random.Random(f"{cfg.seed}/{cfg.target}/{m}/{n}/{j}")
            _, reports = sample_params(rng, m, n, accept=run)
            out.extend(_tag(reports, idx))
            idx += 1
    return out


def run_kernel(cfg: RunConfig) -> List[CheckReport]:
    if cfg.q is not None:
        qs = [cfg.q]
    else:
        rng = random.Random(f"{cfg.seed}/kernel")
        qs = []
        while len(qs) < _samples(cfg, 3):
            q = random_rational(rng, 20)
            if q not in (1, -1) and q not in qs:
                qs.append(q)
    out: List[CheckReport] = []
    for i, q in enumerate(qs):
        out.extend(_tag(verify_kernel(q), i))
    return out


def run_verify(cfg: RunConfig) -> List[CheckReport]:
    if cfg.target == "kernel":
        out = run_kernel(cfg)
    else:
        out = run_pade_target(cfg)
    if cfg.float_sanity:
        out.append(float_sanity())
    return out


# ---------------------------------------------------------------------------
# QRT
# ---------------------------------------------------------------------------


DEGENERATE_ORBIT = (qrt_mod.BasePoint, qrt_mod.FiberDegenerate, ZeroDivisionError)


def _qrt_one(cfg: RunConfig, c: qrt_mod.QRTConfig, rng: random.Random, retries: int = 20):
    """Checks for one configuration; sampled starts whose orbit runs into a base point are redrawn."""
    if cfg.x0 is not None and cfg.y0 is not None:
        try:
            return qrt_mod.qrt_checks(c, cfg.x0, cfg.y0, cfg.steps)
        except DEGENERATE_ORBIT as exc:
            raise ConfigError(f"orbit from the given start is degenerate: {exc}") from exc
    if qrt_mod.condition_value(c) != 1:
        # no pencil; the checks report the violation without iterating
        return qrt_mod.qrt_checks(c, Fraction(1), Fraction(1), cfg.steps)
    last = None
    for _ in range(retries):
        x0, y0 = qrt_mod.sample_start(rng, c)
        try:
            return qrt_mod.qrt_checks(c, x0, y0, cfg.steps)
        except DEGENERATE_ORBIT as exc:
            last = exc
    raise SamplingExhausted(f"every sampled orbit met a base point: {last}")


def run_qrt(cfg: RunConfig, samples_default: int = 1, emit_csv: bool = True) -> List[CheckReport]:
    if cfg.steps < 0:
        raise ConfigError("--steps must be >= 0")
    variants = [cfg.variant] if cfg.variant != "all" else list(qrt_mod.VARIANTS)
    out: List[CheckReport] = []
    csv_chunks: List[str] = []
    idx = 0
    for variant in variants:
        if cfg.a is not None:
            if len(cfg.a) != 8:
                raise ConfigError("qrt --a needs eight values a1..a8")
            if any(v == 0 for v in cfg.a):
                raise ConfigError("qrt parameters must be non-zero")
            configs = [(qrt_mod.QRTConfig(variant, cfg.a), random.Random(f"{cfg.seed}/qrt/{variant}/start"))]
        else:
            configs = []
            for j in range(_samples(cfg, samples_default)):
                rng = random.Random(f"{cfg.seed}/qrt/{variant}/{j}")
                configs.append((qrt_mod.sample_config(rng, variant), rng))
        for c, rng in configs:
            reports, pts = _qrt_one(cfg, c, rng)
            out.extend(_tag(reports, idx))
            if pts:
                csv_chunks.append(qrt_mod.orbit_csv(pts))
            idx += 1
    if emit_csv and csv_chunks:
        text = csv_chunks[0] + "".join(chunk.split("\n", 1)[1] for chunk in csv_chunks[1:])
        if cfg.csv_path:
            with open(cfg.csv_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return out


# ---------------------------------------------------------------------------
# Weyl group
# ---------------------------------------------------------------------------

WEYL_TARGETS: Dict[str, Callable[[int, int], List[CheckReport]]] = {
    "relations": weyl_mod.check_relations,
    "translation": lambda k, seed: weyl_mod.check_translation(k, seed) + weyl_mod.verify_weyl_painleve(k, seed),
    "scaling": weyl_mod.scaling_commutes,
    "directions": weyl_mod.weyl_direction_words,
}


def run_weyl(cfg: RunConfig) -> List[CheckReport]:
    k = _samples(cfg, 5)
    return WEYL_TARGETS[cfg.target](k, cfg.seed)


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------


def run_suite(cfg: RunConfig) -> List[CheckReport]:
    out: List[CheckReport] = []
    base = dict(seed=cfg.seed, samples=cfg.samples)
    for target in ("kernel", "pade", "lax", "d5", "e6", "solutions", "directions"):
        out.extend(run_verify(RunConfig("verify", target, **base)))
    out.extend(run_qrt(RunConfig("qrt", seed=cfg.seed, samples=cfg.samples, variant="all"), 5, emit_csv=False))
    for target in WEYL_TARGETS:
        out.extend(run_weyl(RunConfig("weyl", target, **base)))
    if cfg.float_sanity:
        out.append(float_sanity())
    return out


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def sort_reports(reports: Sequence[CheckReport]) -> List[CheckReport]:
    def key(r: CheckReport):
        s = r.witness.get("sample", "")
        return (r.name, int(s) if s.isdigit() else -1)

    return sorted(reports, key=key)


def to_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.as_record() for r in sort_reports(reports)], indent=2, sort_keys=True) + "\n"


def summary(reports: Sequence[CheckReport]) -> Dict[str, int]:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for r in reports:
        counts[r.status] += 1
    return counts


def emit(cfg: RunConfig, reports: Sequence[CheckReport], stream=None) -> None:
    stream = stream or sys.stdout
    if cfg.json_path:
        text = to_json(reports)
        if cfg.json_path == "-":
            stream.write(text)
        else:
            with open(cfg.json_path, "w", encoding="utf-8") as fh:
                fh.write(text)
    if cfg.fmt == "json" and not cfg.json_path:
        stream.write(to_json(reports))
        return
    if cfg.fmt == "csv" and cfg.command != "qrt":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(["check", "sample", "status", "lhs", "rhs"])
        for r in sort_reports(reports):
            w.writerow([r.name, r.witness.get("sample", ""), r.status, r.lhs, r.rhs])
        return
    # qrt writes its CSV to stdout, so text goes to stderr there
    text_stream = sys.stderr if cfg.command == "qrt" and not cfg.csv_path else stream
    if cfg.fmt == "text":
        skips: Dict[str, int] = {}
        for r in sort_reports(reports):
            if r.status == "fail":
                extra = r.witness.get("error") or f"lhs={r.lhs} rhs={r.rhs}"
                text_stream.write(f"FAIL {r.name} sample={r.witness.get('sample', '-')} {extra}\n")
            elif r.status == "skip":
                skips[r.name] = skips.get(r.name, 0) + 1
        for name, count in sorted(skips.items()):
            text_stream.write(f"SKIP {name} x{count}\n")
        c = summary(reports)
        text_stream.write(f"{len(reports)} checks: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip\n")


# ---------------------------------------------------------------------------
# argparse
# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, seed: int = 0) -> None:
    p.add_argument("--seed", type=int, default=seed, help="seed for all sampling")
    p.add_argument("--samples", type=int, default=None, help="samples per (m, n) pair or per relation")
    p.add_argument("--json", dest="json_path", default=None, help="write the JSON report here ('-' for stdout)")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--float-sanity", action="store_true", help="add the non-exact floating-point D5 check")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpade", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="exact checks over sampled or explicit Padé parameters")
    v.add_argument("target", choices=("kernel",) + tuple(PADE_TARGETS))
    _common(v)
    v.add_argument("--m", type=int, default=None)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--q", type=parse_rational, default=None)
    v.add_argument("--a", type=parse_rationals, default=None, help="a1,a2,a3,a4 as p/q")

    r = sub.add_parser("qrt", help="QRT pencil, switches and an exact orbit")
    _common(r)
    r.add_argument("--variant", choices=qrt_mod.VARIANTS + ("all",), default=qrt_mod.QP6)
    r.add_argument("--steps", type=int, default=25)
    r.add_argument("--a", type=parse_rationals, default=None, help="a1..a8 as p/q")
    r.add_argument("--x0", type=parse_rational, default=None)
    r.add_argument("--y0", type=parse_rational, default=None)
    r.add_argument("--csv", dest="csv_path", default=None, help="write the orbit CSV here instead of stdout")

    w = sub.add_parser("weyl", help="birational Weyl group action checks")
    w.add_argument("target", choices=tuple(WEYL_TARGETS))
    _common(w)

    s = sub.add_parser("suite", help="every check at desk-scale defaults")
    _common(s, seed=42)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(ns.command)
    for key, value in vars(ns).items():
        if hasattr(cfg, key):
            setattr(cfg, key, value)
    return cfg


RUNNERS = {"verify": run_verify, "qrt": run_qrt, "weyl": run_weyl, "suite": run_suite}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        reports = RUNNERS[cfg.command](cfg)
    except (ConfigError, Inadmissible) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SamplingExhausted, weyl_mod.IndeterminatePoint) as exc:
        print(f"sampling exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    try:
        emit(cfg, reports)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
