"""Command-line front end.

    stackcalc [run] COMMAND [--example NAME | --input FILE] [--degree D] [--samples N]
              [--seed S] [--format text|json] [--output FILE]

Exit status 0 when every checked identity passed, 1 when some failed (the
report carries the certificates), 2 on usage or parse errors, including
presentations too incomplete to check.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .algebroid import AlgebroidPresentation, molino_algebroid, verify_vanest_square
from .checks import CheckSet
from .cohomology import (MORITA_PAIRS, SOURCE_SIMPLY_CONNECTED, identity_morphism,
                         lie_rinehart_check, morita_compare, report_for, vanest_window_check)
from .groupoid import (DiscreteActionGroupoid, PresentationError, build_example, gallery_names,
                       is_multiplicative_function)
from .groupoid.io import FormatError, load
from .multcalc.ops import delta
from .multcalc.sampling import Sampler
from .multcalc.suites import hom_category_suite, lemma_suite, module_suite

COMMANDS = ("validate", "lemmas", "vanest", "cohomology", "lie-rinehart", "morita", "hom-category",
            "gallery")
ALGEBROIDS = {"molino": molino_algebroid}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    example: str | None = None
    input: str | None = None
    degree: int = 4
    samples: int = 20
    seed: int = 0
    format: str = "text"
    output: str | None = None


# -- loading ----------------------------------------------------------------

def resolve(config: RunConfig):
    if config.input is not None:
        return load(config.input)
    if config.example is None:
        raise UsageError(f"{config.command} needs --example or --input")
    if config.example in ALGEBROIDS:
        return ALGEBROIDS[config.example]()
    try:
        return build_example(config.example)
    except KeyError as e:
        raise UsageError(e.args[0]) from None


def _name(obj) -> str:
    return obj.name


def _require_groupoid(obj, command: str):
    if isinstance(obj, AlgebroidPresentation):
        raise UsageError(f"{command} needs a groupoid, {obj.name!r} is an algebroid")
    return obj


# -- commands ---------------------------------------------------------------

def validate(obj, config: RunConfig) -> dict:
    if isinstance(obj, AlgebroidPresentation):
        bad = obj.check()
        return {"example": obj.name, "kind": "algebroid", "passed": not bad, "failures": bad}
    report = {"example": obj.name, "kind": "groupoid"}
    if isinstance(obj, DiscreteActionGroupoid):
        bad = obj.check()
        report["action"] = {"passed": not bad, "failures": bad}
        if bad:
            report["passed"] = False
            return report
        P = obj.to_presentation()
    else:
        P = obj
    axioms = P.validate_axioms()
    report["axioms"] = axioms.to_dict()
    report["passed"] = axioms.ok
    if not axioms.ok or P.m is None:
        return report
    S = Sampler(P, config.seed)
    C = CheckSet()
    for _ in range(config.samples):
        f = S.function()
        v = is_multiplicative_function(P, delta(P, f))
        C["delta f is multiplicative"].record(bool(v), f=f, verdict=v.to_dict())
    report["cases"] = C.to_list()
    report["passed"] = C.passed
    return report


def _checked(obj, config: RunConfig) -> dict | None:
    """Validation failure report for user input, else None."""
    if config.input is None:
        return None
    v = validate(obj, config)
    return None if v["passed"] else {**v, "stage": "validate"}


def lemmas(obj, config: RunConfig) -> dict:
    G = _require_groupoid(obj, "lemmas")
    suites = [lemma_suite(G, config.samples, config.seed),
              module_suite(G, config.samples, config.seed)]
    return {"example": _name(G), "suites": suites, "passed": all(s["passed"] for s in suites)}


def vanest(obj, config: RunConfig) -> dict:
    G = _require_groupoid(obj, "vanest")
    out = {"example": _name(G), "square": verify_vanest_square(G, config.samples, config.seed)}
    passed = out["square"]["passed"]
    if _name(G) in SOURCE_SIMPLY_CONNECTED:
        out["windows"] = vanest_window_check(G, config.degree)
        passed = passed and out["windows"]["passed"]
    out["passed"] = passed
    return out


def cohomology(obj, config: RunConfig) -> dict:
    return report_for(obj, config.degree)


def lie_rinehart(obj, config: RunConfig) -> dict:
    G = _require_groupoid(obj, "lie-rinehart")
    return lie_rinehart_check(G, config.degree, config.samples, config.seed)


def hom_category(obj, config: RunConfig) -> dict:
    G = _require_groupoid(obj, "hom-category")
    return hom_category_suite(G, config.samples, config.seed)


def morita(config: RunConfig) -> dict:
    if config.example is None:
        phis = [MORITA_PAIRS[k]() for k in sorted(MORITA_PAIRS)]
    elif config.example in MORITA_PAIRS:
        phis = [MORITA_PAIRS[config.example]()]
    else:
        G = _require_groupoid(resolve(config), "morita")
        phis = [MORITA_PAIRS[k]() for k in sorted(MORITA_PAIRS) if k.startswith(f"{_name(G)}->")]
        phis.append(identity_morphism(G))
    reports = [morita_compare(p, config.degree, config.samples, config.seed) for p in phis]
    return {"morphisms": reports, "passed": all(r["passed"] for r in reports)}


PER_EXAMPLE = {"validate": validate, "lemmas": lemmas, "vanest": vanest, "cohomology": cohomology,
               "lie-rinehart": lie_rinehart, "hom-category": hom_category}


def gallery(config: RunConfig) -> dict:
    examples = []
    for name in gallery_names():
        G = build_example(name)
        entry = {"example": name}
        for cmd in ("validate", "lemmas", "vanest", "cohomology", "lie-rinehart", "hom-category"):
            entry[cmd] = PER_EXAMPLE[cmd](G, config)
        entry["passed"] = all(entry[c]["passed"] for c in PER_EXAMPLE)
        examples.append(entry)
    for name, make in sorted(ALGEBROIDS.items()):
        A = make()
        entry = {"example": name, "validate": validate(A, config), "cohomology": cohomology(A, config)}
        entry["passed"] = entry["validate"]["passed"] and entry["cohomology"]["passed"]
        examples.append(entry)
    mor = morita(RunConfig("morita", degree=config.degree, samples=config.samples, seed=config.seed))
    return {"examples": examples, "morita": mor,
            "passed": all(e["passed"] for e in examples) and mor["passed"]}


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute a command; returns (exit status, report)."""
    if config.degree < 1 or config.samples < 1:
        raise UsageError("degree and samples must be at least 1")
    if config.command == "gallery":
        body = gallery(config)
    elif config.command == "morita":
        body = morita(config)
    else:
        obj = resolve(config)
        body = _checked(obj, config) if config.command != "validate" else None
        if body is None:
            body = PER_EXAMPLE[config.command](obj, config)
    report = {"command": config.command, "degree": config.degree, "samples": config.samples,
              "seed": config.seed, **body}
    return (0 if report["passed"] else 1), report


# -- rendering --------------------------------------------------------------

def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        if "case" in obj and "samples" in obj:
            mark = "PASS" if obj["passed"] else "FAIL"
            lines.append(f"{pad}{mark}  {obj['case']} ({obj['samples']} samples)")
            for f in obj["failures"]:
                lines.append(f"{pad}      {json.dumps(f, sort_keys=True)}")
            return lines
        for k in sorted(obj):
            v = obj[k]
            nested = isinstance(v, dict) or (isinstance(v, list)
                                             and any(isinstance(x, (dict, list)) for x in v))
            if v and nested:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: [{', '.join(map(str, v))}]")
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict) and "case" not in item:
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            else:
                lines.extend(_text(item, indent) if isinstance(item, dict) else [f"{pad}- {item}"])
    else:
        lines.append(f"{pad}{obj}")
    return lines


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return "\n".join(_text(report)) + "\n"


# -- entry point -------------------------------------------------------------

def _default_seed() -> int:
    raw = os.environ.get("STACKCALC_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"STACKCALC_SEED must be an integer, got {raw!r}") from None


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stackcalc",
                                description="Exact checks for multiplicative calculus on Lie groupoids.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--example", help="gallery name (or a morita pair such as "
                                       "submersion-R2-R->unit-R, or the algebroid 'molino')")
    src.add_argument("--input", help="groupoid or algebroid presentation JSON file")
    p.add_argument("--degree", type=int, default=4, help="degree bound of the windows (default 4)")
    p.add_argument("--samples", type=int, default=20, help="samples per identity (default 20)")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default $STACKCALC_SEED or 0)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="write the report here instead of stdout")
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "run":
        argv = argv[1:]
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        seed = args.seed if args.seed is not None else _default_seed()
        config = RunConfig(args.command, args.example, args.input, args.degree, args.samples, seed,
                           args.format, args.output)
        status, report = run(config)
    except (UsageError, FormatError, PresentationError) as e:
        print(f"stackcalc: error: {e}", file=sys.stderr)
        return 2
    text = render(report, config.format)
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
