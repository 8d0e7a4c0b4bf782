"""Command line front end: ``milnorlink compute|surface|build|verify``."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field

from . import builder, milnor, surfaces, verify
from .diagram import PDCodeError, parse_pd

EXIT_PROPERTY = 1
EXIT_PARSE = 2
EXIT_INDEX = 3
EXIT_VIOLATION = 4
EXIT_WRITE = 5

DEFAULT_SEED = 0


@dataclass
class RunReport:
    command: list
    inputs_digest: str
    seed: int
    results: list = field(default_factory=list)  # (name, value) pairs
    properties: list = field(default_factory=list)

    def add(self, name, value):
        self.results.append((name, value))

    def to_json(self) -> dict:
        def enc(v):
            return v.to_json() if hasattr(v, "to_json") else v
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "seed": self.seed,
            "results": [{"name": n, "value": enc(v)} for n, v in self.results],
            "properties": [r.to_json() for r in self.properties],
            "passed": sum(r.passed for r in self.properties),
            "failed": sum(not r.passed for r in self.properties),
        }

    def render(self) -> str:
        lines = [f"command: {' '.join(self.command)}",
                 f"inputs: {self.inputs_digest}",
                 f"seed: {self.seed}"]
        for name, value in self.results:
            if isinstance(value, list):
                value = " ".join(map(str, value)) or "(empty)"
            lines.append(f"{name} = {value}")
        for r in self.properties:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"[{status}] {r.name}: {r.checked} checks, {r.failed} failed")
            lines.extend(f"    {f}" for f in r.failures)
        if self.properties:
            n_fail = sum(not r.passed for r in self.properties)
            lines.append(f"suites: {len(self.properties) - n_fail} passed, {n_fail} failed")
        return "\n".join(lines) + "\n"


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for part in parts:
        h.update(part if isinstance(part, bytes) else str(part).encode())
        h.update(b"\0")
    return "sha256:" + h.hexdigest()[:16]


def _read(path) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _indices(seq) -> str:
    return ",".join(map(str, seq))


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def cmd_compute(args) -> RunReport:
    try:
        raw = _read(args.pd_file)
        d = parse_pd(raw.decode())
    except (OSError, UnicodeDecodeError, PDCodeError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read PD code: {exc}")
    report = RunReport(_echo(args), _digest(raw, *args.indices), args.seed)
    try:
        idx = tuple(args.indices)
        value = milnor.mu(d, idx)
        modulus = milnor.delta(d, idx)
    except milnor.InvalidIndexError as exc:
        raise CliError(EXIT_INDEX, str(exc))
    report.add("components", d.num_components)
    for (i, j), lk in milnor.linking_numbers(d).items():
        report.add(f"lk({i},{j})", lk)
    key = _indices(idx)
    report.add(f"mu({key})", value)
    report.add(f"delta({key})", modulus)
    report.add(f"mu_bar({key})", milnor.Residue(value, modulus))
    return report


def cmd_surface(args) -> RunReport:
    try:
        raw = _read(args.pattern_file)
        p = surfaces.parse_pattern(raw.decode())
    except (OSError, UnicodeDecodeError, surfaces.PatternError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read pattern: {exc}")
    problems = surfaces.validate(p)
    if problems:
        raise CliError(EXIT_VIOLATION, "invalid pattern:\n" + "\n".join(f"  {v}" for v in problems))
    report = RunReport(_echo(args), _digest(raw, args.normalize), args.seed)
    i, j, k = p.labels
    report.add("t", p.t)
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        report.add(f"e({a},{b},{c})", surfaces.e_value(p, (a, b, c)))
    report.add("m", surfaces.m_value(p))
    report.add("delta", p.delta())
    report.add("mu_bar", surfaces.mu_bar_surface(p))
    if args.normalize:
        q, residue = surfaces.normalize_type2(p)
        sorted_words = q.to_json()
        for role in surfaces.ROLES:
            report.add(f"sorted w_{role}", sorted_words[f"w_{role}"])
        report.add("sorted t", q.t)
        report.add("-t", residue)
    return report


def cmd_build(args) -> RunReport:
    pr = builder.Prescription(args.p, args.q, args.r, args.m)
    expected = builder.expected_mu_bar(pr)
    report = RunReport(_echo(args), _digest(args.p, args.q, args.r, args.m, args.emit), args.seed)
    stem = os.path.join(args.out, f"builder_{args.p}_{args.q}_{args.r}_{args.m}")
    extra = {"prescription": {"p": pr.p, "q": pr.q, "r": pr.r, "m": pr.m},
             "expected_mu_bar": expected.to_json()}
    outputs = []
    if args.emit in ("pd", "both"):
        outputs.append((stem + ".pd.json", {**builder.build_diagram(pr).to_json(), **extra}))
    if args.emit in ("pattern", "both"):
        outputs.append((stem + ".pattern.json", {**builder.build_pattern(pr).to_json(), **extra}))
    for path, data in outputs:
        try:
            with open(path, "w") as fh:
                json.dump(data, fh, indent=1)
                fh.write("\n")
        except OSError as exc:
            raise CliError(EXIT_WRITE, f"cannot write {path}: {exc}")
        report.add("wrote", path)
    report.add("expected mu_bar(1,2,3)", expected)
    return report


def cmd_verify(args) -> RunReport:
    report = RunReport(_echo(args), _digest(args.seed, args.cases), args.seed)
    report.properties = verify.run_all(args.seed, args.cases)
    return report


def _echo(args) -> list:
    return list(args.argv)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (default 0)")

    parser = argparse.ArgumentParser(prog="milnorlink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="mu-bar invariants of a PD diagram")
    p.add_argument("pd_file")
    p.add_argument("indices", nargs="+", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("surface", parents=[common], help="invariants of a surface pattern")
    p.add_argument("pattern_file")
    p.add_argument("--normalize", action="store_true", help="also sort into type-2 form")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("build", parents=[common], help="build a link with prescribed invariants")
    for name in ("p", "q", "r", "m"):
        p.add_argument(name, type=int)
    p.add_argument("--emit", choices=("pd", "pattern", "both"), default="both")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="run the seeded property suites")
    p.add_argument("--cases", type=int, default=200)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    args = make_parser().parse_args(argv)
    args.argv = argv
    try:
        report = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.code
    if args.json:
        stdout.write(json.dumps(report.to_json(), indent=1, sort_keys=True) + "\n")
    else:
        stdout.write(report.render())
    if report.properties and not all(r.passed for r in report.properties):
        return EXIT_PROPERTY
    return 0


if __name__ == "__main__":
    sys.exit(main())
