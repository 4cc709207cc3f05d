"""Command line front end.

    qmds build --family T32 --q 3 --s 2 --r 1 --k 1
    qmds verify cert.json
    qmds enumerate --q 7 --n-max 48 --format csv
    qmds propagate --q 4 --n 10 --k 4 --d 4

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, asdict
from typing import Optional

from .constructions import (
    FAMILIES,
    ConstructionCertificate,
    ConstructionError,
    ParameterError,
    build,
    spec_from_params,
    verify_certificate,
)
from .linalg import DescentError
from .quantum import COLUMNS, QuantumParams, enumerate_families, propagate, singleton_defect

EXIT_OK, EXIT_VERIFY, EXIT_PARAMS, EXIT_IO = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class CommandConfig:
    command: str
    q: Optional[int] = None
    s: Optional[int] = None
    r: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    n: Optional[int] = None
    family: Optional[str] = None
    n_max: Optional[int] = None
    input_path: Optional[str] = None
    output_format: str = "json"
    output_path: Optional[str] = None
    verify_level: str = "full"
    verify: bool = False
    seed: int = 0


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from None


def _require(cfg: CommandConfig, *names: str) -> None:
    missing = [n for n in names if getattr(cfg, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise CliError(f"{cfg.command} needs {flags}", EXIT_PARAMS)


def _human_cert(cert: ConstructionCertificate) -> str:
    n, kq, d = cert.quantum
    lines = [
        f"{cert.spec.label()}: [{n}, {cert.spec.k}, {n - cert.spec.k + 1}]_{cert.spec.q ** 2} "
        f"Hermitian self-orthogonal GRS code",
        f"quantum code: [[{n}, {kq}, {d}]]_{cert.spec.q}",
        f"routing: {cert.routing}",
    ]
    for key, val in cert.verdicts.items():
        lines.append(f"  {key:<20} {'-' if val is None else ('ok' if val else 'FAILED')}")
    if cert.mds_probabilistic:
        lines.append("  (MDS verdict from random column subsets)")
    return "\n".join(lines) + "\n"


def _run_build(cfg: CommandConfig) -> int:
    _require(cfg, "family", "q", "s", "k")
    try:
        spec = spec_from_params(cfg.family, cfg.q, cfg.s, cfg.r, cfg.t, cfg.k)
    except ParameterError as exc:
        raise CliError(str(exc), EXIT_PARAMS) from None
    try:
        cert = build(spec, level=cfg.verify_level, seed=cfg.seed,
                     distance=cfg.verify_level == "full", check=False)
    except (ConstructionError, DescentError) as exc:
        raise CliError(f"construction failed: {exc}", EXIT_VERIFY) from None
    text = _human_cert(cert) if cfg.output_format == "human" else cert.to_json() + "\n"
    _write(text, cfg.output_path)
    return EXIT_OK if all(v is not False for v in cert.verdicts.values()) else EXIT_VERIFY


def _run_verify(cfg: CommandConfig) -> int:
    _require(cfg, "input_path")
    text = _read(cfg.input_path)
    try:
        cert = ConstructionCertificate.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"malformed certificate: {exc}", EXIT_PARAMS) from None
    ok, problems = verify_certificate(cert, cfg.verify_level, seed=cfg.seed,
                                      distance=cfg.verify_level == "full")
    report = {"certificate": cert.spec.label(), "reproduced": ok, "problems": problems}
    if cfg.output_format == "human":
        out = f"{cert.spec.label()}: {'reproduced' if ok else 'NOT reproduced'}\n"
        out += "".join(f"  {p}\n" for p in problems)
    else:
        out = json.dumps(report, sort_keys=True, indent=1) + "\n"
    _write(out, cfg.output_path)
    return EXIT_OK if ok else EXIT_VERIFY


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _run_enumerate(cfg: CommandConfig) -> int:
    _require(cfg, "q", "n_max")
    try:
        rows = enumerate_families(cfg.q, cfg.n_max, cfg.verify, seed=cfg.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARAMS) from None
    except ConstructionError as exc:
        raise CliError(str(exc), EXIT_VERIFY) from None
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for row in rows:
            w.writerow([_cell(getattr(row, c)) for c in COLUMNS])
        text = buf.getvalue()
    elif cfg.output_format == "human":
        text = "".join(
            f"[[{r.n}, {r.k_q}, {r.d}]]_{r.q}  {r.provenance}{'  (verified)' if r.verified else ''}\n"
            for r in rows
        )
    else:
        doc = {"q": cfg.q, "n_max": cfg.n_max, "columns": list(COLUMNS),
               "rows": [asdict(r) for r in rows]}
        text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    _write(text, cfg.output_path)
    return EXIT_OK


def _run_propagate(cfg: CommandConfig) -> int:
    if cfg.input_path is not None:
        try:
            cert = ConstructionCertificate.from_json(_read(cfg.input_path))
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(f"malformed certificate: {exc}", EXIT_PARAMS) from None
        n, kq, d = cert.quantum
        src = QuantumParams(cert.spec.q, n, kq, d, cert.spec.label())
    else:
        _require(cfg, "q", "n", "k", "d")
        try:
            src = QuantumParams(cfg.q, cfg.n, cfg.k, cfg.d, "input")
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARAMS) from None
    try:
        singleton_defect(src)
        out = propagate(src)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARAMS) from None
    if cfg.output_format == "human":
        text = f"{src} -> {out}\n"
    else:
        text = json.dumps({"input": asdict(src), "output": asdict(out)}, sort_keys=True, indent=1) + "\n"
    _write(text, cfg.output_path)
    return EXIT_OK


def run(cfg: CommandConfig) -> int:
    handlers = {"build": _run_build, "verify": _run_verify,
                "enumerate": _run_enumerate, "propagate": _run_propagate}
    try:
        return handlers[cfg.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmds", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "human")):
        p.add_argument("--format", dest="output_format", choices=formats, default=formats[0])
        p.add_argument("--output", "-o", dest="output_path")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled MDS checks")

    b = sub.add_parser("build", help="construct and certify one code")
    b.add_argument("--family", choices=FAMILIES, required=True)
    for name in ("q", "s", "r", "t", "k"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--verify-level", choices=("params", "gram", "full"), default="full")
    common(b)

    v = sub.add_parser("verify", help="recompute the verdicts of a certificate")
    v.add_argument("input_path", metavar="CERT", help="certificate JSON ('-' for stdin)")
    v.add_argument("--verify-level", choices=("params", "gram", "full"), default="full")
    common(v)

    e = sub.add_parser("enumerate", help="table of quantum MDS parameters for q")
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--n-max", type=int, required=True)
    e.add_argument("--verify", action="store_true", help="build a certificate for every direct row")
    common(e, formats=("json", "csv", "human"))

    pr = sub.add_parser("propagate", help="apply the propagation rule once")
    pr.add_argument("--q", type=int)
    pr.add_argument("--n", type=int)
    pr.add_argument("--k", type=int, help="quantum dimension k of [[n, k, d]]")
    pr.add_argument("--d", type=int)
    pr.add_argument("--input", dest="input_path", help="read parameters from a certificate")
    common(pr)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    cfg = CommandConfig(**vars(args))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
