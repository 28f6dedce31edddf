"""Command-line front end.

Exit status: 0 on success, 2 for bad input (composite prime, unknown group
type, malformed arguments), 1 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bredon import (COHOMOLOGY, HOMOLOGY, bredon_complex, hecke_operator,
                     k_groups)
from .calibration import calibrate_h0
from .cwmodel import congruence_model, gamma1_model, model_summary
from .errors import DomainError, InvariantError
from .linalg import FgAbGroup, IntMatrix
from .matgroup import parse_prime
from .reptheory import character_table
from .selfcheck import run_all


@dataclass(frozen=True)
class CliConfig:
    command: str
    target: str = "gamma1"
    prime: str | None = None
    degree: int | None = None
    format: str = "text"
    seed: int = 0
    group_type: str | None = None


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bianchi-hecke",
                                 description="Bredon homology and Hecke operators for PSL_2(Z[i]).")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, prime_required=False):
        p.add_argument("--prime", required=prime_required, help="Gaussian prime such as 1+i, 3, 2-i")
        p.add_argument("--format", choices=("text", "json"), default="text")

    for name in ("homology", "cohomology"):
        p = sub.add_parser(name, help=f"Bredon {name} of a model")
        p.add_argument("target", choices=("gamma1", "congruence"))
        p.add_argument("--degree", type=int, choices=(0, 1, 2))
        common(p)
    p = sub.add_parser("hecke", help="Hecke operator of diag(p, 1)")
    p.add_argument("--degree", type=int, choices=(0, 1, 2))
    common(p, prime_required=True)
    p = sub.add_parser("model", help="cells and stabilizers of a model")
    p.add_argument("target", choices=("gamma1", "congruence"))
    common(p)
    p = sub.add_parser("table", help="character table of a finite group type")
    p.add_argument("group_type")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--seed", type=int, default=0)
    return ap


def parse_args(argv) -> CliConfig:
    ns = _parser().parse_args(argv)
    return CliConfig(command=ns.command, target=getattr(ns, "target", "gamma1"),
                     prime=getattr(ns, "prime", None), degree=getattr(ns, "degree", None),
                     format=getattr(ns, "format", "text"), seed=getattr(ns, "seed", 0),
                     group_type=getattr(ns, "group_type", None))


def _model(cfg: CliConfig):
    if cfg.target == "gamma1":
        return gamma1_model()
    if cfg.prime is None:
        raise DomainError("--prime is required for the congruence model")
    return congruence_model(parse_prime(cfg.prime))


def _degrees(cfg: CliConfig) -> list[int]:
    return [cfg.degree] if cfg.degree is not None else [0, 1, 2]


def _groups_line(groups, variance: str, degrees) -> str:
    sym = "H_" if variance == HOMOLOGY else "H^"
    return ", ".join(f"{sym}{n} = {groups[n]}" for n in degrees)


def format_poly(coeffs: list[int]) -> str:
    n = len(coeffs) - 1
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        e = n - k
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        mag = abs(c)
        body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
        sign = "-" if c < 0 else "+"
        terms.append(body if not terms and c > 0 else (f"-{body}" if not terms else f"{sign} {body}"))
    return " ".join(terms) or "0"


def _cmd_groups(cfg: CliConfig, out) -> None:
    model = _model(cfg)
    variance = HOMOLOGY if cfg.command == "homology" else COHOMOLOGY
    groups = bredon_complex(model, variance).groups()
    degrees = _degrees(cfg)
    if cfg.format == "json":
        payload = {"group": model.group_tag, variance: {str(n): groups[n].to_json() for n in degrees}}
        if variance == HOMOLOGY:
            k0, k1 = k_groups(model)
            payload["k_groups"] = {"K0": k0.to_json(), "K1": k1.to_json()}
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    else:
        out.write(_groups_line(groups, variance, degrees) + "\n")


def hecke_report(prime_text: str) -> dict:
    p = parse_prime(prime_text)
    g = gamma1_model()
    h = hecke_operator(p, g)
    k0, k1 = k_groups(g)
    report = {
        "homology": [x.to_json() for x in h.gamma_complex.groups()],
        "cohomology": [x.to_json() for x in bredon_complex(g, COHOMOLOGY).groups()],
        "k_groups": {"K0": k0.to_json(), "K1": k1.to_json()},
        "hecke": h.to_json(),
    }
    cal = calibrate_h0(h)
    report["hecke"]["standard_basis_H0"] = cal.to_json() if cal else None
    return report


def _cmd_hecke(cfg: CliConfig, out) -> None:
    rep = hecke_report(cfg.prime)
    if cfg.format == "json":
        json.dump(rep, out, sort_keys=True)
        out.write("\n")
        return
    h = rep["hecke"]
    groups = [FgAbGroup(x["free_rank"], tuple(x["torsion"])) for x in rep["homology"]]
    lines = [f"Hecke operator of diag({h['prime']}, 1) on Gamma_1",
             _groups_line(groups, HOMOLOGY, [0, 1, 2]),
             f"K_0 = {FgAbGroup(rep['k_groups']['K0']['free_rank'], tuple(rep['k_groups']['K0']['torsion']))}, "
             f"K_1 = {FgAbGroup(rep['k_groups']['K1']['free_rank'], tuple(rep['k_groups']['K1']['torsion']))}"]

    def mat(name, rows, ncols=None):
        m = IntMatrix.from_rows(rows, cols=ncols if ncols is not None else (len(rows[0]) if rows else 0))
        lines.append(f"{name}:")
        lines.append(m.render())

    keys = [f"on_H{n}" for n in _degrees(cfg)]
    if cfg.degree is None:
        keys += ["on_K0", "on_K1"]
    for key in keys:
        mat(key, h[key])
    lines.append(f"char_poly_H0: {format_poly(h['char_poly_H0'])}")
    cal = h.get("standard_basis_H0")
    if cal and (cfg.degree in (None, 0)):
        lines.append("standard basis of H_0: " + ", ".join(cal["gamma_basis"]))
        mat("on_H0 in the standard basis", cal["homology"]["hecke"])
        mat("on H^0 in the dual basis", cal["cohomology"]["hecke"])
    out.write("\n".join(lines) + "\n")


def _cmd_model(cfg: CliConfig, out) -> None:
    model = _model(cfg)
    if cfg.format == "json":
        payload = model.to_json()
        payload["summary"] = model_summary(model).to_json()
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    else:
        out.write(model_summary(model).render() + "\n")


def _cmd_table(cfg: CliConfig, out) -> None:
    table = character_table(cfg.group_type)
    if cfg.format == "json":
        json.dump(table.to_json(), out, sort_keys=True)
        out.write("\n")
    else:
        out.write(table.render() + "\n")


def _cmd_verify(cfg: CliConfig, out) -> int:
    results = run_all(cfg.seed)
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.ok for r in results) else 1


def run(cfg: CliConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if cfg.command in ("homology", "cohomology"):
            _cmd_groups(cfg, out)
        elif cfg.command == "hecke":
            _cmd_hecke(cfg, out)
        elif cfg.command == "model":
            _cmd_model(cfg, out)
        elif cfg.command == "table":
            _cmd_table(cfg, out)
        elif cfg.command == "verify":
            return _cmd_verify(cfg, out)
        else:
            raise DomainError(f"unknown command {cfg.command!r}")
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except InvariantError as exc:
        err.write(f"internal check failed: {exc}\n")
        return 1
    return 0


def main(argv=None) -> int:
    return run(parse_args(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    sys.exit(main())
