"""Command-line front end.

Subcommands: invariants, canonical, quotient, bundle, cover, catalog.
Link files are JSON documents with a symmetric integer linking matrix and
an optional table of Arf invariants keyed by sublink bitmask.  Every
command takes --json for machine-readable output; identical inputs give
byte-identical JSON.

Exit codes: 0 success, 2 parse or validation error, 3 mathematical
precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bundles, catalog, defects, links, quotients
from .defects import LambdaClass, TotalDefect
from .errors import FramingError, NotSymmetric, ParseError


@dataclass(frozen=True)
class LinkDocument:
    name: str
    link: links.FramedLink
    arf_table: dict[str, int]


def load_link_document(path: str) -> LinkDocument:
    """Read and validate a link file; any defect raises ParseError."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: top level must be an object")
    matrix = raw.get("matrix")
    if (not isinstance(matrix, list)
            or any(not isinstance(row, list) for row in matrix)
            or any(not isinstance(x, int) or isinstance(x, bool)
                   for row in matrix for x in row)):
        raise ParseError(f"{path}: 'matrix' must be a list of integer rows")
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ParseError(f"{path}: matrix must be square")
    components = raw.get("components", size)
    if components != size:
        raise ParseError(f"{path}: components = {components} but matrix is {size}x{size}")
    try:
        link = links.FramedLink.from_rows(matrix)
    except NotSymmetric as exc:
        raise ParseError(f"{path}: matrix must be symmetric") from exc
    name = raw.get("name", Path(path).stem)
    if not isinstance(name, str):
        raise ParseError(f"{path}: 'name' must be a string")
    arf_table: dict[str, int] = {}
    for key, value in (raw.get("arf_table") or {}).items():
        if (not isinstance(key, str) or len(key) != size
                or any(c not in "01" for c in key)):
            raise ParseError(f"{path}: arf_table key {key!r} is not a {size}-bit mask")
        if value not in (0, 1):
            raise ParseError(f"{path}: arf_table[{key!r}] must be 0 or 1")
        arf_table[key] = value
    return LinkDocument(name=name, link=link, arf_table=arf_table)


def _lambda_text(lam: LambdaClass) -> str:
    return f"{lam.representative} (class {lam.value} mod 4)"


def _mu_text(spin: links.SpinStructureData) -> str:
    note = " [arf assumed 0]" if spin.sublink.arf_assumed else ""
    return (f"C.C = {spin.sublink.self_intersection}  Arf = {spin.sublink.arf}{note}  "
            f"mu = {links.mu_representative(spin.mu)} (mod 16)  "
            f"lambda = {_lambda_text(spin.lam)}")


def _defect_text(p: TotalDefect) -> str:
    return f"({p.d}, {p.h})"


def _defect_json(p: TotalDefect) -> list[int]:
    return [p.d, p.h]


def _spin_json(spin: links.SpinStructureData) -> dict:
    return {
        "bitmask": spin.sublink.bitmask,
        "members": sorted(spin.sublink.members),
        "self_intersection": spin.sublink.self_intersection,
        "arf": spin.sublink.arf,
        "arf_assumed": spin.sublink.arf_assumed,
        "mu": links.mu_representative(spin.mu),
        "mu_mod16": spin.mu,
        "lambda": spin.lam.representative,
        "lambda_mod4": spin.lam.value,
    }


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _lambda_targets(lam: LambdaClass) -> list[int]:
    """Canonical target representatives for a class: one for 0 and +-1,
    both signs for the class of 2."""
    if lam.value == 2:
        return [-2, 2]
    return [lam.representative]


def cmd_invariants(args: argparse.Namespace) -> int:
    doc = load_link_document(args.file)
    link = doc.link
    chi, sigma, tau = links.basic_invariants(link)
    profile = links.homology(link)
    spins = links.spin_structures(link, doc.arf_table)
    nat = links.natural_framings(link)
    warnings: list[str] = []
    framings_json: dict = {"freed_gompf_h": nat.freed_gompf_h}
    lines = [
        f"link '{doc.name}': {link.components} components",
        f"  chi = {chi}",
        f"  sigma = {sigma}",
        f"  tau = {tau}",
        "homology H1(M):",
        f"  b1 = {profile.betti1}",
        f"  torsion = {list(profile.torsion)}",
        f"  r = {profile.r}",
        f"  s = {profile.s}",
        f"spin structures (characteristic sublinks): {len(spins)}",
    ]
    for spin in spins:
        lines.append(f"  [{spin.sublink.bitmask or '-'}] {_mu_text(spin)}")
    if link.is_even:
        phi = nat.phi_half_tau
        framings_json.update({
            "delta": _defect_json(nat.delta),
            "epsilon_h": nat.epsilon_h,
            "phi_half_tau": _defect_json(phi) if phi is not None else None,
        })
        lines += [
            "natural framings:",
            f"  H(delta_L) = {_defect_text(nat.delta)}",
            f"  h(epsilon_L) = {nat.epsilon_h}",
            f"  H(phi_L) = {_defect_text(phi)}" if phi is not None else "  H(phi_L) absent",
            f"  h(2phi_L) = {nat.freed_gompf_h}  (surgery 2-framing)",
        ]
    else:
        warnings.append("odd framings present: delta_L, epsilon_L and phi_L are undefined")
        lines += [
            "natural framings:",
            f"  h(2phi_L) = {nat.freed_gompf_h}  (surgery 2-framing)",
            "warnings:",
        ] + [f"  {w}" for w in warnings]
    payload = {
        "name": doc.name,
        "components": link.components,
        "chi": chi,
        "sigma": sigma,
        "tau": tau,
        "homology": {
            "betti1": profile.betti1,
            "torsion": list(profile.torsion),
            "r": profile.r,
            "s": profile.s,
        },
        "spin_structures": [_spin_json(s) for s in spins],
        "framings": framings_json,
        "warnings": warnings,
    }
    _emit(args, payload, lines)
    return 0


def cmd_canonical(args: argparse.Namespace) -> int:
    if (args.file is None) == (args.lambda_class is None):
        raise ParseError("give a link file or --lambda, not both")
    if args.lambda_class is not None:
        lam = LambdaClass(args.lambda_class)
        points = sorted(defects.canonical_set(lam))
        payload = {
            "lambda_mod4": lam.value,
            "canonical_set": [_defect_json(p) for p in points],
        }
        lines = [f"canonical defects for lambda class {lam.value} (mod 4):"]
        lines += [f"  {_defect_text(p)}" for p in points]
        _emit(args, payload, lines)
        return 0
    doc = load_link_document(args.file)
    nat = links.natural_framings(doc.link)
    named = [("delta_L", nat.delta),
             ("epsilon_L", TotalDefect(0, nat.epsilon_h))]
    if nat.phi_half_tau is not None:
        named.append(("phi_L", nat.phi_half_tau))
    lam = defects.lambda_class(nat.delta)
    points = sorted(defects.canonical_set(lam))
    offsets = []
    lines = [
        f"link '{doc.name}': lambda = {_lambda_text(lam)}",
        "canonical defects: " + ", ".join(_defect_text(p) for p in points),
        "offsets to the canonical points:",
    ]
    for name, defect in named:
        for target in _lambda_targets(lam):
            off = defects.canonical_offset(defect, target)
            landed = defects.act(defect, off)
            offsets.append({
                "framing": name,
                "defect": _defect_json(defect),
                "m_rho": off.m_rho,
                "n_sigma": off.n_sigma,
                "target": target,
                "result": _defect_json(landed),
            })
            lines.append(f"  {name} {_defect_text(defect)} + {off.n_sigma} sigma "
                         f"+ {off.m_rho} rho -> {_defect_text(landed)}")
    payload = {
        "name": doc.name,
        "lambda_mod4": lam.value,
        "lambda_representative": lam.representative,
        "canonical_set": [_defect_json(p) for p in points],
        "offsets": offsets,
    }
    _emit(args, payload, lines)
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    try:
        group = quotients.parse_group(args.group)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    sigma = quotients.sigma_g(group)
    brute = quotients.sigma_g_bruteforce(group)
    defect = quotients.quotient_framing_defect(group)
    payload = {
        "group": group.label,
        "family": group.description,
        "order": group.order,
        "sigma_g": sigma,
        "sigma_g_bruteforce": brute,
        "bruteforce_abs_error": abs(brute - sigma),
        "signature_defect": str(Fraction(sigma, 3)),
        "defect": _defect_json(defect),
    }
    lines = [
        f"group {group.label} ({group.description}), order {group.order}",
        f"  sigma(G) = {sigma}",
        f"  cotangent sum = {brute:.9f}  (|error| = {abs(brute - sigma):.2e})",
        f"  signature defect = {Fraction(sigma, 3)}",
        f"  quotient framing defect H = {_defect_text(defect)}",
    ]
    if group.family == "C":
        off = quotients.lens_canonical_offset(group.m)
        landed = defects.act(defect, off)
        payload["canonical_offset_rho"] = off.m_rho
        payload["canonical_h"] = landed.h
        lines.append(f"  canonical framing: + {off.m_rho} rho -> h = {landed.h}")
    _emit(args, payload, lines)
    return 0


def cmd_bundle(args: argparse.Namespace) -> int:
    if args.genus < 0:
        raise ParseError("--genus must be nonnegative")
    bundle = bundles.CircleBundle(args.genus, args.euler)
    exists = bundles.fiber_framing_exists(bundle)
    h = bundles.fiber_framing_defect(bundle) if exists else None
    p1 = (bundles.disk_bundle_p1(bundle)
          if exists and bundle.euler != 0 else None)
    payload = {
        "genus": bundle.genus,
        "euler": bundle.euler,
        "chi": bundle.chi,
        "fiber_framing_exists": exists,
        "p1": p1,
        "h": h,
    }
    lines = [f"circle bundle: genus {bundle.genus}, euler class {bundle.euler} "
             f"(chi = {bundle.chi})",
             f"  fiber-preserving framing exists: {'yes' if exists else 'no'}"]
    if exists:
        if p1 is not None:
            lines.append(f"  p1(disk bundle) = {p1}")
        lines.append(f"  h(fiber framing) = {h}")
    _emit(args, payload, lines)
    return 0


def cmd_cover(args: argparse.Namespace) -> int:
    try:
        d_text, h_text = args.defect.split(",")
        start = TotalDefect(int(d_text), int(h_text))
    except ValueError as exc:
        raise ParseError(f"--defect must look like 'd,h', got {args.defect!r}") from exc
    if args.degree < 1:
        raise ParseError("--degree must be at least 1")
    try:
        sigma_pi = Fraction(args.sigma_pi)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"--sigma-pi must be a rational like '722/3', "
                         f"got {args.sigma_pi!r}") from exc
    result = defects.pullback_cover(start, args.degree, sigma_pi)
    payload = {
        "defect": _defect_json(start),
        "degree": args.degree,
        "sigma_pi": str(sigma_pi),
        "result": _defect_json(result),
    }
    lines = [f"pullback along a {args.degree}-fold cover with signature defect {sigma_pi}:",
             f"  {_defect_text(start)} -> {_defect_text(result)}"]
    _emit(args, payload, lines)
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    entries = catalog.build_catalog()
    all_ok = all(e.ok for e in entries)
    payload = {
        "entries": [{"key": e.key, "description": e.description,
                     "value": e.value, "expected": e.expected, "ok": e.ok}
                    for e in entries],
        "all_ok": all_ok,
    }
    lines = []
    for e in entries:
        mark = "ok  " if e.ok else "FAIL"
        lines.append(f"{mark} {e.key}: {e.description} = {e.value}")
    lines.append(f"{sum(e.ok for e in entries)}/{len(entries)} entries verified")
    _emit(args, payload, lines)
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framings",
        description="Degree and Hirzebruch-defect invariants of framings of "
                    "closed oriented 3-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of a framed-link file")
    p.add_argument("file", help="link document (JSON)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("canonical", help="canonical framings and offsets")
    p.add_argument("file", nargs="?", help="link document (JSON)")
    p.add_argument("--lambda", dest="lambda_class", type=int,
                   help="show the canonical set for this class instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("quotient", help="defects of quotients of the 3-sphere")
    p.add_argument("group", help="C<m>, D<m>, T, O or I")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("bundle", help="fiber framings of circle bundles")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--euler", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("cover", help="pull a defect back along a finite cover")
    p.add_argument("--defect", required=True, help="total defect 'd,h'")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--sigma-pi", default="0", help="signature defect, e.g. '722/3'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("catalog", help="recompute the table of known values")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FramingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
