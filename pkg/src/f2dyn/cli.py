"""Command-line front end.

Subcommands: orbits (cycle decomposition of one map), curve (the curve
behind a quartic map, its group structure, and the cycle-length catalog),
conjugate (normal form of a reciprocal map), bluher (root-count sweep of
x^(2^k+1) + x + a), and selftest (the built-in verification suite).

Field elements on the command line are written either as powers of the
field's primitive element ("g^12", or "g" for the generator itself) or as
hex encodings ("0x1a").  Exit codes: 0 success, 1 invariant violation,
2 usage error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass
from math import gcd

from . import selftest as _selftest
from .cache import cached_group_structure
from .conjugacy import (bluher_root_count, fixed_point_count,
                        solve_conjugation, tau_eval, theta_fixed_points,
                        verify_conjugation)
from .curves import catalog_length_sets, curve_from_map, cycle_catalog
from .fields import (BinaryField, FieldElement, FieldMismatchError,
                     InvariantViolationError, ResourceLimitError,
                     quadratic_extension)
from .maps import CycleStructure, MapSpec, ProjPoint
from .reporting import (AnalysisReport, cycle_labels, cycles_to_dict,
                        element_echo, emit_dot, point_label, to_json)

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(ValueError):
    """A syntactically valid command line that asks for something invalid."""


@dataclass(frozen=True)
class JobConfig:
    """One CLI invocation, normalized; to_args/from_args round-trip."""

    command: str
    degree: int = 0
    modulus: int | None = None
    map_kind: str = "theta"
    a: str | None = None
    b: str | None = None
    k: int = 2
    format: str = "text"
    cache_dir: str | None = None
    jobs: int = 1
    quick: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "JobConfig":
        modulus = getattr(args, "modulus", None)
        return cls(
            command=args.command,
            degree=getattr(args, "degree", 0),
            modulus=int(modulus, 16) if modulus is not None else None,
            map_kind=getattr(args, "map_kind", "theta"),
            a=getattr(args, "a", None),
            b=getattr(args, "b", None),
            k=getattr(args, "k", 2),
            format=getattr(args, "format", "text"),
            cache_dir=getattr(args, "cache_dir", None),
            jobs=getattr(args, "jobs", 1),
            quick=getattr(args, "quick", False),
        )

    def to_args(self) -> list[str]:
        if self.command == "selftest":
            return ["selftest"] + (["--quick"] if self.quick else [])
        out = [self.command, "--degree", str(self.degree)]
        if self.modulus is not None:
            out += ["--modulus", f"{self.modulus:#x}"]
        if self.command in ("orbits", "curve", "conjugate"):
            out += ["--map", self.map_kind, "--a", self.a, "--b", self.b]
        elif self.a is not None:
            out += ["--a", self.a]
        out += ["--k", str(self.k), "--format", self.format]
        if self.cache_dir is not None:
            out += ["--cache-dir", self.cache_dir]
        out += ["--jobs", str(self.jobs)]
        return out

    def echo(self) -> dict:
        out = {"command": self.command, "degree": self.degree,
               "k": self.k, "format": self.format, "jobs": self.jobs}
        if self.modulus is not None:
            out["modulus"] = f"{self.modulus:#x}"
        if self.command in ("orbits", "curve", "conjugate"):
            out["map"] = self.map_kind
        if self.a is not None:
            out["a"] = self.a
        if self.b is not None:
            out["b"] = self.b
        if self.cache_dir is not None:
            out["cache_dir"] = self.cache_dir
        return out


def parse_element(field: BinaryField, text: str) -> FieldElement:
    """"g", "g^i" (primitive-element power) or a hex encoding."""
    token = text.strip().lower()
    if not token:
        raise UsageError("empty field element")
    if token.startswith("g"):
        rest = token[1:]
        if rest.startswith("^"):
            rest = rest[1:]
        try:
            exponent = int(rest) if rest else 1
        except ValueError:
            raise UsageError(f"malformed element {text!r}") from None
        return field.primitive_element() ** exponent
    try:
        bits = int(token, 16)
    except ValueError:
        raise UsageError(f"malformed element {text!r} (want g^i or hex)") from None
    try:
        return field.element(bits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _field(cfg: JobConfig) -> BinaryField:
    if cfg.degree < 1:
        raise UsageError("--degree must be a positive integer")
    try:
        return BinaryField(cfg.degree, cfg.modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _map(cfg: JobConfig, field: BinaryField) -> MapSpec:
    a = parse_element(field, cfg.a)
    b = parse_element(field, cfg.b)
    try:
        return MapSpec(cfg.map_kind, a, b, cfg.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def emit_graph(cs: CycleStructure, format: str) -> str:
    """The cycle decomposition as a DOT digraph or a JSON document."""
    if format == "dot":
        return emit_dot(cs)
    if format == "json":
        return to_json(cycles_to_dict(cs))
    raise UsageError(f"no graph emission for format {format!r}")


# -- subcommands --------------------------------------------------------------------


def run_orbits(cfg: JobConfig) -> str:
    mp = _map(cfg, _field(cfg))
    cs = mp.cycle_structure()
    if cfg.format in ("dot", "json"):
        return emit_graph(cs, cfg.format)
    report = AnalysisReport(config=cfg.echo(),
                            cycle_summary={str(l): c
                                           for l, c in cs.summary.items()},
                            cycles=cycle_labels(cs))
    return report.to_text()


def _catalog_rows(entries, degree: int) -> list[dict]:
    return [{"over": degree, "d1": e.d1, "d2": e.d2, "m1": e.m1, "m2": e.m2,
             "length": e.length, "possible_lengths": list(e.possible_lengths),
             "point_count": e.point_count, "cycle_count": e.cycle_count}
            for e in entries]


def _lifting_cycle_counts(cs: CycleStructure, curve) -> Counter:
    """Cycle counts of the map restricted to x-coordinates of curve points
    (the classes the catalog enumerates; the rest of the line lifts only to
    the quadratic twist)."""
    inv_sq = (curve.a1 * curve.a1).inv()
    counts: Counter[int] = Counter()
    for cyc in cs.cycles:
        p = cyc[0]
        if p.is_infinity:
            counts[len(cyc)] += 1
            continue
        x = p.value
        if ((x * x * x + curve.a2 * x) * inv_sq).trace() == 0:
            counts[len(cyc)] += 1
    return counts


def _catalog_cycle_counts(entries) -> Counter:
    counts: Counter[int] = Counter()
    for e in entries:
        counts[e.length] += e.cycle_count
    return counts


def run_curve(cfg: JobConfig) -> str:
    if cfg.map_kind != "theta" or cfg.k != 2:
        raise UsageError("curve analysis applies to theta maps with k=2 "
                         "(the duplication shape)")
    field = _field(cfg)
    mp = _map(cfg, field)
    curve = curve_from_map(mp.a, mp.b)
    emb = quadratic_extension(field)
    gs1 = cached_group_structure(curve, field, cfg.cache_dir, cfg.jobs)
    gs2 = cached_group_structure(curve, emb.ext, cfg.cache_dir, cfg.jobs)
    cat1, cat2 = cycle_catalog(gs1), cycle_catalog(gs2)

    cs = mp.cycle_structure()
    observed = sorted(cs.lengths())
    predicted = sorted(catalog_length_sets(cat2)[0])
    notes = []
    for label, entries, line, crv in (
            (f"F_2^{field.degree}", cat1, cs, curve),
            (f"F_2^{emb.ext.degree}", cat2, None, curve.extended(emb))):
        if line is None:
            if emb.ext.order > 1 << 16:
                continue
            line = MapSpec("theta", emb(mp.a), emb(mp.b), 2).cycle_structure()
        got = _lifting_cycle_counts(line, crv)
        want = _catalog_cycle_counts(entries)
        if got != want:
            raise InvariantViolationError(
                f"catalog over {label} predicts cycles {dict(sorted(want.items()))}"
                f" on lifting x-coordinates, observed {dict(sorted(got.items()))}")
        observed = sorted(set(observed) | set(got))
        notes.append(f"{label}: catalog matches the {sum(got.values())} cycles "
                     f"through curve x-coordinates exactly")

    report = AnalysisReport(
        config=cfg.echo(),
        cycle_summary={str(l): c for l, c in cs.summary.items()},
        curve={"a1": element_echo(curve.a1), "a2": element_echo(curve.a2),
               "base": {"order": gs1.order, "n1": gs1.n1, "n2": gs1.n2},
               "extension": {"order": gs2.order, "n1": gs2.n1, "n2": gs2.n2}},
        catalog=_catalog_rows(cat1, field.degree)
                + _catalog_rows(cat2, emb.ext.degree),
        predicted_lengths=predicted,
        observed_lengths=observed,
        notes=notes,
    )
    return to_json(report.to_dict()) if cfg.format == "json" else report.to_text()


def run_conjugate(cfg: JobConfig) -> str:
    if cfg.map_kind != "psi":
        raise UsageError("conjugation applies to psi maps (pass --map psi)")
    field = _field(cfg)
    mp = _map(cfg, field)
    data = solve_conjugation(mp)
    ext = data.embedding.ext

    transcript = {
        "extension_degree": data.ext_degree,
        "relative_degree": data.embedding.relative_degree,
        "c": element_echo(data.c), "c1": element_echo(data.c1),
        "c2": element_echo(data.c2), "c3": element_echo(data.c3),
        "normal_form": data.normal_form().describe(),
        "system_holds": data.system_holds(),
    }
    try:
        if not verify_conjugation(data):
            raise InvariantViolationError(
                "solved conjugation fails the pointwise check")
        transcript["verified_points"] = ext.order + 1
    except ResourceLimitError:
        transcript["verified_points"] = (
            f"skipped (line of F_2^{ext.degree} too large)")

    fixed = [p for p in _projective_line(field) if mp.eval(p) == p]
    transcript["fixed_points"] = [point_label(p) for p in fixed]
    transcript["fixed_point_count"] = len(fixed)
    if data.is_base_field:
        theorem = fixed_point_count(data.c, cfg.k, field.degree)
        if theorem != len(fixed):
            raise InvariantViolationError(
                f"theorem count {theorem} != {len(fixed)} observed fixed points")
        transcript["theorem_count"] = theorem
        source = sorted(theta_fixed_points(data.c, cfg.k, field),
                        key=point_label)
        transcript["normal_form_fixed_points"] = [point_label(p) for p in source]
        transcript["tau_images"] = {
            point_label(p): point_label(tau_eval(data, p)) for p in source}

    report = AnalysisReport(config=cfg.echo(), conjugacy=transcript)
    return to_json(report.to_dict()) if cfg.format == "json" else report.to_text()


def _projective_line(field: BinaryField):
    for bits in range(field.order):
        yield ProjPoint.finite(field.element(bits))
    yield ProjPoint.infinity(field)


def run_bluher(cfg: JobConfig) -> str:
    field = _field(cfg)
    if cfg.k < 1:
        raise UsageError("--k must be at least 1")
    d = gcd(cfg.k, field.degree)
    sweep = ([parse_element(field, cfg.a)] if cfg.a is not None
             else [field.element(bits) for bits in range(1, field.order)])
    histogram: Counter[int] = Counter()
    per_value: dict[str, int] = {}
    for a in sweep:
        if a.is_zero:
            raise UsageError("a must be nonzero")
        count = bluher_root_count(a, cfg.k, field)
        histogram[count] += 1
        if field.order <= 256 or cfg.a is not None:
            per_value[point_label(ProjPoint.finite(a))] = count
    payload = {
        "polynomial": f"x^{(1 << cfg.k) + 1} + x + a",
        "values_swept": len(sweep),
        "allowed_counts": sorted({0, 1, 2, (1 << d) + 1}),
        "histogram": {str(c): n for c, n in sorted(histogram.items())},
    }
    if per_value:
        payload["counts"] = per_value
    report = AnalysisReport(config=cfg.echo(), root_counts=payload)
    return to_json(report.to_dict()) if cfg.format == "json" else report.to_text()


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f2dyn",
        description="Cycle structure of x -> a*x^(2^k) + b and its "
                    "reciprocal over binary fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_map: bool, kind: str) -> None:
        p.add_argument("--degree", type=int, required=True, metavar="N",
                       help="field degree: work over F_{2^N}")
        p.add_argument("--modulus", metavar="HEX",
                       help="irreducible modulus bits (default: built-in)")
        if with_map:
            p.add_argument("--map", dest="map_kind", choices=("theta", "psi"),
                           default=kind, help=f"map family (default {kind})")
            p.add_argument("--a", required=True, metavar="ELT",
                           help="coefficient a (g^i or hex, nonzero)")
            p.add_argument("--b", required=True, metavar="ELT",
                           help="coefficient b (g^i or hex)")
        p.add_argument("--k", type=int, default=2, metavar="K",
                       help="Frobenius exponent: the map uses x^(2^K)")
        p.add_argument("--format", choices=("text", "dot", "json"),
                       default="text", help="output format")
        p.add_argument("--cache-dir", dest="cache_dir", metavar="DIR",
                       help="cache directory for curve computations")
        p.add_argument("--jobs", type=int, default=1, metavar="W",
                       help="parallel workers for point counting")

    p = sub.add_parser("orbits", help="cycle decomposition of the map")
    common(p, with_map=True, kind="theta")
    p = sub.add_parser("curve", help="curve, group structure, and catalog "
                                     "behind a quartic theta map")
    common(p, with_map=True, kind="theta")
    p = sub.add_parser("conjugate", help="normal form of a reciprocal map")
    common(p, with_map=True, kind="psi")
    p = sub.add_parser("bluher", help="root counts of x^(2^k+1) + x + a")
    common(p, with_map=False, kind="theta")
    p.add_argument("--a", metavar="ELT",
                   help="restrict the sweep to one a value")
    p = sub.add_parser("selftest", help="run the verification suite")
    p.add_argument("--quick", action="store_true",
                   help="only the four worked-example checks")
    return parser


_HANDLERS = {
    "orbits": run_orbits,
    "curve": run_curve,
    "conjugate": run_conjugate,
    "bluher": run_bluher,
}


def run(cfg: JobConfig) -> str:
    """Execute one parsed configuration and return its report document."""
    return _HANDLERS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = JobConfig.from_args(args)
    if cfg.command == "selftest":
        return _selftest.run(quick=cfg.quick)
    try:
        sys.stdout.write(run(cfg))
    except UsageError as exc:
        print(f"f2dyn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FieldMismatchError, ValueError) as exc:
        print(f"f2dyn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"f2dyn: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolationError as exc:
        print(f"f2dyn: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
