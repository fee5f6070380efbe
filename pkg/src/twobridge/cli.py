"""Command-line interface: exact knot invariants as text or JSON.

Knots are given as a Schubert form ``S(a,b)``, an even Conway form
``C[e1,e2,...]``, a small-knot name like ``9_27``, or ``--kx X`` for the
slice family.  Every numeric JSON field is an exact integer or a string
"p/q"; output is byte-deterministic.

Exit codes: 0 success, 2 bad input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .alexander import (
    alexander_poly,
    conway_even_form,
    second_derivative_at_one,
    seifert_from_conway,
    signature,
)
from .casson import SurgerySlope, lambda_surgery, total_seminorm
from .errors import DomainError, InternalError, MeridianError, TwoBridgeError
from .obstruction import NAMED_FORMS, ObstructionReport, census, knot_name, obstruct
from .rational import (
    ContinuedFraction,
    ConwayForm,
    SchubertForm,
    cf_eval,
    crossing_number,
    kx_family,
    preferred_form,
    simple_cf,
)
from .slopes import enumerate_bscf

SCHEMA_VERSION = "1"

_SCHUBERT_RE = re.compile(r"^S\((-?\d+),(-?\d+)\)$")
_CONWAY_RE = re.compile(r"^C\[(-?\d+(?:,-?\d+)*)\]$")
_NAME_RE = re.compile(r"^\d+_\d+$")


def parse_knot_spec(text: str) -> SchubertForm:
    """Parse S(a,b), C[...], or a knot-table name into a Schubert form."""
    compact = "".join(text.split())
    m = _SCHUBERT_RE.match(compact)
    if m:
        return SchubertForm(int(m.group(1)), int(m.group(2)))
    m = _CONWAY_RE.match(compact)
    if m:
        entries = tuple(int(e) for e in m.group(1).split(","))
        ConwayForm(entries)  # validates evenness and parity of the length
        value = cf_eval(ContinuedFraction((0,) + entries))
        alpha = value.denominator
        beta = value.numerator % alpha
        return SchubertForm(alpha, beta)
    if _NAME_RE.match(compact):
        form = NAMED_FORMS.get(compact)
        if form is None:
            raise DomainError(f"unknown knot name {compact!r}")
        return form
    raise DomainError(f"cannot parse knot spec {text!r} (want S(a,b), C[...], or a name)")


def _rat(x) -> int | str:
    """Exact JSON value: int when integral, else the string 'p/q'."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def _knot_payload(s: SchubertForm) -> dict:
    canonical, mirrored = preferred_form(s)
    return {
        "schubert": {"alpha": canonical.alpha, "beta": canonical.beta},
        "mirrored": mirrored,
        "name": knot_name(canonical),
    }


def _document(command: str, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}


def _report_payload(r: ObstructionReport) -> dict:
    return {
        "name": r.name,
        "schubert": {"alpha": r.knot.alpha, "beta": r.knot.beta},
        "mirrored": r.mirrored,
        "crossing_number": r.crossing_number,
        "delta_second": r.delta_second,
        "sigma": r.sigma,
        "casson_difference": _rat(r.casson_difference),
        "verdict": r.verdict.value,
        "caveats": list(r.caveats),
    }


def _print_kv(pairs) -> None:
    width = max(len(k) for k, _ in pairs)
    for key, value in pairs:
        print(f"{key.ljust(width)}  {value}")


def _resolve_knot(args) -> SchubertForm:
    if getattr(args, "kx", None) is not None:
        return kx_family(args.kx)
    if args.knot is None:
        raise DomainError("no knot given: pass a knot spec or --kx X")
    return parse_knot_spec(args.knot)


def _cmd_info(args) -> int:
    s = _resolve_knot(args)
    canonical, mirrored = preferred_form(s)
    conway = conway_even_form(canonical)
    payload = _knot_payload(s)
    payload.update(
        {
            "crossing_number": crossing_number(canonical),
            "genus": conway.genus,
            "conway": list(conway.entries),
            "simple_cf": list(simple_cf(canonical.fraction).terms),
        }
    )
    if args.json:
        print(json.dumps(_document("info", payload), indent=2))
    else:
        _print_kv(
            [
                ("knot", str(canonical) + (" (mirror of input)" if mirrored else "")),
                ("name", payload["name"] or "-"),
                ("crossing number", payload["crossing_number"]),
                ("genus", payload["genus"]),
                ("conway form", "C[" + ",".join(map(str, payload["conway"])) + "]"),
                ("simple cf", "[" + ",".join(map(str, payload["simple_cf"])) + "]"),
            ]
        )
    return 0


def _cmd_slopes(args) -> int:
    s = _resolve_knot(args)
    canonical, _ = preferred_form(s)
    system = enumerate_bscf(canonical)
    payload = _knot_payload(s)
    payload.update(
        {
            "records": [
                {
                    "cf": list(rec.cf.terms),
                    "n_plus": rec.n_plus,
                    "n_minus": rec.n_minus,
                    "slope": rec.slope,
                    "weight": rec.weight,
                }
                for rec in system.records
            ],
            "longitude_index": system.longitude_index,
        }
    )
    if args.json:
        print(json.dumps(_document("slopes", payload), indent=2))
    else:
        print(f"boundary slopes of {canonical} ({len(system.records)} expansions)")
        print(f"{'cf':<40} {'n+':>3} {'n-':>3} {'N':>5} {'W':>8}")
        for i, rec in enumerate(system.records):
            mark = "  <- longitude" if i == system.longitude_index else ""
            print(
                f"{str(rec.cf):<40} {rec.n_plus:>3} {rec.n_minus:>3}"
                f" {rec.slope:>5} {rec.weight:>8}{mark}"
            )
    return 0


def _cmd_alexander(args) -> int:
    s = _resolve_knot(args)
    canonical, _ = preferred_form(s)
    matrix = seifert_from_conway(conway_even_form(canonical))
    delta = alexander_poly(matrix)
    payload = _knot_payload(s)
    payload.update(
        {
            "alexander": {str(k): c for k, c in delta.items()},
            "alexander_str": str(delta),
            "delta_second_at_one": second_derivative_at_one(delta),
            "signature": signature(matrix),
        }
    )
    if args.json:
        print(json.dumps(_document("alexander", payload), indent=2))
    else:
        _print_kv(
            [
                ("knot", str(canonical)),
                ("name", payload["name"] or "-"),
                ("alexander polynomial", payload["alexander_str"]),
                ("second derivative at 1", payload["delta_second_at_one"]),
                ("signature", payload["signature"]),
            ]
        )
    return 0


def _cmd_casson(args) -> int:
    s = _resolve_knot(args)
    r = SurgerySlope.parse(args.slope)
    lam = lambda_surgery(s, r)  # rejects the meridian before anything else
    canonical, mirrored = preferred_form(s)
    r_eff = SurgerySlope(-r.p, r.q) if mirrored else r
    seminorm = total_seminorm(enumerate_bscf(canonical), r_eff)
    payload = _knot_payload(s)
    payload.update(
        {
            "slope": str(r),
            "total_seminorm": _rat(seminorm),
            "lambda": _rat(lam.value),
            "hypotheses_ok": lam.hypotheses_ok,
            "caveats": list(lam.caveats),
        }
    )
    if args.json:
        print(json.dumps(_document("casson", payload), indent=2))
    else:
        _print_kv(
            [
                ("knot", str(canonical) + (" (mirror of input)" if mirrored else "")),
                ("slope", str(r)),
                ("total seminorm", payload["total_seminorm"]),
                ("casson invariant", payload["lambda"]),
                ("hypotheses ok", payload["hypotheses_ok"]),
                ("caveats", "; ".join(lam.caveats) or "-"),
            ]
        )
    return 0


def _matches_filters(payload: dict, filters: list[str]) -> bool:
    for f in filters:
        if "=" not in f:
            raise DomainError(f"bad --filter {f!r}, want field=value")
        key, _, value = f.partition("=")
        key = key.strip()
        if key not in payload:
            raise DomainError(f"unknown filter field {key!r}")
        if str(payload[key]) != value.strip():
            return False
    return True


def _cmd_obstruct(args) -> int:
    if args.census is not None:
        reports = census(args.census, threads=args.threads)
        payloads = [_report_payload(r) for r in reports]
        payloads = [p for p in payloads if _matches_filters(p, args.filter)]
        if args.jsonl:
            for p in payloads:
                print(json.dumps(_document("obstruct", p)))
        elif args.json:
            print(json.dumps(_document("obstruct", payloads), indent=2))
        else:
            for p in payloads:
                name = p["name"] or f"S({p['schubert']['alpha']},{p['schubert']['beta']})"
                print(
                    f"{name:<8} S({p['schubert']['alpha']},{p['schubert']['beta']})"
                    f" crossings={p['crossing_number']}"
                    f" delta''={p['delta_second']} sigma={p['sigma']}"
                    f" diff={p['casson_difference']} {p['verdict']}"
                )
        return 0
    s = _resolve_knot(args)
    payload = _report_payload(obstruct(s))
    if args.json or args.jsonl:
        print(json.dumps(_document("obstruct", payload), indent=2))
    else:
        _print_kv(
            [
                ("knot", f"S({payload['schubert']['alpha']},{payload['schubert']['beta']})"),
                ("name", payload["name"] or "-"),
                ("crossing number", payload["crossing_number"]),
                ("delta'' at 1", payload["delta_second"]),
                ("signature", payload["sigma"]),
                ("casson difference", payload["casson_difference"]),
                ("verdict", payload["verdict"]),
                ("caveats", "; ".join(payload["caveats"]) or "-"),
            ]
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Exact invariants and cosmetic-surgery obstructions for two-bridge knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_knot_args(p):
        p.add_argument("knot", nargs="?", help="knot spec: S(a,b), C[e1,...], or a name like 9_27")
        p.add_argument("--kx", type=int, metavar="X", help="use the slice-family knot with parameter X")
        p.add_argument("--json", action="store_true", help="emit a JSON document")

    p_info = sub.add_parser("info", help="normal forms, crossing number, genus")
    add_knot_args(p_info)
    p_info.set_defaults(func=_cmd_info)

    p_slopes = sub.add_parser("slopes", help="boundary slope table")
    add_knot_args(p_slopes)
    p_slopes.set_defaults(func=_cmd_slopes)

    p_alex = sub.add_parser("alexander", help="Alexander polynomial, delta''(1), signature")
    add_knot_args(p_alex)
    p_alex.set_defaults(func=_cmd_alexander)

    p_casson = sub.add_parser("casson", help="SL(2,C) Casson invariant of a surgery")
    add_knot_args(p_casson)
    p_casson.add_argument("slope", help="surgery slope p/q (1/0 is rejected)")
    # let negative slopes like -1/2 pass as positionals
    p_casson._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    p_casson.set_defaults(func=_cmd_casson)

    p_obs = sub.add_parser("obstruct", help="cosmetic surgery obstruction verdict")
    add_knot_args(p_obs)
    p_obs.add_argument("--census", type=int, metavar="N", help="report every knot of at most N crossings")
    p_obs.add_argument("--filter", action="append", default=[], metavar="FIELD=VALUE",
                       help="keep census reports with FIELD equal to VALUE (repeatable)")
    p_obs.add_argument("--jsonl", action="store_true", help="one JSON document per line (census)")
    p_obs.add_argument("--threads", type=int, default=None, help="census worker threads")
    p_obs.set_defaults(func=_cmd_obstruct)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (DomainError, MeridianError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except TwoBridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    console_main()
