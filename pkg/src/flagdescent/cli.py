"""Command-line front end.

Exit codes: 0 on success, 2 for unparsable input, 3 when a mathematical
precondition fails (rank mismatch, unstable Pi', and so on).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .descent import (classify_line_bundles, cocycle_beta, conjugation_condition, eval_char,
                      irr_partition, verdict, wbar_w_coordinates)
from .errors import DescentError, ParseError, PiPrimeNotStable
from .forms import form_tag, parse_form
from .rootdata import format_root, parse_character
from .satake import build_satake, dynkin_scheme, parabolic_types_over_base, verify_w
from .weilres import parse_res_tag, res_dynkin, res_from_json, res_line_bundles

EXIT_PARSE = 2
EXIT_MATH = 3


def _parse_indices(text, size):
    if text is None:
        return None
    s = text.strip()
    if not s:
        return ()
    out = []
    pos = 0
    for part in s.split(","):
        try:
            k = int(part)
        except ValueError:
            raise ParseError(f"bad --pi value {text!r} at position {pos}: expected comma-separated indices") from None
        if not 0 <= k < size:
            raise PiPrimeNotStable(f"index {k} is outside the simple system (size {size})")
        out.append(k)
        pos += len(part) + 1
    return tuple(sorted(set(out)))


def _roots(roots):
    return [format_root(a) for a in roots]


def _form_header(form, sd):
    return {
        "form": form.label(),
        "tag": form_tag(form),
        "simple_roots": _roots(sd.pi),
        "galois_on_chars": sd.galois_on_chars.describe(),
        "w_on_chars": sd.w_on_chars.describe(),
        "wbar_w": [str(x) for x in wbar_w_coordinates(form)],
    }


def _select_types(sd, pi_text):
    idx = _parse_indices(pi_text, len(sd.pi))
    if idx is None:
        return parabolic_types_over_base(sd)
    return [tuple(sd.pi[k] for k in idx)]


def cmd_classify(args):
    form = parse_form(args.form)
    sd = build_satake(form)
    dyn = dynkin_scheme(sd)
    types = _select_types(sd, args.pi)
    bundles = []
    for pp in types:
        c = classify_line_bundles(form, pp)
        entry = c.to_json(args.max_coord)
        entry["pi_prime"] = _roots(pp)
        entry["pi_prime_indices"] = [sd.pi.index(a) for a in pp]
        bundles.append(entry)
    report = _form_header(form, sd)
    report.update({
        "dynkin": {"description": dyn.describe(), "counts": list(dyn.counts()),
                   "orbits": [_roots(o) for o in dyn.orbits]},
        "parabolic_type_count": len(parabolic_types_over_base(sd)),
        "line_bundles": bundles,
    })
    return report


def _text_classify(r):
    lines = [f"form: {r['form']}  ({r['tag']})",
             f"simple roots: {', '.join(r['simple_roots']) or '(none)'}",
             f"galois on characters: {r['galois_on_chars']}",
             f"w on characters: {r['w_on_chars']}",
             f"w-bar w: diag({', '.join(r['wbar_w'])})",
             f"Dynkin scheme: {r['dynkin']['description']}",
             f"parabolic types over the base: {r['parabolic_type_count']}"]
    for b in r["line_bundles"]:
        lines.append(f"  Pi' = {{{', '.join(b['pi_prime'])}}}")
        lines.append(f"    lattice basis: {b['lattice_basis']}")
        par = b["parity_constraint"]
        lines.append(f"    parity: {'none' if par is None else str(par) + ' . lambda even'}")
        lines.append(f"    examples: {b['examples']}")
    return "\n".join(lines)


def _lambda(args, form):
    if args.lam is None:
        raise ParseError("--lambda is required")
    return parse_character(args.lam, form.rank)


def cmd_check(args):
    form = parse_form(args.form)
    sd = build_satake(form)
    lam = _lambda(args, form)
    idx = _parse_indices(args.pi, len(sd.pi)) or ()
    pp = tuple(sd.pi[k] for k in idx)
    v = verdict(form, lam, pp)
    report = _form_header(form, sd)
    report.update({"lambda": list(lam), "pi_prime": _roots(pp), "verdict": v.to_json()})
    return report


def _text_check(r):
    v = r["verdict"]
    return "\n".join([
        f"form: {r['form']}",
        f"lambda: {r['lambda']}   Pi' = {{{', '.join(r['pi_prime'])}}}",
        f"w-bar w: diag({', '.join(r['wbar_w'])})",
        f"extends to parabolic: {v['extends_to_parabolic']}",
        f"conjugation (lambda-bar = w lambda): {v['conjugation_ok']}",
        f"lambda(w-bar w) = {v['wbar_w_value']}",
        f"cocycle trivial: {v['cocycle_trivial']}",
        f"admits descent: {v['admits_descent']}",
    ])


def cmd_verify_w(args):
    return verify_w(parse_form(args.form))


def _text_verify(r):
    lines = [f"form: {r['form']}"]
    for c in r["checks"]:
        lines.append(f"  [{'ok' if c['pass'] else 'FAIL'}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
    if r["w_bar_w"] is not None:
        lines.append(f"w-bar w: diag({', '.join(r['w_bar_w'])})")
    lines.append("all checks passed" if r["passed"] else "some checks failed")
    return "\n".join(lines)


def cmd_cocycle(args):
    form = parse_form(args.form)
    lam = _lambda(args, form)
    beta = cocycle_beta(form, lam)
    return {"form": form.label(), "lambda": list(lam), "beta": beta.to_json(),
            "value": str(beta(1, 1)), "cocycle_identity": beta.is_cocycle()}


def _text_cocycle(r):
    return "\n".join([f"form: {r['form']}", f"lambda: {r['lambda']}",
                      f"beta(sigma, sigma) = lambda(w-bar w) = {r['value']}",
                      f"cocycle identity on all triples: {r['cocycle_identity']}"])


def cmd_irr(args):
    form = parse_form(args.form)
    lam = _lambda(args, form)
    conj = conjugation_condition(form, lam)
    value = eval_char(lam, wbar_w_coordinates(form))
    return {"form": form.label(), "lambda": list(lam), "class": irr_partition(form, lam),
            "conjugation_ok": conj, "wbar_w_value": str(value)}


def _text_irr(r):
    return f"form: {r['form']}\nlowest weight {r['lambda']}: {r['class']} (lambda(w-bar w) = {r['wbar_w_value']})"


def cmd_res_classify(args):
    if args.spec:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.spec}: {exc.strerror}") from None
        rs = res_from_json(text)
    elif args.form:
        rs = parse_res_tag(args.form)
    else:
        raise ParseError("give a res:<gl|so|sp>:<size> tag or --spec FILE")
    dyn = res_dynkin(rs)
    idx = _parse_indices(args.pi, len(rs.pi))
    if idx is None:
        chosen = [c for k in range(len(rs.pi) + 1) for c in itertools.combinations(rs.pi, k)]
    else:
        chosen = [tuple(rs.pi[k] for k in idx)]
    bundles = []
    for pp in chosen:
        entry = res_line_bundles(rs, pp, args.max_coord).to_json()
        entry["pi_prime"] = _roots(pp)
        bundles.append(entry)
    return {
        "base": str(rs.datum.target),
        "group_order": rs.order,
        "simple_roots": _roots(rs.pi),
        "dynkin": {"description": dyn.describe(), "components_over_extension": dyn.counts()[1],
                   "orbit_sizes": [len(o) for o in dyn.orbits]},
        "parabolic_type_count": 2 ** len(rs.pi),
        "cocycle_always_trivial": True,
        "line_bundles": bundles,
    }


def _text_res(r):
    lines = [f"restriction of {r['base']} along a Galois extension of degree {r['group_order']}",
             f"simple roots of the base: {', '.join(r['simple_roots']) or '(none)'}",
             f"Dynkin scheme: {r['dynkin']['description']}",
             f"parabolic types over the base: {r['parabolic_type_count']}"]
    for b in r["line_bundles"]:
        lines.append(f"  Pi' = {{{', '.join(b['pi_prime'])}}}: lambda_e in span {b['lattice_basis']}")
    return "\n".join(lines)


COMMANDS = {
    "classify": (cmd_classify, _text_classify),
    "check": (cmd_check, _text_check),
    "verify-w": (cmd_verify_w, _text_verify),
    "cocycle": (cmd_cocycle, _text_cocycle),
    "irr": (cmd_irr, _text_irr),
    "res-classify": (cmd_res_classify, _text_res),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="flagdescent",
                                     description="Descent of line bundles on partial flag schemes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("form", nargs="?" if name == "res-classify" else None,
                       help="form spec such as u:2,1 or gq:+1 (res:gl:3 for res-classify)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--lambda", dest="lam", help="character as comma-separated integers")
        p.add_argument("--pi", help="indices into the simple system, comma-separated ('' for none)")
        p.add_argument("--max-coord", type=int, default=1, help="bound for example listings")
        if name == "res-classify":
            p.add_argument("--spec", help="JSON file describing Gamma, the base and w")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run, text = COMMANDS[args.command]
    try:
        if args.max_coord < 0:
            raise ParseError("--max-coord must be nonnegative")
        report = run(args)
    except ParseError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DescentError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_MATH
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
