"""Command line front end.  Entry point: bs-limits."""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from typing import Sequence

from .bs import BsParams, britton_reduce, gamma_image, is_trivial_bs
from .engine import RSTable, reduce_in_limit
from .errors import (
    BsLimitsError,
    InsufficientLevel,
    InsufficientPrecision,
    InternalInvariantViolation,
)
from .madic import MAdicResidue
from .marked import (
    GroupOracle,
    bs_oracle,
    build_separating_sequence,
    check_convergence,
    classify_equal,
    gamma_oracle,
    lamplighter_oracle,
    limit_oracle,
    make_congruence_witness,
    marked_distance,
    witness_gcd_mismatch,
)
from .quotients import lamplighter_image
from .tree import LimitTree
from .words import Word, parse as parse_word

DEFAULT_LENGTH = 6
DEFAULT_EXP_BOUND = 2


def _xi(args) -> MAdicResidue:
    return MAdicResidue.from_int(args.m, args.precision, args.target)


def _oracle_from_spec(spec: str) -> GroupOracle:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "bs":
            m, n = (int(x) for x in rest.split(","))
            return bs_oracle(m, n)
        if kind == "limit":
            m, c, k = (int(x) for x in rest.split(","))
            return limit_oracle(m, MAdicResidue.from_int(m, k, c))
        if kind == "gamma":
            m, n = (int(x) for x in rest.split(","))
            return gamma_oracle(m, n)
        if kind == "lamp":
            return lamplighter_oracle()
    except (ValueError, BsLimitsError) as exc:
        raise argparse.ArgumentTypeError(f"bad group spec {spec!r}: {exc}") from exc
    raise argparse.ArgumentTypeError(
        f"bad group spec {spec!r}; use bs:M,N | limit:M,C,K | gamma:M,N | lamp"
    )


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _residue_spec(text: str) -> tuple[int, int]:
    try:
        c, k = (int(x) for x in text.split(","))
        return c, k
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad residue spec {text!r}; use C,K") from exc


# -- handlers ---------------------------------------------------------


def _cmd_reduce(args, cfg):
    word = parse_word(args.word)
    reduced = britton_reduce(word, BsParams(args.m, args.n))
    payload = {
        "command": "reduce",
        "inputs": {"word": str(word), "m": args.m, "n": args.n},
        "value": str(reduced),
    }
    return str(reduced), payload


def _cmd_trivial(args, cfg):
    word = parse_word(args.word)
    verdict = "trivial" if is_trivial_bs(word, BsParams(args.m, args.n)) else "nontrivial"
    payload = {
        "command": "trivial",
        "inputs": {"word": str(word), "m": args.m, "n": args.n},
        "verdict": verdict,
    }
    return verdict, payload


def _limit_inputs(args, word):
    return {"word": str(word), "m": args.m, "target": args.target, "precision": args.precision}


def _cmd_limit_trivial(args, cfg):
    word = parse_word(args.word)
    if word.sigma_a != 0:
        verdict, level, bound = "nontrivial", 0, 0
    else:
        reduced = reduce_in_limit(word, args.m, _xi(args))
        verdict = "trivial" if reduced.is_identity else "nontrivial"
        level, bound = reduced.ctx.level, reduced.n0
    payload = {
        "command": "limit-trivial",
        "inputs": _limit_inputs(args, word),
        "verdict": verdict,
        "precision_used": level,
        "validity_bound": bound,
    }
    return f"{verdict} (level {level}, valid for class members beyond {bound})", payload


def _cmd_stab(args, cfg):
    word = parse_word(args.word)
    if word.sigma_a != 0:
        coeffs, level, bound = None, 0, 0
    else:
        reduced = reduce_in_limit(word, args.m, _xi(args))
        coeffs = None if reduced.a_length else reduced.lead.coeffs
        level, bound = reduced.ctx.level, reduced.n0
    payload = {
        "command": "stab",
        "inputs": _limit_inputs(args, word),
        "value": list(coeffs) if coeffs is not None else None,
        "precision_used": level,
        "validity_bound": bound,
    }
    text = "none" if coeffs is None else f"coeffs = {coeffs}"
    return text, payload


def _cmd_lamp(args, cfg):
    word = parse_word(args.word)
    el = lamplighter_image(word)
    payload = {
        "command": "lamp",
        "inputs": {"word": str(word)},
        "value": {"sigma": el.sigma, "poly": str(el.poly)},
        "verdict": "trivial" if el.is_identity else "nontrivial",
    }
    return str(el), payload


def _cmd_gamma(args, cfg):
    word = parse_word(args.word)
    fmap = gamma_image(word, BsParams(args.m, args.n))
    trivial = fmap.scale == 1 and fmap.shift == 0
    payload = {
        "command": "gamma",
        "inputs": {"word": str(word), "m": args.m, "n": args.n},
        "value": {"scale": str(fmap.scale), "shift": str(fmap.shift)},
        "verdict": "trivial" if trivial else "nontrivial",
    }
    return str(fmap), payload


def _cmd_distance(args, cfg):
    length = args.length if args.length is not None else cfg.get("length", DEFAULT_LENGTH)
    result = marked_distance(args.g1, args.g2, length)
    payload = {
        "command": "distance",
        "inputs": {"g1": args.g1.name, "g2": args.g2.name, "length": length},
        "value": {
            "bound": str(result.value),
            "kind": "lower" if result.is_lower_bound else "upper",
            "witness": str(result.witness) if result.witness is not None else None,
        },
    }
    if result.witness is not None:
        return f"{result} (witness: {result.witness})", payload
    return f"{result} (no witness up to length {length})", payload


def _cmd_classify(args, cfg):
    c1, k1 = args.xi1
    c2, k2 = args.xi2
    verdict = classify_equal(
        args.m,
        MAdicResidue.from_int(args.m, k1, c1),
        MAdicResidue.from_int(args.m, k2, c2),
    )
    payload = {
        "command": "classify",
        "inputs": {"m": args.m, "xi1": list(args.xi1), "xi2": list(args.xi2)},
        "verdict": verdict.value,
    }
    return verdict.value, payload


def _cmd_converge(args, cfg):
    report = check_convergence(args.m, args.values, args.precision)
    payload = {
        "command": "converge",
        "inputs": {"m": args.m, "values": args.values, "precision": args.precision},
        "verdict": "consistent" if report.ok else "diverges",
        "value": {
            "gcd": report.gcd,
            "valuations": list(report.valuations),
            "witness": list(report.witness) if report.witness else None,
            "reason": report.reason,
        },
    }
    return str(report), payload


def _cmd_tree_path(args, cfg):
    word = parse_word(args.word)
    tree = LimitTree(args.m, _xi(args))
    vertices = [str(v.word) for v in tree.path_of(word)]
    payload = {
        "command": "tree path",
        "inputs": _limit_inputs(args, word),
        "value": vertices,
    }
    return "\n".join(f"[{v}]" for v in vertices), payload


def _cmd_tree_out(args, cfg):
    word = parse_word(args.word)
    tree = LimitTree(args.m, _xi(args))
    edges = [str(e.word) for e in tree.neighbors_out(tree.vertex(word))]
    payload = {
        "command": "tree out",
        "inputs": _limit_inputs(args, word),
        "value": edges,
    }
    return "\n".join(f"[{e}]" for e in edges), payload


def _cmd_tree_in(args, cfg):
    word = parse_word(args.word)
    tree = LimitTree(args.m, _xi(args))
    edges = [str(e.word) for e in tree.neighbors_in(tree.vertex(word), args.bound)]
    payload = {
        "command": "tree in",
        "inputs": {**_limit_inputs(args, word), "bound": args.bound},
        "value": edges,
    }
    return "\n".join(f"[{e}]" for e in edges), payload


def _cmd_relator_check(args, cfg):
    word = parse_word(args.word)
    tree = LimitTree(args.m, _xi(args))
    verdict = "relator-seed" if tree.is_relator(word) else "not-a-relator-seed"
    payload = {
        "command": "relator check",
        "inputs": _limit_inputs(args, word),
        "verdict": verdict,
    }
    return verdict, payload


def _cmd_relator_enum(args, cfg):
    exp_bound = args.exp if args.exp is not None else cfg.get("exp_bound", DEFAULT_EXP_BOUND)
    tree = LimitTree(args.m, _xi(args))
    relators = tree.enumerate_relators(args.kmax, exp_bound)
    found = [str(w) for w in islice(relators, args.max_count)]
    payload = {
        "command": "relator enum",
        "inputs": {
            "m": args.m,
            "target": args.target,
            "precision": args.precision,
            "kmax": args.kmax,
            "exp_bound": exp_bound,
        },
        "value": found,
    }
    return "\n".join(found) if found else "(none)", payload


def _cmd_witness_neq(args, cfg):
    word = witness_gcd_mismatch(args.m1, args.d1, args.k1, args.m2, args.d2, args.k2)
    payload = {
        "command": "witness neq",
        "inputs": {
            "m1": args.m1, "d1": args.d1, "k1": args.k1,
            "m2": args.m2, "d2": args.d2, "k2": args.k2,
        },
        "value": str(word),
    }
    return str(word), payload


def _cmd_witness_congruence(args, cfg):
    word = make_congruence_witness(args.m, args.c, args.t)
    payload = {
        "command": "witness congruence",
        "inputs": {"m": args.m, "c": args.c, "t": args.t},
        "value": str(word),
    }
    return str(word), payload


def _cmd_witness_seq(args, cfg):
    values = build_separating_sequence(args.m, _xi(args), args.count)
    payload = {
        "command": "witness seq",
        "inputs": {
            "m": args.m,
            "target": args.target,
            "precision": args.precision,
            "count": args.count,
        },
        "value": values,
    }
    return ", ".join(str(v) for v in values), payload


def _poly_str(coeffs) -> str:
    terms = []
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            x = "X" if j == 1 else f"X^{j}"
            terms.append(x if c == 1 else f"{c}*{x}")
    return " + ".join(terms) if terms else "0"


def _cmd_rs_table(args, cfg):
    table = RSTable.compute(args.m, args.level, args.class_rep)
    lines = [
        f"m1 = {table.m1}  rep = {table.rep}  level = {table.level}",
        f"r = {table.r}",
        f"s = {table.s}",
    ]
    lines += [f"P{j} = {_poly_str(p)}  (in X = n/m1)" for j, p in enumerate(table.polys)]
    payload = {
        "command": "rs-table",
        "inputs": {"m": args.m, "class": args.class_rep, "level": args.level},
        "value": {
            "r": list(table.r),
            "s": list(table.s),
            "polys": [[str(c) for c in p] for p in table.polys],
        },
    }
    return "\n".join(lines), payload


# -- parser -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bs-limits",
        description="Word problems, quotients, and tree actions for "
        "Baumslag-Solitar groups and their m-adic limits.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    parser.add_argument("--config", metavar="FILE", help="key=value defaults (length, exp_bound)")
    sub = parser.add_subparsers(dest="command", required=True)

    bs_parent = argparse.ArgumentParser(add_help=False)
    bs_parent.add_argument("-m", type=int, required=True, help="first exponent of BS(m, n)")
    bs_parent.add_argument("-n", type=int, required=True, help="second exponent of BS(m, n)")

    limit_parent = argparse.ArgumentParser(add_help=False)
    limit_parent.add_argument("-m", type=int, required=True, help="modulus M")
    limit_parent.add_argument("--target", type=int, required=True, help="residue of the target")
    limit_parent.add_argument("--precision", type=int, required=True, help="stored digits")

    p = sub.add_parser("reduce", parents=[bs_parent], help="Britton-reduce a word in BS(m, n)")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("trivial", parents=[bs_parent], help="word problem in BS(m, n)")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_trivial)

    p = sub.add_parser("limit-trivial", parents=[limit_parent], help="word problem in the limit")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_limit_trivial)

    p = sub.add_parser("stab", parents=[limit_parent], help="symbolic b-power a word equals")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_stab)

    p = sub.add_parser("lamp", help="image in the lamplighter group Z wr Z")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_lamp)

    p = sub.add_parser("gamma", parents=[bs_parent], help="affine image in Gamma(m, n)")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser("distance", help="marked-group distance bound between two groups")
    p.add_argument("--g1", type=_oracle_from_spec, required=True, help="bs:M,N | limit:M,C,K | gamma:M,N | lamp")
    p.add_argument("--g2", type=_oracle_from_spec, required=True)
    p.add_argument("--length", type=int, help="search length (default from config or 6)")
    p.set_defaults(handler=_cmd_distance)

    p = sub.add_parser("classify", help="compare two limit targets over one modulus")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--xi1", type=_residue_spec, required=True, metavar="C,K")
    p.add_argument("--xi2", type=_residue_spec, required=True, metavar="C,K")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("converge", help="divergence screen for a sequence of exponents")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--values", type=_int_list, required=True, metavar="Y1,Y2,...")
    p.add_argument("--precision", type=int, required=True)
    p.set_defaults(handler=_cmd_converge)

    p = sub.add_parser("tree", help="vertical tree of a limit group")
    tree_sub = p.add_subparsers(dest="tree_command", required=True)
    q = tree_sub.add_parser("path", parents=[limit_parent], help="vertex path a word spells")
    q.add_argument("word")
    q.set_defaults(handler=_cmd_tree_path)
    q = tree_sub.add_parser("out", parents=[limit_parent], help="edges leaving a vertex")
    q.add_argument("word")
    q.set_defaults(handler=_cmd_tree_out)
    q = tree_sub.add_parser("in", parents=[limit_parent], help="edges arriving at a vertex")
    q.add_argument("word")
    q.add_argument("--bound", type=int, default=2, help="list edges u b^j a for |j| <= bound")
    q.set_defaults(handler=_cmd_tree_in)

    p = sub.add_parser("relator", help="mountain-loop relators of a limit group")
    rel_sub = p.add_subparsers(dest="relator_command", required=True)
    q = rel_sub.add_parser("check", parents=[limit_parent], help="test the relator-seed shape")
    q.add_argument("word")
    q.set_defaults(handler=_cmd_relator_check)
    q = rel_sub.add_parser("enum", parents=[limit_parent], help="enumerate relators over a grid")
    q.add_argument("--kmax", type=int, required=True, help="peak count bound")
    q.add_argument("--exp", type=int, help="b-exponent bound (default from config or 2)")
    q.add_argument("--max-count", type=int, help="stop after this many relators")
    q.set_defaults(handler=_cmd_relator_enum)

    p = sub.add_parser("witness", help="explicit separating words and sequences")
    wit_sub = p.add_subparsers(dest="witness_command", required=True)
    q = wit_sub.add_parser("neq", help="word separating families with different gcds")
    for flag in ("--m1", "--d1", "--k1", "--m2", "--d2", "--k2"):
        q.add_argument(flag, type=int, required=True)
    q.set_defaults(handler=_cmd_witness_neq)
    q = wit_sub.add_parser("congruence", help="word trivial exactly on one congruence class")
    q.add_argument("-m", type=int, required=True)
    q.add_argument("-c", type=int, required=True)
    q.add_argument("-t", type=int, required=True)
    q.set_defaults(handler=_cmd_witness_congruence)
    q = wit_sub.add_parser("seq", parents=[limit_parent], help="separated exponents marching to xi")
    q.add_argument("--count", type=int, required=True)
    q.set_defaults(handler=_cmd_witness_seq)

    p = sub.add_parser("rs-table", help="Euclidean remainder table for a class representative")
    p.add_argument("-m", type=int, required=True, help="the reduced modulus m1 itself")
    p.add_argument("--class", dest="class_rep", type=int, required=True, help="representative")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(handler=_cmd_rs_table)

    return parser


def _load_config(path: str) -> dict[str, int]:
    known = {"length", "exp_bound", "workers"}
    out: dict[str, int] = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if not sep or key not in known:
                    print(f"config {path}:{lineno}: unusable entry {line!r}", file=sys.stderr)
                    raise SystemExit(2)
                try:
                    out[key] = int(value)
                except ValueError:
                    print(f"config {path}:{lineno}: {key} needs an integer", file=sys.stderr)
                    raise SystemExit(2)
    except OSError as exc:
        print(f"config {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    if out.pop("workers", None) is not None:
        print("config: workers is ignored; everything runs in one process", file=sys.stderr)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _load_config(args.config) if args.config else {}
    try:
        text, payload = args.handler(args, cfg)
    except (InsufficientPrecision, InsufficientLevel) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except BsLimitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(payload) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
