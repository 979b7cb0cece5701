"""Command-line entry point: ``krpaths <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error
(including malformed literals).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bbs, crystal, polynomials, statistics, tableaux, verify
from .crystal import TensorPath
from .poly import QPoly, QTPoly


class UsageError(Exception):
    """Flags are individually valid but their combination is not."""


# -- literal parsers (raise ArgumentTypeError so argparse exits with status 2) ----------

def _ints(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError:
        bad = next(tok for tok in text.split(",") if not tok.strip().lstrip("-").isdigit())
        raise argparse.ArgumentTypeError(f"malformed integer list, offending token {bad!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty integer list")
    return vals


def _partition(text: str) -> tuple[int, ...]:
    vals = _ints(text)
    if not tableaux.is_partition(vals) or min(vals) <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a partition")
    return vals


def _composition(text: str) -> tuple[int, ...]:
    vals = _ints(text)
    if min(vals) < 0:
        raise argparse.ArgumentTypeError(f"{text!r} has a negative part")
    return vals


def _tableau(text: str) -> tableaux.Tableau:
    try:
        t = tableaux.parse_tableau(text)
    except tableaux.TableauError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not crystal.is_rectangular(t) or not tableaux.is_semistandard(t):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rectangular semistandard tableau")
    return t


def _path(text: str) -> TensorPath:
    try:
        return TensorPath.parse(text)
    except (tableaux.TableauError, crystal.CrystalError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"malformed path {text!r}: {exc}")


def _rects(text: str) -> tuple[crystal.Rect, ...]:
    try:
        return crystal.parse_rects(text)
    except tableaux.TableauError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _range(text: str) -> tuple[int, ...]:
    """'3' -> (3,); '1..10' -> (1, ..., 10); '1,4,5' -> (1, 4, 5)."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise argparse.ArgumentTypeError(f"malformed range {text!r}")
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return tuple(range(lo, hi + 1))
    return _ints(text)


def _matrix(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        m = json.loads(text)
        m = tuple(tuple(int(x) for x in row) for row in m)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"malformed matrix literal {text!r}")
    if not tableaux.is_transportation_matrix(m):
        raise argparse.ArgumentTypeError(f"{text!r} is not a nonnegative integer matrix")
    return m


# -- output ------------------------------------------------------------------------------

def _poly_out(p):
    return p.to_json() if isinstance(p, (QPoly, QTPoly)) else p


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _tab(t) -> str:
    return tableaux.format_tableau(t)


# -- subcommands -----------------------------------------------------------------------------

def cmd_rmatrix(args) -> None:
    res = crystal.combinatorial_R(args.left, args.right)
    hbar = crystal.energy_Hbar(args.left, args.right)
    payload = {"left": [list(r) for r in res.left], "right": [list(r) for r in res.right],
               "H": res.energy, "Hbar": hbar}
    text = f"{_tab(args.left)} (x) {_tab(args.right)} -> {_tab(res.left)} (x) {_tab(res.right)}\nH={res.energy} Hbar={hbar}"
    if args.degrees is not None:
        d1, d2 = args.degrees
        x, y = crystal.affine_R(crystal.AffineElement(args.left, d1), crystal.AffineElement(args.right, d2))
        payload["degrees"] = [x.d, y.d]
        text += f"\ndegrees {x.d},{y.d}"
    _emit(args, payload, text)


def cmd_stat(args) -> None:
    name = args.name
    p = args.path
    if name in ("tau_mu", "c_mu", "inv_mu", "maj_mu", "block_maj") and args.mu is None:
        raise UsageError(f"statistic {name} needs --mu")
    if name == "tau_rs":
        if args.r is None or args.s is None:
            raise UsageError("statistic tau_rs needs --r and --s")
        value = statistics.tau_rs(p.factors, args.r, args.s)
    elif name == "block_maj":
        value = statistics.block_maj(p, args.mu)
    else:
        value = statistics.STATISTICS[name](p, args.mu)
    payload = {"name": name, "path": str(p), "value": value}
    if args.mu is not None:
        payload["mu"] = list(args.mu)
    _emit(args, payload, str(value))


def cmd_bbs(args) -> None:
    rows = bbs.evolution_table(args.path, args.steps, args.alg)
    payload = {"path": str(args.path), "steps": args.steps, "alg": args.alg, "rows": [list(r) for r in rows]}
    _emit(args, payload, bbs.format_table(rows))


def cmd_kostka(args) -> None:
    lam = args.lam
    if args.parabolic is not None:
        val = polynomials.parabolic_kostka(lam, args.parabolic)
        kind = "parabolic"
    else:
        if args.mu is None:
            raise UsageError("--mu is required unless --parabolic is given")
        if args.foulkes:
            val, kind = polynomials.kostka_foulkes(lam, args.mu), "foulkes"
        elif args.macdonald:
            val, kind = polynomials.kostka_macdonald(lam, args.mu), "macdonald"
        else:
            val, kind = polynomials.kostka_number(lam, args.mu), "number"
    payload = {"kind": kind, "lambda": list(lam), "value": _poly_out(val)}
    if args.mu is not None:
        payload["mu"] = list(args.mu)
    if args.parabolic is not None:
        payload["rects"] = [list(r) for r in args.parabolic]
    _emit(args, payload, str(val))


def cmd_macdonald(args) -> None:
    if args.monomial:
        coeffs = polynomials.modified_macdonald(args.mu, args.nvars)
        items = sorted(coeffs.items(), reverse=True)
        label = "m"
    else:
        items = list(polynomials.macdonald_schur_expansion(args.mu).items())
        label = "s"
    payload = {"mu": list(args.mu), "basis": "monomial" if args.monomial else "schur",
               "coefficients": [{"index": list(k), "value": v.to_json()} for k, v in items if v]}
    text = "\n".join(f"{label}[{','.join(map(str, k))}]: {v}" for k, v in items if v)
    _emit(args, payload, text)


_GF_STATS = ("maj", "ebar", "tau_rs", "tau", "tau_mu", "block_maj", "charge", "hhl")


def cmd_gf(args) -> None:
    stat = args.stat
    if stat in ("tau_mu", "block_maj", "hhl") and args.mu is None:
        raise UsageError(f"generating function of {stat} needs --mu")
    if stat == "tau_rs" and (args.r is None or args.s is None):
        raise UsageError("generating function of tau_rs needs --r and --s")
    weight = args.weight
    if args.rects is None:
        if stat in ("ebar", "tau_rs", "maj"):
            rects = ((1, 1),) * sum(weight)
        else:
            rects = None
    else:
        rects = args.rects
        if stat in ("tau", "tau_mu", "block_maj", "charge", "hhl") and any(r != (1, 1) for r in rects):
            raise ValueError(f"{stat} is defined on single-box paths only")
    if stat == "hhl":
        gf = polynomials.hhl_monomial_gf(args.mu, weight, highest=args.highest)
    else:
        if rects is None or all(r == (1, 1) for r in rects):
            paths = [tuple(((x,),) for x in w) for w in polynomials.multiset_words(weight)]
        else:
            paths = list(crystal.paths_of_weight(rects, weight))
        if args.highest:
            paths = [p for p in paths if crystal.is_highest(p, len(weight) - 1)]
        fn = {
            "maj": statistics.maj,
            "ebar": statistics.ebar,
            "tau_rs": lambda p: statistics.tau_rs(p, args.r, args.s),
            "tau": statistics.tau,
            "tau_mu": lambda p: statistics.tau_mu(p, args.mu),
            "block_maj": lambda p: statistics.block_maj(p, args.mu),
            "charge": statistics.path_charge,
        }[stat]
        gf = QPoly.from_exponents(fn(p) for p in paths)
    payload = {"stat": stat, "weight": list(weight), "value": gf.to_json()}
    _emit(args, payload, str(gf))


def cmd_rsk(args) -> None:
    if args.word is not None:
        t = tableaux.ssyt_from_word(args.word)
        payload = {"word": list(args.word), "P": [list(r) for r in t]}
        _emit(args, payload, _tab(t))
        return
    if args.matrix is None:
        raise UsageError("give --matrix or --word")
    p, q = tableaux.rsk(args.matrix)
    pp = tableaux.plane_partition_from_pair(p, q)
    payload = {"matrix": [list(r) for r in args.matrix], "P": [list(r) for r in p], "Q": [list(r) for r in q],
               "plane_partition": [list(r) for r in pp]}
    _emit(args, payload, f"P={_tab(p)}\nQ={_tab(q)}\nplane partition={_tab(pp)}")


def cmd_verify(args) -> None:
    jobs = args.jobs
    which = args.identity
    if which == "thm-main":
        reports = verify.sweep_theorem_main(args.max_size, jobs)
    elif which == "conj-main":
        reports = verify.sweep_conjecture_main(args.max_size, jobs)
    elif which == "hhl-kostka":
        reports = verify.sweep_hhl_kostka(args.max_size, jobs)
    elif which == "regularization":
        if args.weight is not None:
            reports = [verify.check_regularization(args.weight)]
        else:
            reports = verify.sweep_regularization(args.max_size, jobs)
    elif which == "conj-ebar":
        if args.rects is not None and args.weight is not None:
            reports = [verify.check_conj_ebar(args.rects, args.weight)]
        else:
            reports = verify.sweep_conj_ebar(args.max_size, jobs)
    elif which == "conj-tau":
        if args.rects is None or args.weight is None:
            raise UsageError("conj-tau needs --rects and --weight")
        rs = args.r or (1,)
        ss = args.s or (max(s for _, s in args.rects),)
        reports = verify.sweep_conj_tau(args.rects, args.weight, rs, ss, jobs)
    elif which == "e-tau":
        if args.rects is None:
            raise UsageError("e-tau needs --rects")
        n = args.alphabet
        r = args.r[0] if args.r else n
        s = args.s[0] if args.s else max(s for _, s in args.rects)
        reports = [verify.check_e_tau(crystal.all_paths(args.rects, n), r, s)]
    elif which == "genmain":
        reports = verify.sweep_genmain(args.max_size, jobs)
    else:
        raise ValueError(f"unknown identity {which!r}")
    payload = {"reports": [rep.to_json() for rep in reports],
               "passed": sum(rep.passed for rep in reports), "total": len(reports)}
    _emit(args, payload, verify.format_summary(reports))


# -- parser -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="krpaths", description="Crystal paths, energy statistics and box-ball systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rmatrix", parents=[common], help="apply the combinatorial R to a pair of rectangles")
    p.add_argument("--left", type=_tableau, required=True)
    p.add_argument("--right", type=_tableau, required=True)
    p.add_argument("--degrees", type=_ints, help="affine degrees d,d' of the two factors")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("stat", parents=[common], help="evaluate a path statistic")
    p.add_argument("--name", required=True, choices=sorted(set(statistics.STATISTICS) | {"tau_rs", "block_maj"}))
    p.add_argument("--path", type=_path, required=True)
    p.add_argument("--mu", type=_composition)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("bbs", help="box-ball system")
    bsub = p.add_subparsers(dest="bbs_command", required=True)
    e = bsub.add_parser("evolve", parents=[common], help="print the time evolution table")
    e.add_argument("--path", type=_path, required=True)
    e.add_argument("--steps", type=int, default=7)
    e.add_argument("--alg", choices=("carrier", "ts"), default="carrier")
    e.set_defaults(func=cmd_bbs)

    p = sub.add_parser("kostka", parents=[common], help="Kostka numbers and Kostka-type polynomials")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_composition)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--foulkes", action="store_true")
    g.add_argument("--macdonald", action="store_true")
    g.add_argument("--parabolic", type=_rects, metavar="RECTS")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("macdonald", parents=[common], help="modified Macdonald polynomial coefficients")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--monomial", action="store_true", help="monomial coefficients instead of Schur")
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("gf", parents=[common], help="generating function of a statistic over paths of a weight")
    p.add_argument("--stat", choices=_GF_STATS, required=True)
    p.add_argument("--weight", type=_composition, required=True)
    p.add_argument("--rects", type=_rects)
    p.add_argument("--mu", type=_partition)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--highest", action="store_true", help="restrict to highest paths")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("identity", choices=("thm-main", "conj-main", "hhl-kostka", "regularization",
                                        "conj-ebar", "conj-tau", "e-tau", "genmain"))
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--rects", type=_rects)
    p.add_argument("--weight", type=_composition)
    p.add_argument("--r", type=_range)
    p.add_argument("--s", type=_range)
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default from KRPATHS_JOBS)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rsk", parents=[common], help="RSK of a matrix or insertion of a word")
    p.add_argument("--matrix", type=_matrix)
    p.add_argument("--word", type=lambda s: _path(s).word())
    p.set_defaults(func=cmd_rsk)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
