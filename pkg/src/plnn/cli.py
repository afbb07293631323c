"""Command-line front end.

Exit codes: 0 success / equivalent, 1 not equivalent, 2 input error,
3 piece cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .arith import RatParseError, format_rat, parse_rat
from .envelope import corners_1d, minimize
from .equivalence import equivalent, gen_permuted, gen_scaled
from .errors import PieceCapExceeded, PlnnError
from .network import Network, decompose, default_piece_cap, validate
from .pl import PLFunc
from .sampling import rand_positive_scales
from .semialg import (
    coverage_formula,
    emit_smtlib,
    equivalence_formula,
    parse_poly,
    redundancy_formula,
    stratum_formula,
)
from .semialg.poly import PolyParseError
from .semialg.symbolic import SymbolicAffine

EXIT_OK, EXIT_INEQUIVALENT, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class Config:
    piece_cap: int
    prune: bool = True
    seed: int = 0
    output: str | None = None

    def __post_init__(self):
        if self.piece_cap < 1:
            raise InputError("--piece-cap must be at least 1")


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _load_network(path: str) -> Network:
    try:
        return Network.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PlnnError):
            raise
        raise InputError(f"{path}: malformed network ({exc})") from None


def _load_plfunc(path: str) -> PLFunc:
    try:
        return PLFunc.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PlnnError):
            raise
        raise InputError(f"{path}: malformed piecewise-linear function ({exc})") from None


def _load_symbolic(path: str) -> tuple[list[SymbolicAffine], list[str] | None]:
    """Pieces whose coefficients may be polynomials in named symbols."""
    obj = _read_json(path)
    try:
        pieces = [
            SymbolicAffine(tuple(parse_poly(c) for c in p["coeffs"]), parse_poly(p.get("constant", "0")))
            for p in obj["pieces"]
        ]
    except (KeyError, TypeError, PolyParseError, RatParseError) as exc:
        raise InputError(f"{path}: malformed piece list ({exc})") from None
    return pieces, obj.get("vars")


def _csv(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [s.strip() for s in text.split(",") if s.strip()]


def _emit(text: str, cfg: Config) -> None:
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_expand(args, cfg: Config) -> int:
    net = _load_network(args.network)
    validate(net)
    pair = decompose(net, prune=cfg.prune, cap=cfg.piece_cap)
    _emit(_dump(pair.to_json()), cfg)
    return EXIT_OK


def cmd_minimize(args, cfg: Config) -> int:
    f = _load_plfunc(args.plfunc)
    _emit(_dump(minimize(f).to_json()), cfg)
    return EXIT_OK


def cmd_equiv(args, cfg: Config) -> int:
    n1, n2 = _load_network(args.net1), _load_network(args.net2)
    verdict = equivalent(n1, n2, cap=cfg.piece_cap)
    _emit(_dump(verdict.to_json()), cfg)
    return EXIT_OK if verdict.equivalent else EXIT_INEQUIVALENT


def cmd_corners(args, cfg: Config) -> int:
    f = _load_plfunc(args.plfunc)
    if f.dim != 1:
        raise InputError(f"corner enumeration needs a 1-dimensional function, got dim {f.dim}")
    _emit(_dump([format_rat(x) for x in corners_1d(f)]), cfg)
    return EXIT_OK


def cmd_emit(args, cfg: Config) -> int:
    xnames = _csv(args.vars)
    if args.kind == "equivalence":
        if args.arch is None and args.n0 is None:
            raise InputError("equivalence needs --arch and/or --n0")
        n0 = _load_network(args.n0) if args.n0 else None
        try:
            arch = [int(w) for w in _csv(args.arch)] if args.arch else list(n0.widths)
            arch2 = [int(w) for w in _csv(args.arch2)] if args.arch2 else None
        except ValueError:
            raise InputError("architectures are comma-separated layer widths, e.g. 2,3,1") from None
        formula = equivalence_formula(arch, arch2, n0=n0, cap=cfg.piece_cap, xnames=xnames)
        note = f"equivalence: architecture {','.join(map(str, arch))}"
    else:
        if args.pieces is None:
            raise InputError(f"{args.kind} needs a pieces file")
        pieces, file_vars = _load_symbolic(args.pieces)
        xnames = xnames or file_vars
        if args.kind == "coverage":
            formula = coverage_formula(pieces, xnames)
            note = "coverage"
        elif args.kind == "redundancy":
            if args.index is None:
                raise InputError("redundancy needs --index")
            formula = redundancy_formula(pieces, args.index, xnames)
            note = f"redundancy of piece {args.index}"
        else:
            if args.relevant is None:
                raise InputError("stratum needs --relevant")
            try:
                K = [int(k) for k in _csv(args.relevant)]
            except ValueError:
                raise InputError("--relevant takes comma-separated piece indices") from None
            formula = stratum_formula(pieces, K, xnames)
            note = f"stratum with relevant pieces {sorted(K)}"
    _emit(emit_smtlib(formula, comment=note), cfg)
    return EXIT_OK


def cmd_gen(args, cfg: Config) -> int:
    net = _load_network(args.network)
    validate(net)
    k = args.layer
    if not 1 <= k < net.depth:
        raise InputError(f"--layer must satisfy 1 <= k < {net.depth} (the last layer has no successor)")
    width = net.layers[k - 1].n_out
    rng = random.Random(cfg.seed)
    if args.transform == "permute":
        if args.perm is not None:
            try:
                perm = [int(p) for p in _csv(args.perm)]
            except ValueError:
                raise InputError("--perm takes comma-separated 0-based unit indices") from None
        else:
            perm = list(range(width))
            rng.shuffle(perm)
        out = gen_permuted(net, k, perm)
    else:
        if args.scales is not None:
            scales = [parse_rat(s) for s in _csv(args.scales)]
        else:
            scales = list(rand_positive_scales(rng, width))
        out = gen_scaled(net, k, scales)
    _emit(_dump(out.to_json()), cfg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--piece-cap", type=int, default=None,
                        help="largest envelope any step may build (default: $PLNN_PIECE_CAP or 10^6)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised fixture generation")
    common.add_argument("--output", "-o", default=None, help="write to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="plnn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="tropical decomposition of a network")
    p.add_argument("network")
    p.add_argument("--prune", action=argparse.BooleanOptionalAction, default=True,
                   help="minimise every component after each layer (default: on)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("minimize", parents=[common], help="minimal representation of an envelope")
    p.add_argument("plfunc")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("equiv", parents=[common], help="decide whether two networks are equivalent")
    p.add_argument("net1")
    p.add_argument("net2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("corners", parents=[common], help="corners of a 1-D envelope")
    p.add_argument("plfunc")
    p.set_defaults(func=cmd_corners)

    p = sub.add_parser("emit", parents=[common], help="emit an SMT-LIB membership formula")
    p.add_argument("kind", choices=["coverage", "redundancy", "stratum", "equivalence"])
    p.add_argument("pieces", nargs="?", help="piece list JSON (coverage/redundancy/stratum)")
    p.add_argument("--index", type=int, help="piece index for redundancy (0-based)")
    p.add_argument("--relevant", help="comma-separated relevant piece indices for stratum")
    p.add_argument("--arch", help="layer widths n1,m1,...,mL of the symbolic network")
    p.add_argument("--arch2", help="widths of the second symbolic network (default: same as --arch)")
    p.add_argument("--n0", help="concrete reference network JSON")
    p.add_argument("--vars", help="comma-separated names for the point variables")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("gen", parents=[common], help="generate an equivalent network")
    p.add_argument("transform", choices=["permute", "scale"])
    p.add_argument("network")
    p.add_argument("--layer", type=int, required=True, help="1-based hidden layer to transform")
    p.add_argument("--perm", help="comma-separated 0-based permutation (default: random from --seed)")
    p.add_argument("--scales", help="comma-separated positive rationals (default: random from --seed)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cap = args.piece_cap if args.piece_cap is not None else default_piece_cap()
        cfg = Config(cap, getattr(args, "prune", True), args.seed, args.output)
        return args.func(args, cfg)
    except PieceCapExceeded as exc:
        print(f"plnn: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, PlnnError, RatParseError, PolyParseError, ValueError, IndexError) as exc:
        print(f"plnn: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
