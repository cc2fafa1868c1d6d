"""Command-line surface.

Subcommands: decide, verify, simulate, classical, canon, export-graph, gen.
All output is deterministic for fixed inputs and seeds; certificates are
re-verified before any verdict is printed and verification failure is a hard
error, never a downgraded verdict.

Exit codes: 0 verdict PERFECT or CLASSICALLY_PERFECT (or verify pass),
1 NOT_PERFECT (or verify fail), 2 NO_PERFECT_MERP_INCONCLUSIVE, 64 usage,
65 unreadable or malformed input, 66 certificate/game mismatch, 70 internal
verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import merp, oracle
from .decider import check_obstruction, decide
from .games import Game, GameFormatError, generate_random_game, parse_game, serialize_json, serialize_text
from .graphs import PairGraph, decompose_components, hypergraph_dot, pair_graph_dot
from .merp import MerpStrategy
from .oracle import SearchStatus
from .refutation import PipelineError, refute
from .words import GroupWord, ClauseWord, canon_letters, reduce_clause_word

EX_USAGE = 64
EX_DATA = 65
EX_MISMATCH = 66
EX_INTERNAL = 70


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}", EX_DATA) from None


def _load_game(path: str, fmt: str = "auto") -> Game:
    try:
        return parse_game(_read_input(path), fmt=fmt)
    except GameFormatError as e:
        raise CliError(f"bad game: {e}", EX_DATA) from None


def _write_output(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _certificate_header(game: Game) -> dict:
    return {
        "players": game.players,
        "alphabet": game.alphabet,
        "num_clauses": game.num_clauses,
    }


def _dump_certificate(obj: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def cmd_decide(args) -> int:
    game = _load_game(args.game, args.format)
    components = decompose_components(game)
    outcomes = [decide(comp.game) for comp in components]
    print(f"components: {len(components)}")
    for idx, (comp, outcome) in enumerate(zip(components, outcomes)):
        print(
            f"  component {idx}: clauses={comp.game.num_clauses}"
            f" refutable={'yes' if outcome.member else 'no'}"
        )
    member = any(o.member for o in outcomes)

    if args.max_len:
        search = oracle.bounded_sigma_search(game, args.max_len)
        print(f"search: {search.status.value}")
        if search.status == SearchStatus.FOUND and not member:
            raise CliError("bounded search contradicts the decider", EX_INTERNAL)

    if not member:
        strategy = merp.solve_merp(game)
        if strategy is None:
            raise CliError("decider and phase solver disagree", EX_INTERNAL)
        bits = oracle.gf2_solve(game)
        classical = bits is not None
        if classical:
            # Integral phases double as a deterministic classical strategy.
            strategy = _integral_strategy(game, bits)
        if not merp.verify_merp_symbolic(game, strategy):
            raise CliError("strategy failed symbolic verification", EX_INTERNAL)
        if game.players <= 12:
            sim = merp.simulate_merp_value(game, strategy)
            if abs(sim.value - 1) > 1e-9:
                raise CliError("strategy failed numeric verification", EX_INTERNAL)
        cert = dict(_certificate_header(game), type="merp", **strategy.to_dict())
        cert["classically_perfect"] = classical
        _dump_certificate(cert, args.out)
        print(f"verdict: {'CLASSICALLY_PERFECT' if classical else 'PERFECT'}")
        print(f"certificate: {args.out}")
        return 0

    if game.players == 3:
        try:
            certificate = refute(game, cap=args.cap)
        except PipelineError as e:
            raise CliError(f"refutation pipeline failed: {e}", EX_INTERNAL) from None
        if reduce_clause_word(game, certificate.sigma_word) != GroupWord.sign(3):
            raise CliError("refutation failed re-verification", EX_INTERNAL)
        cert = dict(
            _certificate_header(game),
            type="refutation",
            z=list(certificate.z),
            sigma_word=[i + 1 for i in certificate.sigma_word.indices],
            verified=True,
        )
        _dump_certificate(cert, args.out)
        print("verdict: NOT_PERFECT")
        print(f"certificate: {args.out}")
        return 1

    full_z = _embed_component_z(game, components, outcomes)
    cert = dict(
        _certificate_header(game), type="obstruction", z=list(full_z)
    )
    _dump_certificate(cert, args.out)
    print("verdict: NO_PERFECT_MERP_INCONCLUSIVE")
    print(f"certificate: {args.out}")
    return 2


def _integral_strategy(game: Game, bits) -> MerpStrategy:
    phi = tuple(
        tuple(Fraction(bits[a * game.alphabet + q]) for q in range(game.alphabet))
        for a in range(game.players)
    )
    return MerpStrategy(phi)


def _embed_component_z(game, components, outcomes):
    z = [0] * game.num_clauses
    for comp, outcome in zip(components, outcomes):
        if outcome.member:
            for j, zj in enumerate(outcome.obstruction_z):
                z[comp.clause_map[j]] = zj
            return tuple(z)
    raise AssertionError("no refutable component")


def _load_certificate(path: str) -> dict:
    try:
        obj = json.loads(_read_input(path))
    except json.JSONDecodeError as e:
        raise CliError(f"bad certificate: {e}", EX_DATA) from None
    if not isinstance(obj, dict) or "type" not in obj:
        raise CliError("certificate must be a JSON object with a 'type'", EX_DATA)
    return obj


def _check_cert_matches(obj: dict, game: Game):
    for key, actual in _certificate_header(game).items():
        if key in obj and obj[key] != actual:
            raise CliError(
                f"certificate {key}={obj[key]} does not match game {key}={actual}",
                EX_MISMATCH,
            )


def cmd_verify(args) -> int:
    game = _load_game(args.game, args.format)
    obj = _load_certificate(args.certificate)
    _check_cert_matches(obj, game)
    kind = obj["type"]
    if kind == "merp":
        try:
            strategy = MerpStrategy.from_dict(obj)
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise CliError(f"bad phase table: {e}", EX_DATA) from None
        if strategy.players != game.players or strategy.alphabet < game.alphabet:
            raise CliError("phase table shape does not match the game", EX_MISMATCH)
        ok = merp.verify_merp_symbolic(game, strategy)
        if ok and game.players <= 12:
            ok = abs(merp.simulate_merp_value(game, strategy).value - 1) <= 1e-9
    elif kind == "refutation":
        try:
            word = ClauseWord.from_indices([i - 1 for i in obj["sigma_word"]])
            if any(i < 0 or i >= game.num_clauses for i in word.indices):
                raise CliError("clause index out of range", EX_MISMATCH)
            okz = check_obstruction(game, obj["z"])
            ok = okz and reduce_clause_word(game, word) == GroupWord.sign(game.players)
        except (KeyError, TypeError) as e:
            raise CliError(f"bad refutation certificate: {e}", EX_DATA) from None
    elif kind == "obstruction":
        ok = check_obstruction(game, obj.get("z", ()))
    else:
        raise CliError(f"unknown certificate type {kind!r}", EX_DATA)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_simulate(args) -> int:
    game = _load_game(args.game, args.format)
    obj = _load_certificate(args.certificate)
    _check_cert_matches(obj, game)
    if obj["type"] != "merp":
        raise CliError("simulate needs a phase-table certificate", EX_DATA)
    strategy = MerpStrategy.from_dict(obj)
    result = merp.simulate_merp_value(game, strategy)
    print(f"value: {result.value:.12f}")
    print(f"exact_perfect: {'yes' if result.exact_perfect else 'no'}")
    return 0


def cmd_classical(args) -> int:
    game = _load_game(args.game, args.format)
    result = oracle.classical_value(game)
    print(result.value)
    assignment = " ".join(
        f"x{q + 1}^({a + 1})={val:+d}"
        for a, row in enumerate(result.assignment)
        for q, val in enumerate(row)
    )
    print(f"assignment: {assignment}")
    return 0


def cmd_canon(args) -> int:
    letters = [x - 1 for x in args.letters]
    if any(x < 0 for x in letters):
        raise CliError("letters are 1-based question indices", EX_DATA)
    if len(letters) < 3:
        raise CliError("canonical form needs at least 3 letters", EX_DATA)
    print(" ".join(str(x + 1) for x in canon_letters(letters)))
    return 0


def cmd_export_graph(args) -> int:
    game = _load_game(args.game, "auto")
    if args.pair:
        try:
            a, b = (int(x) for x in args.pair.split(","))
        except ValueError:
            raise CliError("--pair expects two players like '2,3'", EX_USAGE) from None
        if not (1 <= a <= game.players and 1 <= b <= game.players) or a == b:
            raise CliError("--pair players out of range", EX_USAGE)
        text = pair_graph_dot(PairGraph(game, a - 1, b - 1))
    else:
        text = hypergraph_dot(game)
    _write_output(args.out, text)
    return 0


def cmd_gen(args) -> int:
    try:
        game = generate_random_game(args.players, args.alphabet, args.clauses, args.seed)
    except GameFormatError as e:
        raise CliError(str(e), EX_USAGE) from None
    text = serialize_json(game) if args.format == "json" else serialize_text(game)
    _write_output(args.out, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xorgames",
        description="Decide perfect entangled strategies for XOR games and "
        "emit verifiable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_game_arg(p):
        p.add_argument("game", help="game file, or '-' for stdin")
        p.add_argument(
            "--format", choices=["auto", "text", "json"], default="auto",
            help="input format (default: sniffed)",
        )

    p = sub.add_parser("decide", help="decide the game and write a certificate")
    add_game_arg(p)
    p.add_argument("--out", default="certificate.json", help="certificate path")
    p.add_argument(
        "--max-len", type=int, default=0, metavar="N",
        help="also run the brute-force sign search to depth N as a cross-check",
    )
    p.add_argument(
        "--cap", type=int, default=10**6, metavar="N",
        help="abort refutation construction beyond N clause letters",
    )
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="re-check a certificate against a game")
    add_game_arg(p)
    p.add_argument("certificate", help="certificate file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="simulate a phase-table strategy")
    add_game_arg(p)
    p.add_argument("certificate", help="phase-table certificate file")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("classical", help="exact classical value by brute force")
    add_game_arg(p)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("canon", help="canonical form of a one-player word")
    p.add_argument("letters", type=int, nargs="+", help="1-based question indices")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("export-graph", help="DOT export of the clause graphs")
    p.add_argument("game", help="game file, or '-' for stdin")
    p.add_argument("--format", choices=["dot"], default="dot", help="output format")
    p.add_argument("--pair", help="induced pair graph, e.g. '2,3' (default: hypergraph)")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_export_graph)

    p = sub.add_parser("gen", help="generate a seeded random game")
    p.add_argument("--players", "-k", type=int, default=3)
    p.add_argument("--alphabet", "-n", type=int, default=2)
    p.add_argument("--clauses", "-m", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EX_USAGE if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
