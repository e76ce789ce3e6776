"""Command line front end.

Every subcommand prints either a human-readable table or a JSON payload
(--format json, keys sorted, deterministic for a fixed seed and prime).
Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import ConfigurationError, DomainError, GenericityError
from .fields import DEFAULT_PRIME, QQ, PrimeField, derived_rng, is_prime
from .invariants import (
    RamificationSequence,
    adjusted_rho,
    brill_noether_rho,
    enumerate_quad_cases,
    expected_dim_q,
    harris_tu_degree,
)
from .picard import (
    boundary_indices,
    canonical_class,
    chern_pair,
    fr_dp_class,
    general_type_certificate,
    quad_class,
    quad_class_unscaled,
    solve_certificate_multipliers,
    z_class_15_9,
)
from .quadlab import (
    ParamCurve,
    expected_family_dim,
    family_dimension,
    genus4_check,
    genus5_net_check,
    i2_basis,
    rnc_i2_dim,
    secant_condition,
)
from .surface import (
    PointConfig,
    blowup_verify,
    hyperplane_class,
    interpolation_basis,
    surface_i2,
)
from .verify import CHECKS, check_names, run_check


class RunConfig:
    """Global options shared by every subcommand."""

    def __init__(self, prime: int, seed: int, fmt: str, repeat: int):
        self.prime = prime
        self.seed = seed
        self.fmt = fmt
        self.repeat = repeat
        self._field = None

    @property
    def field(self) -> PrimeField:
        if self._field is None:
            self._field = PrimeField(self.prime)
        return self._field


def _emit(cfg: RunConfig, payload: dict, lines) -> int:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


def _q(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _coeff_str(c) -> str:
    return ("" if c.is_exact else ">= ") + _q(c.value)


def _class_lines(d) -> list:
    lines = [f"g={d.g} n={d.n}", f"lambda: {_coeff_str(d.lam)}"]
    if d.psi and all(p == d.psi[0] for p in d.psi):
        lines.append(f"psi: {_coeff_str(d.psi[0])} on each of {d.n} markings")
    else:
        for j, p in enumerate(d.psi, start=1):
            lines.append(f"psi[{j}]: {_coeff_str(p)}")
    lines.append(f"b_irr: {_coeff_str(d.b_irr)}")
    for key in boundary_indices(d.g, d.n):
        lines.append(f"b[{key[0]},{key[1]}]: {_coeff_str(d.b[key])}")
    return lines


def _cmd_expected_dim(cfg, args):
    v = expected_dim_q(args.g, args.r, args.d, args.k)
    payload = {"g": args.g, "r": args.r, "d": args.d, "k": args.k, "q": v}
    return _emit(cfg, payload, [str(v)])


def _cmd_rho(cfg, args):
    v = brill_noether_rho(args.g, args.r, args.d)
    payload = {"g": args.g, "r": args.r, "d": args.d, "rho": v}
    return _emit(cfg, payload, [str(v)])


def _cmd_adjusted_rho(cfg, args):
    alpha = RamificationSequence(int(tok) for tok in args.alpha.split(","))
    v = adjusted_rho(args.g, args.r, args.d, alpha)
    payload = {"g": args.g, "r": args.r, "d": args.d,
               "alpha": list(alpha), "rho": v}
    return _emit(cfg, payload, [str(v)])


def _cmd_harris_tu(cfg, args):
    v = harris_tu_degree(args.e, args.k)
    payload = {"e": args.e, "k": args.k, "degree": v}
    return _emit(cfg, payload, [str(v)])


def _cmd_enumerate_cases(cfg, args):
    cases = enumerate_quad_cases(args.g_max)
    payload = {"g_max": args.g_max, "count": len(cases),
               "cases": [list(c) for c in cases]}
    lines = [f"g={g} n={n} k={k}" for g, n, k in cases]
    lines.append(f"count: {len(cases)}")
    return _emit(cfg, payload, lines)


def _cmd_quad_class(cfg, args):
    cls = quad_class(args.g, args.n, args.k)
    uns = quad_class_unscaled(args.g, args.n, args.k)
    alpha = harris_tu_degree(args.g - args.n, args.k)
    payload = {"alpha": str(alpha), "class": cls.to_json_dict(),
               "unscaled": uns.to_json_dict()}
    lines = [f"alpha: {alpha}"] + _class_lines(cls)
    lines.append("unscaled (divided by alpha):")
    lines.extend("  " + ln for ln in _class_lines(uns))
    return _emit(cfg, payload, lines)


def _cmd_dp_class(cfg, args):
    cls = fr_dp_class(chern_pair(args.g, args.n))
    return _emit(cfg, {"class": cls.to_json_dict()}, _class_lines(cls))


def _cmd_z_class(cfg, args):
    cls = z_class_15_9()
    return _emit(cfg, {"class": cls.to_json_dict()}, _class_lines(cls))


def _cmd_canonical_class(cfg, args):
    cls = canonical_class(args.g, args.n)
    return _emit(cfg, {"class": cls.to_json_dict()}, _class_lines(cls))


def _cmd_certificate(cfg, args):
    z = args.z
    if args.solve:
        x, y = solve_certificate_multipliers(z)
    else:
        x, y = args.x, args.y
    rep = general_type_certificate(x, y, z)
    bound_slots = sum(1 for s in rep.boundary if s.required_bound is not None)
    lines = [
        f"multipliers: x={_q(rep.x)} y={_q(rep.y)} z={_q(rep.z)}",
        f"lambda residual: {_q(rep.lambda_residual)}",
        f"psi residual: {_q(rep.psi_residual)}",
        f"E_irr: {_q(rep.e_irr)}",
        f"boundary slots needing a bound: {bound_slots}/{len(rep.boundary)}",
    ]
    for slot in rep.boundary:
        if slot.required_bound is not None:
            lines.append(f"  b[{slot.i},{slot.s}] needs >= {_q(slot.required_bound)}")
    lines.append(f"passed: {rep.passed}")
    _emit(cfg, rep.to_json_dict(), lines)
    return 0 if rep.passed else 1


def _cmd_rnc_i2(cfg, args):
    field = QQ if args.rational else cfg.field
    system = i2_basis(ParamCurve.rational_normal(field, args.r))
    expected = rnc_i2_dim(args.r)
    payload = {"r": args.r, "dim": system.dim, "expected": expected,
               "rational": bool(args.rational)}
    if args.dump:
        payload["system"] = system.to_json_dict()
    lines = [f"dim I2 = {system.dim} (expected {expected})"]
    _emit(cfg, payload, lines)
    return 0 if system.dim == expected else 1


def _cmd_rank3_family(cfg, args):
    got = family_dimension(args.r, 3, args.x, field=cfg.field, seed=cfg.seed)
    want = expected_family_dim(args.r, 3, args.x)
    payload = {"r": args.r, "x": args.x, "dim": got, "expected": want}
    _emit(cfg, payload, [f"family dimension {got} (expected {want})"])
    return 0 if got == want else 1


def _cmd_rank4_family(cfg, args):
    stratum = (args.m1, args.m2, args.x)
    got = family_dimension(args.r, 4, stratum, field=cfg.field, seed=cfg.seed)
    want = expected_family_dim(args.r, 4, stratum)
    payload = {"r": args.r, "stratum": list(stratum), "dim": got, "expected": want}
    _emit(cfg, payload, [f"family dimension {got} (expected {want})"])
    return 0 if got == want else 1


def _cmd_secant(cfg, args):
    if (args.t1 is None) != (args.t2 is None):
        print("error: --t1 and --t2 must be given together", file=sys.stderr)
        return 2
    field = cfg.field
    curve = ParamCurve.rational_normal(field, args.r)
    system = i2_basis(curve)
    if args.t1 is not None:
        chords = [(field.coerce(args.t1), field.coerce(args.t2))]
    else:
        rng = derived_rng(cfg.seed, "secant-cli", args.r)
        chords = []
        for _ in range(cfg.repeat):
            t1 = field.random_element(rng)
            t2 = field.random_element(rng)
            while t2 == t1:
                t2 = field.random_element(rng)
            chords.append((t1, t2))
    codims = [secant_condition(curve, t1, t2, system=system)
              for t1, t2 in chords]
    payload = {"r": args.r, "chords": len(codims), "codims": codims}
    good = sum(1 for c in codims if c == 1)
    lines = [f"chords: {len(codims)}", f"codimension 1: {good}/{len(codims)}"]
    _emit(cfg, payload, lines)
    return 0 if good == len(codims) else 1


def _cmd_genus4(cfg, args):
    seeds = list(range(cfg.seed, cfg.seed + cfg.repeat))
    ranks = [genus4_check(s, field=cfg.field) for s in seeds]
    payload = {"seeds": seeds, "ranks": ranks}
    good = sum(1 for rk in ranks if rk == 4)
    lines = [f"seed {s}: rank {rk}" for s, rk in zip(seeds, ranks)]
    lines.append(f"rank 4: {good}/{len(ranks)}")
    _emit(cfg, payload, lines)
    return 0 if good == len(ranks) else 1


def _cmd_genus5_net(cfg, args):
    rep = genus5_net_check(cfg.seed, field=cfg.field)
    lines = [
        f"seed: {rep.seed} (attempt {rep.attempt_used} of {rep.attempts})",
        f"discriminant nonzero: {rep.discriminant_nonzero}",
        f"line restriction squarefree: {rep.line_squarefree}",
        f"singular candidates: {len(rep.candidates)}",
        f"rank <= 3 points: {rep.low_rank_points}",
        f"passed: {rep.passed}",
    ]
    _emit(cfg, rep.to_json_dict(), lines)
    return 0 if rep.passed else 1


def _cmd_blowup_verify(cfg, args):
    rep = blowup_verify(cfg.seed, field=cfg.field)
    payload = rep.to_json_dict()
    if args.dump and rep.passed:
        pts = PointConfig.sample(cfg.field, 15, rep.seed)
        hs = interpolation_basis(pts, hyperplane_class())
        payload["dump"] = {"points": pts.to_json_dict(),
                           "hyperplane_system": hs.to_json_dict(),
                           "quadrics": surface_i2(pts).to_json_dict()}
    lines = [
        f"seed: {rep.seed}",
        f"stage reached: {rep.stage}",
        f"h^0: hyperplane {rep.h_dim}, curve {rep.curve_dim}, residual {rep.residual_dim}",
        f"dim I2: {rep.i2_dim}",
    ]
    if rep.pencil is not None:
        lines.append(f"pencil discriminant: degree {rep.pencil.degree}, "
                     f"squarefree {rep.pencil.squarefree}")
    lines.append(f"passed: {rep.passed}")
    _emit(cfg, payload, lines)
    return 0 if rep.passed else 1


def _cmd_pencil_disc(cfg, args):
    rep = blowup_verify(cfg.seed, field=cfg.field)
    if rep.pencil is None:
        payload = {"seed": rep.seed, "stage": rep.stage, "pencil": None}
        _emit(cfg, payload, [f"construction stopped at stage {rep.stage}"])
        return 1
    payload = {"seed": rep.seed, "pencil": rep.pencil.to_json_dict()}
    if args.dump:
        pts = PointConfig.sample(cfg.field, 15, rep.seed)
        payload["dump"] = surface_i2(pts).to_json_dict()
    pencil = rep.pencil
    lines = [
        f"seed: {rep.seed}",
        f"degree: {pencil.degree}",
        f"nonzero: {pencil.nonzero}",
        f"squarefree: {pencil.squarefree}",
        f"nondegenerate: {pencil.nondegenerate}",
    ]
    _emit(cfg, payload, lines)
    return 0 if pencil.nondegenerate else 1


def _cmd_verify(cfg, args):
    requested = args.checks or ["all"]
    if "all" in requested:
        names = check_names()
    else:
        for name in requested:
            if name not in CHECKS:
                print(f"error: unknown check {name!r}; known: "
                      f"{', '.join(check_names())} or all", file=sys.stderr)
                return 2
        names = requested
    results = [run_check(name, seed=cfg.seed, field=cfg.field)
               for name in names]
    payload = {"seed": cfg.seed, "prime": cfg.prime,
               "results": [r.to_json_dict() for r in results]}
    lines = [f"{r.check}: {'pass' if r.passed else 'FAIL'}" for r in results]
    _emit(cfg, payload, lines)
    return 0 if all(r.passed for r in results) else 1


HANDLERS = {
    "expected-dim": _cmd_expected_dim,
    "rho": _cmd_rho,
    "adjusted-rho": _cmd_adjusted_rho,
    "harris-tu": _cmd_harris_tu,
    "enumerate-cases": _cmd_enumerate_cases,
    "quad-class": _cmd_quad_class,
    "dp-class": _cmd_dp_class,
    "z-class": _cmd_z_class,
    "canonical-class": _cmd_canonical_class,
    "certificate": _cmd_certificate,
    "rnc-i2": _cmd_rnc_i2,
    "rank3-family": _cmd_rank3_family,
    "rank4-family": _cmd_rank4_family,
    "secant": _cmd_secant,
    "genus4": _cmd_genus4,
    "genus5-net": _cmd_genus5_net,
    "blowup-verify": _cmd_blowup_verify,
    "pencil-disc": _cmd_pencil_disc,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None,
                        help="working prime (default: QMOD_PRIME or 2^61-1)")
    common.add_argument("--seed", type=int, default=0,
                        help="base seed for sampling (default 0)")
    common.add_argument("--format", choices=("table", "json"), default="table",
                        help="output format (default table)")
    common.add_argument("--repeat", type=int, default=1,
                        help="number of sampling repetitions (default 1)")

    parser = argparse.ArgumentParser(
        prog="qmod",
        description="Exact quadric-rank and moduli-divisor workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expected-dim", parents=[common],
                       help="expected dimension of the rank-<=k quadric locus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("rho", parents=[common], help="Brill-Noether number")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("adjusted-rho", parents=[common],
                       help="Brill-Noether number adjusted by ramification")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", required=True,
                   help="comma-separated ramification indices, r+1 entries")

    p = sub.add_parser("harris-tu", parents=[common],
                       help="degree of the rank-<=k symmetric determinantal locus")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("enumerate-cases", parents=[common],
                       help="list (g, n, k) with an expected divisor of quadric type")
    p.add_argument("--g-max", type=int, default=40)

    p = sub.add_parser("quad-class", parents=[common],
                       help="divisor class of the rank-<=k locus closure")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("dp-class", parents=[common],
                       help="divisor class of the du Val-type rank locus")
    p.add_argument("--g", type=int, default=15)
    p.add_argument("--n", type=int, default=8)

    sub.add_parser("z-class", parents=[common],
                   help="pushed-forward quadric divisor on the (15, 9) space")

    p = sub.add_parser("canonical-class", parents=[common],
                       help="canonical class of the pointed moduli space")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("certificate", parents=[common],
                       help="general-type decomposition check on (15, 9)")
    p.add_argument("--x", type=Fraction, default=Fraction(25, 297))
    p.add_argument("--y", type=Fraction, default=Fraction(2, 297))
    p.add_argument("--z", type=Fraction, default=Fraction(13, 66))
    p.add_argument("--solve", action="store_true",
                   help="derive x and y from z instead of taking them as given")

    p = sub.add_parser("rnc-i2", parents=[common],
                       help="quadrics through the rational normal curve")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--rational", action="store_true",
                   help="compute over the rationals instead of F_p")
    p.add_argument("--dump", action="store_true",
                   help="include the basis matrices in the payload")

    p = sub.add_parser("rank3-family", parents=[common],
                       help="sampled dimension of a rank-3 quadric family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", type=int, required=True,
                   help="degree of the residual factor")

    p = sub.add_parser("rank4-family", parents=[common],
                       help="sampled dimension of a rank-4 quadric family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m1", type=int, required=True, help="degree of the first pencil")
    p.add_argument("--m2", type=int, required=True, help="degree of the second pencil")
    p.add_argument("--x", type=int, required=True,
                   help="degree of the residual factor")

    p = sub.add_parser("secant", parents=[common],
                       help="codimension imposed by a chord on the quadric system")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t1", type=int, default=None)
    p.add_argument("--t2", type=int, default=None)

    sub.add_parser("genus4", parents=[common],
                   help="rank of the quadric through a random genus-4 canonical curve")

    sub.add_parser("genus5-net", parents=[common],
                   help="singular-locus scan of a random genus-5 quadric net")

    p = sub.add_parser("blowup-verify", parents=[common],
                       help="15-point blow-up surface construction check")
    p.add_argument("--dump", action="store_true",
                   help="include the linear systems in the payload")

    p = sub.add_parser("pencil-disc", parents=[common],
                       help="discriminant of the surface quadric pencil")
    p.add_argument("--dump", action="store_true",
                   help="include the quadric pair in the payload")

    p = sub.add_parser("verify", parents=[common],
                       help="run named verification checks")
    p.add_argument("checks", nargs="*",
                   help="check names, or 'all' (default)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    prime = args.prime
    if prime is None:
        env = os.environ.get("QMOD_PRIME")
        if env is not None:
            try:
                prime = int(env)
            except ValueError:
                print(f"error: QMOD_PRIME must be an integer, got {env!r}",
                      file=sys.stderr)
                return 2
        else:
            prime = DEFAULT_PRIME
    if prime < 3 or not is_prime(prime):
        print(f"error: prime must be an odd prime >= 3, got {prime}",
              file=sys.stderr)
        return 2
    if args.repeat < 1:
        print(f"error: --repeat must be >= 1, got {args.repeat}", file=sys.stderr)
        return 2
    cfg = RunConfig(prime=prime, seed=args.seed, fmt=args.format,
                    repeat=args.repeat)
    handler = HANDLERS[args.command]
    try:
        return handler(cfg, args)
    except GenericityError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
