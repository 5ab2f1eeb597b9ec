"""Command-line interface.

One executable, eleven subcommands, deterministic output. ``--json``
switches every report to a single JSON document on stdout. Exit codes:
0 success, 1 bad parameters, 2 scale-cap refusal, 64 unknown subcommand.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import codefile
from .bounds import (
    counterexample_code,
    exact_iq,
    levenshtein_lower_bound,
    singleton_bound,
    size_upper_bound,
)
from .cw_l1 import L1ConstructionSpec, construct_l1
from .errors import DomainError, InsdelError, ScaleCapExceeded
from .gf import field_from_size
from .lift import lift
from .rs import (
    RsCode,
    check_rs2_criterion,
    construct_rs2,
    low_distance_witness,
    rs2_field_threshold,
    rs_exhaustive_insdel,
)
from .words import CWL1, INSDEL, L1, Code, Word, code_min_distance, insdel_distance

COMMANDS = (
    "dist",
    "code-distance",
    "construct-l1",
    "lift",
    "construct-rs2",
    "verify-rs2",
    "witness-rs",
    "exact-iq",
    "bounds",
    "counterexample",
    "selftest",
)

USAGE = "usage: insdel {" + ",".join(COMMANDS) + "} [options]\n"


class _Parser(argparse.ArgumentParser):
    """Argument errors are parameter-domain errors, exit code 1."""

    def error(self, message):
        raise DomainError(message)


def _base_parser(name: str) -> _Parser:
    p = _Parser(prog=f"insdel {name}", add_help=True)
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker cap for sweeps; results are independent of it",
    )
    return p


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"numerator": str(value.numerator), "denominator": str(value.denominator)}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Word):
        return list(value.symbols)
    return value


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_jsonable(report), sort_keys=True))
        return
    for key, value in report.items():
        if isinstance(value, Fraction):
            value = f"{value.numerator}/{value.denominator}"
        print(f"{key}={value}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError as exc:
        raise DomainError(f"expected a comma-separated integer list, got {text!r}") from exc


# ---------------------------------------------------------------------------
# Subcommands.


def _cmd_dist(argv):
    p = _base_parser("dist")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--u", type=_int_list, required=True)
    p.add_argument("--v", type=_int_list, required=True)
    a = p.parse_args(argv)
    d = insdel_distance(Word(a.q, a.u), Word(a.q, a.v))
    if a.json:
        _emit({"command": "dist", "q": a.q, "u": list(a.u), "v": list(a.v), "distance": d}, True)
    else:
        print(d)
    return 0


def _cmd_code_distance(argv):
    p = _base_parser("code-distance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--metric", choices=(INSDEL, "HAMMING", L1), default=None)
    a = p.parse_args(argv)
    code = codefile.load(a.infile)
    metric = a.metric or (L1 if code.kind == CWL1 else INSDEL)
    d, witness = code_min_distance(code, metric)
    wit = [
        list(w.counts) if code.kind == CWL1 else list(w.symbols) for w in witness
    ]
    _emit(
        {
            "command": "code-distance",
            "kind": code.kind,
            "q": code.q,
            "n": code.n,
            "size": len(code),
            "metric": metric,
            "min_distance": d,
            "witness": wit,
        },
        a.json,
    )
    return 0


def _cmd_construct_l1(argv):
    p = _base_parser("construct-l1")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--out", default=None)
    a = p.parse_args(argv)
    spec = L1ConstructionSpec(q=a.q, n=a.n, delta=a.delta, r=a.r, alpha=a.alpha)
    code, report = construct_l1(spec)
    if a.out:
        codefile.dump(code, a.out)
    report = {"command": "construct-l1", **report}
    _emit(report, a.json)
    return 0


def _cmd_lift(argv):
    p = _base_parser("lift")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument(
        "--verify",
        action="store_true",
        help="refuse (exit 2) instead of skipping the pairwise verification",
    )
    a = p.parse_args(argv)
    code = codefile.load(a.infile)
    lifted, report = lift(code)
    if a.verify and not report["verified"]:
        raise ScaleCapExceeded(
            f"{report['pairs']} pairs exceed the verification cap"
        )
    codefile.dump(lifted, a.out)
    report = {"command": "lift", "q": lifted.q, "n": lifted.n, **report}
    _emit(report, a.json)
    return 0


def _cmd_construct_rs2(argv):
    p = _base_parser("construct-rs2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=0)
    a = p.parse_args(argv)
    ctx = field_from_size(a.q) if a.q else None
    code = construct_rs2(a.n, ctx)
    _emit(
        {
            "command": "construct-rs2",
            "n": code.n,
            "q": code.ctx.q,
            "threshold": rs2_field_threshold(a.n),
            "alphas": list(code.alphas),
        },
        a.json,
    )
    return 0


def _cmd_verify_rs2(argv):
    p = _base_parser("verify-rs2")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--exhaustive", action="store_true")
    a = p.parse_args(argv)
    if len(a.alphas) != a.n:
        raise DomainError(f"expected {a.n} evaluation points, got {len(a.alphas)}")
    code = RsCode(field_from_size(a.q), a.alphas, 2)
    ok, witness = check_rs2_criterion(code)
    report = {
        "command": "verify-rs2",
        "q": a.q,
        "n": a.n,
        "criterion_holds": ok,
        "target_distance": 2 * a.n - 4,
    }
    if witness is not None:
        i, j, sigma = witness
        report["witness_i"] = [x + 1 for x in i]
        report["witness_j"] = [x + 1 for x in j]
        report["witness_map"] = {"a": sigma.a, "b": sigma.b}
    if a.exhaustive:
        d, pair = rs_exhaustive_insdel(code)
        report["exhaustive_min_insdel"] = d
        report["agrees"] = ok == (d == 2 * a.n - 4)
    _emit(report, a.json)
    return 0


def _cmd_witness_rs(argv):
    p = _base_parser("witness-rs")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    a = p.parse_args(argv)
    code = RsCode(field_from_size(a.q), a.alphas, a.k)
    w = low_distance_witness(code, a.k)
    _emit(
        {
            "command": "witness-rs",
            "q": a.q,
            "n": code.n,
            "k": a.k,
            "f": list(w["f"]),
            "g": list(w["g"]),
            "i": [x + 1 for x in w["i"]],
            "j": [x + 1 for x in w["j"]],
            "lcs_lower_bound": w["lcs_lower_bound"],
            "distance_upper_bound": w["distance_upper_bound"],
            "codeword_f": list(w["codeword_f"]),
            "codeword_g": list(w["codeword_g"]),
        },
        a.json,
    )
    return 0


def _cmd_exact_iq(argv):
    p = _base_parser("exact-iq")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--out", default=None)
    a = p.parse_args(argv)
    size, code = exact_iq(a.q, a.n, a.d, a.max_seconds)
    if a.out:
        codefile.dump(code, a.out)
    _emit(
        {
            "command": "exact-iq",
            "q": a.q,
            "n": a.n,
            "d": a.d,
            "size": size,
            "witness": [list(w.symbols) for w in code.members],
        },
        a.json,
    )
    return 0


def _cmd_bounds(argv):
    p = _base_parser("bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    a = p.parse_args(argv)
    upper, clause = size_upper_bound(a.q, a.n, a.d)
    lower = levenshtein_lower_bound(a.q, a.n, a.d)
    _emit(
        {
            "command": "bounds",
            "q": a.q,
            "n": a.n,
            "d": a.d,
            "singleton": singleton_bound(a.q, a.n, a.d),
            "upper_bound": upper,
            "upper_bound_clause": clause,
            "levenshtein_lower": lower,
            "levenshtein_lower_floor": lower.numerator // lower.denominator,
        },
        a.json,
    )
    return 0


def _cmd_counterexample(argv):
    p = _base_parser("counterexample")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    a = p.parse_args(argv)
    code, report = counterexample_code(a.q, a.n)
    if a.out:
        codefile.dump(code, a.out)
    _emit({"command": "counterexample", **report}, a.json)
    return 0


def _cmd_selftest(argv):
    p = _base_parser("selftest")
    a = p.parse_args(argv)
    results = []
    for name, check in _selftest_checks():
        try:
            check()
            results.append((name, True, ""))
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
    ok = all(passed for _, passed, _ in results)
    if a.json:
        _emit(
            {
                "command": "selftest",
                "passed": ok,
                "checks": [
                    {"name": n, "passed": s, "detail": m} for n, s, m in results
                ],
            },
            True,
        )
    else:
        for name, passed, msg in results:
            line = f"{'PASS' if passed else 'FAIL'} {name}"
            if msg:
                line += f" ({msg})"
            print(line)
        print(f"selftest: {'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def _selftest_checks():
    from itertools import combinations, product

    from .bounds import counterexample_code as cx
    from .lift import guarantee_report
    from .oracles import edit_graph_distance
    from .rs import affine_apply, affine_fixed_points, affine_through
    from .words import Composition, l1_distance, phi, psi
    from .gf import field_make

    def metrics_agree():
        words = [Word(2, s) for s in product(range(2), repeat=4)]
        for u, v in combinations(words, 2):
            assert insdel_distance(u, v) == edit_graph_distance(u, v)

    def count_map_round_trip():
        comps = [
            Composition(3, c)
            for c in product(range(5), repeat=3)
            if sum(c) == 4
        ]
        assert len(comps) == 15
        for a in comps:
            assert phi(psi(a)) == a
        for a, b in combinations(comps, 2):
            assert l1_distance(a, b) == insdel_distance(psi(a), psi(b))

    def bucket_construction():
        code, report = construct_l1(L1ConstructionSpec(q=2, n=3, delta=2))
        assert report["r"] == 3 and report["size"] == 2
        assert report["verified_min_l1"] >= 4
        assert guarantee_report(4, 8, 2)["guaranteed_size"] == 19

    def rs2_criterion_matches_sweep():
        code = RsCode(field_make(7), (0, 1, 2, 3), 2)
        ok, _ = check_rs2_criterion(code)
        d, _ = rs_exhaustive_insdel(code)
        assert ok == (d == 2 * code.n - 4)

    def witness_certificate():
        code = RsCode(field_make(7), tuple(range(6)), 3)
        w = low_distance_witness(code)
        assert w["lcs_lower_bound"] >= 4
        assert w["distance_upper_bound"] == 4

    def bound_formulas():
        assert singleton_bound(2, 3, 4) == 4
        assert size_upper_bound(2, 3, 2) == (8, "i")
        assert size_upper_bound(3, 3, 6) == (3, "i")
        assert levenshtein_lower_bound(2, 3, 2) == 1
        assert exact_iq(2, 3, 2)[0] == 8
        assert exact_iq(2, 3, 6)[0] == 2
        _, report = cx(3, 3)
        assert report["size"] == 4 and report["min_insdel"] == 4

    def affine_action():
        ctx = field_make(5)
        for src in product(range(5), repeat=2):
            for dst in product(range(5), repeat=2):
                if src[0] != src[1] and dst[0] != dst[1]:
                    s = affine_through(ctx, src, dst)
                    assert affine_apply(s, src[0]) == dst[0]
                    assert affine_apply(s, src[1]) == dst[1]
                    fixed = affine_fixed_points(s)
                    if not s.is_identity():
                        assert len(fixed) <= 1

    return [
        ("metric-oracle-agreement", metrics_agree),
        ("count-map-round-trip", count_map_round_trip),
        ("bucket-construction", bucket_construction),
        ("rs2-criterion-vs-sweep", rs2_criterion_matches_sweep),
        ("low-distance-witness", witness_certificate),
        ("bound-formulas", bound_formulas),
        ("affine-action", affine_action),
    ]


_DISPATCH = {
    "dist": _cmd_dist,
    "code-distance": _cmd_code_distance,
    "construct-l1": _cmd_construct_l1,
    "lift": _cmd_lift,
    "construct-rs2": _cmd_construct_rs2,
    "verify-rs2": _cmd_verify_rs2,
    "witness-rs": _cmd_witness_rs,
    "exact-iq": _cmd_exact_iq,
    "bounds": _cmd_bounds,
    "counterexample": _cmd_counterexample,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(USAGE)
        return 0
    command, rest = argv[0], argv[1:]
    if command not in _DISPATCH:
        sys.stderr.write(f"insdel: unknown subcommand {command!r}\n{USAGE}")
        return 64
    try:
        return _DISPATCH[command](rest)
    except ScaleCapExceeded as exc:
        sys.stderr.write(f"insdel {command}: scale cap: {exc}\n")
        return 2
    except InsdelError as exc:
        sys.stderr.write(f"insdel {command}: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"insdel {command}: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
