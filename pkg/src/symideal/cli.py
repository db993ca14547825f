"""Command-line verification and exploration tools.

Verbs: ``specht``, ``tanisaki``, ``table1``, ``lemmas``, ``tangent``,
``decompose``, ``gr``.  Every verb emits a machine-readable report (JSON
with a ``schema_version`` field) or a plain-text rendering, and the exit
code is zero exactly when all verifications in the run passed.  Fixed
seeds give bit-identical reports.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from . import __version__
from .classification import (RowCase, classification_cases,
                             lemma_membership_ideal_a,
                             lemma_membership_ideal_b, pair_product_ideal,
                             relation_f, relation_g, relation_p)
from .combinat import Partition, Tableau, d_min, multinomial, partitions_of
from .equivariant import (decompose_quotient, is_permutation_module_sum,
                          is_symmetric, tangent_dimension)
from .ideals import Ideal, orbit_ideal
from .poly import Polynomial, parse_polynomial, power_sum
from .specht import (coinvariant_isotypic_basis, distinct_specht_polynomials,
                     specht_polynomial)
from .tanisaki import MODES, inclusion_chain_check, tanisaki_ideal

SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    """Settings shared by all verbs."""

    n: int
    command: str
    output_path: str | None = None
    format: str = "text"
    seed: int = 0
    parallelism: int = 1


def _parse_partition(text: str) -> Partition:
    return Partition(int(p) for p in text.split(","))


def _parse_tableau(text: str) -> Tableau:
    return Tableau([[int(v) for v in row.split(",")] for row in text.split("/")])


def _random_parameters(seed: int, count: int = 3) -> list[tuple[Fraction, Fraction]]:
    """Small-height rational parameter pairs, deterministic per seed."""
    rng = random.Random(seed)
    out: list[tuple[Fraction, Fraction]] = []
    while len(out) < count:
        a = Fraction(rng.randint(-7, 7), rng.randint(1, 7))
        b = Fraction(rng.randint(-7, 7), rng.randint(1, 7))
        if (a, b) == (0, 0) or b == 0 or a == 0:
            continue  # keep clear of the torus-fixed members, sampled anyway
        out.append((a, b))
    return out


def _ideal_from_args(args, n: int) -> Ideal:
    if getattr(args, "gens", None):
        gens = [parse_polynomial(chunk, n) for chunk in args.gens.split(";") if chunk.strip()]
        return Ideal(n, gens)
    if getattr(args, "row", None):
        from .classification import row_case

        param = None
        if getattr(args, "param", None):
            a, b = args.param.split(":")
            param = (Fraction(a), Fraction(b))
        return row_case(args.row, n, r=getattr(args, "colength", None), param=param).ideal
    if getattr(args, "tanisaki", None):
        return tanisaki_ideal(_parse_partition(args.tanisaki))
    raise SystemExit("provide an ideal via --gens, --row, or --tanisaki")


# ---------------------------------------------------------------------------
# verb implementations; each returns (results, ok)


def cmd_specht(args, config: RunConfig) -> tuple[list[dict], bool]:
    lam = _parse_partition(args.lam)
    if lam.n != config.n:
        raise SystemExit(f"partition {lam.parts} is not a partition of n={config.n}")
    result: dict = {
        "lambda": list(lam.parts),
        "min_degree": d_min(lam),
    }
    if args.tableau:
        t = _parse_tableau(args.tableau)
        if t.shape != lam:
            raise SystemExit(f"tableau shape {t.shape.parts} does not match {lam.parts}")
        result["tableau"] = args.tableau
        result["specht_polynomial"] = str(specht_polynomial(t, config.n))
    else:
        from .combinat import standard_tableaux

        spechts = [specht_polynomial(t) for t in standard_tableaux(lam)]
        basis = coinvariant_isotypic_basis(lam)
        result["specht_polynomials"] = [str(f) for f in spechts]
        result["specht_count"] = len(spechts)
        result["module_dimension"] = len(spechts)
        result["ideal_generators"] = [str(f) for f in distinct_specht_polynomials(lam)]
        result["higher_specht_basis"] = [str(f) for f in basis]
        result["higher_specht_count"] = len(basis)
    return [result], True


def cmd_tanisaki(args, config: RunConfig) -> tuple[list[dict], bool]:
    n = config.n
    if not 2 <= n <= 6:
        raise SystemExit("the ideal-theoretic verbs are guarded at 2 <= n <= 6")
    lam = _parse_partition(args.lam)
    if lam.n != n:
        raise SystemExit(f"partition {lam.parts} is not a partition of n={n}")
    ideal = tanisaki_ideal(lam, args.mode if args.mode != "all" else "subset_elementary")
    record: dict = {
        "lambda": list(lam.parts),
        "mode": args.mode,
        "generators": [str(g) for g in ideal.generators],
        "groebner_basis": [str(g) for g in ideal.groebner_basis()],
        "colength": ideal.colength(),
        "expected_colength": multinomial(lam),
        "decomposition": str(decompose_quotient(ideal)),
    }
    ok = record["colength"] == record["expected_colength"]
    if args.mode == "all":
        agree = all(tanisaki_ideal(lam, mode) == ideal for mode in MODES)
        record["modes_agree"] = agree
        ok = ok and agree
    record["ok"] = ok
    return [record], ok


def verify_row_case(case: RowCase) -> dict:
    """Full verification of one classification entry (used by table1)."""
    started = time.monotonic()
    ideal = case.ideal
    record: dict = {
        "row": case.label,
        "n": case.n,
        "colength_expected": case.colength,
        "geometry_expected": case.geometry,
        "component_dim": case.component_dim,
    }
    if case.param is not None:
        record["param"] = [str(case.param[0]), str(case.param[1])]
    checks: dict[str, bool] = {}
    checks["symmetric"] = is_symmetric(ideal)
    checks["homogeneous"] = ideal.is_homogeneous()
    colength = ideal.colength()
    record["colength"] = colength
    checks["colength"] = colength == case.colength and colength <= 2 * case.n
    decomposition = decompose_quotient(ideal)
    record["decomposition"] = str(decomposition)
    checks["decomposition"] = decomposition == case.expected
    report = tangent_dimension(ideal)
    record["tangent_dim"] = report.tangent_dim
    if case.geometry == "smooth":
        checks["geometry"] = report.tangent_dim == case.component_dim
    else:
        checks["geometry"] = report.tangent_dim > case.component_dim
    record["checks"] = checks
    record["ok"] = all(checks.values())
    record["wall_time_s"] = round(time.monotonic() - started, 3)
    return record


def cmd_table1(args, config: RunConfig) -> tuple[list[dict], bool]:
    n = config.n
    if not 3 <= n <= 5:
        raise SystemExit("table1 is guarded at 3 <= n <= 5")
    cases = classification_cases(n, _random_parameters(config.seed))
    if config.parallelism > 1:
        with Pool(config.parallelism) as pool:
            results = pool.map(verify_row_case, cases)
    else:
        results = [verify_row_case(case) for case in cases]
    ok = all(r["ok"] for r in results)
    return results, ok


def cmd_lemmas(args, config: RunConfig) -> tuple[list[dict], bool]:
    n = config.n
    if not 3 <= n <= 5:
        raise SystemExit("lemmas is guarded at 3 <= n <= 5")
    results: list[dict] = []
    x1 = Polynomial.variable(1, n)
    x2 = Polynomial.variable(2, n)
    pair_ideal = pair_product_ideal(n)
    f, g, p = relation_f(n), relation_g(n), relation_p(n)
    if n == 3:
        containments = {
            "relation_f_vanishes": f.is_zero(),
            "relation_g_vanishes": g.is_zero(),
            "relation_p": pair_ideal.contains(p),
        }
    else:
        containments = {
            "relation_f": pair_ideal.contains(f),
            "relation_g": pair_ideal.contains(g),
            "relation_p": pair_ideal.contains(p),
        }
    ideal_a = lemma_membership_ideal_a(n)
    ideal_b = lemma_membership_ideal_b(n)
    cube_difference = x1 ** 3 - x2 ** 3
    p2_difference = power_sum(2, n) * (x1 - x2)
    memberships = {
        "cube_difference_in_first": ideal_a.contains(cube_difference),
        "p2_difference_in_second": ideal_b.contains(p2_difference),
        "cube_difference_in_second": ideal_b.contains(cube_difference),
    }
    results.append({"containments": containments, "memberships": memberships})
    chain_records = []
    for mu in partitions_of(n):
        report = inclusion_chain_check(mu)
        chain_records.append({
            "mu": list(mu.parts),
            "holds": report.ok,
            "first_strict": report.first_strict,
            "second_strict": report.second_strict,
            "witnesses": report.witnesses,
            "failures": report.failures,
        })
    results.append({"inclusion_chains": chain_records})
    ok = (all(containments.values()) and all(memberships.values())
          and all(r["holds"] for r in chain_records))
    return results, ok


def cmd_tangent(args, config: RunConfig) -> tuple[list[dict], bool]:
    if not 2 <= config.n <= 6:
        raise SystemExit("the ideal-theoretic verbs are guarded at 2 <= n <= 6")
    ideal = _ideal_from_args(args, config.n)
    report = tangent_dimension(ideal)
    record = json.loads(report.to_json())
    record["generators"] = [str(g) for g in ideal.generators]
    return [record], True


def cmd_decompose(args, config: RunConfig) -> tuple[list[dict], bool]:
    if not 2 <= config.n <= 6:
        raise SystemExit("the ideal-theoretic verbs are guarded at 2 <= n <= 6")
    ideal = _ideal_from_args(args, config.n)
    decomposition = decompose_quotient(ideal)
    perm = is_permutation_module_sum(decomposition)
    record = {
        "generators": [str(g) for g in ideal.generators],
        "colength": ideal.colength(),
        "decomposition": str(decomposition),
        "multiplicities": {str(list(lam.parts)): m for lam, m in decomposition.multiplicities},
        "permutation_module_sum": None if perm is None else [list(p.parts) for p in perm],
    }
    return [record], True


def cmd_gr(args, config: RunConfig) -> tuple[list[dict], bool]:
    if not 2 <= config.n <= 6:
        raise SystemExit("the ideal-theoretic verbs are guarded at 2 <= n <= 6")
    point = tuple(Fraction(v) for v in args.point.split(","))
    if len(point) != config.n:
        raise SystemExit(f"point has {len(point)} coordinates, expected {config.n}")
    ideal = orbit_ideal(point)
    graded = ideal.associated_graded()
    record: dict = {
        "point": [str(v) for v in point],
        "orbit_colength": ideal.colength(),
        "graded_generators": [str(g) for g in graded.generators],
        "graded_colength": graded.colength(),
    }
    ok = record["orbit_colength"] == record["graded_colength"]
    multiplicities = sorted((point.count(v) for v in set(point)), reverse=True)
    lam = Partition(multiplicities)
    record["orbit_type"] = list(lam.parts)
    if sum(point) == 0:
        record["matches_tanisaki"] = graded == tanisaki_ideal(lam)
        ok = ok and record["matches_tanisaki"]
    record["ok"] = ok
    return [record], ok


# ---------------------------------------------------------------------------
# report plumbing


def _strip_wall_times(obj):
    """Remove timing fields so JSON reports are byte-identical per seed."""
    if isinstance(obj, dict):
        return {k: _strip_wall_times(v) for k, v in obj.items() if k != "wall_time_s"}
    if isinstance(obj, list):
        return [_strip_wall_times(v) for v in obj]
    return obj


def _render_text(record: dict) -> str:
    lines = [f"# {record['command']} n={record['n']} seed={record['seed']} "
             f"version={record['library_version']} ok={record['ok']}"]

    def walk(obj, indent: int) -> None:
        pad = "  " * indent
        if isinstance(obj, dict):
            for key, value in obj.items():
                if isinstance(value, (dict, list)) and value and not isinstance(value, str):
                    lines.append(f"{pad}{key}:")
                    walk(value, indent + 1)
                else:
                    lines.append(f"{pad}{key}: {value}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(item, indent + 1)
                else:
                    lines.append(f"{pad}- {item}")

    walk(record["results"], 1)
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="symideal",
        description="exact verification tools for zero-dimensional symmetric ideals")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", default=None, help="write the report to this path")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("specht", help="Specht and higher Specht polynomials of a shape")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    p.add_argument("--tableau", default=None, help="rows joined by /, entries by ,")

    p = sub.add_parser("tanisaki", help="build and verify the ideal of a partition")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mode", choices=MODES + ("all",), default="all")

    p = sub.add_parser("table1", help="verify the full colength <= 2n classification")
    common(p)

    p = sub.add_parser("lemmas", help="verify the membership relations and inclusion chains")
    common(p)

    for verb in ("tangent", "decompose"):
        p = sub.add_parser(verb)
        common(p)
        p.add_argument("--gens", default=None, help="semicolon-separated generators")
        p.add_argument("--row", default=None, help="classification row label, e.g. 7a")
        p.add_argument("--colength", type=int, default=None)
        p.add_argument("--param", default=None, help="a:b for parameter rows")
        p.add_argument("--tanisaki", default=None, help="partition, e.g. 2,1")

    p = sub.add_parser("gr", help="orbit vanishing ideal and its associated graded")
    common(p)
    p.add_argument("--point", required=True, help="comma-separated rational coordinates")

    args = parser.parse_args(argv)
    config = RunConfig(n=args.n, command=args.command, output_path=args.out,
                       format=args.format, seed=args.seed, parallelism=args.jobs)

    handlers = {
        "specht": cmd_specht,
        "tanisaki": cmd_tanisaki,
        "table1": cmd_table1,
        "lemmas": cmd_lemmas,
        "tangent": cmd_tangent,
        "decompose": cmd_decompose,
        "gr": cmd_gr,
    }
    started = time.monotonic()
    try:
        results, ok = handlers[args.command](args, config)
    except ValueError as error:
        parser.exit(2, f"symideal {args.command}: {error}\n")
    record = {
        "schema_version": SCHEMA_VERSION,
        "library_version": __version__,
        "monomial_order": "degrevlex",
        "command": config.command,
        "n": config.n,
        "seed": config.seed,
        "ok": ok,
        "results": results,
        "wall_time_s": round(time.monotonic() - started, 3),
    }
    if config.format == "json":
        text = json.dumps(_strip_wall_times(record), indent=2, default=str) + "\n"
    else:
        text = _render_text(record)
    if config.output_path:
        with open(config.output_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
