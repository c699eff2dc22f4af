"""Command-line entry point: ``ramseyclass <subcommand> ...``.

Exit codes: 0 for a definite answer (including a negative one), 2 when a
search ran out of budget, 1 for usage and precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arrowing, catalog, classes, containment, densities, randlab
from .arrowing import DEFAULT_BUDGET, ArrowInstance, Outcome
from .hypercore import HypergraphFormatError, serialize, to_json

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _edges_json(witness):
    if witness is None:
        return None
    return [{"edge": list(e), "color": c} for e, c in sorted(witness.items())]


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, data) -> None:
        if self.as_json:
            print(json.dumps(data, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


# ---------------------------------------------------------------------------
# subcommands


def cmd_density(args, out):
    kind = args.kind
    if kind == "delta":
        qs = catalog.resolve_list(args.input)
        if args.s is None:
            raise UsageError("--kind delta needs --s")
        rep = densities.delta_parameter(qs, args.s)
        data = {"mu": frac(rep.mu), "sigma": frac(rep.sigma), "delta": frac(rep.delta), "sigmaArgIndex": rep.sigma_arg_index}
        out.emit(f"mu={frac(rep.mu)} sigma={frac(rep.sigma)} delta={frac(rep.delta)}", data)
        return EXIT_OK
    f = catalog.resolve(args.input)
    if kind == "m":
        rep = densities.max_density(f)
    elif kind == "mr":
        rep = densities.max_r_density(f)
    else:
        if args.second is None:
            raise UsageError("--kind asym needs --second")
        rep = densities.asym_density(f, catalog.resolve(args.second))
    data = {"kind": kind, "value": frac(rep.value), "maximizer": list(rep.maximizer), "uniqueAtWhole": rep.unique_at_whole}
    out.emit(frac(rep.value), data)
    return EXIT_OK


def cmd_asym(args, out):
    t, f = catalog.resolve(args.t), catalog.resolve(args.f)
    rep = densities.asym_density(t, f)
    data = {
        "value": frac(rep.value),
        "maximizer": list(rep.maximizer),
        "strictlyFBalanced": densities.is_strictly_f_balanced(t, f),
    }
    lines = [frac(rep.value), f"strictly F-balanced: {data['strictlyFBalanced']}"]
    if args.heart:
        h = densities.find_heart(t, f)
        data["heart"] = {
            "tPrime": serialize(h.t_prime), "tVertices": list(h.t_vertices),
            "fPrime": serialize(h.f_prime), "fVertices": list(h.f_vertices),
        }
        lines.append(f"heart T' on {list(h.t_vertices)}: {h.t_prime}")
        lines.append(f"heart F' on {list(h.f_vertices)}: {h.f_prime}")
    out.emit("\n".join(lines), data)
    return EXIT_OK


def cmd_classes(args, out):
    rep = classes.in_xr_or_yr(catalog.resolve(args.input))
    text = f"inXr: {rep.in_xr} witness={rep.xr_witness}\ninYr: {rep.in_yr} witness={rep.yr_witness}"
    out.emit(text, rep.as_dict())
    return EXIT_OK


def cmd_dense(args, out):
    v = classes.ramsey_dense_sufficient(catalog.resolve(args.t), catalog.resolve(args.f))
    data = {
        "status": v.status.value,
        "reason": v.reason,
        "fPrime": serialize(v.f_prime) if v.f_prime is not None else None,
        "trace": v.trace,
    }
    out.emit(f"{v.status.value}: {v.reason}", data)
    return EXIT_OK


def cmd_arrow(args, out):
    inst = ArrowInstance(catalog.resolve(args.host), tuple(catalog.resolve_list(args.targets)))
    res = arrowing.arrows(inst, args.budget)
    data = {"outcome": res.outcome.value, "nodes": res.nodes, "witness": res.witness_json()}
    text = res.outcome.value
    if res.witness is not None:
        text += "\n" + json.dumps(res.witness_json())
    out.emit(text, data)
    return EXIT_UNKNOWN if res.outcome is Outcome.UNKNOWN else EXIT_OK


def cmd_ramsey(args, out):
    try:
        res = arrowing.ramsey_number(catalog.resolve_list(args.targets), args.cap, args.budget)
    except arrowing.RamseySearchError as exc:
        budget_hit = "budget" in str(exc)
        out.emit(f"UNKNOWN: {exc}", {"value": None, "error": str(exc)})
        return EXIT_UNKNOWN if budget_hit or "no N" in str(exc) else EXIT_ERROR
    data = {
        "value": res.value,
        "witness": res.witness_json(),
        "trace": [[n, o.value] for n, o in res.trace],
    }
    out.emit(f"{res.value}\n" + json.dumps(res.witness_json()), data)
    return EXIT_OK


def cmd_contain(args, out):
    v = containment.containment_decision(catalog.resolve_list(args.fs), catalog.resolve_list(args.qs), args.budget)
    data = v.as_dict()
    verdict = "HOLDS" if v.holds else "DOES NOT HOLD"
    if v.holds:
        text = f"{verdict}\ncertificate: {json.dumps(list(v.certificate))}"
    else:
        text = f"{verdict}\n" + json.dumps(data["refutation"])
    out.emit(text, data)
    return EXIT_OK


def cmd_equiv(args, out):
    res = containment.equivalence_decision(catalog.resolve_list(args.fs), catalog.resolve_list(args.qs))
    data = {"equivalent": res.equivalent, "mapping": list(res.mapping) if res.mapping else None}
    out.emit("EQUIVALENT" if res.equivalent else "NOT EQUIVALENT", data)
    return EXIT_OK


def cmd_cor71(args, out):
    rep = containment.corollary71_verify(args.item, args.r, args.k, args.l, args.budget, args.cap)
    data = rep.as_dict()
    text = (
        f"item {rep.item}: {'separated' if rep.separated else 'NOT separated'}"
        f" ({len(rep.partition.failures)} assignments refuted)"
    )
    if rep.q is not None:
        text += f"\nq = {rep.q}"
    out.emit(text, data)
    return EXIT_OK


def _event(text: str):
    """``copy:F``, ``arrow:F1,F2`` or ``contain:s:Q1,Q2,...``."""
    kind, _, rest = text.partition(":")
    if kind == "copy":
        return randlab.ContainsCopy(catalog.resolve(rest))
    if kind == "arrow":
        return randlab.ArrowsTuple(tuple(catalog.resolve_list(rest)))
    if kind == "contain":
        s, _, qs = rest.partition(":")
        try:
            s = int(s)
        except ValueError:
            raise UsageError(f"bad event {text!r}: expected contain:<s>:<Q1,Q2,...>") from None
        return randlab.ContainmentHolds(s, tuple(catalog.resolve_list(qs)))
    raise UsageError(f"bad event {text!r}: use copy:F, arrow:F1,F2 or contain:s:Q1,Q2")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def cmd_sample(args, out):
    h = randlab.sample(randlab.SampleConfig(args.r, args.n, args.p, args.seed))
    out.emit(serialize(h), to_json(h))
    return EXIT_OK


def cmd_sweep(args, out):
    event = _event(args.event)
    ns = _ints(args.n_list)
    records = []
    for n in ns:
        base = randlab.SampleConfig(event.r, n, 0.0, args.seed)
        records += randlab.sweep(base, event, _floats(args.p_grid), args.trials, args.budget, args.threads)
    text = randlab.records_to_csv(records)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    data = [{"n": r.n, "p": r.p, "trials": r.trials, "successes": r.successes, "phat": r.phat} for r in records]
    out.emit(text.rstrip("\n"), data)
    return EXIT_OK


def cmd_fit(args, out):
    event = _event(args.event)
    fit = randlab.fit_threshold(event, _ints(args.n_list), args.trials, args.tol, args.seed, args.budget, args.threads)
    data = fit.as_dict()
    out.emit(json.dumps(data, indent=2), data)
    return EXIT_OK


def cmd_catalog(args, out):
    names = sorted(catalog.CATALOG, key=lambda k: (k[0], len(k), k))
    if args.name:
        h = catalog.resolve(args.name)
        out.emit(serialize(h), to_json(h))
        return EXIT_OK
    lines = [f"{name:8s} {catalog.CATALOG[name]}" for name in names]
    out.emit("\n".join(lines), {name: serialize(catalog.CATALOG[name]) for name in names})
    return EXIT_OK


# ---------------------------------------------------------------------------


def _add_globals(p, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=default(0), help="master random seed")
    p.add_argument("--budget", type=int, default=default(DEFAULT_BUDGET), help="search node budget")
    p.add_argument("--threads", type=int, default=default(1), help="worker processes for trials")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramseyclass", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    common = _Parser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("density", cmd_density, "m, m_r, asymmetric m_r or the delta parameter")
    p.add_argument("--input", required=True, help="hypergraph (for delta: comma-separated Q_1..Q_t)")
    p.add_argument("--kind", choices=["m", "mr", "asym", "delta"], default="mr")
    p.add_argument("--second", help="F for --kind asym")
    p.add_argument("--s", type=int, help="s for --kind delta")

    p = add("asym", cmd_asym, "asymmetric maximum r-density m_r(T, F)")
    p.add_argument("--t", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--heart", action="store_true", help="also report the least heart")

    p = add("classes", cmd_classes, "membership in X_r and Y_r")
    p.add_argument("--input", required=True)

    p = add("dense", cmd_dense, "sufficient test for Ramsey-denseness")
    p.add_argument("--t", required=True)
    p.add_argument("--f", required=True)

    p = add("arrow", cmd_arrow, "decide G -> (F_1, ..., F_s)")
    p.add_argument("--host", required=True)
    p.add_argument("--targets", required=True)

    p = add("ramsey", cmd_ramsey, "Ramsey number by search over complete hosts")
    p.add_argument("--targets", required=True)
    p.add_argument("--cap", type=int, default=12)

    p = add("contain", cmd_contain, "decide R(fs) ⊆ R(qs) via the partition condition")
    p.add_argument("--fs", required=True)
    p.add_argument("--qs", required=True)

    p = add("equiv", cmd_equiv, "Ramsey equivalence of two tuples")
    p.add_argument("--fs", required=True)
    p.add_argument("--qs", required=True)

    p = add("cor71", cmd_cor71, "check one of the three separation examples")
    p.add_argument("--item", choices=["i", "ii", "iii"], required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--cap", type=int, default=12)

    p = add("sample", cmd_sample, "draw one random r-graph")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)

    p = add("sweep", cmd_sweep, "success fractions over a p grid (CSV)")
    p.add_argument("--event", required=True, help="copy:F | arrow:F1,F2 | contain:s:Q1,Q2")
    p.add_argument("--n-list", required=True)
    p.add_argument("--p-grid", required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--output", help="also write the CSV here")

    p = add("fit", cmd_fit, "threshold exponent by bisection and log-log fit")
    p.add_argument("--event", required=True, help="copy:F | arrow:F1,F2 | contain:s:Q1,Q2")
    p.add_argument("--n-list", required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tol", type=float, default=2.0**-12)

    p = add("catalog", cmd_catalog, "list the named hypergraphs")
    p.add_argument("name", nargs="?")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_ERROR
    out = Output(args.json, stdout)
    try:
        return args.func(args, out)
    except (containment.UndecidedError, randlab.BudgetExhausted) as exc:
        print(f"unknown: {exc}", file=stderr)
        return EXIT_UNKNOWN
    except (UsageError, HypergraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
