"""``artinlab`` command-line entry point.

Exit codes: 0 success, 2 usage or parameter error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import asdict, is_dataclass
from pathlib import Path

from . import census, densities
from .characters import build_unit_group, max_primitive_char_sum
from .config import RunConfig, load_config
from .errors import BudgetError, ConfigError, OutputError
from .output import csv_text, fmt, json_text, write_text

EXIT_OK, EXIT_USAGE, EXIT_BUDGET = 0, 2, 3


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value configuration file")
    common.add_argument("--threads", type=int)
    common.add_argument("--prime-cutoff", type=int, help="prime cutoff for Euler products")
    common.add_argument("--output-dir", type=Path)
    common.add_argument("--out", help="CSV output path (default: stdout)")
    common.add_argument("--summary", help="JSON summary path")
    common.add_argument(
        "--record-time", action="store_true", help="include wall time in the JSON summary"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinlab", description="Primitive roots, Artin densities and character sums."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common()

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add("na", "count primes p <= x with a a primitive root")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--x", type=int, required=True)

    p = add("na-range", "N_a(x) for a range of a")
    p.add_argument("--a-min", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--x", type=int, required=True)

    p = add("density", "Hooley density profile of a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--signed", action="store_true", help="signed squarefree-part convention")

    p = add("artin-const", "Artin's constant as a truncated Euler product")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--h", type=int, default=1, help="evaluate A(h) instead of A")

    p = add("charsum", "max |sum_{a<=y} chi(a)| over primitive chi mod q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--method", choices=("fft", "naive"), default="fft")

    p = add("census", "character-sum census over moduli q <= x")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=3.0)
    p.add_argument("--thresholds", type=_floats, default=None, help="delta values")
    p.add_argument(
        "--exponents", type=_floats, default=None, help="s values: threshold y/(log y)^s"
    )

    p = add("levelsets", "counts of Omega(n) = w for n <= y")
    p.add_argument("--y", type=int, required=True)

    p = add("flambda", "#{a <= y : Omega(a) > lambda loglog y}")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)

    p = add("tk", "T_k(w, y) by enumeration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = add("large-sieve", "S_k / ((x^2 + y^k) T_k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = add("moments", "first and second moments of N_a(x) over |a| <= y")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--d", type=float, default=10.0)

    p = add("phi-sum", "sum_{p<=x} phi(p-1)/p against A pi(x)")
    p.add_argument("--x", type=int, required=True)

    p = add("titchmarsh", "sum_{p<=x} 2^omega(p-1)")
    p.add_argument("--x", type=int, nargs="+", required=True)

    p = add("lambda", "lambda(D, x, y) and its range conditions")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--range-constant", type=float, default=census.RANGE_Y_CONSTANT)
    return parser


class _Run:
    def __init__(self, args, cfg: RunConfig, stdout):
        self.args = args
        self.cfg = cfg
        self.stdout = stdout
        self.start = time.perf_counter()

    def _path(self, name):
        path = Path(name)
        return path if path.is_absolute() else self.cfg.output_dir / path

    def say(self, **fields):
        self.stdout.write(" ".join(f"{k}={fmt(v)}" for k, v in fields.items()) + "\n")

    def emit_csv(self, text):
        if self.args.out:
            write_text(text, self._path(self.args.out))
        else:
            self.stdout.write(text)

    def emit_summary(self, payload):
        if not self.args.summary:
            return
        if is_dataclass(payload):
            payload = asdict(payload)
        payload = {"command": self.args.command, **payload}
        if self.args.record_time:
            payload["wall_time_s"] = round(time.perf_counter() - self.start, 6)
        write_text(json_text(payload), self._path(self.args.summary))


def _dispatch(run: _Run) -> None:
    a, cfg = run.args, run.cfg
    cmd = a.command
    if cmd == "na":
        n = densities.count_na(a.a, a.x)
        pred = densities.predicted_count(a.a, a.x, prime_cutoff=cfg.prime_cutoff)
        run.say(N_a=n, prediction=pred)
        run.emit_summary({"a": a.a, "x": a.x, "N_a": n, "prediction": pred})
    elif cmd == "na-range":
        if a.a_max < a.a_min:
            raise ValueError("--a-max must be >= --a-min")
        y = max(abs(a.a_min), abs(a.a_max))
        counts = densities.na_range(y, a.x, threads=cfg.threads)
        pi_x = densities.tables_for(a.x).primes.pi(a.x)
        lines = ["a,N_a,density,prediction"]
        for v in range(a.a_min, a.a_max + 1):
            dens = densities.hooley_density(v, cfg.prime_cutoff).density
            lines.append(f"{v},{int(counts[v + y])},{fmt(dens)},{fmt(dens * pi_x)}")
        run.emit_csv("\n".join(lines) + "\n")
    elif cmd == "density":
        prof = densities.hooley_density(a.a, cfg.prime_cutoff, signed=a.signed)
        run.say(a=prof.a, h=prof.h, b=prof.b, negative=prof.negative, density=prof.density,
                degenerate=prof.degenerate)
        run.emit_summary(prof)
    elif cmd == "artin-const":
        cutoff = a.cutoff or cfg.prime_cutoff
        val = densities.artin_constant(cutoff) if a.h == 1 else densities.a_of_h(a.h, cutoff)
        lo, hi = val.interval
        run.say(A=val.value, tail_bound=val.tail_bound, lower=lo, upper=hi)
        run.emit_summary(val)
    elif cmd == "charsum":
        if a.q < 3:
            raise ValueError("--q must be >= 3")
        rec = max_primitive_char_sum(build_unit_group(a.q), a.y, method=a.method)
        argmax = "none" if rec.argmax_c is None else ":".join(map(str, rec.argmax_c))
        run.say(q=rec.q, y=rec.y, max_abs=rec.max_abs, argmax_c=argmax,
                num_primitive=rec.num_primitive, empty=rec.empty)
        run.emit_summary(rec)
    elif cmd == "census":
        thresholds = list(a.thresholds or [])
        if a.exponents:
            thresholds += census.thresholds_from_exponents(a.y, a.exponents)
        res = census.charsum_census(a.x, a.y, thresholds, lam=a.lam, threads=cfg.threads,
                                    budgets=cfg.budgets)
        run.emit_csv(csv_text(res.rows, "census", len(thresholds)))
        summary = res.summary()
        if a.exponents:
            summary["exponents"] = list(a.exponents)
        run.emit_summary(summary)
    elif cmd == "levelsets":
        rows = census.level_set_counts(a.y)
        run.emit_csv(csv_text(rows, "levelsets"))
        run.emit_summary({"y": a.y, "total": sum(r.count for r in rows)})
    elif cmd == "flambda":
        val = census.f_lambda(a.y, a.lam)
        run.say(F_lambda=val)
        run.emit_summary({"y": a.y, "lambda": a.lam, "F_lambda": val})
    elif cmd == "tk":
        res = census.t_k_bruteforce(a.k, a.w, a.y, budget=cfg.budgets.get("tk"))
        run.say(T_k=res.value, bound=res.bound, multinomial_bound=res.multinomial_bound)
        run.emit_summary(res)
    elif cmd == "large-sieve":
        s_k, t_k, ratio = census.large_sieve_terms(a.k, a.w, a.x, a.y, budgets=cfg.budgets)
        run.say(S_k=s_k, T_k=t_k, ratio=ratio)
        run.emit_summary({"k": a.k, "w": a.w, "x": a.x, "y": a.y, "S_k": s_k, "T_k": t_k,
                          "ratio": ratio})
    elif cmd == "moments":
        rep = census.moment_report(a.x, a.y, threads=cfg.threads, D=a.d,
                                   prime_cutoff=cfg.prime_cutoff, budgets=cfg.budgets)
        run.emit_csv(csv_text([rep], "moments"))
        run.emit_summary({**asdict(rep), "first_ratio": rep.first_ratio})
    elif cmd == "phi-sum":
        tables = densities.tables_for(a.x)
        val = census.phi_ratio_sum(a.x, tables)
        main = densities.artin_constant(cfg.prime_cutoff).value * tables.primes.pi(a.x)
        run.say(sum=val, A_pi_x=main, ratio=val / main)
        run.emit_summary({"x": a.x, "sum": val, "A_pi_x": main})
    elif cmd == "titchmarsh":
        rows = [census.titchmarsh_sum(x) for x in a.x]
        run.emit_csv(csv_text(rows, "titchmarsh"))
        run.emit_summary({"rows": rows})
    elif cmd == "lambda":
        ch = census.lambda_of(a.d, a.x, a.y, a.range_constant)
        run.say(**{"lambda": ch.lam, "range_c_ok": ch.range_c_ok, "range_y_ok": ch.range_y_ok})
        run.emit_summary(ch)
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(f"unknown command {cmd}")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(
            args.config,
            threads=args.threads,
            prime_cutoff=args.prime_cutoff,
            output_dir=args.output_dir,
        )
        _dispatch(_Run(args, cfg, stdout))
    except BudgetError as exc:
        stderr.write(f"artinlab: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (ConfigError, ValueError) as exc:
        stderr.write(f"artinlab: error: {exc}\n")
        return EXIT_USAGE
    except OutputError as exc:
        stderr.write(f"artinlab: {exc}\n")
        return 1
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
