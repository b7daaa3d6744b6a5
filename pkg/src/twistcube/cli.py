"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 hypotheses of the main
theorem unmet (``nobody`` only), 3 malformed input.

The environment variable ``TWISTCUBE_THREADS`` sets the number of worker
processes used in batch mode.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import formats
from .characters import character, cube_character, generalized_demazure_character, path_character
from .cube import TwistedCube, scaled_vertices
from .rootsys import CartanMatrix, RootSystemError, builtin_cartan, cartan_from_json, load_cartan
from .tableaux import condition_P_prime, enumerate_tableaux, verify_bijection

EXIT_OK, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_INPUT = 0, 1, 2, 3
BODY_LABEL = "Delta(Z_i, L_{i,m}, nu_Y)"


class InputError(Exception):
    pass


@dataclass
class JobSpec:
    cartan: CartanMatrix
    word: tuple[int, ...]
    mults: tuple[int, ...]
    source: str = ""
    fmt: str = "json"
    opposite: bool | None = None
    dilations: tuple[int, ...] = (1, 2, 3)
    method: str = "path"

    @property
    def cube(self) -> TwistedCube:
        return TwistedCube(self.cartan, self.word, self.mults)

    def header(self) -> dict:
        return {"cartan": self.source, "word": list(self.word), "mult": list(self.mults)}


@dataclass
class Result:
    code: int
    payload: object
    text: str | None = None
    messages: list = field(default_factory=list)


def _int_list(text, what) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [t for t in str(text).replace(" ", "").split(",") if t != ""]
    try:
        values = tuple(int(v) for v in items)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be a comma-separated list of integers, got {text!r}")
    return values


def make_job(*, type_name=None, cartan=None, word, mult, **flags) -> JobSpec:
    try:
        if (type_name is None) == (cartan is None):
            raise InputError("give exactly one of --type or --cartan")
        if type_name is not None:
            cm = builtin_cartan(type_name)
            source = cm.name
        elif isinstance(cartan, dict):
            cm = cartan_from_json(cartan)
            source = "custom"
        else:
            cm = load_cartan(cartan)
            source = str(cartan)
        job = JobSpec(cm, _int_list(word, "word"), _int_list(mult, "multiplicities"), source)
        for key, value in flags.items():
            if value is not None:
                setattr(job, key, value)
        job.cube  # validates lengths and ranges
    except (RootSystemError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    if any(r < 1 for r in job.dilations):
        raise InputError("dilations must be positive integers")
    return job


# --- commands -----------------------------------------------------------------

def cmd_check(job: JobSpec) -> Result:
    cube = job.cube
    report = job.header() | {
        "reduced": job.cartan.is_reduced(job.word),
        "condition_P": cube.condition_P(),
        "condition_P_prime": condition_P_prime(cube),
    }
    text = "".join(f"{k}: {report[k]}\n" for k in ("reduced", "condition_P", "condition_P_prime"))
    return Result(EXIT_OK, report, text)


def cmd_polytope(job: JobSpec) -> Result:
    flip = bool(job.opposite)
    cube = job.cube
    payload = job.header() | formats.polytope_to_json(cube, flip)
    if job.fmt == "hrep":
        text = formats.polytope_to_hrep(cube, flip)
    else:
        text = formats.polytope_to_text(cube, flip)
    return Result(EXIT_OK, payload, text)


def cmd_nobody(job: JobSpec) -> Result:
    flip = True if job.opposite is None else job.opposite
    cube = job.cube
    reduced = job.cartan.is_reduced(job.word)
    cond = cube.condition_P()
    payload = job.header() | {"label": BODY_LABEL, "reduced": reduced}
    payload |= formats.polytope_to_json(cube, flip)
    messages = []
    code = EXIT_OK
    if not (reduced and cond):
        unmet = [name for name, ok in (("reduced word", reduced), ("condition (P)", cond)) if not ok]
        warning = (
            "hypotheses unmet (" + ", ".join(unmet) + "); the polytope is emitted "
            "but is not certified to be the Newton-Okounkov body"
        )
        payload["warning"] = warning
        messages.append("warning: " + warning)
        code = EXIT_HYPOTHESIS
    if job.fmt == "hrep":
        text = formats.polytope_to_hrep(cube, flip)
    else:
        text = f"{BODY_LABEL}\n" + formats.polytope_to_text(cube, flip)
    return Result(code, payload, text, messages)


def cmd_tableaux(job: JobSpec) -> Result:
    ts = enumerate_tableaux(job.cube)
    payload = formats.tableaux_to_json(ts)
    return Result(EXIT_OK, payload, formats.tableaux_to_text(ts))


def cmd_character(job: JobSpec) -> Result:
    ch = character(job.cube, job.method)
    payload = ch.to_json()
    text = "".join(f"{item['coeff']} * e^{tuple(item['weight'])}\n" for item in payload)
    text += f"dimension: {ch.dimension()}\n"
    return Result(EXIT_OK, payload, text)


def _bound_agreement(cube: TwistedCube) -> list:
    """Points where the two formulas for A_k disagree (should be none)."""
    bad = []
    samples = set(cube.lattice_points()) | set(cube.vertices())
    for pt in sorted(samples):
        for k in range(1, cube.n + 1):
            suffix = pt[k:]
            if cube.bound_A(k, suffix) != cube.bound_A_closed(k, suffix):
                bad.append({"k": k, "suffix": [str(v) for v in suffix]})
    return bad


def cmd_verify(job: JobSpec) -> Result:
    cube = job.cube
    cond = cube.condition_P()
    checks: dict[str, dict] = {}

    bad = _bound_agreement(cube)
    checks["bound_formulas"] = {"status": "pass" if not bad else "fail", "counterexamples": bad}

    ts = enumerate_tableaux(cube)
    lattice = cube.lattice_points()
    if cond:
        rep = verify_bijection(cube)
        checks["bijection"] = {"status": "pass" if rep.bijective else "fail"} | rep.to_json()
    else:
        checks["bijection"] = {
            "status": "skipped",
            "reason": "condition (P) fails",
            "lattice_count": len(lattice),
            "tableau_count": len(ts),
        }

    pchar = path_character(ts)
    dchar = generalized_demazure_character(cube)
    entry = {"path_equals_demazure": pchar == dchar, "dimension": dchar.dimension()}
    ok = entry["path_equals_demazure"]
    if cond:
        entry["cube_equals_path"] = cube_character(cube) == pchar
        ok = ok and entry["cube_equals_path"]
    checks["characters"] = {"status": "pass" if ok else "fail"} | entry

    is_lattice = cube.is_lattice_polytope()
    if cond:
        checks["lattice_polytope"] = {"status": "pass" if is_lattice else "fail", "is_lattice": is_lattice}
    else:
        checks["lattice_polytope"] = {"status": "skipped", "reason": "condition (P) fails", "is_lattice": is_lattice}

    base_vertices = cube.vertices()
    rows = []
    dil_ok = True
    for r in job.dilations:
        big = cube.scale(r)
        row = {"r": r, "vertices_scale": big.vertices() == scaled_vertices(base_vertices, r)}
        ok_r = row["vertices_scale"]
        if cond:
            row["lattice_count"] = len(big.lattice_points())
            row["tableau_count"] = len(enumerate_tableaux(big))
            row["oracle_dimension"] = generalized_demazure_character(big).dimension()
            ok_r = ok_r and row["lattice_count"] == row["tableau_count"] == row["oracle_dimension"]
        dil_ok = dil_ok and ok_r
        rows.append(row)
    checks["dilations"] = {"status": "pass" if dil_ok else "fail", "rows": rows}

    failed = [name for name, c in checks.items() if c["status"] == "fail"]
    payload = job.header() | {
        "condition_P": cond,
        "reduced": job.cartan.is_reduced(job.word),
        "checks": checks,
        "passed": not failed,
    }
    if not cond:
        payload["note"] = "condition (P) fails; only unconditional checks were run"
    text = "".join(f"{name}: {c['status']}\n" for name, c in checks.items())
    text += f"overall: {'pass' if not failed else 'FAIL'}\n"
    return Result(EXIT_OK if not failed else EXIT_FAIL, payload, text)


COMMANDS = {
    "check": cmd_check,
    "polytope": cmd_polytope,
    "tableaux": cmd_tableaux,
    "character": cmd_character,
    "verify": cmd_verify,
    "nobody": cmd_nobody,
}


# --- argument handling --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistcube",
        description="Twisted-cube polytopes, standard tableaux and Newton-Okounkov bodies "
        "of Bott-Samelson varieties, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--type", dest="type_name", help="built-in Cartan type, e.g. A2, B3, G2")
        src.add_argument("--cartan", help='JSON file {"rank": r, "matrix": [[...]]}')
        p.add_argument("--word", help="comma-separated letters i1,i2,...")
        p.add_argument("--mult", help="comma-separated multiplicities m1,m2,...")
        p.add_argument("--format", dest="fmt", choices=("json", "text", "hrep"), default="json")
        p.add_argument("--opposite", action=argparse.BooleanOptionalAction, default=None,
                       help="reverse coordinate order (default: on for nobody, off otherwise)")
        p.add_argument("--dilations", default="1,2,3", help="dilation factors for verify")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--batch", help="JSON file holding an array of job objects")
        if name == "character":
            p.add_argument("--method", choices=("path", "demazure", "cube"), default="path")
    return parser


def _job_from_args(args) -> JobSpec:
    if args.word is None or args.mult is None:
        raise InputError("--word and --mult are required")
    return make_job(
        type_name=args.type_name,
        cartan=args.cartan,
        word=args.word,
        mult=args.mult,
        fmt=args.fmt,
        opposite=args.opposite,
        dilations=_int_list(args.dilations, "dilations"),
        method=getattr(args, "method", None),
    )


def _job_from_obj(obj: dict, args) -> JobSpec:
    if not isinstance(obj, dict):
        raise InputError("batch entries must be JSON objects")
    return make_job(
        type_name=obj.get("type"),
        cartan=obj.get("cartan"),
        word=obj.get("word", ""),
        mult=obj.get("mult", ""),
        fmt="json",
        opposite=obj.get("opposite", args.opposite),
        dilations=_int_list(obj.get("dilations", args.dilations), "dilations"),
        method=obj.get("method", getattr(args, "method", None)),
    )


def _run_one(command: str, job: JobSpec) -> Result:
    return COMMANDS[command](job)


def _render(result: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.payload, indent=2, sort_keys=True) + "\n"
    return result.text or ""


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TWISTCUBE_THREADS", "1")))
    except ValueError:
        return 1


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    try:
        if args.batch:
            with open(args.batch) as fh:
                entries = json.load(fh)
            if not isinstance(entries, list):
                raise InputError("batch file must hold a JSON array")
            jobs = [_job_from_obj(obj, args) for obj in entries]
        else:
            jobs = [_job_from_args(args)]
    except (InputError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT

    if args.batch:
        workers = _threads()
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_run_one, [args.command] * len(jobs), jobs))
        else:
            results = [_run_one(args.command, job) for job in jobs]
        text = json.dumps(
            [r.payload | {"exit_code": r.code} if isinstance(r.payload, dict)
             else {"result": r.payload, "exit_code": r.code} for r in results],
            indent=2, sort_keys=True,
        ) + "\n"
        code = max(r.code for r in results) if results else EXIT_OK
        messages = [m for r in results for m in r.messages]
    else:
        result = _run_one(args.command, jobs[0])
        text = _render(result, args.fmt)
        code = result.code
        messages = result.messages

    for msg in messages:
        print(msg, file=stderr)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
