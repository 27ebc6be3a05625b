"""Command-line front end.

    shadowsum eval  [--level K] [--format text|json] FILE
    shadowsum wlo   --mode dpfree|abelian|vertical [--level K] [--genus G]
                    [--dims a,b,...] [--format ...] [FILE]
    shadowsum check --what bijection|euler|lem2 [--level K] [--samples N] FILE

Exit codes: 0 success/pass, 1 check failed, 2 parse error, 3 invariant
violation, 4 mode precondition violated.

Output on stdout is deterministic: byte-identical input produces
byte-identical output.  Wall-clock timing goes to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field

from .errors import ParseError, PreconditionError, ShadowsumError
from .evaluators import wlo_abelian, wlo_abelian_intermediate, wlo_vertical
from .files import load_link, load_shadow
from .geometry import crossing_marks, face_complex, validate, winding_s1
from .linking import link_number
from .quantum import Level
from .shadow import (
    check_bijection,
    enumerate_colorings,
    enumerate_pairs,
    euler_identity_holds,
    state_sum_general,
    wlo_dpfree_final,
    wlo_dpfree_pairsum,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_PRECONDITION = 4


@dataclass
class RunResult:
    command: str
    digest: str
    value: complex
    diagnostics: dict = field(default_factory=dict)
    wall_ms: float = 0.0

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "digest": self.digest,
            "value": [self.value.real, self.value.imag],
            "diagnostics": self.diagnostics,
        }
        return json.dumps(obj, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"command: {self.command}",
            f"digest: {self.digest}",
            f"value: [{self.value.real!r}, {self.value.imag!r}]",
        ]
        for key in sorted(self.diagnostics):
            lines.append(f"{key}: {json.dumps(self.diagnostics[key], sort_keys=True)}")
        return "\n".join(lines)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read_digest(path) -> str:
    with open(path, "rb") as fh:
        return _digest(fh.read())


def _emit(result: RunResult, fmt: str):
    print(result.to_json() if fmt == "json" else result.to_text())
    print(f"wall_ms: {result.wall_ms:.3f}", file=sys.stderr)


def _require_level(args) -> int:
    if args.level is None:
        raise ParseError("--level is required for this command")
    return args.level


def _cmd_eval(args) -> int:
    shadow = load_shadow(args.file)
    level = Level(_require_level(args))
    start = time.perf_counter()
    value = state_sum_general(shadow, level)
    colorings = len(enumerate_colorings(shadow, level))
    result = RunResult(
        command="eval",
        digest=_read_digest(args.file),
        value=value,
        diagnostics={
            "colorings": colorings,
            "edges": len(shadow.edges),
            "faces": len(shadow.faces),
            "vertices": len(shadow.vertices),
        },
        wall_ms=(time.perf_counter() - start) * 1e3,
    )
    _emit(result, args.format)
    return EXIT_OK


def _load_validated_link(args):
    if args.file is None:
        raise ParseError("this mode requires a link file")
    link = load_link(args.file)
    if args.level is not None:
        link = dataclasses.replace(link, level=args.level)
    return link


def _cmd_wlo(args) -> int:
    start = time.perf_counter()
    if args.mode == "vertical":
        if args.file is not None and not args.dims:
            link = _load_validated_link(args)
            if not all(lp.vertical for lp in link.loops):
                raise PreconditionError("vertical mode requires vertical loops or --dims")
            dims = tuple(lp.color2 + 1 for lp in link.loops)
            k = link.level
            digest = _read_digest(args.file)
        else:
            dims = tuple(int(d) for d in args.dims.split(",")) if args.dims else ()
            k = _require_level(args)
            digest = _digest(f"vertical:{k}:{args.genus}:{dims}".encode())
        value = complex(wlo_vertical(k, args.genus, dims))
        result = RunResult("wlo", digest, value,
                           {"dims": list(dims), "genus": args.genus, "level": k},
                           (time.perf_counter() - start) * 1e3)
        _emit(result, args.format)
        return EXIT_OK

    link = _load_validated_link(args)
    report = validate(link)
    if not report.ok:
        raise PreconditionError("link failed admissibility validation")
    if args.mode == "abelian":
        winds = [winding_s1(lp) for lp in link.loops]
        value = wlo_abelian(link)
        marks = crossing_marks(link)
        diag = {
            "crossing_marks": [[m.loop, m.eps] for m in marks],
            "double_points": len(report.double_points),
            "level": link.level,
            "windings": winds,
        }
        if sum(winds) == 0 and all(w == 0 for w in winds):
            other = wlo_abelian_intermediate(link)
            diag["intermediate"] = [other.real, other.imag]
            diag["difference"] = abs(value - other)
        result = RunResult("wlo", _read_digest(args.file), value, diag,
                           (time.perf_counter() - start) * 1e3)
        _emit(result, args.format)
        return EXIT_OK

    # dpfree
    if report.double_points:
        raise PreconditionError("dpfree mode requires a projection without double points")
    if args.genus != 0:
        raise PreconditionError("dpfree mode evaluates spherical geometry; --genus must be 0")
    level = Level(link.level)
    fc = face_complex(link)
    value = wlo_dpfree_final(link, level, fc, genus=args.genus)
    pair_value = wlo_dpfree_pairsum(link, level, fc)
    pairs = enumerate_pairs(link, level, fc)
    result = RunResult(
        "wlo",
        _read_digest(args.file),
        value,
        {
            "difference": abs(value - pair_value),
            "faces": len(fc.faces),
            "level": link.level,
            "pairs": len(pairs),
            "pairsum": [pair_value.real, pair_value.imag],
        },
        (time.perf_counter() - start) * 1e3,
    )
    _emit(result, args.format)
    return EXIT_OK


def _is_shadow_file(path) -> bool:
    with open(path, "r", encoding="utf-8") as fh:
        head = fh.read()
    try:
        obj = json.loads(head)
    except json.JSONDecodeError:
        return False
    return isinstance(obj, dict) and "faces" in obj


def _cmd_check(args) -> int:
    start = time.perf_counter()
    if args.what == "euler" and args.file is not None and _is_shadow_file(args.file):
        shadow = load_shadow(args.file)
        total = sum(f.chi for f in shadow.faces)
        ok = euler_identity_holds(shadow)
        result = RunResult(
            "check:euler", _read_digest(args.file), complex(1.0 if ok else 0.0),
            {"chi_sum": total, "edges": len(shadow.edges), "vertices": len(shadow.vertices)},
            (time.perf_counter() - start) * 1e3)
        _emit(result, args.format)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    link = _load_validated_link(args)
    report = validate(link)
    diag: dict = {"level": link.level}
    if args.what == "euler":
        if not report.ok or report.double_points:
            raise PreconditionError("euler check requires an admissible dpfree link")
        fc = face_complex(link)
        total = sum(f.chi for f in fc.faces)
        ok = total == 2
        diag.update({"chi": [f.chi for f in fc.faces], "chi_sum": total})
    elif args.what == "bijection":
        if not report.ok or report.double_points:
            raise PreconditionError("bijection check requires an admissible dpfree link")
        br = check_bijection(link, Level(link.level))
        ok = br.ok
        diag.update({"colorings": br.colorings_count, "pairs": br.pairs_count,
                     "injective": br.injective, "surjective": br.surjective})
    else:  # lem2
        if len(link.loops) != 2:
            raise PreconditionError("lem2 check requires a two-loop link")
        if not report.ok:
            raise PreconditionError("lem2 check requires an admissible link")
        rng = random.Random(0xC0FFEE)
        values = []
        tries = 0
        while len(values) < args.samples and tries < 100 * args.samples:
            tries += 1
            t0 = rng.uniform(0.0, 6.283185)
            cand = dataclasses.replace(link, t0=t0)
            if not validate(cand).ok:
                continue
            values.append(link_number(cand.loops[0], cand.loops[1], t0))
        ok = len(values) == args.samples and len(set(values)) == 1
        diag.update({"samples": len(values), "values": sorted(set(values))})
    result = RunResult(f"check:{args.what}", _read_digest(args.file),
                       complex(1.0 if ok else 0.0), diag,
                       (time.perf_counter() - start) * 1e3)
    _emit(result, args.format)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shadowsum",
        description="Shadow state sums and loop observables for links in S^2 x S^1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file_optional=False):
        p.add_argument("file", nargs="?" if file_optional else None, default=None)
        p.add_argument("--level", type=int, default=None)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for compatibility; evaluation is deterministic")

    p_eval = sub.add_parser("eval", help="evaluate the state sum of a shadow file")
    common(p_eval)

    p_wlo = sub.add_parser("wlo", help="evaluate a loop observable")
    common(p_wlo, file_optional=True)
    p_wlo.add_argument("--mode", choices=("dpfree", "abelian", "vertical"), required=True)
    p_wlo.add_argument("--genus", type=int, default=0)
    p_wlo.add_argument("--dims", type=str, default="")

    p_check = sub.add_parser("check", help="run a structural cross-check")
    common(p_check)
    p_check.add_argument("--what", choices=("bijection", "euler", "lem2"), required=True)
    p_check.add_argument("--samples", type=int, default=8)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "wlo":
            return _cmd_wlo(args)
        return _cmd_check(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ShadowsumError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
