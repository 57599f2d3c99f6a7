"""
Command-line entry point.

Subcommands: ``hecke``, ``homfly``, ``verify``, ``search``, ``gen``, ``bench``.
Exit status is 0 on success, 1 when a verification fails, 2 on usage or
parse errors and 3 when a resource limit is hit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .braid import BraidWord, parse, read_braid_file, torus, weaving, write_braid_file
from .hecke import (apply_generator, identity_vector, is_trivial, projlength, represent)
from .homfly import ResourceLimitError, homfly, homfly_reduced
from .laurent import ZZ, Ring
from .permutation import MAX_STRANDS
from .search import FIXTURES, MODES, dumps_log, fixture_modulus, load_fixture, search

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FAMILIES = {"torus": torus, "weaving": weaving}


class UsageError(ValueError):
    pass


@dataclass
class Config:
    """Resolved command-line settings shared by the subcommands."""

    subcommand: str
    strands: Optional[int] = None
    modulus: Optional[int] = None
    braid: Optional[BraidWord] = None
    source: str = ""
    threads: int = 1
    output: str = "text"
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.strands is not None and not 2 <= self.strands <= MAX_STRANDS:
            raise UsageError(f"strands must be in [2, {MAX_STRANDS}], got {self.strands}")
        if self.modulus is not None and self.modulus < 2:
            raise UsageError(f"modulus must be >= 2, got {self.modulus}")
        if self.threads < 1:
            raise UsageError("thread count must be positive")

    @property
    def ring(self) -> Ring:
        return ZZ if self.modulus is None else Ring.mod(self.modulus)


def generate(family: str, p: int, q: int) -> BraidWord:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return FAMILIES[family](p, q)


def _resolve_braid(args) -> tuple[Optional[BraidWord], str]:
    """Braid from exactly one of -b, --file, --fixture or a ``gen`` spec."""
    gen = getattr(args, "gen", None) or []
    given = [x for x in (args.braid is not None, args.file, args.fixture, bool(gen)) if x]
    if len(given) > 1:
        raise UsageError("give only one braid source")
    if gen:
        if len(gen) != 4 or gen[0] != "gen":
            raise UsageError("generator spec must read: gen torus|weaving P Q")
        try:
            p, q = int(gen[2]), int(gen[3])
        except ValueError:
            raise UsageError("generator parameters must be integers") from None
        b = generate(gen[1], p, q)
        return b, f"{gen[1]}({p},{q})"
    if args.fixture:
        return load_fixture(args.fixture), args.fixture
    if args.file:
        return read_braid_file(Path(args.file).read_text()), args.file
    if args.braid is not None:
        b = parse(args.braid, n=args.strands)
        return b, args.braid
    return None, ""


def _add_braid_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", "--strands", type=int, help="strand count")
    p.add_argument("-b", "--braid", help="inline word of signed generator indices")
    p.add_argument("--file", help="braid file ('n=<strands>' line, then the word)")
    p.add_argument("--fixture", choices=FIXTURES, help="shipped kernel braid")
    p.add_argument("gen", nargs="*", help="generator spec: gen torus|weaving P Q")


def _add_common(p: argparse.ArgumentParser, modulus: bool = True) -> None:
    if modulus:
        p.add_argument("--mod", type=int, dest="modulus", help="coefficients mod m (default: integers)")
    p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckebraid",
        description="Hecke representation, HOMFLY-PT and kernel search for braids.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("hecke", help="print the Hecke image of a braid")
    _add_braid_source(p)
    _add_common(p)

    p = sub.add_parser("homfly", help="HOMFLY-PT polynomial of a braid closure")
    _add_braid_source(p)
    _add_common(p, modulus=False)
    p.add_argument("--reduced", action="store_true", help="divide by one unknot factor (knots only)")

    p = sub.add_parser("verify", help="check that a braid maps to the identity mod m")
    _add_braid_source(p)
    _add_common(p)

    p = sub.add_parser("search", help="randomized kernel search")
    p.add_argument("-n", "--strands", type=int, required=True)
    p.add_argument("--mod", type=int, dest="modulus", required=True)
    p.add_argument("--bucket", type=int, default=64, help="reservoir size per score")
    p.add_argument("--max-len", type=int, default=8, help="largest Garside length")
    p.add_argument("--per-step", type=int, default=2, help="extensions per candidate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=MODES, default="min")
    p.add_argument("--time-limit", type=float, help="wall-clock budget in seconds")
    p.add_argument("--out", help="directory for witness braid files and search_log.json")
    _add_common(p, modulus=False)

    p = sub.add_parser("gen", help="write a torus or weaving braid")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("-o", "--output-file", help="write here instead of stdout")

    p = sub.add_parser("bench", help="time represent() on a braid family, CSV to stdout")
    p.add_argument("--family", choices=sorted(FAMILIES), default="torus")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--mod", type=int, dest="modulus")
    p.add_argument("--threads", type=int, default=1)
    return parser


def make_config(args) -> Config:
    cfg = Config(
        subcommand=args.subcommand,
        strands=getattr(args, "strands", None),
        modulus=getattr(args, "modulus", None),
        threads=getattr(args, "threads", 1),
        output=getattr(args, "output", "text") or "text",
        seed=getattr(args, "seed", 0),
        extra=vars(args),
    )
    if hasattr(args, "braid"):
        cfg.braid, cfg.source = _resolve_braid(args)
        if cfg.braid is None and cfg.subcommand != "verify":
            raise UsageError("no braid given (use -b, --file, --fixture or gen)")
        if cfg.braid is not None and cfg.braid.n < 2:
            raise UsageError("braids need at least 2 strands")
    return cfg


def cmd_hecke(cfg: Config, out) -> int:
    v = represent(cfg.braid, cfg.ring, threads=cfg.threads)
    if cfg.output == "json":
        out.write(v.dumps_json() + "\n")
    else:
        out.write(v.dump())
    return EXIT_OK


def cmd_homfly(cfg: Config, out) -> int:
    if cfg.extra.get("reduced"):
        p = homfly_reduced(cfg.braid, threads=cfg.threads)
    else:
        p = homfly(cfg.braid, threads=cfg.threads)
    if cfg.output == "json":
        out.write(json.dumps({"braid": cfg.braid.to_ints(), "n": cfg.braid.n,
                              "reduced": bool(cfg.extra.get("reduced")),
                              "homfly": p.to_json()}, sort_keys=True) + "\n")
    else:
        out.write(f"{p}\n")
    return EXIT_OK


def cmd_verify(cfg: Config, out) -> int:
    if cfg.braid is None:
        raise UsageError("verify needs a braid (--fixture, -b or --file)")
    m = cfg.modulus
    if m is None:
        if not cfg.extra.get("fixture"):
            raise UsageError("verify needs --mod unless a fixture is given")
        m = fixture_modulus(cfg.extra["fixture"])
    v = represent(cfg.braid, Ring.mod(m), threads=cfg.threads)
    ok = is_trivial(v)
    record = {"source": cfg.source, "n": cfg.braid.n, "crossings": len(cfg.braid),
              "modulus": m, "trivial": ok}
    if not ok:
        record["nonzero"] = len(v.support())
        record["projlength"] = projlength(v) if record["nonzero"] else None
    if cfg.output == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    elif ok:
        out.write(f"verified: {cfg.source} ({len(cfg.braid)} crossings) is trivial mod {m}\n")
    else:
        out.write(f"not trivial mod {m}: {record['nonzero']} nonzero coordinates, "
                  f"projlength {record['projlength']}\n")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_search(cfg: Config, out) -> int:
    e = cfg.extra
    result = search(cfg.strands, cfg.modulus, bucket_capacity=e["bucket"],
                    max_garside_length=e["max_len"], samples_per_step=e["per_step"],
                    seed=cfg.seed, mode=e["mode"], threads=cfg.threads,
                    time_limit=e.get("time_limit"))
    if e.get("out"):
        d = Path(e["out"])
        d.mkdir(parents=True, exist_ok=True)
        for k, w in enumerate(result.witnesses):
            (d / f"witness_{k:03d}.braid").write_text(write_braid_file(w.word))
        (d / "search_log.json").write_text(dumps_log(result) + "\n")
    if cfg.output == "json":
        out.write(dumps_log(result) + "\n")
    else:
        for g in result.generations:
            out.write(f"generation {g['generation']}: {g['candidates']} candidates, "
                      f"best score {g['best_score']}, witnesses {g['witnesses']}\n")
        for w in result.witnesses:
            out.write(f"# witness mod {w.modulus}, {len(w.word)} crossings, "
                      f"garside length {w.garside_length}\n")
            out.write(write_braid_file(w.word))
    return EXIT_RESOURCE if result.truncated else EXIT_OK


def cmd_gen(cfg: Config, out) -> int:
    e = cfg.extra
    text = write_braid_file(generate(e["family"], e["p"], e["q"]))
    if e.get("output_file"):
        Path(e["output_file"]).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def bench_row(b: BraidWord, name: str, ring: Ring = ZZ, threads: int = 1) -> dict:
    """Time ``represent`` on ``b`` and count the peak number of nonzero coordinates.

    The timed pass does only the representation; peak support is measured in a
    second, untimed pass.
    """
    t0 = time.perf_counter()
    represent(b, ring, threads=threads)
    elapsed = time.perf_counter() - t0
    v = identity_vector(b.n, ring)
    peak = 1
    for i, s in b.letters:
        apply_generator(v, i, s)
        peak = max(peak, sum(1 for a in v.coords if a.coeffs))
    return {"braid": name, "crossings": len(b), "strands": b.n,
            "wall_time_s": f"{elapsed:.6f}", "peak_polys": peak}


def cmd_bench(cfg: Config, out) -> int:
    e = cfg.extra
    n = cfg.strands
    per = n - 1
    writer = csv.DictWriter(out, fieldnames=["braid", "crossings", "strands",
                                             "wall_time_s", "peak_polys"])
    writer.writeheader()
    q = 1
    while per * q <= e["max_crossings"]:
        b = generate(e["family"], n, q)
        writer.writerow(bench_row(b, f"{e['family']}({n},{q})", cfg.ring, cfg.threads))
        q += 1
    return EXIT_OK


COMMANDS = {
    "hecke": cmd_hecke,
    "homfly": cmd_homfly,
    "verify": cmd_verify,
    "search": cmd_search,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(args)
        return COMMANDS[cfg.subcommand](cfg, out)
    except (ResourceLimitError, MemoryError) as exc:
        print(f"heckebraid: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"heckebraid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
