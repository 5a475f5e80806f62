"""Command-line front end.

Settings come from (lowest to highest priority) built-in defaults, a flat
``key = <json>`` configuration file given by ``--config``, and the flags.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .ext import (describe_result, ext1, ext_partners, middle_self_extension_detector,
                  relation)
from .kostant import DominanceError, _require_dominant
from .linkcoh import (GradedModuleList, ModuleEntry, link_cohomology, local_shriek, local_star,
                      twisted_differs)
from .paper_check import off_by_one, timed_paper_check
from .rootsys import RootSystem, RootSystemError, build_root_system, format_word
from .strata import (StratumError, all_strata, format_stratum, parabolic_lattice, parse_stratum,
                     pbar, perversity, stratum_dims, stratum_info, subset_literal)
from .weights import (AnyWeight, format_weight, is_symbolic, symbol, weight_from_json,
                      weight_to_json)

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG = 0, 1, 2

CONFIG_KEYS = ("group", "perversity", "stratum", "target", "weight", "target_weight",
               "format", "dim_overrides")
DEFAULTS = {"group": "C2", "perversity": "minus", "format": "text"}


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    R: RootSystem
    p: object
    fmt: str
    stratum: Optional[str]
    target: Optional[str]
    weight: Optional[str]
    target_weight: Optional[str]


def read_config_file(path: str) -> Dict[str, object]:
    """Parse ``key = value`` lines; values are JSON, ``#`` starts a comment line."""
    out: Dict[str, object] = {}
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from exc
    for n, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        key, sep, raw = s.partition("=")
        key = key.strip().replace("-", "_")
        if not sep:
            raise ConfigError(f"{path}:{n}: expected 'key = value'")
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{n}: unknown key {key!r}")
        try:
            out[key] = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}:{n}: value of {key!r} is not JSON ({exc.msg})") from exc
    return out


def load_overrides(R: RootSystem, source) -> Optional[Dict]:
    if source is None:
        return None
    if isinstance(source, str):
        # a path, or the JSON object itself
        try:
            if not os.path.exists(source) and source.lstrip().startswith("{"):
                source = json.loads(source)
            else:
                with open(source, encoding="utf-8") as fh:
                    source = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"dim_overrides: cannot read {source}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"dim_overrides: {exc.msg} at line {exc.lineno}") from exc
    if not isinstance(source, dict):
        raise ConfigError("dim_overrides must be a JSON object mapping subset literals to integers")
    out = {}
    for k, v in source.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ConfigError(f"dim_overrides[{k!r}]: expected an integer")
        out[parse_stratum(R, k)] = v
    return out


def parse_weight(R: RootSystem, text, stratum, name: str = "λ") -> AnyWeight:
    """Comma-separated integers, or identifiers (``a,b``) for a generic weight named ``name``."""
    if isinstance(text, list):
        text = ",".join(str(x) for x in text)
    parts = [t.strip() for t in str(text).split(",") if t.strip()]
    if len(parts) == 1 and not re.fullmatch(r"-?\d+", parts[0]):
        parts = parts * R.rank  # a single name stands for the whole symbolic weight
    if len(parts) != R.rank:
        raise ConfigError(f"weight {text!r} must have {R.rank} coordinates")
    if all(re.fullmatch(r"-?\d+", t) for t in parts):
        mu = tuple(int(t) for t in parts)
    elif all(re.fullmatch(r"[^\W\d]\w*'?", t) for t in parts):
        mu = symbol(name, R.rank, stratum)
    else:
        raise ConfigError(f"weight {text!r} mixes numbers and symbols")
    try:
        _require_dominant(R, stratum, mu, "weight")
    except DominanceError as exc:
        raise ConfigError(f"{exc} ({format_stratum(R, stratum)})") from exc
    return mu


def build_job(args) -> JobConfig:
    settings = dict(DEFAULTS)
    if args.config:
        settings.update(read_config_file(args.config))
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            settings[key] = val
    try:
        R = build_root_system(str(settings["group"]))
        overrides = load_overrides(R, settings.get("dim_overrides"))
        dims = stratum_dims(R, overrides)
        if settings["perversity"] not in ("minus", "plus"):
            raise ConfigError(f"perversity must be 'minus' or 'plus', got {settings['perversity']!r}")
        p = perversity(R, settings["perversity"], dims)
    except (RootSystemError, StratumError) as exc:
        raise ConfigError(str(exc)) from exc
    if settings["format"] not in ("text", "json"):
        raise ConfigError(f"format must be 'text' or 'json', got {settings['format']!r}")
    return JobConfig(R, p, settings["format"], settings.get("stratum"), settings.get("target"),
                     settings.get("weight"), settings.get("target_weight"))


def _stratum(job: JobConfig, text, what: str, default=None):
    if text is None:
        if default is None:
            raise ConfigError(f"--{what} is required")
        return default
    try:
        return parse_stratum(job.R, text)
    except StratumError as exc:
        raise ConfigError(f"--{what}: {exc}") from exc


# rendering

def entry_record(e: ModuleEntry) -> dict:
    return {"degree": e.degree, "weight": weight_to_json(e.weight), "weight_text": format_weight(e.weight),
            "multiplicity": e.multiplicity,
            "kostant_class": format_word(e.witness.word) if e.witness else None}


def entries_from_records(records: Sequence[dict]) -> List[tuple]:
    """Inverse of :func:`entry_record` up to the witness: ``(degree, weight, multiplicity)``."""
    return [(r["degree"], weight_from_json(r["weight"]), r["multiplicity"]) for r in records]


def _text_table(title: str, records: Sequence[dict], out) -> None:
    print(title, file=out)
    if not records:
        print("  (empty)", file=out)
    for r in records:
        cls = f"  [{r['kostant_class']}]" if r.get("kostant_class") else ""
        print(f"  H^{r['degree']:<3} {r['weight_text']}  x{r['multiplicity']}{cls}", file=out)


def _emit(job: JobConfig, payload: dict, text_fn, out) -> None:
    if job.fmt == "json":
        json.dump(payload, out, ensure_ascii=False, indent=2)
        out.write("\n")
    else:
        text_fn(payload, out)


def _ones(R: RootSystem):
    return (1,) * R.rank


def spot_check(job: JobConfig, fn, lam) -> Optional[bool]:
    """Evaluate a symbolic result at weight (1,..,1) and compare with a direct run there."""
    if not is_symbolic(lam):
        return None
    one = _ones(job.R)
    sym = fn(lam)
    num = fn(one)
    ev = sorted((e.degree, e.weight.evaluate(one) if is_symbolic(e.weight) else e.weight, e.multiplicity)
                for e in sym.entries)
    return ev == sorted((e.degree, e.weight, e.multiplicity) for e in num.entries)


# commands

def cmd_describe(job: JobConfig, out) -> int:
    R, p = job.R, job.p
    strata = sorted(all_strata(R), key=lambda S: (-len(S), sorted(S)))
    lat = parabolic_lattice(R)
    rows = []
    for S in strata:
        info = stratum_info(R, S, p.dims)
        rows.append({"stratum": subset_literal(S), "name": format_stratum(R, S), "dim": info.dim,
                     "depth": info.depth, "perversity": p[S],
                     "pbar": {subset_literal(T): pbar(p, S, T) for T in strata if S <= T}})
    payload = {"group": R.type_label, "perversity_kind": p.kind, "strata": rows,
               "covers": [[subset_literal(a), subset_literal(b)] for a, b in lat.covers]}

    def text(pl, o):
        print(f"{pl['group']}  perversity {pl['perversity_kind']}", file=o)
        print("covers: " + ", ".join(f"{format_stratum(R, parse_stratum(R, a))} < "
                                     f"{format_stratum(R, parse_stratum(R, b))}" for a, b in pl["covers"]), file=o)
        print(f"{'stratum':<10}{'dim':>5}{'depth':>7}{'p':>5}   pbar_T for T above", file=o)
        for r in pl["strata"]:
            pb = ", ".join(f"{format_stratum(R, parse_stratum(R, t))}:{v}" for t, v in r["pbar"].items())
            print(f"{r['name']:<10}{r['dim']:>5}{r['depth']:>7}{r['perversity']:>5}   {pb}", file=o)
    _emit(job, payload, text, out)
    return EXIT_OK


def cmd_link(job: JobConfig, out) -> int:
    R, p = job.R, job.p
    S = _stratum(job, job.stratum, "stratum")
    T = _stratum(job, job.target, "target", R.full)
    lam = parse_weight(R, job.weight if job.weight is not None else "λ", T)
    tables = {}
    if S < T:
        tables["link"] = link_cohomology(R, p, S, T, lam)
    else:
        tables["link"] = GradedModuleList(S)
    tables["star"] = local_star(R, p, S, T, lam)
    tables["shriek"] = local_shriek(R, p, S, T, lam)
    ok = None
    if S < T:
        ok = spot_check(job, lambda mu: link_cohomology(R, p, S, T, mu), lam)
    payload = {"stratum": subset_literal(S), "target": subset_literal(T), "perversity_of_stratum": p[S],
               "weight": weight_to_json(lam), "spot_check": ok,
               "tables": {k: [entry_record(e) for e in v.entries] for k, v in tables.items()}}

    def text(pl, o):
        where = "in" if S <= T else "not in"
        print(f"{R.type_label} {p.kind}: {format_stratum(R, S)} {where} the closure of {format_stratum(R, T)},"
              f" λ = {format_weight(lam)}, p(S) = {p[S] if S in p.values else '?'}", file=o)
        _text_table("link cohomology", pl["tables"]["link"], o)
        _text_table("i^* (stalk)", pl["tables"]["star"], o)
        _text_table("i^! (costalk)", pl["tables"]["shriek"], o)
        if ok is not None:
            print(f"spot-check at λ = {format_weight(_ones(R))}: {'ok' if ok else 'MISMATCH'}", file=o)
    _emit(job, payload, text, out)
    return EXIT_MISMATCH if ok is False else EXIT_OK


def result_record(R: RootSystem, res) -> dict:
    return {
        "source": {"stratum": subset_literal(res.source.stratum), "weight": weight_to_json(res.source.weight),
                   "weight_text": format_weight(res.source.weight)},
        "target": {"stratum": subset_literal(res.target.stratum), "weight": weight_to_json(res.target.weight),
                   "weight_text": format_weight(res.target.weight)},
        "relation": res.relation, "condition": res.condition, "candidate_dim": res.candidate_dim,
        "obstructions": [{"stratum": subset_literal(o.stratum), "hom_dim": o.hom_dim,
                          "special_coincidences": list(o.special)} for o in res.obstructions],
        "certified": res.certified,
        "value": res.value if res.certified else list(res.value),
        "summary": describe_result(R, res),
    }


def _result_text(rec: dict, o) -> None:
    cond = rec["condition"]
    cond = "" if not cond else f"  ({cond})" if cond.startswith("for") else f"  when {cond}"
    cert = "certified" if rec["certified"] else "undecided"
    obs = ", ".join(f"{x['stratum']}:{x['hom_dim']}" for x in rec["obstructions"]) or "none"
    print(f"{rec['summary']}{cond}  [{rec['relation']}; candidate {rec['candidate_dim']}; "
          f"obstructions {obs}; {cert}]", file=o)
    for x in rec["obstructions"]:
        for c in x["special_coincidences"]:
            print(f"    note: at {x['stratum']} an obstruction can appear when {c}", file=o)


def cmd_ext(job: JobConfig, out) -> int:
    R, p = job.R, job.p
    T = _stratum(job, job.stratum, "stratum")
    T2 = _stratum(job, job.target, "target")
    lam = parse_weight(R, job.weight if job.weight is not None else "λ", T)
    if job.target_weight is not None:
        lam2 = parse_weight(R, job.target_weight, T2, "λ'")
        results = [ext1(R, p, T, lam, T2, lam2)]
    else:
        results = [pa.result for pa in ext_partners(R, p, T, lam) if pa.stratum == T2]
        if not results:
            results = [ext1(R, p, T, lam, T2, symbol("λ'", R.rank, T2), "for all λ'")]
    payload = {"results": [result_record(R, r) for r in results]}

    def text(pl, o):
        for rec in pl["results"]:
            _result_text(rec, o)
    _emit(job, payload, text, out)
    return EXIT_OK


def cmd_ext_table(job: JobConfig, out) -> int:
    R, p = job.R, job.p
    sources = [_stratum(job, job.stratum, "stratum")] if job.stratum is not None else \
        sorted(all_strata(R), key=lambda S: (-len(S), sorted(S)))
    rows = []
    for T in sources:
        if job.weight is not None:
            try:
                lam = parse_weight(R, job.weight, T)
            except ConfigError:
                if job.stratum is not None:
                    raise
                continue  # numeric weight not dominant for this source
        else:
            lam = symbol("λ", R.rank, T)
        partners = ext_partners(R, p, T, lam)
        for T2 in sorted(all_strata(R), key=lambda S: (-len(S), sorted(S))):
            if T2 == T:
                continue
            hits = [pa.result for pa in partners if pa.stratum == T2]
            if not hits:
                cond = "for all λ'" if relation(T, T2) != "incomparable" else ""
                hits = [ext1(R, p, T, lam, T2, symbol("λ'", R.rank, T2), cond)]
            rows.extend(result_record(R, r) for r in hits)
    spot = None
    if job.weight is None:
        spot = _ext_spot_check(R, p)
    payload = {"group": R.type_label, "perversity_kind": p.kind, "rows": rows, "spot_check": spot}

    def text(pl, o):
        for rec in pl["rows"]:
            _result_text(rec, o)
        if spot is not None:
            print(f"spot-check at λ = {format_weight(_ones(R))}: {'ok' if spot else 'MISMATCH'}", file=o)
    _emit(job, payload, text, out)
    return EXIT_MISMATCH if spot is False else EXIT_OK


def _ext_spot_check(R, p) -> bool:
    """Downward families at weight (1,..,1): the symbolic partner evaluated equals the numeric one."""
    one = _ones(R)
    for T in all_strata(R):
        sym = {(pa.stratum, pa.weight.evaluate(one) if is_symbolic(pa.weight) else pa.weight)
               for pa in ext_partners(R, p, T, symbol("λ", R.rank, T)) if pa.stratum < T}
        num = {(pa.stratum, pa.weight) for pa in ext_partners(R, p, T, one) if pa.stratum < T}
        if sym != num:
            return False
    return True


def cmd_detect_middle(job: JobConfig, out) -> int:
    R, p = job.R, job.p
    T = _stratum(job, job.target if job.target is not None else job.stratum, "target", R.full)
    lam = parse_weight(R, job.weight if job.weight is not None else "λ", T)
    hits = middle_self_extension_detector(R, p, T, lam)
    differs = twisted_differs(R, p, T, lam)
    payload = {"target": subset_literal(T), "strata": [subset_literal(S) for S in hits],
               "twisted_differs": [subset_literal(S) for S in differs],
               "consistent": set(hits) <= set(differs)}

    def text(pl, o):
        if not hits:
            print(f"no odd-codimension stratum of {format_stratum(R, T)} carries middle-degree link cohomology",
                  file=o)
        for S in hits:
            print(f"{format_stratum(R, S)}: codim {p.codim(S, T)}, middle degree "
                  f"{(p.codim(S, T) - 1) // 2 + p[T]}", file=o)
        print("local data of the dual-perversity sheaf differs at: "
              + (", ".join(format_stratum(R, S) for S in differs) or "none"), file=o)
    _emit(job, payload, text, out)
    return EXIT_OK if payload["consistent"] else EXIT_MISMATCH


def cmd_paper_check(job: JobConfig, out, inject: Optional[str] = None) -> int:
    mutate = off_by_one(parse_stratum(build_root_system("C2"), inject)) if inject else None
    results, seconds = timed_paper_check(mutate)
    payload = {"checks": [{"name": r.name, "ok": r.ok, "expected": r.expected, "actual": r.actual}
                          for r in results], "seconds": round(seconds, 3)}

    def text(pl, o):
        for r in pl["checks"]:
            print(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}", file=o)
            if not r["ok"]:
                print(f"      expected: {r['expected']}\n      actual:   {r['actual']}", file=o)
        print(f"{sum(r['ok'] for r in pl['checks'])}/{len(pl['checks'])} checks passed in "
              f"{pl['seconds']:.2f}s", file=o)
    _emit(job, payload, text, out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat 'key = <json>' settings file")
    common.add_argument("--group", help="Cartan type, e.g. C2 (default C2)")
    common.add_argument("--perversity", choices=("minus", "plus"))
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--dim-overrides", dest="dim_overrides", metavar="FILE",
                        help="JSON file (or inline object) mapping subset literals like \"{1}\" to dimensions")
    common.add_argument("--stratum", help='subset literal such as "{1}", "{}" or "full"')
    common.add_argument("--target", help="second stratum (subset literal)")
    common.add_argument("--weight", help='comma-separated integers, or names like "a,b" for a generic weight')
    common.add_argument("--target-weight", dest="target_weight")

    ap = argparse.ArgumentParser(prog="rbsperv", description="Local data and Ext^1 of simple perverse "
                                 "sheaves on reductive Borel-Serre compactifications.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("describe", parents=[common], help="strata, dimensions and perversities")
    sub.add_parser("link", parents=[common], help="link cohomology and local data at a stratum")
    sub.add_parser("ext", parents=[common], help="Ext^1 between two simple objects")
    sub.add_parser("ext-table", parents=[common], help="every Ext^1 family")
    sub.add_parser("detect-middle", parents=[common], help="odd-codimension middle-degree detector")
    pc = sub.add_parser("paper-check", parents=[common], help="run the reproduction suite")
    pc.add_argument("--inject-off-by-one", dest="inject", metavar="STRATUM", help=argparse.SUPPRESS)
    return ap


COMMANDS = {"describe": cmd_describe, "link": cmd_link, "ext": cmd_ext, "ext-table": cmd_ext_table,
            "detect-middle": cmd_detect_middle}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        job = build_job(args)
        if args.command == "paper-check":
            return cmd_paper_check(job, out, args.inject)
        return COMMANDS[args.command](job, out)
    except (ConfigError, StratumError, RootSystemError, DominanceError) as exc:
        print(f"rbsperv: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
