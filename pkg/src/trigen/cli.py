"""Batch front end: config ingestion, pipeline orchestration, disk cache,
and deterministic JSON reports.

Subcommands:
  run <config.json> --out <report.json> [--jobs N] [--cache DIR]
  explain <report.json>
  field-info <config.json> --field NAME

All exact numbers in configs and reports are decimal strings ("p/q" for
rationals); reports are deterministic given config and version, with wall
times confined to a separate "timings" block.  Exit codes: 2 for schema or
user errors, 3 for resource-cap aborts, 0 otherwise (a FAIL verdict is a
valid result, not an error).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import random
import sys
import time
from fractions import Fraction

import jsonschema
from filelock import FileLock

from . import __version__
from .numberfield import (
    FieldAutomorphism,
    NumberField,
    SubfieldEmbedding,
    unit_rank,
)
from .units import NoThetaError, ThetaCertificate, UnitSource, select_theta
from .matgroup import (
    HermitianData,
    MatN,
    commutator,
    lower_elementary,
    sl2_to_su21,
    su21_check,
    su21_uplus_generator,
    u2alpha_parameter,
    upper_elementary,
)
from .construct import (
    SL2_CM,
    SL2_CMPRIME,
    SL2_NONCM,
    SLN_MULTONE,
    SU21,
    CASE_TAGS,
    CMRedirect,
    ConstructionError,
    build_cm,
    build_noncm,
    build_sln_multone,
    cmprime_g_element,
    elementary_words,
    lattice_contains_multiple,
)
from .verify import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_ENUM_CAP,
    DEFAULT_TABLE_CAP,
    ResourceCapError,
    ambient_order,
    certify,
)

CACHE_VERSION = "trigen-cache-1/" + __version__
CACHE_ENV_VAR = "TRIGEN_CACHE_DIR"

_FRACTION = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_FRACTION_VEC = {"type": "array", "items": _FRACTION, "minItems": 1}
_FRACTION_MAT = {"type": "array", "items": _FRACTION_VEC, "minItems": 1}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["fields", "cases"],
    "additionalProperties": False,
    "properties": {
        "fields": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "coefficients"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "coefficients": _FRACTION_VEC,
                    "integral_basis": _FRACTION_MAT,
                    "primes": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 2},
                    },
                    "subfield": {
                        "type": "object",
                        "required": ["coefficients", "embedding"],
                        "additionalProperties": False,
                        "properties": {
                            "coefficients": _FRACTION_VEC,
                            "integral_basis": _FRACTION_MAT,
                            "embedding": _FRACTION_VEC,
                        },
                    },
                    "units": {"type": "array", "items": _FRACTION_VEC},
                    "alpha": _FRACTION_VEC,
                    "cmprime_x": _FRACTION_VEC,
                    "su21": {
                        "type": "object",
                        "required": ["z", "sqrt_z", "t_param"],
                        "additionalProperties": False,
                        "properties": {
                            "z": _FRACTION,
                            "sqrt_z": _FRACTION_VEC,
                            "t_param": _FRACTION_VEC,
                        },
                    },
                    "sln": {
                        "type": "object",
                        "required": ["n", "levi", "u_col"],
                        "additionalProperties": False,
                        "properties": {
                            "n": {"type": "integer", "minimum": 3},
                            "levi": _FRACTION_MAT,
                            "u_col": _FRACTION_VEC,
                            "wedge_exponents": {
                                "type": "array", "items": {"type": "integer"},
                            },
                        },
                    },
                },
            },
        },
        "cases": {"type": "array", "items": {"enum": list(CASE_TAGS)}},
        "r_values": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "caps": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "closure_max_elements": {"type": "integer", "minimum": 1},
                "enumeration_cap": {"type": "integer", "minimum": 1},
                "table_cap": {"type": "integer", "minimum": 2},
                "unit_search_height": {"type": "integer", "minimum": 1},
                "r_max": {"type": "integer", "minimum": 1},
                "m_max": {"type": "integer", "minimum": 1},
            },
        },
        "cache_dir": {"type": "string"},
    },
}


class ConfigError(ValueError):
    pass


def _fr(s) -> Fraction:
    return Fraction(str(s))


def load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc))
    try:
        jsonschema.validate(config, CONFIG_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ConfigError("config schema violation: %s" % exc.message)
    names = [f["name"] for f in config["fields"]]
    if len(names) != len(set(names)):
        raise ConfigError("duplicate field names in config")
    return config


def build_field(desc: dict) -> NumberField:
    basis = None
    if "integral_basis" in desc:
        basis = [[_fr(v) for v in row] for row in desc["integral_basis"]]
    return NumberField([_fr(c) for c in desc["coefficients"]], basis,
                       name=desc.get("name"))


def build_subfield(field: NumberField, desc: dict) -> SubfieldEmbedding:
    sub_desc = desc["subfield"]
    basis = None
    if "integral_basis" in sub_desc:
        basis = [[_fr(v) for v in row] for row in sub_desc["integral_basis"]]
    sub = NumberField([_fr(c) for c in sub_desc["coefficients"]], basis)
    image = field.element([_fr(v) for v in sub_desc["embedding"]])
    return SubfieldEmbedding(sub, field, image)


# ---------------------------------------------------------------------------
# Disk cache: JSON payloads with embedded checksums, per-key file locks.

class Cache:
    def __init__(self, directory: str | None):
        self.directory = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, key + ".json")

    @staticmethod
    def key_for(kind: str, payload) -> str:
        blob = json.dumps([CACHE_VERSION, kind, payload], sort_keys=True)
        return kind + "-" + hashlib.sha256(blob.encode()).hexdigest()[:24]

    def get(self, key: str):
        if not self.directory:
            return None
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                wrapper = json.load(fh)
            body = json.dumps(wrapper["data"], sort_keys=True)
            digest = hashlib.sha256(body.encode()).hexdigest()
            if wrapper.get("checksum") != digest:
                return None  # corrupted: recompute, never trust
            return wrapper["data"]
        except (OSError, json.JSONDecodeError, KeyError, TypeError):
            return None

    def put(self, key: str, data) -> None:
        if not self.directory:
            return
        path = self._path(key)
        body = json.dumps(data, sort_keys=True)
        wrapper = {
            "checksum": hashlib.sha256(body.encode()).hexdigest(),
            "data": data,
        }
        lock = FileLock(path + ".lock")
        with lock:
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(wrapper, fh, sort_keys=True)
            os.replace(tmp, path)


def _field_cache_id(field: NumberField):
    return {
        "coefficients": [str(c) for c in field.coefficients],
        "basis": [[str(v) for v in row] for row in field.integral_basis],
    }


def cached_theta(cache: Cache, field: NumberField, source: UnitSource,
                 r_max: int) -> ThetaCertificate:
    payload = {
        "field": _field_cache_id(field),
        "mode": source.mode,
        "units": [[str(c) for c in u.coords] for u in source.units],
        "height": source.height_bound,
        "r_max": r_max,
    }
    key = Cache.key_for("theta", payload)
    hit = cache.get(key)
    if hit is not None:
        theta = field.element([_fr(c) for c in hit["theta"]])
        return ThetaCertificate(
            theta, hit["r_checked"],
            tuple((r, idx) for r, idx in hit["indices"]),
            tuple(bool(b) for b in hit["full_degree"]))
    cert = select_theta(field, source, r_max)
    cache.put(key, {
        "theta": [str(c) for c in cert.theta.coords],
        "r_checked": cert.r_checked,
        "indices": [[r, idx] for r, idx in cert.indices],
        "full_degree": list(cert.full_degree),
    })
    return cert


def make_ambient_provider(cache: Cache, field: NumberField, enum_cap: int):
    def provider(ring, size):
        payload = {"field": _field_cache_id(field), "p": ring.p, "size": size}
        key = Cache.key_for("ambient", payload)
        hit = cache.get(key)
        if hit is not None:
            return int(hit["order"])
        order = ambient_order(ring, size, method="auto",
                              enumeration_cap=enum_cap)
        cache.put(key, {"order": order})
        return order

    return provider


# ---------------------------------------------------------------------------
# Per-case pipelines

def _theta_source(field: NumberField, desc: dict, caps: dict) -> UnitSource:
    if desc.get("units"):
        units = tuple(field.from_integral_coords([_fr(v) for v in row])
                      for row in desc["units"])
        return UnitSource("configured", units)
    if field.degree == 2 and field.signature == (2, 0):
        return UnitSource("pell")
    return UnitSource("search", height_bound=caps["unit_search_height"])


def _integral_basis_targets(field: NumberField):
    return [field.from_integral_coords([1 if i == j else 0
                                        for i in range(field.degree)])
            for j in range(field.degree)]


def _run_sl2_noncm(field, desc, r, primes, caps, cache):
    source = _theta_source(field, desc, caps)
    theta_cert = cached_theta(cache, field, source, caps["r_max"])
    triple = build_noncm(field, theta_cert, r)
    words = elementary_words(theta_cert.theta, upper_elementary(field, 1), r,
                             _integral_basis_targets(field),
                             m_max=caps.get("m_max"))
    if not lattice_contains_multiple(words):
        raise ConstructionError("HNF containment check failed")
    cert = certify(triple, primes, words,
                   closure_cap=caps["closure_max_elements"],
                   table_cap=caps["table_cap"],
                   ambient_provider=make_ambient_provider(
                       cache, field, caps["enumeration_cap"]))
    return {
        "theta_certificate": _theta_json(theta_cert),
        "triple": triple.serialize(),
        "elementary": words.serialize(),
        "certificate": cert.serialize(),
        "verdict": cert.verdict,
    }


def _run_sl2_cm(field, desc, r, primes, caps, cache):
    if "subfield" not in desc or "alpha" not in desc:
        raise ConstructionError("CM case needs a declared subfield and alpha")
    emb = build_subfield(field, desc)
    alpha = field.element([_fr(v) for v in desc["alpha"]])
    # theta comes from the totally real subfield, never from E itself
    if emb.sub.degree == 2 and emb.sub.signature == (2, 0):
        source = UnitSource("pell")
    else:
        source = UnitSource("search", height_bound=caps["unit_search_height"])
    theta_cert = cached_theta(cache, emb.sub, source, caps["r_max"])
    triple = build_cm(field, emb, alpha, theta_cert, r)
    sub_targets = _integral_basis_targets(emb.sub)
    words = elementary_words(theta_cert.theta, upper_elementary(field, 1), r,
                             sub_targets, m_max=caps.get("m_max"),
                             embedding=emb)
    if not lattice_contains_multiple(words):
        raise ConstructionError("HNF containment check failed")
    cert = certify(triple, primes, words,
                   closure_cap=caps["closure_max_elements"],
                   table_cap=caps["table_cap"],
                   ambient_provider=make_ambient_provider(
                       cache, field, caps["enumeration_cap"]))
    return {
        "theta_certificate": _theta_json(theta_cert),
        "triple": triple.serialize(),
        "elementary": words.serialize(),
        "certificate": cert.serialize(),
        "verdict": cert.verdict,
    }


def _run_sl2_cmprime(field, desc, r, primes, caps, cache):
    if "subfield" not in desc or "cmprime_x" not in desc:
        raise ConstructionError("CMPRIME case needs a subfield and cmprime_x")
    emb = build_subfield(field, desc)
    x = field.element([_fr(v) for v in desc["cmprime_x"]])
    source = UnitSource("pell") if emb.sub.signature == (2, 0) else UnitSource(
        "search", height_bound=caps["unit_search_height"])
    theta_cert = cached_theta(cache, emb.sub, source, caps["r_max"])
    # theta must be congruent to 1 mod t: scan small powers for admissibility
    element = None
    last_error = None
    for k in range(1, 13):
        try:
            element = cmprime_g_element(field, emb, x,
                                        theta_cert.theta ** k)
            break
        except CMRedirect:
            raise
        except ConstructionError as exc:
            last_error = exc
    if element is None:
        raise ConstructionError("no admissible theta power found: %s" % last_error)
    return {
        "theta_certificate": _theta_json(theta_cert),
        "cmprime": {
            "g": element.g.serialize(),
            "a": [str(c) for c in element.a.coords],
            "c": [str(c) for c in element.c.coords],
            "t": [str(c) for c in element.t.coords],
            "n": [str(c) for c in element.n.coords],
        },
        "verdict": "PASS",
    }


def _run_su21(field, desc, r, primes, caps, cache):
    if "su21" not in desc:
        raise ConstructionError("SU21 case needs z, sqrt_z and t parameters")
    params = desc["su21"]
    sqrt_z = field.element([_fr(v) for v in params["sqrt_z"]])
    z = _fr(params["z"])
    if sqrt_z * sqrt_z != field.from_rational(z):
        raise ConstructionError("sqrt_z^2 does not equal the declared z")
    t_param = field.element([_fr(v) for v in params["t_param"]])
    conj = FieldAutomorphism.quadratic_conjugation(field)
    data = HermitianData.standard(field, conj)

    checks = {}
    gens_t, gens_1 = [], []
    for x in range(1, 3):
        gens_t.append(su21_uplus_generator(data, sqrt_z, t_param, r * x))
        gens_1.append(su21_uplus_generator(data, sqrt_z, field.one(), r * x))
        for c0 in range(0, 3):
            for c1 in range(0, 2):
                if c0 == 0 and c1 == 0:
                    continue
                u = field.from_rational(c0) + sqrt_z * c1
                gens_t.append(su21_uplus_generator(data, sqrt_z, t_param,
                                                   r * x, u))
                gens_1.append(su21_uplus_generator(data, sqrt_z, field.one(),
                                                   r * x, u))
    checks["generators_in_group"] = all(
        su21_check(g, data) for g in gens_t + gens_1)
    checks["commutators_in_u2alpha"] = all(
        u2alpha_parameter(commutator(a, b), sqrt_z, t_param) is not None
        for a in gens_t for b in gens_1)
    rng = random.Random(2024)
    hom_ok = True
    for _ in range(25):
        m1 = upper_elementary(field, rng.randint(-3, 3)) * lower_elementary(
            field, rng.randint(-3, 3))
        m2 = upper_elementary(field, rng.randint(-3, 3)) * lower_elementary(
            field, rng.randint(-3, 3))
        hom_ok &= sl2_to_su21(m1, sqrt_z) * sl2_to_su21(m2, sqrt_z) == \
            sl2_to_su21(m1 * m2, sqrt_z)
        hom_ok &= su21_check(sl2_to_su21(m1, sqrt_z), data)
    checks["embedding_homomorphism"] = hom_ok
    verdict = "PASS" if all(checks.values()) else "FAIL"
    return {"su21_checks": checks, "verdict": verdict}


def _run_sln(field, desc, r, primes, caps, cache):
    if "sln" not in desc:
        raise ConstructionError("SLN_MULTONE case needs the sln block")
    params = desc["sln"]
    size = params["n"]
    levi = MatN(field, [[_fr(v) for v in row] for row in params["levi"]])
    u_col = [field.from_rational(_fr(v)) for v in params["u_col"]]
    triple, report = build_sln_multone(field, size, levi, u_col,
                                       params.get("wedge_exponents"), r=r)
    cert = certify(triple, primes, None,
                   closure_cap=caps["closure_max_elements"],
                   table_cap=caps["table_cap"],
                   ambient_provider=make_ambient_provider(
                       cache, field, caps["enumeration_cap"]))
    return {
        "triple": triple.serialize(),
        "wedge": report.serialize(),
        "certificate": cert.serialize(),
        "verdict": cert.verdict,
    }


_CASE_RUNNERS = {
    SL2_NONCM: _run_sl2_noncm,
    SL2_CM: _run_sl2_cm,
    SL2_CMPRIME: _run_sl2_cmprime,
    SU21: _run_su21,
    SLN_MULTONE: _run_sln,
}


def _theta_json(cert: ThetaCertificate):
    return {
        "theta": [str(c) for c in cert.theta.coords],
        "r_checked": cert.r_checked,
        "indices": [[r, idx] for r, idx in cert.indices],
        "full_degree": list(cert.full_degree),
    }


def _caps_with_defaults(config: dict) -> dict:
    caps = dict(config.get("caps", {}))
    caps.setdefault("closure_max_elements", DEFAULT_CLOSURE_CAP)
    caps.setdefault("enumeration_cap", DEFAULT_ENUM_CAP)
    caps.setdefault("table_cap", DEFAULT_TABLE_CAP)
    caps.setdefault("unit_search_height", 3)
    caps.setdefault("r_max", 12)
    caps.setdefault("m_max", None)
    return caps


def run_single_job(config: dict, job_index: int):
    """Execute one (field, case, r) job; safe to call in a worker process."""
    caps = _caps_with_defaults(config)
    jobs = list(_job_specs(config))
    field_desc, case, r = jobs[job_index]
    primes = field_desc.get("primes", config.get("primes", []))
    cache = Cache(config.get("cache_dir") or os.environ.get(CACHE_ENV_VAR))
    entry = {"field": field_desc["name"], "case": case, "r": r}
    started = time.perf_counter()
    try:
        field = build_field(field_desc)
        result = _CASE_RUNNERS[case](field, field_desc, r, primes, caps, cache)
        entry.update(result)
        entry["status"] = "ok"
    except ResourceCapError as exc:
        entry.update({"status": "aborted", "error": str(exc), "verdict": "UNKNOWN"})
    except (ConstructionError, NoThetaError, ValueError) as exc:
        entry.update({"status": "error", "error": str(exc), "verdict": "FAIL"})
    elapsed = time.perf_counter() - started
    return entry, elapsed


def _case_applicable(field_desc: dict, case: str) -> bool:
    """A case runs on a field iff the field declares the data it needs;
    the plain SL(2) construction runs on fields with no special blocks."""
    if case == SL2_NONCM:
        return "subfield" not in field_desc and "sln" not in field_desc
    if case == SL2_CM:
        return "subfield" in field_desc and "alpha" in field_desc
    if case == SL2_CMPRIME:
        return "subfield" in field_desc and "cmprime_x" in field_desc
    if case == SU21:
        return "su21" in field_desc
    if case == SLN_MULTONE:
        return "sln" in field_desc
    return False


def _job_specs(config: dict):
    for field_desc in config["fields"]:
        for case in config["cases"]:
            if not _case_applicable(field_desc, case):
                continue
            for r in config.get("r_values", [1]):
                yield field_desc, case, r


def _skipped_entries(config: dict):
    out = []
    for field_desc in config["fields"]:
        for case in config["cases"]:
            if not _case_applicable(field_desc, case):
                out.append({
                    "field": field_desc["name"], "case": case,
                    "status": "skipped", "verdict": "SKIPPED",
                    "error": "field does not declare the data this case needs",
                })
    return out


def run(config: dict, jobs: int = 1) -> dict:
    """Execute the whole config; returns the report dictionary."""
    specs = list(_job_specs(config))
    entries = [None] * len(specs)
    timings = {}
    if jobs > 1 and len(specs) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(run_single_job, config, i): i
                       for i in range(len(specs))}
            for fut in concurrent.futures.as_completed(futures):
                i = futures[fut]
                entries[i], timings["job_%d" % i] = fut.result()
    else:
        for i in range(len(specs)):
            entries[i], timings["job_%d" % i] = run_single_job(config, i)
    report = {
        "schema": "trigen-report-v1",
        "version": __version__,
        "config": config,
        "jobs": entries + _skipped_entries(config),
        "timings": {k: round(v, 6) for k, v in sorted(timings.items())},
    }
    return report


# ---------------------------------------------------------------------------
# Report rendering

def explain(report: dict) -> str:
    lines = []
    header = "%-12s %-12s %3s %6s %14s %-8s" % (
        "field", "case", "r", "N", "primes", "verdict")
    lines.append(header)
    lines.append("-" * len(header))
    for job in report.get("jobs", []):
        n_val = job.get("elementary", {}).get("n_achieved", "-")
        primes = job.get("certificate", {}).get("primes", [])
        surj = sum(1 for p in primes
                   if p.get("closure", {}).get("surjective") is True)
        unknown = any(p.get("closure", {}).get("surjective") is None
                      and "closure" in p for p in primes)
        if primes:
            cell = "%d/%d" % (surj, len(primes))
            if unknown:
                cell += " UNKNOWN (cap)"
        else:
            cell = "-"
        lines.append("%-12s %-12s %3s %6s %14s %-8s" % (
            job.get("field", "?"), job.get("case", "?"), job.get("r", "?"),
            n_val, cell, job.get("verdict", "?")))
        if job.get("error"):
            lines.append("    error: %s" % job["error"])
    return "\n".join(lines)


def field_info(config: dict, name: str) -> str:
    caps = _caps_with_defaults(config)
    for desc in config["fields"]:
        if desc["name"] == name:
            field = build_field(desc)
            lines = [
                "field %s" % name,
                "  defining polynomial: %s" % list(field.coefficients),
                "  degree: %d" % field.degree,
                "  signature: %s" % (field.signature,),
                "  discriminant: %d" % field.discriminant,
                "  unit rank: %d" % unit_rank(field),
                "  irreducibility checked: %s" % field.irreducibility_checked,
            ]
            try:
                cache = Cache(config.get("cache_dir")
                              or os.environ.get(CACHE_ENV_VAR))
                cert = cached_theta(cache, field,
                                    _theta_source(field, desc, caps),
                                    caps["r_max"])
                lines.append("  theta: %s" % [str(c) for c in cert.theta.coords])
                lines.append("  indices [O_K : Z[theta^r]]: %s"
                             % ([idx for _, idx in cert.indices],))
            except (NoThetaError, ValueError) as exc:
                lines.append("  theta: unavailable (%s)" % exc)
            return "\n".join(lines)
    raise ConfigError("no field named %r in config" % name)


# ---------------------------------------------------------------------------
# Entry point

def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="trigen",
        description="three-generator constructions with desk-scale certification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a job config")
    p_run.add_argument("config")
    p_run.add_argument("--out", required=True)
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--cache", default=None)

    p_explain = sub.add_parser("explain", help="summarize a report")
    p_explain.add_argument("report")

    p_info = sub.add_parser("field-info", help="inspect one configured field")
    p_info.add_argument("config")
    p_info.add_argument("--field", required=True)

    args = parser.parse_args(argv)

    if args.command == "run":
        try:
            config = load_config(args.config)
        except ConfigError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        if args.cache:
            config["cache_dir"] = args.cache
        report = run(config, jobs=args.jobs)
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, sort_keys=True, indent=1)
            fh.write("\n")
        print(explain(report))
        if any(j.get("status") == "aborted" for j in report["jobs"]):
            return 3
        return 0

    if args.command == "explain":
        try:
            with open(args.report, "r", encoding="utf-8") as fh:
                report = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print("error: cannot read report: %s" % exc, file=sys.stderr)
            return 2
        print(explain(report))
        return 0

    if args.command == "field-info":
        try:
            config = load_config(args.config)
            print(field_info(config, args.field))
        except ConfigError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
