"""Command-line surface: compute expansions, verify identities,
enumerate posets, and run campaigns, with a deterministic result cache.

Exit codes: 0 all checks passed, 1 a mathematical identity failed,
2 usage error.
"""

import argparse
import hashlib
import json
import multiprocessing
import os
import random
import sys
import tempfile

from . import __version__
from .posetlib import (Nuio, Poset, enumerate_nuios, nuio_check,
                       parse_poset_string, p_n_r)
from .polyring import Poly
from .cqfcore import (BRUTE_BOUND, PERM_BOUND, RouteDisagreement, cqf_brute,
                      cqf_x_fundamental, cqf_schur, x_symmetric, three_route,
                      closed_forms, p_expansion, identity_checks,
                      conjecture_report, check_rho, check_des_variant,
                      check_acyclic_orientations, check_palindromic)
from .speclib import (mahonian_check, specialization_check, root_of_unity_suite,
                      q_unimodality_report)

USAGE_ERROR = 2
IDENTITY_ERROR = 1

SYM_BASES = ("m", "e", "h", "s", "p")
QSYM_BASES = ("M", "F")


class UsageError(Exception):
    pass


# --- serialization -------------------------------------------------------

def _coeff_strings(tp):
    """A t-polynomial as a list of exact coefficient strings, low degree
    first."""
    return [str(c) for c in tp.coeff_list()]


def _expansion_payload(basis, coeffs):
    items = []
    for key in sorted(coeffs):
        items.append({"index": list(key),
                      "coeffs": _coeff_strings(coeffs[key])})
    return {"basis": basis, "terms": items}


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# --- cache ---------------------------------------------------------------

def _cache_dir(args):
    return args.cache_dir or os.environ.get("CHROMAQ_CACHE")


def _cache_key(command, poset_string, extra):
    blob = json.dumps([__version__, command, poset_string, extra],
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_get(cache, key):
    if not cache:
        return None
    path = os.path.join(cache, key + ".json")
    if os.path.exists(path):
        with open(path) as fh:
            return fh.read()
    return None


def _cache_put(cache, key, text):
    if not cache:
        return
    os.makedirs(cache, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, os.path.join(cache, key + ".json"))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- poset selection -----------------------------------------------------

def _load_poset(text):
    try:
        return parse_poset_string(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc))


def _check_bounds(P, routes):
    n = P.n if isinstance(P, (Poset, Nuio)) else P
    if "brute" in routes and n > BRUTE_BOUND:
        raise UsageError(f"brute-force route limited to n <= {BRUTE_BOUND}")
    if ("fundamental" in routes or "schur" in routes) and n > PERM_BOUND:
        raise UsageError(f"permutation routes limited to n <= {PERM_BOUND}")


# --- compute -------------------------------------------------------------

def _compute_expansion(P, basis, oracle):
    """One basis expansion of X plus the provenance of routes used."""
    pos = P.poset() if isinstance(P, Nuio) else P
    provenance = []
    if basis in QSYM_BASES:
        if oracle:
            # route equality is part of the oracle contract
            x = three_route(P)
            provenance = ["brute", "fundamental", "schur"]
        else:
            x = cqf_x_fundamental(pos)
            provenance = ["fundamental"]
        x = x.to_basis(basis)
        coeffs = x.coeffs
    elif basis in SYM_BASES:
        if oracle:
            brute = x_symmetric(P, route="brute").convert(basis)
            perm = x_symmetric(P, route="fundamental").convert(basis)
            tab = cqf_schur(P).convert(basis)
            if not (brute == perm and brute == tab):
                raise RouteDisagreement(f"basis {basis}: routes disagree")
            sym, provenance = brute, ["brute", "fundamental", "schur"]
        elif basis == "s":
            sym, provenance = cqf_schur(P), ["schur"]
        elif basis == "p":
            sym, provenance = p_expansion(pos), ["permutation-classes"]
        else:
            sym = x_symmetric(pos, route="fundamental").convert(basis)
            provenance = ["fundamental"]
        coeffs = sym.coeffs
        if basis == "p":
            # omega X is what the permutation classes produce; report X
            sym = sym.omega() if provenance == ["permutation-classes"] else sym
            coeffs = sym.coeffs
    else:
        raise UsageError(f"unknown basis {basis!r}")
    return coeffs, provenance


def cmd_compute(args):
    P = _load_poset(args.poset)
    routes = ["brute"] if args.oracle else []
    routes += ["fundamental"]
    _check_bounds(P, routes)
    bases = [b.strip() for b in args.basis.split(",") if b.strip()]
    if not bases:
        raise UsageError("no basis requested")
    cache = _cache_dir(args)
    key = _cache_key("compute", _poset_label(P),
                     {"basis": bases, "oracle": bool(args.oracle)})
    cached = _cache_get(cache, key)
    if cached is not None:
        _emit(cached, args)
        return 0
    expansions, provenance = {}, {}
    for basis in bases:
        if basis in ("s", "p") or args.oracle:
            _require_nuio(P, f"basis {basis!r}")
        coeffs, prov = _compute_expansion(P, basis, args.oracle)
        expansions[basis] = _expansion_payload(basis, coeffs)
        provenance[basis] = prov
    payload = {
        "command": "compute",
        "poset": _poset_label(P),
        "n": P.n,
        "expansions": expansions,
        "provenance": {"version": __version__, "routes": provenance},
    }
    text = _dump(payload)
    _cache_put(cache, key, text)
    _emit(text, args)
    return 0


def _poset_label(P):
    if isinstance(P, Nuio):
        return P.canonical_string()
    pairs = ";".join(f"{a}<{b}" for a, b in sorted(P.less))
    return f"poset(n={P.n},{pairs})"


def _require_nuio(P, what):
    target = P.poset() if isinstance(P, Nuio) else P
    if not nuio_check(target)["is_nuio"]:
        raise UsageError(f"{what} requires a natural unit interval order")


# --- verify --------------------------------------------------------------

def _verify_one(identity, P):
    """Returns (holds, detail) for one named identity on one poset."""
    nu = P if isinstance(P, Nuio) else None
    G = (P.poset() if isinstance(P, Nuio) else P).inc_graph()
    if identity == "three-route":
        _require_nuio(P, identity)
        try:
            three_route(P)
            return True, {}
        except RouteDisagreement as exc:
            return False, {"diff": str(exc)}
    if identity == "rho":
        return check_rho(G)["holds"], {}
    if identity == "des-variant":
        return check_des_variant(G)["holds"], {}
    if identity == "acyclic-orientations":
        _require_nuio(P, identity)
        r = check_acyclic_orientations(nu)
        return r["holds"], {}
    if identity == "palindromic":
        _require_nuio(P, identity)
        r = check_palindromic(nu)
        return r["holds"], {"center": str(r["center"])}
    if identity == "closed-forms":
        _require_nuio(P, identity)
        cf = closed_forms(nu.poset())
        x = cqf_schur(nu)
        n = nu.n
        got = x.coeffs.get(tuple([1] * n), None)
        ok = got is not None and got == cf["coeff_s_1n"]
        en = x.convert("e").coeffs.get((n,), None)
        ok = ok and en == cf["coeff_en"]
        return ok, {}
    if identity == "p-expansion":
        _require_nuio(P, identity)
        hub = x_symmetric(nu.poset(), route="fundamental").convert("p").omega()
        ok = (p_expansion(nu.poset()) == hub
              and p_expansion(nu.poset(), route="tilde") == hub)
        return ok, {}
    if identity == "specializations":
        r = specialization_check(P.poset() if isinstance(P, Nuio) else P)
        return r["holds"], {k: r[k] for k in ("stable_ok", "finite_ok")}
    if identity == "mahonian":
        r = mahonian_check(P)
        return r["holds"], {} if r["holds"] else {"sum": r["sum"].render()}
    if identity == "roots-of-unity":
        _require_nuio(P, identity)
        n = nu.n
        for d in range(1, n + 1):
            if n % d == 0 and not root_of_unity_suite(nu, d)["agree"]:
                return False, {"d": d}
        return True, {}
    raise UsageError(f"unknown identity {identity!r}")


VERIFY_IDENTITIES = ("three-route", "rho", "des-variant",
                     "acyclic-orientations", "palindromic", "closed-forms",
                     "p-expansion", "specializations", "mahonian", "roots-of-unity")


def cmd_verify(args):
    P = _load_poset(args.poset)
    _check_bounds(P, ["brute", "fundamental"])
    identities = [s.strip() for s in args.identity.split(",") if s.strip()]
    for ident in identities:
        if ident not in VERIFY_IDENTITIES:
            raise UsageError(f"unknown identity {ident!r}; choose from "
                             + ", ".join(VERIFY_IDENTITIES))
    results, failed = {}, []
    for ident in identities:
        holds, detail = _verify_one(ident, P)
        results[ident] = {"holds": holds, **({"detail": detail} if detail else {})}
        if not holds:
            failed.append(ident)
    payload = {
        "command": "verify",
        "poset": _poset_label(P),
        "results": results,
        "provenance": {"version": __version__,
                       "routes": {i: ["exact"] for i in identities}},
    }
    _emit(_dump(payload), args)
    return IDENTITY_ERROR if failed else 0


# --- enumerate -----------------------------------------------------------

def cmd_enumerate(args):
    n = _parse_all(args.all_nuios)
    nuios = list(enumerate_nuios(n))
    payload = {
        "command": "enumerate",
        "n": n,
        "count": len(nuios),
        "posets": [nu.canonical_string() for nu in nuios],
        "provenance": {"version": __version__,
                       "routes": {"enumerate": ["m-sequence recursion"]}},
    }
    _emit(_dump(payload), args)
    return 0


def _parse_all(text):
    text = str(text).strip()
    if text.startswith("all="):
        text = text[4:]
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"expected an integer size, got {text!r}")
    if n < 1:
        raise UsageError("size must be positive")
    return n


# --- campaign ------------------------------------------------------------

CAMPAIGN_CHECKS = ("e-positivity", "e-unimodality", "schur-positivity",
                   "mahonian", "roots-of-unity", "identities", "three-route",
                   "qp-unimodality")


def _campaign_one(job):
    mseq, checks, oracle = job
    nu = Nuio(mseq)
    out = {}
    rep = None
    for check in checks:
        if check in ("e-positivity", "e-unimodality", "schur-positivity"):
            if rep is None:
                rep = conjecture_report(nu)
            key = {"e-positivity": "e_positive",
                   "e-unimodality": "e_unimodal",
                   "schur-positivity": "schur_positive"}[check]
            out[check] = bool(rep[key])
        elif check == "mahonian":
            out[check] = bool(mahonian_check(nu)["holds"])
        elif check == "roots-of-unity":
            n = nu.n
            out[check] = all(root_of_unity_suite(nu, d)["agree"]
                             for d in range(1, n + 1) if n % d == 0)
        elif check == "identities":
            out[check] = bool(identity_checks(nu)["all"])
        elif check == "three-route":
            try:
                three_route(nu)
                out[check] = True
            except RouteDisagreement:
                out[check] = False
        elif check == "qp-unimodality":
            rep2 = q_unimodality_report(nu)
            out[check] = bool(rep2["a_qpt_unimodal"]
                              and rep2["a_qpt_palindromic"])
    if oracle:
        try:
            three_route(nu)
            out["oracle"] = True
        except RouteDisagreement:
            out["oracle"] = False
    return nu.canonical_string(), out


def cmd_campaign(args):
    n = _parse_all(args.all_nuios if args.all_nuios is not None
                   else (args.poset or ""))
    if n > PERM_BOUND:
        raise UsageError(f"campaigns limited to n <= {PERM_BOUND}")
    checks = [s.strip() for s in args.check.split(",") if s.strip()]
    for check in checks:
        if check not in CAMPAIGN_CHECKS:
            raise UsageError(f"unknown check {check!r}; choose from "
                             + ", ".join(CAMPAIGN_CHECKS))
    nuios = list(enumerate_nuios(n))
    # spot-check selection is seeded by the job itself so the report is
    # byte-identical across runs and worker counts
    rng = random.Random(f"{__version__}:{n}:{args.oracle_rate}")
    flagged = set()
    if args.oracle:
        flagged = {nu.mseq for nu in nuios}
    elif args.oracle_rate > 0:
        for nu in nuios:
            if rng.random() < args.oracle_rate:
                flagged.add(nu.mseq)
    jobs = [(nu.mseq, tuple(checks), nu.mseq in flagged) for nu in nuios]
    if args.workers > 1:
        with multiprocessing.Pool(args.workers) as pool:
            rows = pool.map(_campaign_one, jobs)
    else:
        rows = [_campaign_one(job) for job in jobs]
    table = {label: verdicts for label, verdicts in rows}
    failures = sorted(label for label, verdicts in table.items()
                      if not all(verdicts.values()))
    payload = {
        "command": "campaign",
        "n": n,
        "count": len(nuios),
        "checks": checks,
        "oracle_rate": args.oracle_rate if not args.oracle else 1.0,
        "oracled": sorted("m=" + ",".join(str(m) for m in ms)
                          for ms in flagged),
        "results": table,
        "failures": failures,
        "provenance": {"version": __version__,
                       "routes": {"campaign": ["fundamental"],
                                  "oracle": ["brute", "fundamental",
                                             "schur"]}},
    }
    _emit(_dump(payload), args)
    return IDENTITY_ERROR if failures else 0


# --- output --------------------------------------------------------------

def _emit(text, args):
    if args.format == "json":
        sys.stdout.write(text)
        return
    data = json.loads(text)
    if args.format == "text":
        _emit_text(data)
    else:
        _emit_latex(data)


def _render_terms(entry, latex=False):
    lines = []
    for term in entry["terms"]:
        idx = ",".join(str(i) for i in term["index"])
        poly = " + ".join(f"{c}*t^{e}" for e, c in enumerate(term["coeffs"])
                          if c not in ("0",))
        if latex:
            lines.append(f"  ({poly}) \\, {entry['basis']}_{{({idx})}}")
        else:
            lines.append(f"  [{idx}]: {poly}")
    return lines


def _emit_text(data):
    print(f"{data['command']}  {data.get('poset', data.get('n', ''))}")
    if data["command"] == "compute":
        for basis, entry in sorted(data["expansions"].items()):
            print(f"basis {basis}:")
            for line in _render_terms(entry):
                print(line)
    elif data["command"] == "verify":
        for ident, res in sorted(data["results"].items()):
            print(f"  {ident}: {'ok' if res['holds'] else 'FAILED'}")
    elif data["command"] == "enumerate":
        print(f"  count {data['count']}")
        for label in data["posets"]:
            print(f"  {label}")
    elif data["command"] == "campaign":
        print(f"  {data['count']} posets; failures: {len(data['failures'])}")
        for label in data["failures"]:
            print(f"  FAILED {label}")


def _emit_latex(data):
    if data["command"] == "compute":
        for basis, entry in sorted(data["expansions"].items()):
            print(f"% basis {basis}")
            print(" + ".join(_render_terms(entry, latex=True)))
    else:
        _emit_text(data)


# --- config + argument parsing -------------------------------------------

def _load_config(path):
    values = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {raw.rstrip()}")
            key, val = line.split("=", 1)
            values[key.strip().replace("-", "_")] = val.strip()
    return values

CONFIG_KEYS = {"basis": str, "format": str, "cache_dir": str,
               "workers": int, "oracle_rate": float, "check": str}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chromaq",
        description="Chromatic quasisymmetric functions of graphs, exactly.")
    parser.add_argument("--version", action="version", version=__version__)

    def common(sub):
        sub.add_argument("--format", choices=("json", "text", "latex"),
                         default=None)
        sub.add_argument("--cache-dir", default=None)
        sub.add_argument("--config", default=None)

    subs = parser.add_subparsers(dest="command")
    c = subs.add_parser("compute", help="expand X in chosen bases")
    c.add_argument("--poset", required=True,
                   help='"m=<ints>" or "nr=<n>,<r>"')
    c.add_argument("--basis", default=None,
                   help="comma list from M,F,m,e,h,s,p")
    c.add_argument("--oracle", action="store_true",
                   help="recompute by every route and compare")
    common(c)

    v = subs.add_parser("verify", help="check identities on one poset")
    v.add_argument("--poset", required=True)
    v.add_argument("--identity", required=True,
                   help="comma list: " + ",".join(VERIFY_IDENTITIES))
    common(v)

    e = subs.add_parser("enumerate", help="list all NUIOs of a size")
    e.add_argument("--all-nuios", required=True, metavar="N",
                   help='size, or "all=<n>"')
    common(e)

    g = subs.add_parser("campaign", help="run checks over all NUIOs of a size")
    g.add_argument("--all-nuios", default=None, metavar="N")
    g.add_argument("--poset", default=None, help='"all=<n>"')
    g.add_argument("--check", default=None,
                   help="comma list: " + ",".join(CAMPAIGN_CHECKS))
    g.add_argument("--workers", type=int, default=None)
    g.add_argument("--oracle", action="store_true")
    g.add_argument("--oracle-rate", type=float, default=None)
    common(g)
    return parser


DEFAULTS = {"basis": "M", "format": "json", "workers": 1,
            "oracle_rate": 0.05, "check": ",".join(CAMPAIGN_CHECKS[:4])}


def _resolve(args):
    """Fill unset flags from the config file, then from defaults."""
    config = _load_config(args.config) if args.config else {}
    for key, value in config.items():
        if key not in CONFIG_KEYS:
            raise UsageError(f"unknown config key {key!r}")
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, CONFIG_KEYS[key](value))
    for key, value in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    if getattr(args, "workers", 1) < 1:
        raise UsageError("worker count must be >= 1")
    rate = getattr(args, "oracle_rate", 0.0)
    if not 0.0 <= rate <= 1.0:
        raise UsageError("oracle rate must lie in [0, 1]")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return USAGE_ERROR
    try:
        _resolve(args)
        handler = {"compute": cmd_compute, "verify": cmd_verify,
                   "enumerate": cmd_enumerate, "campaign": cmd_campaign}
        return handler[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except RouteDisagreement as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return IDENTITY_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
