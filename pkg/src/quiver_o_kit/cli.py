"""Command-line entry point.

Every subcommand reads one JSON payload (--input path, '-' for stdin, or an
inline JSON object) and writes JSON, DOT or an aligned text table. Exit
codes: 0 ok, 2 schema violation, 3 cap exceeded, 4 on-wall / non-generic.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import crystal as cr
from . import hypertoric as ht
from .duality import ChargeMatrix, flip, matrix_dual, transpose_weight, weight_dual, weights_from_matrix
from .finite_type_a import describe, finite_dual
from .kn import (
    KNError,
    Multisegment,
    build_representation,
    documented_u,
    limit_check,
    lift_from,
    loading_from_lift,
    norm_u,
)
from .partitions import Abacus, EnumerationCapExceeded, Multipartition, RibbonSpec, dimension_vector
from .serialize import SchemaError, dumps, int_list, integer, rational, require, to_jsonable, weight_from_json
from .strata import NotInRootCone, dual_instance, dual_label, special_strata
from .weightings import (
    OnWall,
    TensorCase,
    Weighting,
    dual_wall_data,
    git_wall_test,
    hamiltonian_wall_test,
    normalize,
    u_s_map,
    uglov,
    wall_forms,
)

EXIT_SCHEMA = 2
EXIT_CAP = 3
EXIT_WALL = 4


class CapError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# payload helpers

def _matrix(p: dict) -> ChargeMatrix:
    rows = require(p, "U")
    if not isinstance(rows, list) or not rows:
        raise SchemaError("U must be a non-empty list of rows")
    try:
        return ChargeMatrix(tuple(tuple(int_list(r)) for r in rows), integer(p.get("w", 0)))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _weighting(p: dict) -> Weighting:
    theta = require(p, "theta")
    if not isinstance(theta, list):
        raise SchemaError("theta must be a list")
    e = integer(require(p, "e"))
    residues = int_list(require(p, "residues"))
    try:
        return Weighting(tuple(rational(x) for x in theta), rational(require(p, "kappa")), e, tuple(residues))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def _abacus(p: dict):
    e = integer(require(p, "e"))
    if "rows" in p:
        try:
            ab = Abacus.from_json({"rows": p["rows"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError("bad abacus rows: %s" % exc) from exc
    else:
        mp = require(p, "multipartition")
        parts = require(mp, "parts")
        charges = int_list(require(mp, "charges"))
        try:
            ab = Multipartition.of([tuple(int_list(x)) for x in parts], charges, e).abacus()
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    return ab, e


def _mp(p: dict, e: int) -> Multipartition:
    parts = require(p, "parts")
    charges = int_list(require(p, "charges"))
    try:
        return Multipartition.of([tuple(int_list(x)) for x in parts], charges, e)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


# ---------------------------------------------------------------------------
# subcommands

def cmd_dual(p: dict, args) -> dict:
    if "weight" in p:
        nu = weight_from_json(p["weight"])
        if not nu.is_dominant():
            raise SchemaError("weight must be dominant")
        out = {"weight": nu, "transpose": transpose_weight(nu)}
        if "w" in p:
            out["dual"] = weight_dual(nu, integer(p["w"]))
        return out
    u = _matrix(p)
    ud = matrix_dual(u)
    lam, mu = weights_from_matrix(u)
    lam_d, mu_d = weights_from_matrix(ud)
    ab = u.abacus()
    return {
        "U": [list(r) for r in u.entries],
        "w": u.w,
        "s": list(u.s),
        "t": list(u.t),
        "cores": u.cores(),
        "dimension_vector": [dimension_vector(Multipartition(tuple(u.cores()), u.e), u.w)[i] for i in range(u.e)],
        "lambda": lam,
        "mu": mu,
        "dual": {
            "U": [list(r) for r in ud.entries],
            "s": list(ud.s),
            "t": list(ud.t),
            "cores": ud.cores(),
            "lambda": lam_d,
            "mu": mu_d,
        },
        "flip_matches_transpose": flip(ab, u.e) == ud.abacus(),
    }


def cmd_flip(p: dict, args) -> dict:
    ab, e = _abacus(p)
    out = flip(ab, e)
    lo, hi = ab.window()
    flo, fhi = out.window()
    return {
        "input": ab,
        "output": out,
        "e": out.level,
        "period": ab.level,
        "picture_in": ab.render(lo, hi).split("\n"),
        "picture_out": out.render(flo, fhi).split("\n"),
    }


def _crystal_graph(p: dict, args):
    e = integer(require(p, "e"))
    charges = int_list(require(p, "charges"))
    algebras = tuple(p.get("algebras", ["sle"]))
    if any(a not in (cr.SLE, cr.SLL) for a in algebras):
        raise SchemaError("algebras must be drawn from 'sle' and 'sll'")
    if not charges or e < 1:
        raise SchemaError("need e >= 1 and at least one charge")
    seed = cr.CrystalNode.vacuum(charges, e)
    try:
        return cr.crystal_graph(seed, args.depth, algebras, cap=args.cap or 100000)
    except cr.NodeCapExceeded as exc:
        raise CapError(str(exc)) from exc


def cmd_crystal(p: dict, args):
    g = _crystal_graph(p, args)
    if args.format == "graph":
        return g.to_dot()
    return g.to_json()


def cmd_strata(p: dict, args):
    lam = weight_from_json(require(p, "lambda"))
    mu = weight_from_json(require(p, "mu"))
    w = integer(p.get("w", 0))
    try:
        poset = special_strata(lam, mu)
    except NotInRootCone as exc:
        raise SchemaError(str(exc)) from exc
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    if args.cap and len(poset.labels) > args.cap:
        raise CapError("%d strata exceed the cap %d" % (len(poset.labels), args.cap))
    if args.format == "graph":
        return poset.to_dot()
    lam_d, mu_d = dual_instance(lam, mu, w)
    return {
        "strata": poset.to_json(),
        "dual_instance": {"lambda": lam_d, "mu": mu_d},
        "dual_labels": [{"nu": dual_label(l, w).nu, "n": l.n} for l in poset.labels],
    }


def cmd_walls(p: dict, args):
    if "charges" in p:
        e = integer(require(p, "e"))
        charges = int_list(p["charges"])
        mu = weight_from_json(require(p, "mu"))
        roots = require(p, "roots")
        cap = args.cap or 200
        try:
            rows = []
            for r in roots:
                a, length = int_list(r)
                spec = RibbonSpec(a % e, length, e)
                rows.append({"root": [a, length], "git": git_wall_test(charges, e, mu, spec, cap)})
            dual_roots = p.get("dual_roots", [])
            drows = []
            if dual_roots:
                dch, de, dmu, _ = dual_wall_data(charges, e, mu, cap)
                for r in dual_roots:
                    a, length = int_list(r)
                    spec = RibbonSpec(a % len(charges), length, len(charges))
                    ham = hamiltonian_wall_test(charges, e, mu, spec, cap)
                    dgit = git_wall_test(dch, de, dmu, spec, cap) if dmu is not None else False
                    drows.append({"root": [a, length], "hamiltonian": ham, "dual_git": dgit})
        except EnumerationCapExceeded as exc:
            raise CapError(str(exc)) from exc
        return {"git": rows, "hamiltonian": drows}
    wt = _weighting(p)
    if args.m_range is not None:
        ms = range(-args.m_range, args.m_range + 1)
    else:
        try:
            ms = wt.m_range()
        except TensorCase as exc:
            raise SchemaError(str(exc)) from exc
    forms = wall_forms(wt.e, wt.ell, wt.residues, ms)
    return {
        "generic": wt.is_generic(),
        "m_range": [ms.start, ms.stop - 1],
        "forms": [{"i": f.i + 1, "j": f.j + 1, "m": f.m, "value": f.evaluate(wt.theta, wt.kappa), "sign": f.sign(wt)}
                  for f in forms],
    }


def cmd_normalize(p: dict, args):
    wt = _weighting(p)
    try:
        res = normalize(wt)
    except (OnWall, TensorCase) as exc:
        raise WallError(str(exc)) from exc
    return {"sign": res.sign, "U": [list(r) for r in res.matrix.entries], "s": list(res.matrix.s),
            "permutation": [x + 1 for x in res.permutation], "weighting": res.weighting()}


def cmd_usmap(p: dict, args):
    if "U" in p:
        u = _matrix(p)
        wt, s = uglov(u), u.s
    else:
        wt = _weighting(p)
        s = tuple(int_list(require(p, "s")))
    try:
        res = u_s_map(wt, s)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return {"weighting": wt, "s": list(s), "coefficients": res.to_json()}


def cmd_kn(p: dict, args):
    wt = _weighting(p)
    mp = _mp(require(p, "multipartition"), wt.e)
    segs = require(p, "segments") if "segments" in p else []
    try:
        m = Multisegment(tuple(tuple(int_list(s)) for s in segs))
        u = rational(p["u"]) if "u" in p else Fraction(documented_u(mp, wt))
        lift = lift_from(mp, m, wt, u)
        rep = build_representation(mp, m, wt)
        report = limit_check(rep, lift, wt)
        loading = loading_from_lift(lift)
    except KNError as exc:
        raise WallError(str(exc)) if "twice" in str(exc) else SchemaError(str(exc))
    table = [{"basis": list(lab), "vertex": v, "eigenvalue": val} for lab, v, val in lift.entries]
    if args.format == "table":
        lines = ["%-22s %6s %12s" % ("basis", "vertex", "eigenvalue")]
        for lab, v, val in lift.entries:
            lines.append("%-22s %6d %12s" % (",".join(map(str, lab)), v, val))
        lines.append("u = %s  norm^2 = %s  limit_check = %s" % (u, norm_u(lift, u), report.ok))
        return "\n".join(lines) + "\n"
    return {
        "u": u,
        "eigenvalues": table,
        "norm_squared": norm_u(lift, u),
        "limit_check": {"ok": report.ok, "checked": report.checked,
                        "offending": [[n, list(s), list(t), d, c] for n, s, t, d, c in report.offending]},
        "loading": loading.to_json(),
    }


def cmd_hypertoric(p: dict, args):
    try:
        a = ht.PolarizedArrangement.from_json(p)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError("bad arrangement: %s" % exc) from exc
    try:
        rows = {s: (ht.is_feasible(a, s), ht.is_bounded(a, s)) for s in ht.sign_vectors(a.n)} \
            if a.n <= (args.cap or 16) else None
    except ht.CapExceeded as exc:
        raise CapError(str(exc)) from exc
    if rows is None:
        raise CapError("n = %d exceeds the enumeration cap" % a.n)
    both = [s for s, (f, b) in rows.items() if f and b]
    if args.format == "table":
        lines = ["sigma    feasible bounded"]
        for s in sorted(rows):
            f, b = rows[s]
            lines.append("%-8s %-8s %s" % (s, f, b))
        lines.append("bounded and feasible: %d" % len(both))
        return "\n".join(lines) + "\n"
    return {
        "chambers": [{"sigma": s, "feasible": rows[s][0], "bounded": rows[s][1]} for s in sorted(rows)],
        "bounded_feasible": sorted(both),
        "regular": ht.is_regular(a),
        "gale_dual": ht.gale_dual(a).to_json(),
    }


def cmd_finite_dual(p: dict, args):
    u = _matrix(p)
    try:
        d = describe(u)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return {"primal": d.to_json(), "dual": finite_dual(d).to_json()}


class WallError(ValueError):
    pass


COMMANDS = {
    "dual": cmd_dual,
    "flip": cmd_flip,
    "crystal": cmd_crystal,
    "strata": cmd_strata,
    "walls": cmd_walls,
    "normalize": cmd_normalize,
    "usmap": cmd_usmap,
    "kn": cmd_kn,
    "hypertoric": cmd_hypertoric,
    "finite-dual": cmd_finite_dual,
}

GRAPH_COMMANDS = {"crystal", "strata"}


# ---------------------------------------------------------------------------
# sample payloads (--seed)

def sample_payload(cmd: str, seed: int) -> dict:
    """A small random payload for a subcommand, deterministic in seed."""
    rng = random.Random(seed)
    if cmd in ("dual", "usmap"):
        ell, e = rng.randint(1, 3), rng.randint(2, 4)
        return {"U": [[rng.randint(-1, 2) for _ in range(e)] for _ in range(ell)], "w": rng.randint(0, 2)}
    if cmd == "finite-dual":
        ell, e = rng.randint(1, 3), rng.randint(2, 4)
        return {"U": [[rng.randint(0, 1) for _ in range(e)] for _ in range(ell)], "w": 0}
    if cmd == "flip":
        ell, e = rng.randint(1, 3), rng.randint(2, 4)
        return {"e": e, "multipartition": {"parts": [[rng.randint(1, 3)] for _ in range(ell)],
                                           "charges": [rng.randint(-2, 2) for _ in range(ell)]}}
    if cmd == "crystal":
        return {"e": rng.randint(2, 3), "charges": [rng.randint(0, 2) for _ in range(rng.randint(1, 2))]}
    if cmd in ("walls", "normalize"):
        ell, e = rng.randint(1, 3), rng.randint(2, 3)
        return {"e": e, "theta": [str(Fraction(rng.randint(-20, 20), rng.randint(1, 7))) for _ in range(ell)],
                "kappa": str(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))),
                "residues": [rng.randint(0, e - 1) for _ in range(ell)]}
    if cmd == "kn":
        return {"e": 2, "theta": [0], "kappa": "-2", "residues": [0],
                "multipartition": {"parts": [[rng.randint(1, 3)]], "charges": [0]}, "segments": [[0, rng.randint(1, 3)]]}
    if cmd == "hypertoric":
        n = rng.randint(1, 4)
        k = rng.randint(0, n)
        return {"n": n, "G_basis": [[str(rng.randint(-2, 2)) for _ in range(n)] for _ in range(k)],
                "xi": [str(rng.randint(-3, 3)) for _ in range(n)], "eta": [str(rng.randint(-2, 2)) for _ in range(k)]}
    if cmd == "strata":
        return {"lambda": {"e": 2, "level": 1, "t": [1, 0], "eta": 0},
                "mu": {"e": 2, "level": 1, "t": [1, 0], "eta": -rng.randint(0, 2)}}
    raise SchemaError("no sample payload for %r" % cmd)


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quiver-o-kit",
                                 description="Combinatorics of category O for affine type A quiver and hypertoric varieties.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--input", "-i", help="payload file, '-' for stdin, or an inline JSON object")
    ap.add_argument("--output", "-o", help="write the result here instead of stdout")
    ap.add_argument("--format", "-f", choices=["structured", "graph", "table"], default="structured")
    ap.add_argument("--depth", type=int, default=3, help="crystal graph depth")
    ap.add_argument("--m-range", type=int, default=None, help="wall forms for |m| <= M")
    ap.add_argument("--cap", type=int, default=None, help="node / enumeration cap")
    ap.add_argument("--seed", type=int, default=None, help="generate a random sample payload instead of reading one")
    return ap


def _load(args) -> dict:
    if args.seed is not None:
        return sample_payload(args.command, args.seed)
    src = args.input
    if src is None:
        raise SchemaError("--input is required (or --seed)")
    try:
        if src == "-":
            text = sys.stdin.read()
        elif src.lstrip().startswith("{"):
            text = src
        else:
            with open(src) as fh:
                text = fh.read()
        data = json.loads(text)
    except OSError as exc:
        raise SchemaError("cannot read input: %s" % exc) from exc
    except json.JSONDecodeError as exc:
        raise SchemaError("input is not valid JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise SchemaError("payload must be a JSON object")
    return data


def _emit(text: str, args):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(kind: str, code: int, message: str, args) -> int:
    rec = {"error": {"kind": kind, "status": code, "message": message, "command": args.command}}
    sys.stdout.write(json.dumps(rec, sort_keys=True) + "\n")
    return code


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.depth < 0:
            raise SchemaError("--depth must be >= 0")
        if args.format == "graph" and args.command not in GRAPH_COMMANDS:
            raise SchemaError("--format graph is only available for crystal and strata")
        payload = _load(args)
        result = COMMANDS[args.command](payload, args)
    except SchemaError as exc:
        return _error("schema", EXIT_SCHEMA, str(exc), args)
    except CapError as exc:
        return _error("cap", EXIT_CAP, str(exc), args)
    except WallError as exc:
        return _error("wall", EXIT_WALL, str(exc), args)
    if isinstance(result, str):
        text = result
    elif args.format == "table":
        text = "".join("%s\t%s\n" % (k, json.dumps(to_jsonable(v), sort_keys=True)) for k, v in sorted(result.items()))
    else:
        text = dumps(result)
    _emit(text, args)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
