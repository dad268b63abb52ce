"""
Command-line interface.

    heckesym construct FILE
    heckesym verify FILE [--lmax L] [--eq2-degree L] [--eq9 IMAX] [--json]
    heckesym pair FILE WORD_A WORD_B [--c C]
    heckesym gram FILE [--c C] [--dump-matrix] [--closed-form] [--json]
    heckesym scan --n N [--samples K] [--seed S] [--tol T] [--sigma re,im] [--plant KIND]
    heckesym poincare [FILE] [--n N] [--lmax L] [--check-eq9 IMAX] [--step 1|2]
    heckesym act FILE WORD INDEX [--c C]

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on input errors (unreadable file, parse error, violated constraint).
"""

import argparse
import json
import sys
from importlib import metadata


from heckesym import gram, pairing, poincare, qdet, tlhecke
from heckesym.scalar import ComplexNumbers, FieldError, ParseError, PoleError
from heckesym.tensorop import hecke_check, ybe_check

SCHEMA_VERSION = 1


class InputError(Exception):
    pass


def _version():
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:  # pragma: no cover - running from a checkout
        return "0.1.0"


# ---------------------------------------------------------------------------
# input

def _locate(raw, needle):
    """(line, column) of the first occurrence of needle in raw, 1-based."""
    k = raw.find(needle)
    if k < 0:
        return None
    line = raw.count("\n", 0, k) + 1
    col = k - (raw.rfind("\n", 0, k) + 1) + 1
    return line, col


def load_instance(path):
    try:
        with open(path) as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError("%s: %s" % (path, exc.strerror or exc))
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError("%s: line %d, column %d: %s" % (path, exc.lineno, exc.colno, exc.msg))
    if not isinstance(data, dict):
        raise InputError("%s: the instance must be a JSON object" % path)
    try:
        return tlhecke.instance_from_dict(data)
    except ParseError as exc:
        # find the offending string in the file for a file position
        where = None
        for key in ("u", "v"):
            for x in data.get(key, []):
                if isinstance(x, str):
                    try:
                        tlhecke.field_from_config(data.get("field")).parse(x)
                    except ParseError:
                        where = _locate(raw, json.dumps(x))
                        break
            if where:
                break
        if where:
            raise InputError("%s: line %d, column %d: bad field element (%s)"
                             % (path, where[0], where[1] + exc.col, exc))
        raise InputError("%s: %s" % (path, exc))
    except (tlhecke.ConstraintError, FieldError, PoleError, ZeroDivisionError,
            ValueError, TypeError) as exc:
        raise InputError("%s: %s" % (path, exc))


def parse_word(text, inst):
    try:
        return pairing.parse_lincomb(text, inst.field, inst.n)
    except ParseError as exc:
        raise InputError("word %r: %s" % (text, exc))
    except (ValueError, TypeError) as exc:
        raise InputError("word %r: %s" % (text, exc))


def parse_c(text, inst):
    if text is None:
        return None
    try:
        return inst.field.parse(text)
    except (ParseError, ValueError) as exc:
        raise InputError("--c %r: %s" % (text, exc))


def default_c(inst, sign=1):
    try:
        return qdet.compute_c(inst, sign)
    except (ValueError, FieldError) as exc:
        raise InputError("cannot compute c (%s); pass --c explicitly, e.g. --c 1" % exc)


# ---------------------------------------------------------------------------
# output

def jsonable(x, field):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v, field) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v, field) for v in x]
    if isinstance(x, pairing.LinComb):
        return x.fmt(field.fmt)
    return field.fmt(x)


def check_entry(chk, field, **extra):
    entry = {"status": "pass" if chk else "fail"}
    if not chk and chk.witness:
        entry["witness"] = jsonable(chk.witness, field)
    entry.update(extra)
    return entry


def skipped(reason, **extra):
    entry = {"status": "skipped", "reason": reason}
    entry.update(extra)
    return entry


def emit(report, as_json, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
        return
    for key in sorted(report):
        val = report[key]
        if isinstance(val, dict) and "status" in val:
            rest = {k: v for k, v in val.items() if k != "status"}
            tail = " " + json.dumps(rest, sort_keys=True) if rest else ""
            out.write("%s: %s%s\n" % (key, val["status"], tail))
        elif isinstance(val, (dict, list)):
            out.write("%s: %s\n" % (key, json.dumps(val, sort_keys=True)))
        else:
            out.write("%s: %s\n" % (key, val))


def _failed(entries):
    return any(isinstance(e, dict) and e.get("status") == "fail" for e in entries)


# ---------------------------------------------------------------------------
# commands

def cmd_construct(args):
    inst = load_instance(args.instance)
    f = inst.field
    echo = tlhecke.instance_to_dict(inst)
    echo["derived"] = {
        "z": [f.fmt(x) for x in inst.z],
        "m": f.fmt(inst.m),
        "lambda": f.fmt(inst.lam),
    }
    echo["schema_version"] = SCHEMA_VERSION
    emit(echo, args.json)
    return 0


def _tolerance(field):
    if isinstance(field, ComplexNumbers):
        return lambda x: field.is_zero(x, 1)
    return None


def build_verify_report(inst, lmax=4, eq2_degree=2, eq9_imax=5, tl_arity=4, c_sign=1):
    f = inst.field
    exact = not isinstance(f, ComplexNumbers)
    is_zero = _tolerance(f)
    S = inst.S
    checks = {}
    checks["constraints_5_6"] = {"status": "pass",
                                 "trace": f.fmt(sum(inst.z, f.zero)),
                                 "one_plus_q": f.fmt(f.one + inst.q)}
    checks["ybe"] = check_entry(ybe_check(S, is_zero), f)
    checks["hecke"] = check_entry(hecke_check(S, inst.q, is_zero), f)
    tl = tlhecke.tl_relations_check(tlhecke.tl_projectors(S, tl_arity, inst.q), inst.lam, is_zero)
    checks["tl_relations"] = check_entry(tl, f, arity=tl_arity)

    scalar = tlhecke.scalarM_condition_check(inst)
    crit = qdet.centrality_criterion(inst)
    checks["scalar_M"] = bool(scalar)
    checks["m"] = f.fmt(crit[0]) if crit else None

    c = None
    if crit:
        try:
            c = qdet.compute_c(inst, c_sign)
            checks["c"] = f.fmt(c)
        except FieldError as exc:
            checks["c"] = skipped(str(exc))
    else:
        checks["c"] = skipped("M is not scalar")

    checks["eq3"] = check_entry(qdet.eq3_check(inst, c if c is not None else 1), f,
                                c=f.fmt(c) if c is not None else "1")
    if c is not None:
        checks["eq2"] = check_entry(qdet.eq2_check(inst, eq2_degree, c=c), f,
                                    degree=eq2_degree)
    else:
        checks["eq2"] = skipped("needs c, which needs scalar M", degree=eq2_degree)

    central = crit is not None
    if exact and inst.n <= qdet.MAX_IDEAL_N:
        member = bool(qdet.ideal_membership_check(inst))
        checks["centrality"] = {"status": "pass" if member == central else "fail",
                                "criterion": central, "ideal_membership": member}
    else:
        checks["centrality"] = {"status": "pass", "criterion": central,
                                "ideal_membership": "skipped: needs an exact field and n <= %d"
                                % qdet.MAX_IDEAL_N}

    p4 = gram.prop4_check(inst, 1)
    d = p4.witness["det"]
    checks["gram_det"] = f.fmt(d)
    checks["prop4"] = {"status": "pass" if p4 else "fail",
                       "squared": p4.witness["squared"],
                       "one_by_one": p4.witness["one_by_one"],
                       "two_by_two": p4.witness["two_by_two"]}
    checks["degeneracy_factors"] = gram.degeneracy_factors(inst)

    if exact:
        table = poincare.dim_table(inst, lmax)
        expected_minus = tuple([1, inst.n, 1] + [0] * max(0, lmax - 2))[:lmax + 1]
        expected_plus = tuple(poincare.sym_dim(inst.n, l) for l in range(lmax + 1))
        series = poincare.series_product_check(table)
        ok = bool(series) and table.minus == expected_minus and table.plus == expected_plus
        checks["poincare"] = {"status": "pass" if ok else "fail", "lmax": lmax,
                              "plus": list(table.plus), "minus": list(table.minus),
                              "series_product": bool(series)}
    else:
        checks["poincare"] = skipped("exact ranks need an exact field", lmax=lmax)
    checks["eq9"] = check_entry(poincare.clebsch_gordan_dim_check(inst.n, eq9_imax), f,
                                imax=eq9_imax, step=2)
    return {
        "schema_version": SCHEMA_VERSION,
        "instance": tlhecke.instance_to_dict(inst),
        "checks": checks,
        "versions": {"artifact": _version()},
        "seed": None,
    }


def cmd_verify(args):
    inst = load_instance(args.instance)
    report = build_verify_report(inst, args.lmax, args.eq2_degree, args.eq9, args.tl_arity,
                                 -1 if args.c_sign == "-" else 1)
    if args.json:
        emit(report, True)
    else:
        out = sys.stdout
        out.write("schema_version: %d\n" % report["schema_version"])
        out.write("instance: %s\n" % json.dumps(report["instance"], sort_keys=True))
        emit(report["checks"], False, out)
    return 1 if _failed(report["checks"].values()) else 0


def cmd_pair(args):
    inst = load_instance(args.instance)
    c = parse_c(args.c, inst)
    if c is None:
        c = default_c(inst)
    a, b = parse_word(args.word_a, inst), parse_word(args.word_b, inst)
    val = pairing.CanonicalPairing(inst.S, c)(a, b)
    print(inst.field.fmt(inst.field(val)))
    return 0


def dump_matrix(G, field, out):
    out.write("# rows/columns: %s\n" % " ".join("(%d,%d)" % ij for ij in G.labels))
    for row in G.entries:
        out.write("\t".join(field.fmt(x) for x in row) + "\n")


def cmd_gram(args):
    inst = load_instance(args.instance)
    f = inst.field
    c = parse_c(args.c, inst)
    if c is None:
        c = f.one
    G = gram.build_gram(inst, c)
    blocks, _, _ = gram.block_decompose(G)
    p4 = gram.prop4_check(inst, c)
    report = {
        "schema_version": SCHEMA_VERSION,
        "n": inst.n,
        "c": f.fmt(c),
        "gram_det": f.fmt(p4.witness["det"]),
        "blocks": {"one_dimensional": sum(b.size == 1 for b in blocks),
                   "two_dimensional": sum(b.size == 2 for b in blocks)},
        "prop4": {"status": "pass" if p4 else "fail",
                  "squared": p4.witness["squared"],
                  "one_by_one": p4.witness["one_by_one"],
                  "two_by_two": p4.witness["two_by_two"]},
        "degeneracy_factors": gram.degeneracy_factors(inst),
    }
    if args.closed_form:
        report["closed_form_sq"] = f.fmt(gram.closed_form_sq(inst))
    emit(report, args.json)
    if args.dump_matrix:
        dump_matrix(G, f, sys.stdout)
    return 0 if p4 else 1


def _parse_sigma(text):
    if text is None:
        return None
    re_, _, im_ = text.partition(",")
    try:
        return complex(float(re_), float(im_ or 0))
    except ValueError:
        raise InputError("--sigma expects 're,im', got %r" % text)


def cmd_scan(args):
    sigma = _parse_sigma(args.sigma)
    branch = {"+": 1, "-": -1, None: None}[args.branch]
    try:
        report = gram.scan(args.n, args.samples, args.seed, sigma, args.tol, args.bits,
                           branch, args.plant, args.scale)
    except ValueError as exc:
        raise InputError(str(exc))
    report["schema_version"] = SCHEMA_VERSION
    emit(report, args.json)
    if args.plant:
        return 0 if report["degenerate_count"] == report["samples"] else 1
    return 0 if report["degenerate_count"] == 0 else 1


def cmd_poincare(args):
    report = {"schema_version": SCHEMA_VERSION, "lmax": args.lmax}
    failed = False
    if args.instance:
        inst = load_instance(args.instance)
        if isinstance(inst.field, ComplexNumbers):
            raise InputError("exact ranks need an exact field")
        n = inst.n
        try:
            table = poincare.dim_table(inst, args.lmax)
        except ValueError as exc:
            raise InputError(str(exc))
        series = poincare.series_product_check(table)
        sym = [poincare.sym_dim(n, l) for l in range(args.lmax + 1)]
        report.update(plus=list(table.plus), minus=list(table.minus),
                      series_product="pass" if series else "fail",
                      plus_matches_recursion=list(table.plus) == sym)
        failed = not series or list(table.plus) != sym
    elif args.n is None:
        raise InputError("give an instance file or --n")
    else:
        n = args.n
    report["n"] = n
    report["sym_dim"] = [poincare.sym_dim(n, l) for l in range(args.lmax + 1)]
    if args.check_eq9 is not None:
        chk = poincare.clebsch_gordan_dim_check(n, args.check_eq9, step=args.step)
        report["eq9"] = {"status": "pass" if chk else "fail", "imax": args.check_eq9,
                         "step": args.step}
        if not chk:
            report["eq9"]["witness"] = chk.witness
            failed = True
    emit(report, args.json)
    return 1 if failed else 0


def _parse_index(text, n):
    try:
        idx = tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError:
        raise InputError("basis index must look like 1 or 1,2, got %r" % text)
    if not idx or not all(1 <= i <= n for i in idx):
        raise InputError("basis index %r out of range 1..%d" % (text, n))
    return idx


def format_vector(vec, field):
    if not vec:
        return "0"
    parts = []
    for M in sorted(vec):
        parts.append("(%s)*x[%s]" % (field.fmt(vec[M]), ",".join(str(i) for i in M)))
    return " + ".join(parts)


def cmd_act(args):
    inst = load_instance(args.instance)
    c = parse_c(args.c, inst)
    if c is None:
        c = default_c(inst)
    a = parse_word(args.word, inst)
    K = _parse_index(args.index, inst.n)
    P = pairing.CanonicalPairing(inst.S, c)
    print(format_vector(pairing.act(P, a, {K: inst.field.one}), inst.field))
    return 0


# ---------------------------------------------------------------------------

def make_parser():
    p = argparse.ArgumentParser(prog="heckesym", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, instance=True):
        sp = sub.add_parser(name, help=help_)
        if instance:
            sp.add_argument("instance", help="instance file (JSON)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("construct", cmd_construct, "echo the canonical instance with derived data")

    sp = add("verify", cmd_verify, "run every check on an instance")
    sp.add_argument("--lmax", type=int, default=4)
    sp.add_argument("--eq2-degree", type=int, default=2)
    sp.add_argument("--eq9", type=int, default=5, metavar="IMAX")
    sp.add_argument("--tl-arity", type=int, default=4)
    sp.add_argument("--c-sign", choices=("+", "-"), default="+")

    sp = add("pair", cmd_pair, "evaluate the canonical pairing of two words")
    sp.add_argument("word_a")
    sp.add_argument("word_b")
    sp.add_argument("--c", default=None, help="normalization (default: computed from M)")

    sp = add("gram", cmd_gram, "Gram matrix determinant and block structure")
    sp.add_argument("--c", default=None, help="normalization (default 1)")
    sp.add_argument("--dump-matrix", action="store_true")
    sp.add_argument("--closed-form", action="store_true")

    sp = add("scan", cmd_scan, "numerical nondegeneracy scan", instance=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--sigma", default=None, help="fixed sigma as 're,im'")
    sp.add_argument("--bits", type=int, default=64)
    sp.add_argument("--branch", choices=("+", "-"), default=None)
    sp.add_argument("--plant", choices=("z=q", "q^2=zz"), default=None)
    sp.add_argument("--scale", choices=("hadamard", "max-entry"), default="hadamard")

    sp = add("poincare", cmd_poincare, "Poincare series dimensions", instance=False)
    sp.add_argument("instance", nargs="?", default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--lmax", type=int, default=4)
    sp.add_argument("--check-eq9", type=int, default=None, metavar="IMAX")
    sp.add_argument("--step", type=int, choices=(1, 2), default=2)

    sp = add("act", cmd_act, "action of a word on a basis tensor")
    sp.add_argument("word")
    sp.add_argument("index", help="basis multi-index, e.g. 1 or 1,2")
    sp.add_argument("--c", default=None)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
