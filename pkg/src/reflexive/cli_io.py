"""File formats, invariant reports, the catalog store, and the command line.

Vertex files look like::

    # optional comments
    4 5
    4 -1 -1 -1
    -1 4 -1 -1
    ...

The header is always "dimension count"; by default each following line is
one point, with ``--transpose`` each line is one coordinate (a column
layout).  Numbers in every output are exact: integers as JSON integers,
rationals as "p/q" strings.
"""

from __future__ import annotations

import argparse
import contextlib
import fcntl
import hashlib
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import (
    DimensionBelowFour,
    NotReflexive,
    ParseError,
    ReflexiveError,
    StoreCorrupt,
)
from .lattice_core import AbelianQuotient

CATALOG_ENV = "REFLEXIVE_CATALOG"
DEFAULT_CATALOG = "reflexive_catalog.jsonl"
REPORT_FIELDS = (
    "dim", "vertices", "reflexive", "l", "l_star", "volume", "facet_degrees",
    "h11", "h21", "h_n20", "picard_toric", "euler_cy3", "pi1", "pi1_order",
    "pair_pi1", "dual_pi1", "dual_vertices",
)


# -- vertex files -------------------------------------------------------------


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    pos = 0
    for tok in line.split():
        pos = line.index(tok, pos)
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", lineno, pos + 1) from None
        pos += len(tok)
    return out


def parse_points(text: str, transpose: bool = False) -> list[tuple[int, ...]]:
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            rows.append((lineno, _ints(line, lineno)))
    if not rows:
        raise ParseError("empty vertex file", 1, 1)
    hline, header = rows[0]
    if len(header) != 2 or header[0] < 1 or header[1] < 1:
        raise ParseError("header must be two positive integers 'dimension count'", hline, 1)
    n, v = header
    body = rows[1:]
    nrows, ncols = (n, v) if transpose else (v, n)
    if len(body) != nrows:
        where = body[nrows][0] if len(body) > nrows else (body[-1][0] if body else hline) + 1
        raise ParseError(f"expected {nrows} rows after the header, found {len(body)}", where, 1)
    for lineno, r in body:
        if len(r) != ncols:
            raise ParseError(f"expected {ncols} integers, found {len(r)}", lineno, 1)
    mat = [r for _, r in body]
    if transpose:
        return [tuple(mat[i][j] for i in range(n)) for j in range(v)]
    return [tuple(r) for r in mat]


def parse_polytope_text(text: str, transpose: bool = False):
    """Hull of the points of a vertex file given as text; repeated points are dropped."""
    from .polytope import hull

    return hull(parse_points(text, transpose))


def parse_polytope(source, transpose: bool = False):
    """Hull of the points in a vertex file given by path or open file."""
    text = source.read() if hasattr(source, "read") else Path(source).read_text()
    return parse_polytope_text(text, transpose)


def serialize_points(points, comment: str | None = None, transpose: bool = False) -> str:
    points = [tuple(p) for p in points]
    n, v = len(points[0]), len(points)
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write(f"{n} {v}\n")
    rows = [tuple(p[i] for p in points) for i in range(n)] if transpose else points
    for r in rows:
        out.write(" ".join(_num(x) for x in r) + "\n")
    return out.getvalue()


def serialize_polytope(p, transpose: bool = False) -> str:
    return serialize_points(p.vertices, transpose=transpose)


# -- reports ----------------------------------------------------------------


def _num(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _json_num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _factors(q: AbelianQuotient | None):
    return None if q is None else list(q.invariant_factors)


@dataclass
class InvariantReport:
    """Invariants of one polytope; entries that do not apply are None."""

    dim: int
    vertices: list
    reflexive: bool
    l: int
    l_star: int
    volume: int
    facet_degrees: list
    h11: int | None = None
    h21: int | None = None
    h_n20: int | None = None
    picard_toric: int | None = None
    euler_cy3: int | None = None
    pi1: list | None = None
    pi1_order: int | None = None
    pair_pi1: list | None = None
    dual_pi1: list | None = None
    dual_vertices: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in REPORT_FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        missing = [k for k in REPORT_FIELDS if k not in d]
        if missing:
            raise ValueError(f"report is missing fields {missing}")
        return cls(**{k: d[k] for k in REPORT_FIELDS})


def build_report(p) -> InvariantReport:
    from . import invariants, pairs
    from .polytope import is_reflexive, lattice_points

    _, l, l_star = lattice_points(p)
    refl = is_reflexive(p).reflexive
    fl = p.face_lattice
    rep = InvariantReport(
        dim=p.dim,
        vertices=[list(v) for v in p.vertices],
        reflexive=refl,
        l=l,
        l_star=l_star,
        volume=p.volume,
        facet_degrees=[p.face_volume(f) for f in fl.by_dim[p.dim - 1]],
    )
    if p.origin_interior:
        rep.dual_vertices = [[_json_num(x) for x in v] for v in p.polar_dual.vertices]
    if not refl:
        return rep
    rep.picard_toric = invariants.picard_toric(p)
    q, order = pairs.polytope_fundamental_group(p)
    rep.pi1, rep.pi1_order = _factors(q), order
    rep.pair_pi1 = _factors(pairs.pair_fundamental_group(p))
    rep.dual_pi1 = _factors(pairs.vertex_sublattice(p)[2])
    if p.dim >= 4:
        rep.h11 = invariants.hodge_h11(p)
        rep.h21 = invariants.hodge_h21(p)
        rep.h_n20 = invariants.hodge_h_n20(p)
        if p.dim == 4:
            rep.euler_cy3 = invariants.euler_cy3(p)
    return rep


# -- catalog ----------------------------------------------------------------


def normal_form_key(nf) -> str:
    text = ";".join(",".join(str(x) for x in row) for row in nf)
    return hashlib.sha256(text.encode()).hexdigest()[:20]


@dataclass
class CatalogRecord:
    key: str
    normal_form: list
    report: dict

    def to_line(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))


class CatalogStore:
    """Append-only line-delimited records keyed by a normal-form hash."""

    def __init__(self, path=None):
        if path is None:
            path = os.environ.get(CATALOG_ENV, DEFAULT_CATALOG)
        self.path = Path(path)

    @contextlib.contextmanager
    def _locked(self, exclusive: bool):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a+") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX if exclusive else fcntl.LOCK_SH)
            try:
                fh.seek(0)
                yield fh
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)

    @staticmethod
    def _parse(fh) -> list[CatalogRecord]:
        out = []
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                d = json.loads(line)
                rec = CatalogRecord(d["key"], d["normal_form"], d["report"])
                InvariantReport.from_dict(rec.report)
            except (ValueError, KeyError, TypeError) as exc:
                raise StoreCorrupt(f"malformed catalog record: {exc}", lineno) from None
            out.append(rec)
        return out

    def records(self) -> list[CatalogRecord]:
        if not self.path.exists():
            return []
        with self._locked(False) as fh:
            return sorted(self._parse(fh), key=lambda r: r.key)

    def add(self, p, report: InvariantReport | None = None) -> tuple[CatalogRecord, bool]:
        """Store ``p``; returns the record and whether it was new."""
        from .polytope import normal_form

        nf = normal_form(p)
        key = normal_form_key(nf)
        with self._locked(True) as fh:
            for rec in self._parse(fh):
                if rec.key == key:
                    return rec, False
            rec = CatalogRecord(key, [list(r) for r in nf], (report or build_report(p)).to_dict())
            fh.seek(0, os.SEEK_END)
            fh.write(rec.to_line() + "\n")
            fh.flush()
        return rec, True

    def find(self, reflexive=None, h11=None, h21=None, euler=None, dim=None):
        out = []
        for rec in self.records():
            r = rec.report
            if reflexive is not None and r["reflexive"] != reflexive:
                continue
            if h11 is not None and r["h11"] != h11:
                continue
            if h21 is not None and r["h21"] != h21:
                continue
            if euler is not None and r["euler_cy3"] != euler:
                continue
            if dim is not None and r["dim"] != dim:
                continue
            out.append(rec)
        return out


# -- command line -----------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load(args):
    if args.file == "-":
        return parse_polytope(sys.stdin, args.transpose)
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return parse_polytope_text(text, args.transpose)


def _emit(args, out, data: dict, lines: list[str]):
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _table(rows) -> list[str]:
    width = max(len(k) for k, _ in rows)
    return [f"{k.ljust(width)}  {v}" for k, v in rows]


def _fmt_group(factors) -> str:
    if factors is None:
        return "-"
    return " + ".join(f"Z/{f}" for f in factors) or "0"


def _cmd_check(args, out):
    from .polytope import is_reflexive

    p = _load(args)
    w = is_reflexive(p)
    data = {"reflexive": w.reflexive, "reason": w.reason,
            "facet": None if w.facet is None else [list(w.facet[0]), w.facet[1]]}
    _emit(args, out, data, ["reflexive" if w.reflexive else f"not reflexive: {w.reason}"])
    return 0 if w.reflexive else 1


def _cmd_dual(args, out):
    p = _load(args)
    d = p.polar_dual
    verts = [[_json_num(x) for x in v] for v in d.vertices]
    if args.json:
        _emit(args, out, {"dual_vertices": verts}, [])
    else:
        out.write(serialize_points(d.vertices, transpose=args.transpose))
    return 0


def _cmd_points(args, out):
    from .polytope import lattice_points

    p = _load(args)
    pts, l, l_star = lattice_points(p)
    lines = _table([("l", l), ("l*", l_star)])
    if args.list:
        lines += [" ".join(str(x) for x in q) for q in pts]
    _emit(args, out, {"l": l, "l_star": l_star, "points": [list(q) for q in pts]}, lines)
    return 0


def _cmd_volume(args, out):
    p = _load(args)
    _emit(args, out, {"volume": p.volume}, [str(p.volume)])
    return 0


def _cmd_faces(args, out):
    p = _load(args)
    fl = p.face_lattice
    fv = fl.f_vector()
    faces = []
    lines = ["f-vector " + " ".join(str(x) for x in fv)]
    for d in range(p.dim):
        for f in fl.by_dim[d]:
            faces.append({"dim": d, "vertices": list(f.vertices),
                          "l_star": p.l_star(f), "volume": p.face_volume(f)})
            lines.append(f"dim {d}  vertices {list(f.vertices)}  l* {p.l_star(f)}  "
                         f"volume {p.face_volume(f)}")
    _emit(args, out, {"f_vector": list(fv), "faces": faces}, lines)
    return 0


def _cmd_nf(args, out):
    from .polytope import normal_form

    nf = normal_form(_load(args))
    if args.json:
        _emit(args, out, {"normal_form": [list(r) for r in nf], "key": normal_form_key(nf)}, [])
    else:
        out.write(serialize_points(nf, transpose=args.transpose))
    return 0


def _cmd_fan(args, out):
    from .toric_fan import face_fan, fan_fundamental_group, is_fano_gorenstein, normal_fan
    from .errors import NotGorenstein

    p = _load(args)
    f = normal_fan(p) if args.normal else face_fan(p)
    try:
        fano = is_fano_gorenstein(f)
    except NotGorenstein:
        fano = False
    group = fan_fundamental_group(f)
    cones = [sorted(c) for c in f.maximal_cones]
    data = {"rays": [list(r) for r in f.rays], "maximal_cones": cones,
            "complete": f.is_complete, "fano_gorenstein": fano, "pi1": _factors(group)}
    lines = _table([("rays", len(f.rays)), ("maximal cones", len(cones)),
                    ("complete", f.is_complete), ("fano gorenstein", fano),
                    ("pi1", _fmt_group(_factors(group)))])
    lines += [f"ray {i}: {' '.join(map(str, r))}" for i, r in enumerate(f.rays)]
    lines += [f"cone {c}" for c in cones]
    _emit(args, out, data, lines)
    return 0


def _report_dict(rep):
    return {
        "simplicial": rep.simplicial, "gorenstein": rep.gorenstein, "terminal": rep.terminal,
        "canonical": rep.canonical, "smooth": rep.smooth, "q_gorenstein": rep.q_gorenstein,
        "k_sigma": None if rep.k_sigma is None else [_json_num(x) for x in rep.k_sigma],
        "extra_points": [list(x) for x in rep.extra_points],
    }


def _cmd_classify_cones(args, out):
    from .toric_fan import face_fan

    f = face_fan(_load(args))
    reports = f.singularity_reports()
    data, lines = [], []
    for c in f.maximal_cones:
        d = _report_dict(reports[c])
        d["cone"] = sorted(c)
        data.append(d)
        flags = [k for k in ("simplicial", "gorenstein", "terminal", "canonical", "smooth") if d[k]]
        lines.append(f"cone {sorted(c)}: {' '.join(flags) or 'none'}")
    _emit(args, out, {"cones": data}, lines)
    return 0


def _cmd_triangulate(args, out):
    from .triangulate import PointConfig, mpcp_fan, regular_fine_triangulation, singularity_summary

    p = _load(args)
    if args.mpcp:
        res = mpcp_fan(p)
        s = singularity_summary(res.reports)
        cones = [sorted(c) for c in res.fan.maximal_cones]
        data = {"rays": [list(r) for r in res.fan.rays], "maximal_cones": cones,
                "heights": [_json_num(h) for h in res.heights], "all": _report_dict(s)}
        lines = _table([("rays", len(res.fan.rays)), ("maximal cones", len(cones)),
                        ("simplicial", s.simplicial), ("gorenstein", s.gorenstein),
                        ("terminal", s.terminal), ("smooth", s.smooth)])
        _emit(args, out, data, lines)
        return 0
    t = regular_fine_triangulation(PointConfig(p.points, p))
    data = {"points": [list(x) for x in t.points], "simplices": [list(s) for s in t.simplices],
            "heights": [_json_num(h) for h in t.heights]}
    lines = _table([("points", len(t.points)), ("simplices", len(t.simplices))])
    lines += [" ".join(map(str, s)) for s in t.simplices]
    _emit(args, out, data, lines)
    return 0


def _report_lines(rep: InvariantReport) -> list[str]:
    return _table([(k, _fmt_group(v) if k in ("pi1", "pair_pi1", "dual_pi1") else v)
                   for k, v in rep.to_dict().items()
                   if k not in ("vertices", "dual_vertices")])


def _cmd_hodge(args, out):
    from .polytope import is_reflexive

    p = _load(args)
    if not is_reflexive(p).reflexive:
        raise NotReflexive("polytope is not reflexive")
    if p.dim < 4:
        raise DimensionBelowFour(f"Hodge numbers need dimension >= 4, got {p.dim}")
    rep = build_report(p)
    _emit(args, out, rep.to_dict(), _report_lines(rep))
    return 0


def _cmd_euler3(args, out):
    from .invariants import euler_cy3

    e = euler_cy3(_load(args))
    _emit(args, out, {"euler_cy3": e}, [str(e)])
    return 0


def _cmd_mirror(args, out):
    from .invariants import mirror_report

    a, b = mirror_report(_load(args))
    keys = ("h11", "h_n21", "h_n20", "picard_toric", "euler_cy3")
    data = {"polytope": a.as_dict(), "dual": b.as_dict()}
    lines = [f"{'':14}polytope  dual"]
    lines += [f"{k:14}{getattr(a, k):>8}  {getattr(b, k)}" for k in keys]
    _emit(args, out, data, lines)
    return 0


def _cmd_weights(args, out):
    from .pairs import simplex_weights

    ws = simplex_weights(_load(args))
    data = {"weights": list(ws.weights), "degrees": list(ws.degrees),
            "total_degree": ws.total_degree, "matrix": [list(r) for r in ws.matrix]}
    lines = _table([("weights", " ".join(map(str, ws.weights))),
                    ("degrees", " ".join(map(str, ws.degrees))),
                    ("total degree", ws.total_degree)])
    lines += ["B"] + [" ".join(f"{x:>3}" for x in r) for r in ws.matrix]
    _emit(args, out, data, lines)
    return 0


def _parse_degrees(text: str):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise _UsageError(f"bad degree list {text!r}") from None


def _cmd_simplex(args, out):
    from .pairs import fermat_group, weighted_simplex

    degrees = _parse_degrees(args.degrees)
    pair = weighted_simplex(degrees)
    group, order = fermat_group(degrees)
    rep = build_report(pair.local)
    data = rep.to_dict()
    data["degrees"] = degrees
    data["fermat_pi1"] = _factors(group)
    data["fermat_pi1_order"] = order
    lines = _report_lines(rep) + _table([("fermat pi1", _fmt_group(_factors(group))),
                                         ("fermat pi1 order", order)])
    _emit(args, out, data, lines)
    return 0


def _cmd_pi1(args, out):
    from .pairs import pair_fundamental_group, polytope_fundamental_group, vertex_sublattice

    p = _load(args)
    q, order = polytope_fundamental_group(p)
    pair_q = pair_fundamental_group(p)
    dual_q = vertex_sublattice(p)[2]
    data = {"pi1": _factors(q), "order": order, "pair_pi1": _factors(pair_q),
            "dual_pair_pi1": _factors(dual_q)}
    lines = _table([("pi1(polytope)", _fmt_group(_factors(q))), ("order", order),
                    ("pi1(pair)", _fmt_group(_factors(pair_q))),
                    ("pi1(dual pair)", _fmt_group(_factors(dual_q)))])
    _emit(args, out, data, lines)
    return 0


def _cmd_enumerate(args, out):
    from .classify import catalog_invariants, enumerate_reflexive

    result = enumerate_reflexive(args.dim, allow_long=args.allow_long)
    store = CatalogStore(args.catalog)
    added = 0
    for p in result.representatives:
        _, new = store.add(p)
        added += new
    rows = catalog_invariants(result)
    data = {"classes": len(result), "added": added,
            "rows": [{"index": r.index, "vertices": r.vertices, "l": r.l, "volume": r.volume,
                      "dual": r.dual, "pi1_order": r.pi1_order} for r in rows]}
    lines = [f"{len(result)} classes, {added} new catalog records in {store.path}"]
    lines += [f"{r.index:>3}  vertices {r.vertices}  l {r.l:>2}  d {r.volume:>2}  dual {r.dual:>2}"
              for r in rows]
    _emit(args, out, data, lines)
    return 0


def _cmd_catalog(args, out):
    store = CatalogStore(args.catalog)
    if args.action == "add":
        if not args.file:
            raise _UsageError("catalog add needs a vertex file")
        rec, new = store.add(_load(args))
        _emit(args, out, {"key": rec.key, "added": new},
              [f"{'added' if new else 'already present'} {rec.key}"])
        return 0
    if args.action == "list":
        recs = store.records()
    else:
        recs = store.find(reflexive=args.reflexive, h11=args.h11, h21=args.h21,
                          euler=args.euler, dim=args.dim)
    data = {"records": [asdict(r) for r in recs]}
    lines = [f"{r.key}  dim {r.report['dim']}  l {r.report['l']}  "
             f"h11 {r.report['h11']}  h21 {r.report['h21']}" for r in recs]
    _emit(args, out, data, lines)
    return 0


def _bool(text: str) -> bool:
    t = text.lower()
    if t in ("1", "true", "yes"):
        return True
    if t in ("0", "false", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--transpose", action="store_true", help="vertex files list columns")
    common.add_argument("--threads", type=int, default=1, help="worker cap (computation is serial)")
    common.add_argument("--catalog", default=None, help=f"catalog path (default ${CATALOG_ENV})")

    parser = _Parser(prog="reflexive", description="Reflexive polytope toolkit", parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def file_cmd(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("file", help="vertex file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    file_cmd("check", _cmd_check, "reflexivity test")
    file_cmd("dual", _cmd_dual, "polar dual")
    file_cmd("points", _cmd_points, "lattice point counts").add_argument(
        "--list", action="store_true", help="also print the points")
    file_cmd("volume", _cmd_volume, "normalized volume")
    file_cmd("faces", _cmd_faces, "face lattice summary")
    file_cmd("nf", _cmd_nf, "normal form")
    file_cmd("fan", _cmd_fan, "face fan (or normal fan)").add_argument(
        "--normal", action="store_true", help="use the normal fan")
    file_cmd("classify-cones", _cmd_classify_cones, "singularities of the face fan")
    file_cmd("triangulate", _cmd_triangulate, "regular fine triangulation").add_argument(
        "--mpcp", action="store_true", help="MPCP refinement of the face fan")
    file_cmd("hodge", _cmd_hodge, "Hodge numbers and invariant report")
    file_cmd("euler3", _cmd_euler3, "Euler number of the Calabi-Yau 3-fold")
    file_cmd("mirror", _cmd_mirror, "reports for the polytope and its dual")
    file_cmd("weights", _cmd_weights, "weight system of a reflexive simplex")
    file_cmd("pi1", _cmd_pi1, "fundamental groups")

    sp = sub.add_parser("simplex", parents=[common], help="weighted reflexive simplex")
    sp.add_argument("--degrees", required=True, help="comma separated degrees, e.g. 5,5,5,5,5")
    sp.set_defaults(func=_cmd_simplex)

    sp = sub.add_parser("enumerate", parents=[common], help="classify reflexive polytopes")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--allow-long", action="store_true", help="permit dimension 3")
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("catalog", parents=[common], help="catalog store")
    sp.add_argument("action", choices=["add", "list", "find"])
    sp.add_argument("file", nargs="?")
    sp.add_argument("--reflexive", type=_bool)
    sp.add_argument("--h11", type=int)
    sp.add_argument("--h21", type=int)
    sp.add_argument("--euler", type=int)
    sp.add_argument("--dim", type=int)
    sp.set_defaults(func=_cmd_catalog)
    return parser


def run_command(argv, out=None, err=None) -> int:
    """Run one CLI invocation; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.threads < 1:
            raise _UsageError("--threads must be at least 1")
        return args.func(args, out)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except StoreCorrupt as exc:
        err.write(f"catalog error: {exc}\n")
        return 2
    except ReflexiveError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
