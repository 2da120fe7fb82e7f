"""Command-line front end.

Subcommands: cf, angle, expanded, triangle, polygon, toric, irr,
render.  Human-readable output by default, JSON via --json where a
machine form exists.  Exit codes: 0 success, 1 domain error (with a
machine-readable {"error": ...} payload), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import angles, contfrac, expanded, irrational, polygons, render, triangles
from .numbers import LatticeError, format_extrat, format_rat, parse_rat
from .plane import Point


def _parse_seq(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise LatticeError(f"malformed integer sequence {text!r}") from exc


def _parse_point(text: str) -> Point:
    parts = _parse_seq(text)
    if len(parts) != 2:
        raise LatticeError(f"a point needs two coordinates: {text!r}")
    return (parts[0], parts[1])


def _parse_points(text: str) -> list[Point]:
    return [_parse_point(tok) for tok in text.split(";") if tok.strip()]


def _parse_rats(text: str) -> list[Fraction]:
    return [parse_rat(tok) for tok in text.split(";") if tok.strip()]


def _parse_periodic(text: str) -> contfrac.PeriodicCF:
    if "|" in text:
        pre, per = text.split("|", 1)
    else:
        pre, per = "", text
    return contfrac.PeriodicCF(tuple(_parse_seq(pre)), tuple(_parse_seq(per)))


def _parse_pairs(text: str) -> list[polygons.SingularityPair]:
    out = []
    for tok in text.split(";"):
        if not tok.strip():
            continue
        a, _, b = tok.partition(":")
        if not b:
            raise LatticeError(f"singularity pair needs two tangents: {tok!r}")
        out.append(polygons.SingularityPair(parse_rat(a), parse_rat(b)))
    return out


def _point_json(p: Point) -> list[str]:
    return [str(p[0]), str(p[1])]


def _angle_json(a: angles.OrdinaryAngle) -> dict:
    return {
        "vertex": _point_json(a.vertex),
        "ray1": _point_json(a.ray1),
        "ray2": _point_json(a.ray2),
    }


def _emit(args, human: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(human)


# ---------------------------------------------------------------- cf


def _cmd_cf(args) -> None:
    if args.op == "eval":
        v = contfrac.eval_signed(_parse_seq(args.value))
        _emit(args, format_extrat(v), {"value": format_extrat(v)})
    elif args.op == "odd":
        cf = contfrac.to_odd_cf(parse_rat(args.value))
        _emit(args, ",".join(map(str, cf)), {"elements": cf})
    elif args.op == "even":
        cf = contfrac.to_even_cf(parse_rat(args.value))
        _emit(args, ",".join(map(str, cf)), {"elements": cf})
    else:  # concat
        v = contfrac.concat_rationals([parse_rat(t) for t in args.values])
        _emit(args, format_extrat(v), {"value": format_extrat(v)})


# ---------------------------------------------------------------- angle


def _angle_from_tan(text: str) -> angles.OrdinaryAngle:
    return angles.arctan(parse_rat(text))


def _cmd_angle(args) -> None:
    if args.op == "tan":
        r1, r2 = _parse_points(args.rays)
        a = angles.angle_of((r1[0], r1[1]), (0, 0), (r2[0], r2[1]))
        t = angles.trig(a)
        _emit(
            args,
            format_rat(t.tan),
            {"sin": str(t.sin), "cos": str(t.cos), "tan": format_rat(t.tan)},
        )
    elif args.op == "arctan":
        a = _angle_from_tan(args.value)
        _emit(
            args,
            f"rays (1,0) and ({a.ray2[0]},{a.ray2[1]})",
            _angle_json(a),
        )
    elif args.op == "sail":
        s = angles.sail(_angle_from_tan(args.value))
        if args.svg:
            render.sail_figure(s.vertices, s.lls).write(args.svg)
        human = "vertices " + " ".join(f"({p[0]},{p[1]})" for p in s.vertices)
        human += "; lls (" + ",".join(map(str, s.lls)) + ")"
        _emit(
            args,
            human,
            {"vertices": [_point_json(p) for p in s.vertices], "lls": list(s.lls)},
        )
    elif args.op == "transpose":
        t = angles.transpose_tan(parse_rat(args.value))
        _emit(args, format_rat(t), {"tan": format_rat(t)})
    else:  # adjacent
        t = angles.adjacent_tan(parse_rat(args.value))
        _emit(args, format_rat(t), {"tan": format_rat(t)})


# ---------------------------------------------------------------- expanded


def _normal_form_payload(nf: expanded.NormalForm) -> dict:
    return {"k": nf.k, "arctan": format_rat(nf.phi_tan)}


def _cmd_expanded(args) -> None:
    if args.op == "normalize":
        nf = expanded.normalize(_parse_seq(args.seq))
        _emit(args, str(nf), _normal_form_payload(nf))
    elif args.op == "sum":
        forms = [expanded.corresponding(q) for q in _parse_rats(args.angles)]
        nf = expanded.msum(forms, _parse_seq(args.seps))
        _emit(args, str(nf), _normal_form_payload(nf))
    else:  # reconstruct
        line = expanded.reconstruct(_parse_seq(args.seq))
        human = " ".join(f"({p[0]},{p[1]})" for p in line.points)
        _emit(args, human, {"points": [_point_json(p) for p in line.points]})


# ---------------------------------------------------------------- triangle


def _cmd_triangle(args) -> None:
    if args.op == "check":
        rot = triangles.exists_from_tans(*(parse_rat(t) for t in args.tans))
        _emit(
            args,
            "none" if rot is None else f"rotation {rot}",
            {"rotation": rot},
        )
    elif args.op == "canonical":
        tri, (l1, l2) = triangles.canonical_triangle(*(parse_rat(t) for t in args.tans))
        human = (
            " ".join(f"({p[0]},{p[1]})" for p in tri.vertices)
            + f"; lambda1={l1} lambda2={l2} area={tri.area}"
        )
        _emit(
            args,
            human,
            {
                "vertices": [_point_json(p) for p in tri.vertices],
                "lambda1": str(l1),
                "lambda2": str(l2),
                "area": str(tri.area),
            },
        )
    elif args.op == "complete":
        bca, abc, il = triangles.complete_sas(args.c, args.b, _angle_from_tan(args.alpha))
        tb, ta = angles.tan_of(bca), angles.tan_of(abc)
        _emit(
            args,
            f"angle BCA arctan({format_rat(tb)}); angle ABC arctan({format_rat(ta)}); il(CB)={il}",
            {"tan_bca": format_rat(tb), "tan_abc": format_rat(ta), "il_cb": str(il)},
        )
    elif args.op == "classify":
        pts = _parse_points(args.points)
        if len(pts) != 3:
            raise LatticeError("triangle classify needs exactly three points")
        tri = triangles.Triangle(*pts)
        shape = triangles.classify_shape(tri)
        seps = triangles.edge_separators(tri)
        tans = triangles.tans_of(tri)
        human = (
            f"{shape}; separators {seps}; tans "
            + "("
            + ",".join(format_rat(t) for t in tans)
            + f"); area {tri.area}"
        )
        _emit(
            args,
            human,
            {
                "shape": shape,
                "separators": list(seps),
                "tans": [format_rat(t) for t in tans],
                "area": str(tri.area),
            },
        )
    else:  # enumerate
        recs = triangles.enumerate_classes(args.max_area)
        if args.count:
            _emit(args, str(len(recs)), {"count": len(recs)})
            return
        if args.svg:
            render.triangle_sheet(recs).write(args.svg)
        if args.json:
            payload = [
                {
                    "area": rec.cls.area,
                    "tans": [format_rat(t) for t in rec.cls.tans],
                    "shape": rec.shape,
                    "flags": rec.flags,
                }
                for rec in recs
            ]
            print(json.dumps(payload))
        else:
            for rec in recs:
                tans = ",".join(format_rat(t) for t in rec.cls.tans)
                flags = ",".join(rec.flags) or "-"
                print(f"{rec.cls.area}\t({tans})\t{rec.shape}\t{flags}")


# ---------------------------------------------------------------- polygon / toric


def _cmd_polygon(args) -> None:
    if args.op == "check":
        ang = [angles.arctan(q) for q in _parse_rats(args.angles)]
        m = polygons.polygon_criterion(ang, bound=args.bound)
        _emit(
            args,
            "none" if m is None else ",".join(map(str, m)),
            {"separators": m},
        )
    elif args.op == "build":
        ang = [angles.arctan(q) for q in _parse_rats(args.angles)]
        poly = polygons.synthesize_polygon(ang, _parse_seq(args.seps))
        human = " ".join(f"({p[0]},{p[1]})" for p in poly.vertices)
        _emit(args, human, {"vertices": [_point_json(p) for p in poly.vertices]})
    else:  # extract
        poly = polygons.Polygon(tuple(_parse_points(args.points)))
        m = polygons.extract_separators(poly)
        _emit(args, ",".join(map(str, m)), {"separators": m})


def _cmd_toric(args) -> None:
    pairs = _parse_pairs(args.pairs)
    if args.op == "triangle":
        witness = polygons.toric_triangle_check(pairs)
        if witness is None:
            _emit(args, "none", {"witness": None})
        else:
            perm, choice = witness
            _emit(
                args,
                f"permutation {perm} choices {choice}",
                {"permutation": list(perm), "choices": list(choice)},
            )
    else:  # polygon
        poly = polygons.toric_polygon_build(pairs)
        if args.svg:
            render.polygon_figure(poly.vertices).write(args.svg)
        human = " ".join(f"({p[0]},{p[1]})" for p in poly.vertices)
        _emit(args, human, {"vertices": [_point_json(p) for p in poly.vertices]})


# ---------------------------------------------------------------- irr


def _irr_payload(nf: irrational.IrrationalNormalForm) -> dict:
    return {
        "k": nf.k,
        "side": nf.side,
        "pre": list(nf.tail.pre),
        "period": list(nf.tail.period),
    }


def _cmd_irr(args) -> None:
    if args.op == "arctan":
        cf = contfrac.PeriodicCF(tuple(_parse_seq(args.pre)), tuple(_parse_seq(args.period)))
        seq = irrational.irr_arctan(cf)
        t = irrational.tangent_convergent(seq, args.depth)
        lls = seq.outward_elements(args.depth)
        _emit(
            args,
            f"tangent convergent {format_rat(t)}; lls {','.join(map(str, lls))}",
            {"tangent": format_rat(t), "lls": lls},
        )
    elif args.op == "normalize":
        tail = contfrac.PeriodicCF(tuple(_parse_seq(args.pre)), tuple(_parse_seq(args.period)))
        seq = irrational.InfiniteLLS("R", tuple(_parse_seq(args.prefix)), tail_r=tail)
        nf = irrational.irr_normalize(seq)
        human = f"{nf.k}*pi + arctan[{','.join(map(str, nf.tail.pre))};({','.join(map(str, nf.tail.period))})]"
        _emit(args, human, _irr_payload(nf))
    else:  # sum
        left = None
        right = None
        if args.left:
            left = irrational.IrrationalNormalForm(0, _parse_periodic(args.left), "L")
        if args.right:
            right = irrational.IrrationalNormalForm(0, _parse_periodic(args.right), "R")
        mids = [expanded.corresponding(q) for q in _parse_rats(args.middles)] if args.middles else []
        out = irrational.irr_sum(left, mids, right, _parse_seq(args.seps) if args.seps else [])
        if isinstance(out, irrational.IrrationalNormalForm):
            human = f"{out.k}*pi + arctan[{','.join(map(str, out.tail.pre))};({','.join(map(str, out.tail.period))})]"
            _emit(args, human, _irr_payload(out))
        else:
            human = (
                f"LR sequence: middle {','.join(map(str, out.prefix))}; "
                f"left tail {out.tail_l.pre}|{out.tail_l.period}; right tail {out.tail_r.pre}|{out.tail_r.period}"
            )
            _emit(
                args,
                human,
                {
                    "side": "LR",
                    "middle": list(out.prefix),
                    "left": {"pre": list(out.tail_l.pre), "period": list(out.tail_l.period)},
                    "right": {"pre": list(out.tail_r.pre), "period": list(out.tail_r.period)},
                },
            )


# ---------------------------------------------------------------- render


def _cmd_render(args) -> None:
    if args.op == "sail":
        s = angles.sail(_angle_from_tan(args.value))
        fig = render.sail_figure(s.vertices, s.lls)
    elif args.op == "broken-line":
        line = expanded.reconstruct(_parse_seq(args.seq))
        fig = render.broken_line_figure(line.points, line.vertex)
    elif args.op == "triangle":
        tri = triangles.Triangle(*_parse_points(args.points))
        fig = render.polygon_figure(
            tri.vertices, [format_rat(t) for t in triangles.tans_of(tri)]
        )
    elif args.op == "polygon":
        poly = polygons.Polygon(tuple(_parse_points(args.points)))
        fig = render.polygon_figure(
            poly.vertices, [format_rat(t) for t in poly.angle_tans()]
        )
    else:  # sheet
        fig = render.triangle_sheet(triangles.enumerate_classes(args.max_area))
    fig.write(args.svg)
    print(args.svg)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="latticetrig", description=__doc__)
    sub = top.add_subparsers(dest="cmd", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("cf", help="continued fractions")
    cf_sub = p.add_subparsers(dest="op", required=True)
    q = cf_sub.add_parser("eval")
    q.add_argument("value")
    add_json(q)
    q = cf_sub.add_parser("odd")
    q.add_argument("value")
    add_json(q)
    q = cf_sub.add_parser("even")
    q.add_argument("value")
    add_json(q)
    q = cf_sub.add_parser("concat")
    q.add_argument("values", nargs="+")
    add_json(q)

    p = sub.add_parser("angle", help="ordinary lattice angles")
    an_sub = p.add_subparsers(dest="op", required=True)
    q = an_sub.add_parser("tan")
    q.add_argument("--rays", required=True)
    add_json(q)
    for name in ("arctan", "transpose", "adjacent"):
        q = an_sub.add_parser(name)
        q.add_argument("value")
        add_json(q)
    q = an_sub.add_parser("sail")
    q.add_argument("value")
    q.add_argument("--svg")
    add_json(q)

    p = sub.add_parser("expanded", help="expanded angles and sums")
    ex_sub = p.add_subparsers(dest="op", required=True)
    q = ex_sub.add_parser("normalize")
    q.add_argument("--seq", required=True)
    add_json(q)
    q = ex_sub.add_parser("sum")
    q.add_argument("--angles", required=True)
    q.add_argument("--seps", required=True)
    add_json(q)
    q = ex_sub.add_parser("reconstruct")
    q.add_argument("--seq", required=True)
    add_json(q)

    p = sub.add_parser("triangle", help="lattice triangles")
    tr_sub = p.add_subparsers(dest="op", required=True)
    q = tr_sub.add_parser("check")
    q.add_argument("tans", nargs=3)
    add_json(q)
    q = tr_sub.add_parser("canonical")
    q.add_argument("tans", nargs=3)
    add_json(q)
    q = tr_sub.add_parser("complete")
    q.add_argument("--c", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.add_argument("--alpha", required=True)
    add_json(q)
    q = tr_sub.add_parser("classify")
    q.add_argument("--points", required=True)
    add_json(q)
    q = tr_sub.add_parser("enumerate")
    q.add_argument("--max-area", type=int, required=True)
    q.add_argument("--count", action="store_true")
    q.add_argument("--table", action="store_true")
    q.add_argument("--svg")
    add_json(q)

    p = sub.add_parser("polygon", help="convex lattice polygons")
    pg_sub = p.add_subparsers(dest="op", required=True)
    q = pg_sub.add_parser("check")
    q.add_argument("--angles", required=True)
    q.add_argument("--bound", type=int, default=4)
    add_json(q)
    q = pg_sub.add_parser("build")
    q.add_argument("--angles", required=True)
    q.add_argument("--seps", required=True)
    add_json(q)
    q = pg_sub.add_parser("extract")
    q.add_argument("--points", required=True)
    add_json(q)

    p = sub.add_parser("toric", help="toric singularity applications")
    to_sub = p.add_subparsers(dest="op", required=True)
    q = to_sub.add_parser("triangle")
    q.add_argument("--pairs", required=True)
    add_json(q)
    q = to_sub.add_parser("polygon")
    q.add_argument("--pairs", required=True)
    q.add_argument("--svg")
    add_json(q)

    p = sub.add_parser("irr", help="irrational angles with periodic sails")
    ir_sub = p.add_subparsers(dest="op", required=True)
    q = ir_sub.add_parser("arctan")
    q.add_argument("--pre", default="")
    q.add_argument("--period", required=True)
    q.add_argument("--depth", type=int, default=10)
    add_json(q)
    q = ir_sub.add_parser("normalize")
    q.add_argument("--prefix", default="")
    q.add_argument("--pre", default="")
    q.add_argument("--period", required=True)
    add_json(q)
    q = ir_sub.add_parser("sum")
    q.add_argument("--left")
    q.add_argument("--middles")
    q.add_argument("--right")
    q.add_argument("--seps")
    add_json(q)

    p = sub.add_parser("render", help="SVG figures")
    re_sub = p.add_subparsers(dest="op", required=True)
    q = re_sub.add_parser("sail")
    q.add_argument("value")
    q.add_argument("--svg", required=True)
    q = re_sub.add_parser("broken-line")
    q.add_argument("--seq", required=True)
    q.add_argument("--svg", required=True)
    q = re_sub.add_parser("triangle")
    q.add_argument("--points", required=True)
    q.add_argument("--svg", required=True)
    q = re_sub.add_parser("polygon")
    q.add_argument("--points", required=True)
    q.add_argument("--svg", required=True)
    q = re_sub.add_parser("sheet")
    q.add_argument("--max-area", type=int, required=True)
    q.add_argument("--svg", required=True)

    return top


_HANDLERS = {
    "cf": _cmd_cf,
    "angle": _cmd_angle,
    "expanded": _cmd_expanded,
    "triangle": _cmd_triangle,
    "polygon": _cmd_polygon,
    "toric": _cmd_toric,
    "irr": _cmd_irr,
    "render": _cmd_render,
}


_SEQ_OPTIONS = {"--seps", "--seq", "--prefix", "--pre", "--period", "--points", "--rays"}


def _fold_negative_values(argv: list[str]) -> list[str]:
    """Join sequence options with their values so "-1,-1" is not read as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SEQ_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_fold_negative_values(list(argv)))
    try:
        _HANDLERS[args.cmd](args)
    except LatticeError as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
