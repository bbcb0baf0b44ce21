"""Command-line front end: ``lefcalc {invariants,harer,assemble,stabilize}``."""

import argparse
import os
import sys

from . import documents as docs
from . import homology
from .alf import ALF, induced_kirby_data, stabilize_alf
from .assembler import corollary_framings, run_pipeline
from .errors import IntegrityError, LefcalcError
from .harer import CancellingPair, FramingMove, TorusSum, harer_alf, replay
from .invariants import chern_class, d3, shift_rotation
from .openbook import stabilize as stabilize_open_book

EXIT_OK, EXIT_INPUT, EXIT_INTEGRITY = 0, 2, 3


def _expect(kind, wanted, path):
    if kind not in wanted:
        raise docs.DocumentError(f"expected a {' or '.join(wanted)} document, got {kind}",
                                 source=str(path))


def invariants_report(a):
    k = induced_kirby_data(a)
    h1 = homology.h1_boundary(k)
    c1 = chern_class(a)
    report = {
        "fiber": docs.surface_dict(a.fiber),
        "cycles": len(a.cycles),
        "q": a.q,
        "euler_characteristic": homology.euler_characteristic(k),
        "signature": homology.signature(k),
        "h1_total": str(homology.h1_total(k)),
        "h1_boundary": str(h1.group),
        "c1": {"vector": list(c1.vector), "zero": c1.is_zero()},
        "d3": None,
        "note": None,
    }
    if c1.is_zero():
        report["d3"] = docs.rational(d3(a))
    else:
        report["note"] = "c1 is nonzero, so d3 is undefined; adjust rotations first"
    if h1.group.has_two_torsion:
        report["note"] = "H_1 of the boundary has 2-torsion; c1 may not determine the spin^c class"
    return report


def _print_report(report, out):
    for key, value in report.items():
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        if value is not None:
            print(f"{key}: {value}", file=out)


def _invariant_triple(k):
    return (homology.euler_characteristic(k), homology.signature(k),
            homology.h1_total(k), homology.h1_boundary(k).group)


def transcript_dict(t):
    moves = []
    for m in t.moves:
        if isinstance(m, TorusSum):
            moves.append({"move": "torus_sum", "double_point": m.double_point})
        elif isinstance(m, CancellingPair):
            moves.append({"move": "cancelling_pair", "sign": m.sign, "band": m.band})
        elif isinstance(m, FramingMove):
            moves.append({"move": "framing_move", "component": m.component, "sign": m.sign})
    return {"moves": moves, "fiber": docs.surface_dict(t.fiber),
            "cycles": [docs.cycle_dict(c) for c in t.cycles]}


def _sibling(path, suffix):
    root, ext = os.path.splitext(path)
    return f"{root}.{suffix}{ext or '.yaml'}"


def cmd_invariants(args, out):
    kind, a = docs.read_document(args.file)
    _expect(kind, ("alf",), args.file)
    report = invariants_report(a)
    if args.json:
        out.write(docs.dumps(report, "json"))
    else:
        _print_report(report, out)
    return EXIT_OK


def cmd_harer(args, out):
    kind, p = docs.read_document(args.file)
    _expect(kind, ("projected_link",), args.file)
    a, t = harer_alf(p, args.cancel_sign)
    if replay(p, t) != a:
        raise IntegrityError("transcript replay does not reproduce the fibration")
    ok = _invariant_triple(p.kirby_data()) == _invariant_triple(induced_kirby_data(a))
    docs.write(args.output, docs.to_dict(a))
    docs.write(_sibling(args.output, "transcript"), transcript_dict(t))
    print(f"fiber genus: {a.fiber.genus}", file=out)
    print(f"fiber boundary components: {a.fiber.boundary_count}", file=out)
    print(f"cycles: {len(a.cycles)}", file=out)
    print(f"q: {a.q}", file=out)
    print(f"oracle check (chi, sigma, H_1): {'PASS' if ok else 'FAIL'}", file=out)
    if not ok:
        raise IntegrityError("total space invariants differ from the input handlebody")
    return EXIT_OK


def _variant_dict(v):
    return {"bit": v.bit, "binding_framing": v.binding_framing, "page_rank": v.page_rank,
            "section_self_intersection": v.section_self_intersection, "label": v.label}


def cmd_assemble(args, out):
    kind, inp = docs.read_document(args.file)
    _expect(kind, ("closed_manifold",), args.file)
    cert, surgery, tr = run_pipeline(inp)
    ext = ".json" if args.format == "json" else ".yaml"
    os.makedirs(args.output, exist_ok=True)

    def put(name, data):
        docs.write(os.path.join(args.output, name + ext), data)

    put("certificate", {
        "c1_side1_zero": cert.c1_side1_zero,
        "c1_side2_zero": cert.c1_side2_zero,
        "d3_common": docs.rational(cert.d3_common),
        "negative_stabs": list(cert.negative_stabs),
        "syntactic_match": cert.syntactic_match,
        "note": "isotopy certified by equal homotopy invariants of overtwisted structures; "
                "no explicit diffeomorphism",
    })
    closed = surgery.closed_alf
    put("surgery", {
        "description": surgery.surgery_description,
        "framing_bit": surgery.framing_bit,
        "euler_characteristic": surgery.euler_characteristic,
        "input_euler_characteristic": surgery.input_euler_characteristic,
        "signature": surgery.signature,
        "closed_alf": None if closed is None else {
            "fiber_genus": closed.fiber_genus,
            "cycles": [docs.cycle_dict(c) for c in closed.cycles],
            "section_self_intersections": list(closed.section_self_intersections),
        },
    })
    variants = corollary_framings(surgery)
    put("variants", {"variants": [_variant_dict(v) for v in variants]})
    put("transcript", {
        "added_cancelling_pair": tr.added_cancelling_pair,
        "fiber_genus_side2": tr.fiber_genus_side2,
        "harer": transcript_dict(tr.harer),
        "initial_rotations": list(tr.initial_rotations),
        "rotation_moves": [{"cycle": i, "a": ai, "sign": s} for i, ai, s in tr.rotation_plan.moves],
        "d3_before": [docs.rational(x) for x in tr.d3_before],
        "negative_stabs": [p.extra_negative_stabs for p in tr.stabilization_plans],
    })
    put("side1", docs.to_dict(tr.side1))
    put("side2", docs.to_dict(tr.side2))

    print(f"d3 matched at {docs.rational(cert.d3_common)} with negative stabilizations "
          f"{cert.negative_stabs[0]} and {cert.negative_stabs[1]}", file=out)
    print(f"boundary open books identical: {'yes' if cert.syntactic_match else 'no'}", file=out)
    print(f"euler characteristic: {surgery.input_euler_characteristic} -> "
          f"{surgery.euler_characteristic}", file=out)
    for v in variants:
        print(f"variant: framing bit {v.bit}, binding framing {v.binding_framing}"
              + (f", {v.label}" if v.label else ""), file=out)
    return EXIT_OK


def _parse_rot_adjust(text):
    try:
        fields = dict(part.split("=", 1) for part in text.split(","))
        if set(fields) != {"i", "a"}:
            raise ValueError
        return int(fields["i"]), int(fields["a"])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i=INDEX,a=AMOUNT, got {text!r}") from None


def cmd_stabilize(args, out):
    kind, obj = docs.read_document(args.file)
    _expect(kind, ("alf", "open_book"), args.file)
    if kind == "open_book":
        if args.rot_adjust:
            raise docs.DocumentError("--rot-adjust needs an alf document", source=args.file)
        for sign, n in ((1, args.pos), (-1, args.neg)):
            for _ in range(n):
                obj = stabilize_open_book(obj, sign)
    else:
        positions = list(range(len(obj.cycles)))
        for i, amount in args.rot_adjust:
            if not 0 <= i < len(positions):
                raise docs.DocumentError(f"cycle index {i} out of range", source=args.file)
            obj, new = shift_rotation(obj, positions[i], amount)
            shift = new - positions[i]
            positions = [p + shift for p in positions]
        for sign, n in ((1, args.pos), (-1, args.neg)):
            for _ in range(n):
                obj = stabilize_alf(obj, sign)
    docs.write(args.output, docs.to_dict(obj))
    if isinstance(obj, ALF):
        print(f"cycles: {len(obj.cycles)}, q: {obj.q}", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="lefcalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="chi, sigma, q, c1 and d3 of an ALF")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("harer", help="ALF from a projected framed link")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--cancel-sign", type=int, choices=(1, -1), default=1)
    p.set_defaults(func=cmd_harer)

    p = sub.add_parser("assemble", help="run the closed-manifold pipeline")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--format", choices=("yaml", "json"), default="yaml")
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser("stabilize", help="stabilize an ALF or open book")
    p.add_argument("file")
    p.add_argument("--pos", type=int, default=0, metavar="N")
    p.add_argument("--neg", type=int, default=0, metavar="N")
    p.add_argument("--rot-adjust", type=_parse_rot_adjust, action="append", default=[],
                   metavar="i=I,a=A", help="shift rotation of cycle I by -2A (repeatable)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_stabilize)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "pos", 0) < 0 or getattr(args, "neg", 0) < 0:
        print("lefcalc: error: stabilization counts must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except IntegrityError as exc:
        print(f"lefcalc: integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except (LefcalcError, OSError) as exc:
        print(f"lefcalc: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
