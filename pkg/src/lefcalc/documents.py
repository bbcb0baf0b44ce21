"""
Structured-text documents for ALFs, open books, handle data and links.

Documents are YAML (JSON is accepted too, since it parses as YAML).  Every
document has `schema_version` and `kind`; unknown keys are rejected and
every error carries the line and column of the offending node.
"""

import json
from fractions import Fraction

import yaml

from .alf import ALF, VanishingCycle
from .assembler import ClosedManifoldInput
from .errors import DocumentError, InputError
from .harer import DoublePoint, LinkComponent, ProjectedLink
from .homology import KirbyData
from .openbook import OpenBook
from .surface import CurveClass, SeifertForm, SignedTwist, Surface

SCHEMA_VERSION = 1
KINDS = ("alf", "open_book", "kirby", "projected_link", "closed_manifold")

_INT = "tag:yaml.org,2002:int"
_NULL = "tag:yaml.org,2002:null"


class _Reader:
    def __init__(self, text, source):
        self.source = source
        self.loader = yaml.SafeLoader(text)

    def error(self, node, message):
        mark = node.start_mark if node is not None else None
        if mark is None:
            raise DocumentError(message, source=self.source)
        raise DocumentError(message, mark.line + 1, mark.column + 1, self.source)

    def root(self):
        try:
            node = self.loader.get_single_node()
        except yaml.MarkedYAMLError as exc:
            mark = exc.problem_mark or exc.context_mark
            raise DocumentError(exc.problem or str(exc), mark.line + 1, mark.column + 1,
                                self.source) from None
        except yaml.YAMLError as exc:
            raise DocumentError(str(exc), source=self.source) from None
        finally:
            self.loader.dispose()
        if node is None:
            raise DocumentError("empty document", source=self.source)
        return node

    def mapping(self, node, required=(), optional=()):
        if not isinstance(node, yaml.MappingNode):
            self.error(node, "expected a mapping")
        out = {}
        for knode, vnode in node.value:
            key = knode.value if isinstance(knode, yaml.ScalarNode) else None
            if key not in required and key not in optional:
                self.error(knode, f"unknown field {key!r}")
            if key in out:
                self.error(knode, f"duplicate field {key!r}")
            out[key] = vnode
        for key in required:
            if key not in out:
                self.error(node, f"missing field {key!r}")
        return out

    def is_null(self, node):
        return node is None or (isinstance(node, yaml.ScalarNode) and node.tag == _NULL)

    def int(self, node, lo=None, choices=None):
        if not isinstance(node, yaml.ScalarNode) or node.tag != _INT:
            self.error(node, "expected an integer")
        v = self.loader.construct_yaml_int(node)
        if lo is not None and v < lo:
            self.error(node, f"expected an integer >= {lo}")
        if choices is not None and v not in choices:
            self.error(node, f"expected one of {list(choices)}")
        return v

    def seq(self, node):
        if not isinstance(node, yaml.SequenceNode):
            self.error(node, "expected a list")
        return node.value

    def ints(self, node, length=None):
        items = self.seq(node)
        if length is not None and len(items) != length:
            self.error(node, f"expected {length} entries, got {len(items)}")
        return tuple(self.int(x) for x in items)

    def matrix(self, node, ncols=None):
        rows = [self.ints(r, ncols) for r in self.seq(node)]
        if rows and ncols is None and len({len(r) for r in rows}) > 1:
            self.error(node, "rows have different lengths")
        return tuple(rows)


def _checked(r, node, build):
    try:
        return build()
    except InputError as exc:
        if isinstance(exc, DocumentError):
            raise
        r.error(node, str(exc))


def _surface(r, node):
    f = r.mapping(node, ("genus", "boundary_count"), ("form",))
    g, b = r.int(f["genus"], lo=0), r.int(f["boundary_count"], lo=0)
    form = r.matrix(f["form"], 2 * g + max(b - 1, 0)) if "form" in f else None
    return _checked(r, node, lambda: Surface(g, b, form))


def _curve(r, node, surface):
    return _checked(r, node, lambda: CurveClass(surface, r.ints(node, surface.h1_rank)))


def _alf(r, f):
    fiber = _surface(r, f["fiber"])
    cycles = []
    for c in r.seq(f["cycles"]):
        cf = r.mapping(c, ("class",), ("sign", "rotation"))
        sign = r.int(cf["sign"], choices=(1, -1)) if "sign" in cf else 1
        rot = r.int(cf["rotation"]) if "rotation" in cf else 0
        cycles.append(VanishingCycle(_curve(r, cf["class"], fiber), sign, rot))
    seifert = None
    if "seifert" in f:
        M = r.matrix(f["seifert"], fiber.h1_rank)
        seifert = _checked(r, f["seifert"], lambda: SeifertForm(fiber, M))
    return _checked(r, f["fiber"], lambda: ALF(fiber, cycles, seifert))


def _open_book(r, f):
    page = _surface(r, f["page"])
    word = []
    for t in r.seq(f["monodromy"]):
        tf = r.mapping(t, ("class",), ("sign",))
        sign = r.int(tf["sign"], choices=(1, -1)) if "sign" in tf else 1
        word.append(SignedTwist(_curve(r, tf["class"], page), sign))
    return _checked(r, f["page"], lambda: OpenBook(page, word))


def _kirby(r, node, f):
    n1 = r.int(f["n1"], lo=0)
    Q = r.matrix(f["linking"])
    A = r.matrix(f["attach"], n1) if "attach" in f else tuple(() for _ in Q)
    n3 = r.int(f["n3"], lo=0) if "n3" in f else 0
    n4 = r.int(f["n4"], lo=0) if "n4" in f else 0
    return _checked(r, node, lambda: KirbyData(n1, A, Q, n3, n4))


_LINK_FIELDS = (("n1",), ("components", "double_points", "declared_bridge_number"))


def _link(r, node, f):
    n1 = r.int(f["n1"], lo=0)
    comps = []
    for c in r.seq(f["components"]) if "components" in f else ():
        cf = r.mapping(c, (), ("band_word", "target_framing"))
        word = r.ints(cf["band_word"]) if "band_word" in cf else ()
        framing = r.int(cf["target_framing"]) if "target_framing" in cf else 0
        comps.append(LinkComponent(word, framing))
    dps = []
    for d in r.seq(f["double_points"]) if "double_points" in f else ():
        df = r.mapping(d, ("over", "under"), ("over_strand", "under_strand", "sign"))
        dps.append(DoublePoint(
            r.int(df["over"], lo=0), r.int(df["under"], lo=0),
            r.int(df["over_strand"], lo=0) if "over_strand" in df else 0,
            r.int(df["under_strand"], lo=0) if "under_strand" in df else 0,
            r.int(df["sign"], choices=(1, -1)) if "sign" in df else 1))
    bridge = f.get("declared_bridge_number")
    bridge = None if r.is_null(bridge) else r.int(bridge, lo=0)
    return _checked(r, node, lambda: ProjectedLink(n1, comps, dps, bridge))


_SCHEMAS = {
    "alf": (("fiber", "cycles"), ("seifert",)),
    "open_book": (("page", "monodromy"), ()),
    "kirby": (("n1", "linking"), ("attach", "n3", "n4")),
    "projected_link": _LINK_FIELDS,
    "closed_manifold": (("link",), ("n3", "n4")),
}


def parse_document(text, source=None):
    """Parse a document; returns (kind, object)."""
    r = _Reader(text, source)
    root = r.root()
    head = r.mapping(root, ("schema_version", "kind"),
                     tuple(k for req, opt in _SCHEMAS.values() for k in req + opt))
    version = r.int(head["schema_version"])
    if version != SCHEMA_VERSION:
        r.error(head["schema_version"], f"unsupported schema_version {version}")
    knode = head["kind"]
    kind = knode.value if isinstance(knode, yaml.ScalarNode) else None
    if kind not in KINDS:
        r.error(knode, f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    req, opt = _SCHEMAS[kind]
    f = r.mapping(root, ("schema_version", "kind") + req, opt)
    if kind == "alf":
        return kind, _alf(r, f)
    if kind == "open_book":
        return kind, _open_book(r, f)
    if kind == "kirby":
        return kind, _kirby(r, root, f)
    if kind == "projected_link":
        return kind, _link(r, root, f)
    lf = r.mapping(f["link"], *_LINK_FIELDS)
    link = _link(r, f["link"], lf)
    n3 = r.int(f["n3"], lo=0) if "n3" in f else 0
    n4 = r.int(f["n4"], lo=0) if "n4" in f else 1
    return kind, ClosedManifoldInput(link, n3, n4)


def read_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(exc.strerror or str(exc), source=str(path)) from None
    return parse_document(text, str(path))


# --- serialization -----------------------------------------------------------

def rational(x):
    """Exact string for a rational: '-1/2', '3'."""
    return str(Fraction(x))


def _rows(M):
    return [list(row) for row in M]


def surface_dict(s):
    d = {"genus": s.genus, "boundary_count": s.boundary_count}
    if not s.is_canonical:
        d["form"] = _rows(s.form)
    return d


def cycle_dict(c):
    return {"class": list(c.curve.coeffs), "sign": c.sign, "rotation": c.rotation}


def link_dict(p):
    d = {
        "n1": p.n1,
        "components": [{"band_word": list(c.band_word), "target_framing": c.target_framing}
                       for c in p.components],
        "double_points": [{"over": x.over, "under": x.under, "over_strand": x.over_strand,
                           "under_strand": x.under_strand, "sign": x.sign}
                          for x in p.double_points],
    }
    if p.declared_bridge_number is not None:
        d["declared_bridge_number"] = p.declared_bridge_number
    return d


def to_dict(obj):
    """Document form of a domain object."""
    head = {"schema_version": SCHEMA_VERSION}
    if isinstance(obj, ALF):
        d = dict(head, kind="alf", fiber=surface_dict(obj.fiber),
                 cycles=[cycle_dict(c) for c in obj.cycles])
        if obj.seifert != SeifertForm.default(obj.fiber):
            d["seifert"] = _rows(obj.seifert.matrix)
        return d
    if isinstance(obj, OpenBook):
        return dict(head, kind="open_book", page=surface_dict(obj.page),
                    monodromy=[{"class": list(t.curve.coeffs), "sign": t.sign}
                               for t in obj.monodromy])
    if isinstance(obj, KirbyData):
        return dict(head, kind="kirby", n1=obj.n1, attach=_rows(obj.attach),
                    linking=_rows(obj.linking), n3=obj.n3, n4=obj.n4)
    if isinstance(obj, ProjectedLink):
        return dict(head, kind="projected_link", **link_dict(obj))
    if isinstance(obj, ClosedManifoldInput):
        return dict(head, kind="closed_manifold", link=link_dict(obj.link), n3=obj.n3, n4=obj.n4)
    raise TypeError(f"no document form for {type(obj).__name__}")


def dumps(data, fmt="yaml"):
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None)


def format_for(path):
    return "json" if str(path).endswith(".json") else "yaml"


def write(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data, format_for(path)))
