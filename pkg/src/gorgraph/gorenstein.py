"""Gorenstein decision for graphs, component by component.

Each component with at least two vertices is run through the full
three-clause test (Euler condition, link-cycle condition, Cohen-Macaulay),
cheapest clause first. Components with ``alpha <= 2`` and triangle-free
components additionally have a closed-form answer; that answer decides the
``path`` and must agree with the full test, otherwise
:class:`ClassificationConflict` is raised.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from .graph import (
    Graph,
    check_cap,
    components,
    induced_subgraph,
    is_complement_of_cycle,
    is_triangle_free,
    iter_bits,
    mask_of,
    private_subgraph,
)
from .homology import ALL, CharSpec, is_cm, parse_char
from .indsets import W2Certificate, _scan, independence_summary, is_w2

PATH_SMALL_ALPHA = "alpha<=2"
PATH_TRIANGLE_FREE = "triangle-free"
PATH_FULL = "full"


class ClassificationConflict(RuntimeError):
    """A closed-form shortcut disagreed with the full clause-by-clause test."""


def link_cycle_condition(g: Graph) -> tuple[bool, Optional[int]]:
    """Check that the complement of ``G_F`` is a cycle of length >= 4 for
    every independent ``F`` with ``|F| = alpha - 2``.

    Returns ``(ok, F)`` where ``F`` is the first failing set (ascending mask
    order) or ``None``.
    """
    alpha = independence_summary(g).alpha
    if alpha < 2:
        raise ValueError("link-cycle condition needs alpha >= 2")
    want = alpha - 2
    for f in _scan(g).sets:
        if f.bit_count() != want:
            continue
        k = is_complement_of_cycle(private_subgraph(g, f))
        if k is None or k < 4:
            return False, f
    return True, None


def shape_of(g: Graph) -> str:
    if g.n == 1:
        return "K1"
    if g.n == 2 and g.num_edges == 1:
        return "K2"
    k = is_complement_of_cycle(g)
    if k is not None:
        return f"complement-of-cycle({k})"
    return "other"


def _labels(g: Graph, mask: int) -> list[int]:
    return sorted(g.original(mask))


def _relabel_w2(g: Graph, cert: W2Certificate) -> W2Certificate:
    lift = lambda m: mask_of(g.original(m))
    pair = tuple(lift(m) for m in cert.pair) if cert.pair is not None else None
    lemma = (lift(cert.lemma[0]), g.labels[cert.lemma[1]]) if cert.lemma is not None else None
    return W2Certificate(cert.verdict, pair, lemma, cert.degenerate)


@dataclass
class ComponentVerdict:
    component: list[int]
    shape: str
    alpha: int
    well_covered: bool
    w2: W2Certificate
    cm: Optional[bool]
    euler_ok: Optional[bool]
    link_condition_ok: Optional[bool]
    gorenstein: bool
    path: str
    witness: Optional[dict] = None
    evaluated: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        w2 = {
            "verdict": self.w2.verdict,
            "pair": [sorted(iter_bits(m)) for m in self.w2.pair] if self.w2.pair is not None else None,
            "lemma": (
                {"set": sorted(iter_bits(self.w2.lemma[0])), "vertex": self.w2.lemma[1]}
                if self.w2.lemma is not None
                else None
            ),
            "degenerate": self.w2.degenerate,
        }
        return {
            "component": list(self.component),
            "shape": self.shape,
            "alpha": self.alpha,
            "wellCovered": self.well_covered,
            "w2": w2,
            "cm": self.cm,
            "eulerOk": self.euler_ok,
            "linkConditionOk": self.link_condition_ok,
            "gorenstein": self.gorenstein,
            "path": self.path,
            "witness": self.witness,
            "evaluated": list(self.evaluated),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ComponentVerdict":
        w = d["w2"]
        cert = W2Certificate(
            w["verdict"],
            tuple(mask_of(s) for s in w["pair"]) if w["pair"] is not None else None,
            (mask_of(w["lemma"]["set"]), w["lemma"]["vertex"]) if w["lemma"] is not None else None,
            w["degenerate"],
        )
        return cls(
            component=list(d["component"]),
            shape=d["shape"],
            alpha=d["alpha"],
            well_covered=d["wellCovered"],
            w2=cert,
            cm=d["cm"],
            euler_ok=d["eulerOk"],
            link_condition_ok=d["linkConditionOk"],
            gorenstein=d["gorenstein"],
            path=d["path"],
            witness=d["witness"],
            evaluated=list(d.get("evaluated", [])),
        )


@dataclass
class Verdict:
    char: CharSpec
    components: list[ComponentVerdict]

    @property
    def gorenstein(self) -> bool:
        return all(c.gorenstein for c in self.components)

    @property
    def well_covered(self) -> bool:
        return all(c.well_covered for c in self.components)

    @property
    def cm(self) -> Optional[bool]:
        """Whole-graph CM, ``None`` if some component's CM clause was skipped
        and the evaluated ones all passed."""
        vals = [c.cm for c in self.components if c.shape != "K1"]
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True

    @property
    def euler_ok(self) -> Optional[bool]:
        vals = [c.euler_ok for c in self.components if c.shape != "K1"]
        return None if any(v is None for v in vals) else all(vals)

    @property
    def link_condition_ok(self) -> Optional[bool]:
        vals = [c.link_condition_ok for c in self.components if c.shape != "K1"]
        if any(v is False for v in vals):
            return False
        return None if any(v is None for v in vals) else True

    def to_dict(self) -> dict:
        return {
            "char": self.char,
            "gorenstein": self.gorenstein,
            "components": [c.to_dict() for c in self.components],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(parse_char(d["char"]), [ComponentVerdict.from_dict(c) for c in d["components"]])

    @classmethod
    def from_json(cls, text: str) -> "Verdict":
        return cls.from_dict(json.loads(text))


@dataclass
class _Clauses:
    gorenstein: bool
    cm: Optional[bool] = None
    euler_ok: Optional[bool] = None
    link_ok: Optional[bool] = None
    witness: Optional[dict] = None
    evaluated: list = field(default_factory=list)


def _full_test(h: Graph, k: CharSpec) -> _Clauses:
    out = _Clauses(False)
    s = independence_summary(h)
    out.evaluated.append("euler")
    out.euler_ok = s.at(-1) == (-1) ** s.alpha
    if not out.euler_ok:
        out.witness = {"clause": "euler", "value": s.at(-1), "alpha": s.alpha}
        return out
    if s.alpha >= 2:
        out.evaluated.append("link")
        out.link_ok, f = link_cycle_condition(h)
        if not out.link_ok:
            out.witness = {"clause": "link", "face": _labels(h, f)}
            return out
    out.evaluated.append("cm")
    res = is_cm(h, k)
    out.cm = res.ok
    if not res.ok:
        out.witness = {"clause": "cm", "face": _labels(h, res.face), "dim": res.dim}
        return out
    out.gorenstein = True
    return out


def _component_verdict(h: Graph, k: CharSpec) -> ComponentVerdict:
    s = independence_summary(h)
    w2 = _relabel_w2(h, is_w2(h))
    wc = s.maximal_sizes == {s.alpha}
    comp = sorted(h.labels)
    if h.n == 1:
        return ComponentVerdict(comp, "K1", s.alpha, wc, w2, None, None, None, True, PATH_SMALL_ALPHA)

    full = _full_test(h, k)
    if s.alpha <= 2:
        path = PATH_SMALL_ALPHA
        decided = h.n == 2 if s.alpha == 1 else is_complement_of_cycle(h) is not None
    elif is_triangle_free(h):
        path = PATH_TRIANGLE_FREE
        decided = w2.verdict
    else:
        path = PATH_FULL
        decided = full.gorenstein
    if decided != full.gorenstein:
        raise ClassificationConflict(
            f"{path} shortcut says {decided}, full test says {full.gorenstein} on component {comp}"
        )
    return ComponentVerdict(
        comp, shape_of(h), s.alpha, wc, w2, full.cm, full.euler_ok, full.link_ok,
        full.gorenstein, path, full.witness, full.evaluated,
    )


def is_gorenstein(g: Graph, k: CharSpec = ALL) -> Verdict:
    """Gorenstein verdict over characteristic ``k`` (``ALL``: every field)."""
    check_cap(g)
    k = parse_char(k)
    parts = [_component_verdict(induced_subgraph(g, c), k) for c in components(g)]
    return Verdict(k, parts)
