"""Exact characteristic-polynomial fingerprints and isospectrality comparison."""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .charpoly import charpoly_exact
from .errors import PreconditionViolation, QWSpectraError
from .graph import Graph
from .kernels import threads
from .poly import ExactPolynomial
from .scalars import format_gaussian
from . import walks

KINDS = ("adjacency", "grover", "u-plus", "u2-plus", "u3-plus", "szegedy", "edge-matrix")


@dataclass(frozen=True)
class Fingerprint:
    kind: str
    coeffs: tuple
    summary: dict = field(compare=False, hash=False)
    digest: str = field(compare=False, default="")

    def __eq__(self, other):
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kind, self.coeffs))

    @property
    def polynomial(self) -> ExactPolynomial:
        return ExactPolynomial.from_json(list(self.coeffs))

    def to_json(self) -> dict:
        return {"kind": self.kind, "coefficients": list(self.coeffs),
                "summary": self.summary, "hash": self.digest}


def kind_matrix(g: Graph, kind: str, p: Sequence | None = None):
    if kind == "adjacency":
        return walks.adjacency(g)
    if kind in ("u-plus", "u2-plus", "u3-plus") and g.n and g.min_degree < 2:
        raise PreconditionViolation(f"{kind} needs min degree >= 2, got {g.min_degree}")
    if kind == "grover":
        return walks.grover(g)
    if kind == "u-plus":
        return walks.u_plus(g)
    if kind == "u2-plus":
        return walks.u2_plus(g)
    if kind == "u3-plus":
        return walks.u3_plus(g)
    if kind == "szegedy":
        return walks.szegedy(g, walks.simple_walk(g) if p is None else p)
    if kind == "edge-matrix":
        return walks.edge_matrix_B(g) - walks.shift_P(g)
    raise ValueError(f"unknown matrix kind {kind!r}; expected one of {', '.join(KINDS)}")


def fingerprint(g: Graph, kind: str, p: Sequence | None = None) -> Fingerprint:
    poly = charpoly_exact(kind_matrix(g, kind, p))
    coeffs = tuple(poly.to_json())
    blob = json.dumps({"kind": kind, "coefficients": coeffs}, sort_keys=True).encode()
    return Fingerprint(kind, coeffs, g.summary(), hashlib.sha256(blob).hexdigest())


def fingerprint_witness(fa: Fingerprint, fb: Fingerprint) -> dict | None:
    diff = fa.polynomial.first_difference(fb.polynomial)
    if diff is None:
        return None
    k, a, b = diff
    return {"index": k, "a": format_gaussian(a), "b": format_gaussian(b)}


def compare(a: Graph, b: Graph, kind: str) -> dict:
    fa, fb = fingerprint(a, kind), fingerprint(b, kind)
    same = fa == fb
    return {"kind": kind, "isospectral": same,
            "witness": None if same else fingerprint_witness(fa, fb)}


def batch_compare(graphs: Sequence[Graph], kind: str, ids: Sequence[str] | None = None,
                  include_fingerprints: bool = False) -> dict:
    """Group graphs into classes of equal fingerprints.

    Graphs that fail the kind's precondition or otherwise error are listed
    under ``excluded`` with the reason; the remaining classes are ordered by
    their first member's position in the input.
    """
    ids = list(ids) if ids is not None else [str(i) for i in range(len(graphs))]
    if len(ids) != len(graphs):
        raise ValueError("ids and graphs differ in length")

    def work(g):
        try:
            return fingerprint(g, kind), None
        except QWSpectraError as exc:
            return None, f"{type(exc).__name__}: {exc}"

    if graphs:
        with ThreadPoolExecutor(max_workers=max(1, min(threads(), len(graphs)))) as pool:
            results = list(pool.map(work, graphs))
    else:
        results = []
    classes: dict[Fingerprint, list[str]] = {}
    excluded = []
    for gid, (fp, err) in zip(ids, results):
        if fp is None:
            excluded.append({"id": gid, "reason": err})
        else:
            classes.setdefault(fp, []).append(gid)
    report = {"kind": kind, "classes": list(classes.values()), "excluded": excluded}
    if include_fingerprints:
        report["fingerprints"] = {gid: fp.to_json() for gid, (fp, _) in zip(ids, results) if fp}
    return report
