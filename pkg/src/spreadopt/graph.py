"""Directed influence graph: data model, file ingestion, probability schemes.

The graph is immutable after construction.  Nodes are dense integer ids in
[0, n); the original labels from an ingested file are retained so results can
be reported in the caller's vocabulary.  Arcs are stored CSR-style sorted by
(source, target), which also fixes the deterministic attempt order used by
the simulator.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path

import numpy as np

from .validation import check_probability

__all__ = [
    "DirectedGraph",
    "EdgeListFormatError",
    "load_edge_list",
    "save_edge_list",
    "load_costs",
    "save_costs",
    "assign_uniform",
    "assign_weighted_cascade",
]


class EdgeListFormatError(ValueError):
    """A malformed edge-list line; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DirectedGraph:
    """Immutable directed graph with per-arc probabilities and node costs.

    Attributes:
        n: node count.
        indptr, targets, probs: CSR adjacency sorted by (source, target);
            the out-arcs of node v are targets[indptr[v]:indptr[v+1]].
        in_degree: number of arcs ending at each node.
        cost: per-node positive cost (defaults to 1.0).
        labels: original node label for each dense id.
    """

    __slots__ = ("n", "indptr", "targets", "probs", "in_degree", "cost",
                 "labels", "_label_to_id", "__dict__")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int, float]],
        *,
        cost: Sequence[float] | np.ndarray | None = None,
        labels: Sequence[str] | None = None,
    ):
        n = int(n)
        if n < 0:
            raise ValueError("node count must be >= 0")
        triples = sorted((int(s), int(t), float(p)) for s, t, p in arcs)
        seen: set[tuple[int, int]] = set()
        for s, t, p in triples:
            if s == t:
                raise ValueError(f"self-loop on node {s}")
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arc ({s}, {t}) references a node outside [0, {n})")
            if (s, t) in seen:
                raise ValueError(f"duplicate arc ({s}, {t})")
            seen.add((s, t))
            check_probability(p, name=f"probability of arc ({s}, {t})")

        src = np.fromiter((a[0] for a in triples), dtype=np.int64, count=len(triples))
        self.n = n
        self.targets = np.fromiter((a[1] for a in triples), dtype=np.int64, count=len(triples))
        self.probs = np.fromiter((a[2] for a in triples), dtype=np.float64, count=len(triples))
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(self.indptr, src + 1, 1)
        np.cumsum(self.indptr, out=self.indptr)
        self.in_degree = np.bincount(self.targets, minlength=n).astype(np.int64)

        if cost is None:
            self.cost = np.ones(n)
        else:
            self.cost = np.asarray(cost, dtype=np.float64).copy()
            if self.cost.shape != (n,):
                raise ValueError(f"expected {n} node costs, got shape {self.cost.shape}")
            if n and not np.all(self.cost > 0):
                raise ValueError("node costs must be > 0")

        if labels is None:
            self.labels = [str(i) for i in range(n)]
        else:
            self.labels = [str(x) for x in labels]
            if len(self.labels) != n:
                raise ValueError(f"expected {n} labels, got {len(self.labels)}")
            if len(set(self.labels)) != n:
                raise ValueError("node labels must be unique")
        self._label_to_id = {lbl: i for i, lbl in enumerate(self.labels)}

        for arr in (self.indptr, self.targets, self.probs, self.in_degree, self.cost):
            arr.setflags(write=False)

    # -- accessors ---------------------------------------------------------

    @property
    def n_arcs(self) -> int:
        return int(self.targets.size)

    def out(self, v: int) -> tuple[np.ndarray, np.ndarray]:
        """(targets, probs) views of node v's out-arcs."""
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return self.targets[lo:hi], self.probs[lo:hi]

    def arcs(self) -> Iterator[tuple[int, int, float]]:
        for v in range(self.n):
            lo, hi = self.indptr[v], self.indptr[v + 1]
            for j in range(lo, hi):
                yield v, int(self.targets[j]), float(self.probs[j])

    def node_id(self, label: str) -> int:
        try:
            return self._label_to_id[str(label)]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    @functools.cached_property
    def in_weight_sums(self) -> np.ndarray:
        """Sum of incoming arc probabilities per node (the LT weight totals)."""
        sums = np.zeros(self.n)
        np.add.at(sums, self.targets, self.probs)
        sums.setflags(write=False)
        return sums

    # -- derived graphs ----------------------------------------------------

    def with_probs(self, probs: np.ndarray) -> "DirectedGraph":
        """Copy of this graph with the arc probabilities replaced (CSR order)."""
        probs = np.asarray(probs, dtype=np.float64)
        if probs.shape != self.probs.shape:
            raise ValueError("replacement probabilities must match the arc count")
        src = np.repeat(np.arange(self.n), np.diff(self.indptr))
        return DirectedGraph(
            self.n,
            zip(src.tolist(), self.targets.tolist(), probs.tolist()),
            cost=self.cost,
            labels=self.labels,
        )

    def with_costs(self, cost: Sequence[float] | np.ndarray) -> "DirectedGraph":
        src = np.repeat(np.arange(self.n), np.diff(self.indptr))
        return DirectedGraph(
            self.n,
            zip(src.tolist(), self.targets.tolist(), self.probs.tolist()),
            cost=cost,
            labels=self.labels,
        )

    # -- identity ----------------------------------------------------------

    def _canonical(self):
        arcs = sorted(
            (self.labels[s], self.labels[t], p) for s, t, p in self.arcs()
        )
        costs = sorted(zip(self.labels, self.cost.tolist()))
        return (self.n, arcs, costs)

    def __eq__(self, other) -> bool:
        """Label-level identity: same nodes, arcs, probabilities and costs."""
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash((self.n, self.n_arcs))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, arcs={self.n_arcs})"


# -- ingestion / serialization ----------------------------------------------

_ISOLATED_MAGIC = "# isolated:"


def _parse_edge_line(line: str, line_no: int, default_prob: float | None):
    parts = line.split("\t")
    if len(parts) == 2:
        if default_prob is None:
            raise EdgeListFormatError(
                "arc has no probability and no default_prob was given", line_no
            )
        src, dst, prob = parts[0], parts[1], default_prob
    elif len(parts) == 3:
        src, dst = parts[0], parts[1]
        try:
            prob = float(parts[2])
        except ValueError:
            raise EdgeListFormatError(f"bad probability {parts[2]!r}", line_no) from None
    else:
        raise EdgeListFormatError(
            f"expected 'src<TAB>dst[<TAB>prob]', got {len(parts)} fields", line_no
        )
    src, dst = src.strip(), dst.strip()
    if not src or not dst:
        raise EdgeListFormatError("empty node label", line_no)
    if not (0.0 <= prob <= 1.0):
        raise EdgeListFormatError(f"probability {prob} outside [0, 1]", line_no)
    return src, dst, prob


def load_edge_list(
    path: str | Path,
    default_prob: float | None = None,
    *,
    cost_path: str | Path | None = None,
    symmetrize: bool = False,
) -> DirectedGraph:
    """Read a UTF-8 TSV edge list ``src<TAB>dst[<TAB>prob]`` into a graph.

    Node labels are remapped to dense ids in order of first appearance and
    retained on the graph.  Lines starting with ``#`` are comments; a writer
    of ours may record otherwise-unrepresentable isolated nodes in a
    ``# isolated:`` comment, which the loader honors.

    Args:
        default_prob: probability for arcs that omit the third column.
        cost_path: optional TSV ``node<TAB>cost`` overriding per-node costs.
        symmetrize: add the reverse of every arc (same probability) unless it
            is already present; used for undirected source data.
    """
    if default_prob is not None:
        default_prob = check_probability(default_prob, "default_prob")
    path = Path(path)
    label_ids: dict[str, int] = {}
    arcs: list[tuple[int, int, float]] = []
    arc_set: set[tuple[int, int]] = set()
    isolated: list[str] = []

    def intern(label: str) -> int:
        if label not in label_ids:
            label_ids[label] = len(label_ids)
        return label_ids[label]

    with path.open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            if line.startswith("#"):
                if line.startswith(_ISOLATED_MAGIC):
                    rest = line[len(_ISOLATED_MAGIC):].strip()
                    isolated.extend(lbl for lbl in rest.split("\t") if lbl)
                continue
            src, dst, prob = _parse_edge_line(line, line_no, default_prob)
            if src == dst:
                raise EdgeListFormatError(f"self-loop on node {src!r}", line_no)
            s, t = intern(src), intern(dst)
            if (s, t) in arc_set:
                raise EdgeListFormatError(f"duplicate arc ({src!r}, {dst!r})", line_no)
            arc_set.add((s, t))
            arcs.append((s, t, prob))

    for lbl in isolated:
        intern(lbl)

    if symmetrize:
        for s, t, p in list(arcs):
            if (t, s) not in arc_set:
                arc_set.add((t, s))
                arcs.append((t, s, p))

    n = len(label_ids)
    labels = sorted(label_ids, key=label_ids.get)
    cost = None
    if cost_path is not None:
        overrides = load_costs(cost_path)
        cost = np.ones(n)
        for lbl, c in overrides.items():
            if lbl not in label_ids:
                raise ValueError(f"cost file references unknown node {lbl!r}")
            cost[label_ids[lbl]] = c
    return DirectedGraph(n, arcs, cost=cost, labels=labels)


def save_edge_list(g: DirectedGraph, path: str | Path) -> None:
    """Write a graph as a TSV edge list that round-trips through the loader.

    Probabilities are written with full float precision.  Nodes without arcs
    are recorded in a ``# isolated:`` comment so the node set is preserved.
    """
    path = Path(path)
    touched = np.zeros(g.n, dtype=bool)
    touched[g.targets] = True
    touched[np.repeat(np.arange(g.n), np.diff(g.indptr))] = True
    lines = [f"# nodes: {g.n}"]
    isolated = [g.labels[i] for i in range(g.n) if not touched[i]]
    if isolated:
        lines.append(_ISOLATED_MAGIC + " " + "\t".join(isolated))
    for s, t, p in g.arcs():
        lines.append(f"{g.labels[s]}\t{g.labels[t]}\t{p!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_costs(path: str | Path) -> dict[str, float]:
    """Read a TSV ``node<TAB>cost`` file into a label -> cost mapping."""
    out: dict[str, float] = {}
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise EdgeListFormatError("expected 'node<TAB>cost'", line_no)
            try:
                c = float(parts[1])
            except ValueError:
                raise EdgeListFormatError(f"bad cost {parts[1]!r}", line_no) from None
            if c <= 0:
                raise EdgeListFormatError(f"cost must be > 0, got {c}", line_no)
            out[parts[0].strip()] = c
    return out


def save_costs(g: DirectedGraph, path: str | Path) -> None:
    lines = [f"{g.labels[i]}\t{float(g.cost[i])!r}" for i in range(g.n)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- probability assignment schemes ------------------------------------------


def assign_uniform(g: DirectedGraph, p: float) -> DirectedGraph:
    """Replace every arc probability with the constant p."""
    p = check_probability(p)
    return g.with_probs(np.full(g.n_arcs, p))


def assign_weighted_cascade(g: DirectedGraph) -> DirectedGraph:
    """Weighted cascade: arc (v, u) gets probability 1 / in_degree(u)."""
    if g.n_arcs == 0:
        raise ValueError("graph has no arcs")
    return g.with_probs(1.0 / g.in_degree[g.targets])
