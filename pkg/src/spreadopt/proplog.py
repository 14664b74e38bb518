"""Repost logs and maximum-likelihood estimation of arc probabilities.

A log records repost events ``(reposter, source, item, time)``: the reposter
picked up the item from the source at the given time.  For each arc (v, u)
the estimated probability is the fraction of v's posts that u went on to
repost from v:

    p[v, u] = M_v2u / M_vu

where M_v2u counts items u reposted from v, and M_vu counts items v posted
before u did (items u never posted count, items u posted first do not).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import DirectedGraph, EdgeListFormatError

__all__ = ["RepostRecord", "PropagationLog", "load_propagation_log", "estimate_probs_mle"]


@dataclass(frozen=True)
class RepostRecord:
    reposter: int
    source: int
    item: str
    time: int


class PropagationLog:
    """An immutable list of repost events forming, per item, a time-ordered forest."""

    def __init__(self, records):
        recs = tuple(
            r if isinstance(r, RepostRecord) else RepostRecord(int(r[0]), int(r[1]), str(r[2]), int(r[3]))
            for r in records
        )
        # Forest invariant: one source per (item, reposter), repost strictly
        # after the source's own post of the item (when that time is known).
        post_time: dict[tuple[int, str], int] = {}
        seen: set[tuple[str, int]] = set()
        for r in recs:
            if r.reposter == r.source:
                raise ValueError(f"record has reposter == source ({r.reposter})")
            key = (r.item, r.reposter)
            if key in seen:
                raise ValueError(f"node {r.reposter} reposts item {r.item!r} twice")
            seen.add(key)
            prev = post_time.get((r.reposter, r.item))
            post_time[(r.reposter, r.item)] = r.time if prev is None else min(prev, r.time)
        for r in recs:
            src_t = post_time.get((r.source, r.item))
            if src_t is not None and src_t >= r.time:
                raise ValueError(
                    f"item {r.item!r}: {r.reposter} reposted from {r.source} at t={r.time} "
                    f"but the source posted at t={src_t}"
                )
        self.records = recs

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def nodes(self) -> set[int]:
        out: set[int] = set()
        for r in self.records:
            out.add(r.reposter)
            out.add(r.source)
        return out

    def post_times(self) -> dict[tuple[int, str], int]:
        """First-post time of each (node, item) pair appearing in the log.

        Reposters carry their record time.  A root poster (appears only as a
        source) gets the earliest repost from it minus one, which respects
        the forest's time ordering.
        """
        times: dict[tuple[int, str], int] = {}
        reposted = set()
        for r in self.records:
            key = (r.reposter, r.item)
            reposted.add(key)
            if key not in times or r.time < times[key]:
                times[key] = r.time
        for r in self.records:
            key = (r.source, r.item)
            if key in reposted:
                continue
            inferred = r.time - 1
            if key not in times or inferred < times[key]:
                times[key] = inferred
        return times


def load_propagation_log(path: str | Path, g: DirectedGraph) -> PropagationLog:
    """Read a TSV ``reposter<TAB>source<TAB>item<TAB>time`` log.

    Node columns hold graph labels and are mapped to dense ids; an unknown
    label is an error.
    """
    records = []
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise EdgeListFormatError("expected 'reposter<TAB>source<TAB>item<TAB>time'", line_no)
            try:
                t = int(parts[3])
            except ValueError:
                raise EdgeListFormatError(f"bad time {parts[3]!r}", line_no) from None
            records.append(RepostRecord(g.node_id(parts[0]), g.node_id(parts[1]), parts[2], t))
    return PropagationLog(records)


def estimate_probs_mle(g: DirectedGraph, log: PropagationLog) -> DirectedGraph:
    """Assign each arc the MLE repost probability computed from a log.

    Arcs without any exposure evidence (M_vu = 0) get probability 0.
    """
    unknown = [v for v in log.nodes() if not (0 <= v < g.n)]
    if unknown:
        raise ValueError(f"log references unknown node id {unknown[0]}")

    post_times = log.post_times()
    posts_by_node: dict[int, list[str]] = {}
    for (node, item) in post_times:
        posts_by_node.setdefault(node, []).append(item)
    reposts: dict[tuple[int, int], int] = {}
    for r in log.records:
        key = (r.source, r.reposter)
        reposts[key] = reposts.get(key, 0) + 1

    new_probs = np.zeros(g.n_arcs)
    j = 0
    for v, u, _ in g.arcs():
        m_vu = 0
        for item in posts_by_node.get(v, ()):
            t_u = post_times.get((u, item))
            if t_u is None or t_u > post_times[(v, item)]:
                m_vu += 1
        m_v2u = reposts.get((v, u), 0)
        new_probs[j] = m_v2u / m_vu if m_vu else 0.0
        j += 1
    return g.with_probs(new_probs)
