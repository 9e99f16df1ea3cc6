"""Exact metric dimension and its attachment-aware variants.

Every operation reduces to a minimum-cover question: for each vertex we
precompute the bitmask of unordered vertex pairs it distinguishes (pairs at
different distances from it), then run exact branch-and-bound cover search.
Searches whose cost grows with the full basis family (enumeration, upper
dimension, isolation index) carry a stricter default size guardrail than the
plain dimension computation; pass a larger ``max_n`` to override.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .cover import CoverSystem
from .errors import GraphError, GuardrailError, TruncationError
from .graph import (
    Graph,
    all_pairs_distances,
    isolated_after_removal,
    require_connected,
    _validated_vertex_set,
)

#: Default order cap for plain dimension-style searches.
DIM_GUARDRAIL = 64
#: Default order cap for basis enumeration and other family-wide searches.
ENUM_GUARDRAIL = 24
#: Default cap on the number of enumerated bases.
BASIS_CAP = 10**6


class DimResult(NamedTuple):
    value: int
    basis: tuple[int, ...]


class AttachingResult(NamedTuple):
    value: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ResolveReport:
    """Full basis family of a graph, possibly truncated at a cap.

    ``membership[v]`` reflects the listed bases only; with ``truncated`` set
    it may undercount, use :func:`basis_membership` for the exact flag.
    """

    dim: int
    bases: tuple[tuple[int, ...], ...]
    truncated: bool
    membership: tuple[bool, ...]
    upper_dim: int | None = None
    isolation: int | None = None

    def to_json(self) -> dict:
        payload: dict = {
            "dim": self.dim,
            "bases": [list(b) for b in self.bases],
            "truncated": self.truncated,
            "membership": list(self.membership),
        }
        if self.upper_dim is not None:
            payload["upper_dim"] = self.upper_dim
        if self.isolation is not None:
            payload["isolation_index"] = self.isolation
        return payload


def _check_instance(g: Graph, operation: str, max_n: int) -> None:
    if g.n < 2:
        raise GraphError(f"{operation} needs order >= 2, got {g.n}")
    require_connected(g, operation)
    if g.n > max_n:
        raise GuardrailError(
            f"{operation} refused for n={g.n} > {max_n}; pass a larger max_n to override"
        )


def _pair_masks(g: Graph) -> tuple[list[int], int]:
    """Per-vertex bitmask of distinguished unordered pairs, plus the universe."""
    dist = all_pairs_distances(g).rows
    n = g.n
    masks = [0] * n
    bit = 1
    for x in range(n):
        dx = dist[x]
        for y in range(x + 1, n):
            dy = dist[y]
            for v in range(n):
                if dx[v] != dy[v]:
                    masks[v] |= bit
            bit <<= 1
    universe = bit - 1 if n > 1 else 0
    return masks, universe


def is_resolving(g: Graph, landmarks: Iterable[int]) -> bool:
    """True iff every vertex pair is at distinct distances from some landmark."""
    require_connected(g, "is_resolving")
    chosen = sorted(_validated_vertex_set(g, landmarks))
    dist = all_pairs_distances(g).rows
    signatures = {tuple(dist[w][v] for w in chosen) for v in range(g.n)}
    return len(signatures) == g.n


def metric_dimension(
    g: Graph, *, max_n: int = DIM_GUARDRAIL, witness: bool = True
) -> DimResult:
    """Exact metric dimension with the lexicographically least basis.

    ``witness=False`` skips the deterministic witness search and returns an
    empty basis tuple, which is noticeably cheaper on larger instances.
    """
    _check_instance(g, "metric_dimension", max_n)
    masks, universe = _pair_masks(g)
    system = CoverSystem(masks, universe)
    size, _ = system.min_cover()
    if not witness:
        return DimResult(size, ())
    return DimResult(size, tuple(system.lex_least_cover(size)))


def enumerate_bases(
    g: Graph, *, cap: int = BASIS_CAP, max_n: int = ENUM_GUARDRAIL
) -> ResolveReport:
    """All metric bases in lexicographic order, truncated at ``cap``."""
    _check_instance(g, "enumerate_bases", max_n)
    if cap < 1:
        raise GraphError(f"cap must be >= 1, got {cap}")
    masks, universe = _pair_masks(g)
    system = CoverSystem(masks, universe)
    k, _ = system.min_cover()

    n = g.n
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | masks[v]

    bases: list[tuple[int, ...]] = []
    truncated = False
    chosen: list[int] = []

    def rec(start: int, covered: int) -> None:
        nonlocal truncated
        if truncated:
            return
        depth = len(chosen)
        if depth == k:
            if covered == universe:
                if len(bases) >= cap:
                    truncated = True
                else:
                    bases.append(tuple(chosen))
            return
        for v in range(start, n - (k - depth) + 1):
            if covered | suffix[v] != universe:
                break
            chosen.append(v)
            rec(v + 1, covered | masks[v])
            chosen.pop()
            if truncated:
                return

    rec(0, 0)
    membership = [False] * n
    for b in bases:
        for v in b:
            membership[v] = True
    return ResolveReport(
        dim=k,
        bases=tuple(bases),
        truncated=truncated,
        membership=tuple(membership),
    )


def upper_metric_dimension(g: Graph, *, max_n: int = ENUM_GUARDRAIL) -> int:
    """Largest cardinality of a minimal metric generator.

    Minimal means no proper subset resolves, equivalently every member
    distinguishes some pair that no other member does.  The search tracks the
    private pair mask of each chosen vertex and abandons a branch as soon as
    one becomes empty, since private masks only shrink as vertices are added.
    """
    _check_instance(g, "upper_metric_dimension", max_n)
    masks, universe = _pair_masks(g)
    n = g.n
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | masks[v]

    # any metric basis is a minimal generator, so dim is a valid floor
    best = CoverSystem(masks, universe).min_cover()[0]
    privs: list[int] = []

    def rec(i: int, covered: int) -> None:
        nonlocal best
        if covered | suffix[i] != universe:
            return
        if len(privs) + (n - i) <= best:
            return
        if i == n:
            if covered == universe:
                best = len(privs)
            return
        gain = masks[i] & ~covered
        if gain:
            shrunk = [p & ~masks[i] for p in privs]
            if all(shrunk):
                saved = privs[:]
                privs[:] = shrunk
                privs.append(gain)
                rec(i + 1, covered | masks[i])
                privs[:] = saved
        rec(i + 1, covered)

    rec(0, 0)
    return best


def attaching_dimension(
    g: Graph, attachments: Iterable[int], *, max_n: int = DIM_GUARDRAIL
) -> AttachingResult:
    """Fewest extra landmarks that resolve ``g`` together with ``attachments``.

    The witness is drawn from outside the attachment set; adding an
    attachment vertex to the extra set never changes the union, so this
    restriction does not affect the value.
    """
    _check_instance(g, "attaching_dimension", max_n)
    attached = _validated_vertex_set(g, attachments)
    masks, universe = _pair_masks(g)
    system = CoverSystem(masks, universe)
    pre = 0
    allowed = system.all_sets
    for v in attached:
        pre |= masks[v]
        allowed &= ~(1 << v)
    size, _ = system.min_cover(pre_covered=pre, allowed=allowed)
    witness = system.lex_least_cover(size, pre_covered=pre, allowed=allowed)
    return AttachingResult(size, tuple(witness))


def max_basis_overlap(
    g: Graph,
    attachments: Iterable[int],
    *,
    cap: int = BASIS_CAP,
    max_n: int = ENUM_GUARDRAIL,
) -> int:
    """Largest number of attachment vertices contained in a single basis."""
    attached = _validated_vertex_set(g, attachments)
    report = enumerate_bases(g, cap=cap, max_n=max_n)
    if report.truncated:
        raise TruncationError(
            "basis enumeration truncated; max_basis_overlap needs the full family"
        )
    return max((len(attached.intersection(b)) for b in report.bases), default=0)


def basis_membership(g: Graph, v: int, *, max_n: int = DIM_GUARDRAIL) -> bool:
    """True iff some metric basis contains ``v``.

    Answered by a single budgeted feasibility search rather than full
    enumeration: does any resolving set of minimum size contain ``v``?
    """
    _check_instance(g, "basis_membership", max_n)
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    masks, universe = _pair_masks(g)
    system = CoverSystem(masks, universe)
    k, _ = system.min_cover()
    return system.exists_cover(
        k - 1, pre_covered=masks[v], allowed=system.all_sets & ~(1 << v)
    )


def isolation_index(
    g: Graph, *, cap: int = BASIS_CAP, max_n: int = ENUM_GUARDRAIL
) -> int:
    """Max over metric bases of the number of vertices isolated by removing one."""
    report = enumerate_bases(g, cap=cap, max_n=max_n)
    if report.truncated:
        raise TruncationError(
            "basis enumeration truncated; isolation_index needs the full family"
        )
    return max(len(isolated_after_removal(g, b)) for b in report.bases)
