"""Exact minimum-cover search over bitmask-encoded set systems.

Elements are bit positions of a universe integer; candidate sets are
integers whose bits mark the elements they cover.  The solver is a
branch-and-bound on the least-coverable element with a greedy initial upper
bound and two cheap lower bounds (coverage ratio and a disjoint-element
packing).  All searches are deterministic; ties break towards lower indices.
"""

from __future__ import annotations

from typing import Sequence


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class CoverSystem:
    """Minimum set cover instance over integer bitmasks."""

    def __init__(self, masks: Sequence[int], universe: int):
        self.masks = list(masks)
        self.universe = universe
        self.all_sets = (1 << len(self.masks)) - 1
        # owners[e]: bitmask of set indices covering element e
        owners = []
        for e in range(universe.bit_length()):
            probe = 1 << e
            own = 0
            for i, m in enumerate(self.masks):
                if m & probe:
                    own |= 1 << i
            owners.append(own)
        self.owners = owners

    # ------------------------------------------------------------------
    # bounds

    def _greedy(self, covered: int, allowed: int) -> list[int] | None:
        chosen: list[int] = []
        while covered != self.universe:
            best_i = -1
            best_gain = 0
            rem = allowed
            while rem:
                low = rem & -rem
                i = low.bit_length() - 1
                rem ^= low
                gain = (self.masks[i] & ~covered).bit_count()
                if gain > best_gain:
                    best_gain = gain
                    best_i = i
            if best_i < 0:
                return None
            chosen.append(best_i)
            covered |= self.masks[best_i]
            allowed &= ~(1 << best_i)
        return chosen

    def _packing_bound(self, uncovered: int, allowed: int) -> int:
        # elements with pairwise disjoint owner sets each need their own pick
        used = 0
        count = 0
        rem = uncovered
        while rem:
            low = rem & -rem
            e = low.bit_length() - 1
            rem ^= low
            own = self.owners[e] & allowed
            if not own & used:
                count += 1
                used |= own
        return count

    # ------------------------------------------------------------------
    # search

    def _search(
        self,
        pre_covered: int,
        allowed: int,
        limit: int | None,
        first_only: bool,
    ) -> tuple[int, list[int]] | None:
        """Best cover strictly smaller than any previously found one.

        With ``limit`` only covers of size <= limit are considered; with
        ``first_only`` the search stops at the first admissible cover.
        Returns ``(size, witness)`` or ``None``.
        """
        best: list[int] | None = None
        best_size = limit + 1 if limit is not None else len(self.masks) + 1

        seed = self._greedy(pre_covered, allowed)
        if seed is not None and len(seed) < best_size:
            best, best_size = seed, len(seed)
            if first_only:
                return best_size, best

        masks = self.masks
        owners = self.owners
        universe = self.universe
        stop = False
        chosen: list[int] = []

        def dfs(covered: int, pool: int) -> None:
            nonlocal best, best_size, stop
            if stop:
                return
            uncovered = universe & ~covered
            if not uncovered:
                best = list(chosen)
                best_size = len(chosen)
                if first_only:
                    stop = True
                return
            if len(chosen) + 1 >= best_size:
                return
            # least-coverable uncovered element; zero cover means dead branch
            branch_own = 0
            branch_cnt = len(masks) + 1
            rem = uncovered
            while rem:
                low = rem & -rem
                e = low.bit_length() - 1
                rem ^= low
                own = owners[e] & pool
                cnt = own.bit_count()
                if cnt == 0:
                    return
                if cnt < branch_cnt:
                    branch_cnt = cnt
                    branch_own = own
            # lower bounds
            need = uncovered.bit_count()
            max_gain = 0
            rem = pool
            while rem:
                low = rem & -rem
                i = low.bit_length() - 1
                rem ^= low
                gain = (masks[i] & uncovered).bit_count()
                if gain > max_gain:
                    max_gain = gain
            bound = max(-(-need // max_gain), self._packing_bound(uncovered, pool))
            if len(chosen) + bound >= best_size:
                return
            candidates = sorted(
                _bits(branch_own),
                key=lambda i: (-(masks[i] & uncovered).bit_count(), i),
            )
            remaining_pool = pool
            for i in candidates:
                chosen.append(i)
                dfs(covered | masks[i], remaining_pool & ~(1 << i))
                chosen.pop()
                # sets already branched on are excluded from later branches
                remaining_pool &= ~(1 << i)
                if stop or len(chosen) + 1 >= best_size:
                    return

        dfs(pre_covered, allowed)
        if best is None:
            return None
        return best_size, best

    # ------------------------------------------------------------------
    # public API

    def min_cover(
        self, *, pre_covered: int = 0, allowed: int | None = None
    ) -> tuple[int, list[int]]:
        """Exact minimum cover size with one (not necessarily least) witness."""
        pool = self.all_sets if allowed is None else allowed
        result = self._search(pre_covered, pool, None, first_only=False)
        if result is None:
            raise ValueError("no cover exists for the given system")
        size, witness = result
        return size, sorted(witness)

    def exists_cover(
        self, budget: int, *, pre_covered: int = 0, allowed: int | None = None
    ) -> bool:
        """Whether some cover of size <= budget exists."""
        if budget < 0:
            return False
        pool = self.all_sets if allowed is None else allowed
        return self._search(pre_covered, pool, budget, first_only=True) is not None

    def lex_least_cover(
        self, size: int, *, pre_covered: int = 0, allowed: int | None = None
    ) -> list[int]:
        """Lexicographically least cover of exactly the given minimum size.

        ``size`` must be the optimum for the same restriction; the scan fixes
        one index at a time, probing completability of each prefix.
        """
        pool = self.all_sets if allowed is None else allowed
        chosen: list[int] = []
        covered = pre_covered
        scan = pool
        while len(chosen) < size:
            progressed = False
            while scan:
                low = scan & -scan
                v = low.bit_length() - 1
                scan ^= low
                new_covered = covered | self.masks[v]
                need = size - len(chosen) - 1
                if need == 0:
                    ok = new_covered == self.universe
                else:
                    ok = self.exists_cover(need, pre_covered=new_covered, allowed=scan)
                if ok:
                    chosen.append(v)
                    covered = new_covered
                    progressed = True
                    break
            if not progressed:
                raise ValueError("no cover of the requested size exists")
        return chosen
