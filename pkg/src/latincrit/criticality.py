"""Critical set verification, greedy minimization, and exhaustive
largest-critical-set search at small orders.

A partial square is critical when it is uniquely completable and no
proper subset is.  Removing entries can only enlarge the completion set,
so minimality needs only single-entry removals, and unique
completability propagates from subsets to supersets.  Both facts drive
the subset-scan pruning below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .core import LatinSquare, PartialLatinSquare, Triple, remove_entry
from .enumeration import iter_reduced
from .solver import NotUniqueError, _count_flat, count_completions

# Known largest-critical-set values for small orders, and published lower
# bounds where the exact value is open.  lcs(8) = 4^3 - 3^3.
KNOWN_LCS = {1: 0, 2: 1, 3: 3, 4: 7, 5: 11, 6: 18}
KNOWN_LCS_LOWER_BOUNDS = {7: 25, 8: 37, 9: 44, 10: 57}

# Exhaustive subset scans are 2^(n^2) per square; order 5 is opt-in and slow.
EXHAUSTIVE_MAX_ORDER = 4
EXHAUSTIVE_OPT_IN_ORDER = 5


@dataclass(frozen=True)
class RemovalCheck:
    """Outcome of deleting one entry from a uniquely completable set.
    still_unique means the entry is redundant (a minimality violation);
    otherwise second_completion witnesses the enlarged completion set."""

    triple: Triple
    still_unique: bool
    second_completion: LatinSquare | None


@dataclass(frozen=True)
class CriticalityReport:
    uniquely_completable: bool
    minimal: bool
    completion: LatinSquare | None
    second_completion: LatinSquare | None
    removal_checks: tuple[RemovalCheck, ...]

    @property
    def critical(self) -> bool:
        return self.uniquely_completable and self.minimal

    @property
    def violations(self) -> tuple[Triple, ...]:
        """Removable entries; empty exactly when the set is minimal."""
        return tuple(ch.triple for ch in self.removal_checks if ch.still_unique)


class LargestCritical(NamedTuple):
    size: int
    witness: PartialLatinSquare
    exact: bool


@dataclass(frozen=True)
class LcsRecord:
    order: int
    value: int
    witness_square: LatinSquare
    witness_set: PartialLatinSquare


def verify_critical(c: PartialLatinSquare) -> CriticalityReport:
    """Full criticality check: unique completability plus, per entry,
    whether its removal keeps the set uniquely completable."""
    report = count_completions(c, cap=2)
    if report.count != 1:
        second = report.witnesses[1] if len(report.witnesses) > 1 else None
        return CriticalityReport(
            uniquely_completable=False,
            minimal=False,
            completion=None,
            second_completion=second,
            removal_checks=(),
        )
    completion = report.witnesses[0]
    checks = []
    for t in c.triples():
        sub = count_completions(remove_entry(c, (t.row, t.col)), cap=2)
        if sub.count == 1:
            checks.append(RemovalCheck(t, True, None))
        else:
            # sub.count == 2: removal cannot empty the completion set
            other = next(w for w in sub.witnesses if w.grid != completion.grid)
            checks.append(RemovalCheck(t, False, other))
    return CriticalityReport(
        uniquely_completable=True,
        minimal=not any(ch.still_unique for ch in checks),
        completion=completion,
        second_completion=None,
        removal_checks=tuple(checks),
    )


def minimize_uc(
    p: PartialLatinSquare,
    removal_order: str = "row-major",
    seed: int = 0,
) -> PartialLatinSquare:
    """Greedily drop entries whose removal keeps the set uniquely
    completable, repeating until a full pass removes nothing.  The result
    is a critical set with the same unique completion as the input.

    removal_order "row-major" is the deterministic default; "random"
    shuffles each pass with the given seed for heuristic portfolios.
    """
    if removal_order not in ("row-major", "random"):
        raise ValueError(f"unknown removal order {removal_order!r}")
    n = p.order
    cells = [v for row in p.grid for v in row]
    count, _ = _count_flat(n, cells, 2)
    if count != 1:
        raise NotUniqueError(count)
    rng = random.Random(seed)
    removed = True
    while removed:
        removed = False
        filled = [idx for idx in range(n * n) if cells[idx]]
        if removal_order == "random":
            rng.shuffle(filled)
        for idx in filled:
            kept = cells[idx]
            cells[idx] = 0
            count, _ = _count_flat(n, cells, 2)
            if count == 1:
                removed = True
            else:
                cells[idx] = kept
    return PartialLatinSquare([cells[r * n : (r + 1) * n] for r in range(n)])


def _scan_subsets(l: LatinSquare) -> tuple[int, tuple[Triple, ...]]:
    """Exhaustive scan of all subsets of l's triples.  Returns the maximum
    critical size and the first maximum-size witness in triple order.

    Masks are visited in increasing numeric order, so every subset of a
    mask is visited first; a mask whose single-entry submask is already
    uniquely completable inherits that status without a solver call (and
    cannot be critical), which prunes the bulk of the work.
    """
    n = l.order
    triples = l.triples()
    m = len(triples)
    positions = [(t.row - 1) * n + (t.col - 1) for t in triples]
    uc = bytearray(1 << m)
    best_size = -1
    best_triples: tuple[Triple, ...] = ()
    for mask in range(1 << m):
        inherited = False
        mm = mask
        while mm:
            bit = mm & -mm
            mm ^= bit
            if uc[mask ^ bit]:
                inherited = True
                break
        if inherited:
            uc[mask] = 1
            continue
        cells = [0] * (n * n)
        mm = mask
        while mm:
            bit = mm & -mm
            mm ^= bit
            k = bit.bit_length() - 1
            cells[positions[k]] = triples[k].sym
        count, _ = _count_flat(n, cells, 2)
        if count != 1:
            continue
        uc[mask] = 1
        # solver ran means no single-entry submask was UC: mask is critical
        size = mask.bit_count()
        if size > best_size:
            best_size = size
            best_triples = tuple(
                triples[k] for k in range(m) if mask >> k & 1
            )
        elif size == best_size:
            cand = tuple(triples[k] for k in range(m) if mask >> k & 1)
            if cand < best_triples:
                best_triples = cand
    return best_size, best_triples


def largest_critical_in(
    l: LatinSquare,
    exhaustive: bool = True,
    allow_large: bool = False,
    seed: int = 0,
    starts: int = 32,
) -> LargestCritical:
    """Largest critical set inside one square.

    Exhaustive mode scans all subsets of the n^2 entries (order <= 4
    enforced, 5 opt-in via allow_large).  Heuristic mode takes the best
    of `starts` seeded random-order minimizations of the full square and
    returns a lower bound (exact=False).
    """
    if exhaustive:
        limit = EXHAUSTIVE_OPT_IN_ORDER if allow_large else EXHAUSTIVE_MAX_ORDER
        if l.order > limit:
            hint = "" if allow_large else " (allow_large=True permits order 5)"
            raise ValueError(f"order {l.order} too large for exhaustive search; limit {limit}{hint}")
        size, witness_triples = _scan_subsets(l)
        witness = PartialLatinSquare.from_triples(l.order, witness_triples)
        return LargestCritical(size=size, witness=witness, exact=True)
    best = None
    for k in range(starts):
        c = minimize_uc(l, removal_order="random", seed=seed + k)
        key = (-c.size, c.triples())
        if best is None or key < best[0]:
            best = (key, c)
    return LargestCritical(size=best[1].size, witness=best[1], exact=False)


def lcs_exhaustive(n: int, allow_large: bool = False) -> LcsRecord:
    """Largest critical set size over all squares of order n, exactly.

    Row, column, and symbol relabelings map critical sets to critical
    sets bijectively and carry any square to a reduced one, so the
    maximum over reduced squares equals the maximum over all squares.
    """
    limit = EXHAUSTIVE_OPT_IN_ORDER if allow_large else EXHAUSTIVE_MAX_ORDER
    if not 1 <= n <= limit:
        hint = "" if allow_large else " (allow_large=True permits order 5)"
        raise ValueError(f"exhaustive lcs supports orders 1..{limit}, got {n}{hint}")
    best_value = -1
    best_triples = None
    best_square = None
    for square in iter_reduced(n):
        size, witness_triples = _scan_subsets(square)
        if size > best_value or (size == best_value and witness_triples < best_triples):
            best_value = size
            best_triples = witness_triples
            best_square = square
    return LcsRecord(
        order=n,
        value=best_value,
        witness_square=best_square,
        witness_set=PartialLatinSquare.from_triples(n, best_triples),
    )
