"""Characters of the idempotent semilattice and the action of S on them.

A character is stored as the bitmask of its filter, using the semigroup's own
element indices as bit positions (only idempotent bits are ever set).  In a
finite semilattice every filter is principal, so each character also records
its minimum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotBelowE, NoZero, NotIdempotent, OutOfDomain
from .semigroup import InverseSemigroup

EXHAUSTIVE_COVER_LIMIT = 15


@dataclass(frozen=True)
class Character:
    minimum: int
    mask: int
    is_proper: bool

    def __call__(self, e: int) -> int:
        return (self.mask >> e) & 1

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if (self.mask >> i) & 1)

    def label(self, S: InverseSemigroup) -> str:
        return f"chi[{S.labels[self.minimum]}]"


def _mask(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def up_set(S: InverseSemigroup, e: int) -> int:
    return _mask(f for f in S.idempotents if S.mul[e][f] == e)


def down_set(S: InverseSemigroup, e: int) -> tuple[int, ...]:
    return S.idempotents_below(e)


def character_from_mask(S: InverseSemigroup, mask: int) -> Character:
    """Wrap a filter bitmask; fails if the mask is not a principal filter."""
    members = [e for e in S.idempotents if (mask >> e) & 1]
    if not members:
        raise ValueError("empty filter")
    m = members[0]
    for e in members[1:]:
        m = S.mul[m][e]
    if up_set(S, m) != mask:
        raise ValueError("mask is not a filter")
    return Character(m, mask, S.zero is None or not (mask >> S.zero) & 1)


def principal_character(S: InverseSemigroup, e: int) -> Character:
    if not S.is_idempotent(e):
        raise NotIdempotent(f"{e} is not idempotent", witness=e)
    return Character(e, up_set(S, e), e != S.zero)


def all_characters(S: InverseSemigroup) -> list[Character]:
    """Every character, one per idempotent, ordered by minimum."""
    out = []
    for e in S.idempotents:
        chi = principal_character(S, e)
        ups = [f for f in S.idempotents if chi(f)]
        # the up-set of e is meet closed and has e as its least element
        assert all(chi(S.mul[a][b]) for a in ups for b in ups)
        out.append(chi)
    return out


def proper_characters(S: InverseSemigroup) -> list[Character]:
    if S.zero is None:
        raise NoZero("semigroup has no zero")
    return [c for c in all_characters(S) if c.is_proper]


def ultrafilter_characters(S: InverseSemigroup) -> list[Character]:
    """Up-sets of the atoms of E(S) minus zero."""
    if S.zero is None:
        raise NoZero("semigroup has no zero")
    z = S.zero
    nonzero = [e for e in S.idempotents if e != z]
    atoms = [e for e in nonzero if not any(f != e and S.mul[f][e] == f for f in nonzero)]
    return [principal_character(S, e) for e in atoms]


def is_cover(S: InverseSemigroup, e: int, F) -> bool:
    """Whether every nonzero idempotent z <= e meets some f in F nontrivially."""
    F = list(F)
    below = set(down_set(S, e))
    for f in F:
        if f not in below:
            raise NotBelowE(f"{f} is not an idempotent below {e}", witness=(e, f))
    z0 = S.zero
    return all(
        any(S.mul[z][f] != z0 for f in F) for z in below if z != z0
    )


def is_tight_character(S: InverseSemigroup, chi: Character) -> bool:
    """Whether ``chi`` meets every cover of each member.

    Any cover avoiding the filter lies inside ``e↓ \\ F``, and covers are
    upward closed under inclusion, so it is enough to test that one set.
    """
    for e in S.idempotents:
        if chi(e):
            outside = [f for f in down_set(S, e) if not chi(f)]
            if is_cover(S, e, outside):
                return False
    return True


def covers_exhaustive(S: InverseSemigroup, e: int) -> list[tuple[int, ...]]:
    """All covers of ``e`` by subset enumeration (small down-sets only)."""
    below = down_set(S, e)
    if len(below) > EXHAUSTIVE_COVER_LIMIT:
        raise ValueError(f"down-set of {e} too large for exhaustive enumeration")
    out = []
    for k in range(len(below) + 1):
        for F in itertools.combinations(below, k):
            if is_cover(S, e, F):
                out.append(F)
    return out


def is_tight_character_exhaustive(S: InverseSemigroup, chi: Character) -> bool:
    return all(
        any(chi(f) for f in F)
        for e in S.idempotents
        if chi(e)
        for F in covers_exhaustive(S, e)
    )


def tight_characters(S: InverseSemigroup) -> list[Character]:
    if S.zero is None:
        raise NoZero("semigroup has no zero")
    return [c for c in all_characters(S) if c.is_proper and is_tight_character(S, c)]


def in_domain(S: InverseSemigroup, s: int, chi: Character) -> bool:
    return bool(chi(S.dom(s)))


def act_character(S: InverseSemigroup, s: int, chi: Character) -> Character:
    """The character ``e -> chi(s* e s)``, defined when ``chi(s*s) = 1``."""
    if not in_domain(S, s, chi):
        raise OutOfDomain(f"character {chi.minimum} not in the domain of {s}", witness=(s, chi.minimum))
    st = S.inv[s]
    mask = _mask(e for e in S.idempotents if chi(S.mul[S.mul[st][e]][s]))
    return character_from_mask(S, mask)


def domain(S: InverseSemigroup, e: int, X) -> tuple[int, ...]:
    """Positions in ``X`` of the characters with ``chi(e) = 1``."""
    return tuple(i for i, chi in enumerate(X) if chi(e))


def fixed_and_interior(S: InverseSemigroup, s: int, X):
    """``(Fix(s), X_s)`` as position tuples into ``X``.

    In a discrete space the interior of the fixed-point set is the set itself.
    """
    X = list(X)
    fixed = tuple(
        i for i, chi in enumerate(X) if in_domain(S, s, chi) and act_character(S, s, chi) == chi
    )
    below = [e for e in S.idempotents if S.leq(e, s)]
    interior = tuple(i for i, chi in enumerate(X) if any(chi(e) for e in below))
    return fixed, interior
