"""Right-angled Coxeter groups: normal forms, the sign map, balls.

Words are tuples of generator indices ``1..m``. The normal form of an element
is its shortlex-least word: a reduced word, lexicographically least among all
words obtained from it by swapping adjacent commuting letters.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import limits
from .errors import CapacityError, InputError
from .simplicial import SimplicialComplex

Word = tuple[int, ...]


@dataclass(frozen=True)
class RacgPresentation:
    m: int
    commuting: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        for pair in self.commuting:
            if len(pair) != 2:
                raise InputError(f"commuting pair {sorted(pair)} must have two distinct generators")
            if not all(1 <= i <= self.m for i in pair):
                raise InputError(f"commuting pair {sorted(pair)} outside 1..{self.m}")
        nbrs: list[frozenset[int]] = [frozenset()] * (self.m + 1)
        for i in range(1, self.m + 1):
            nbrs[i] = frozenset(j for p in self.commuting if i in p for j in p if j != i)
        object.__setattr__(self, "_nbrs", tuple(nbrs))

    def commute(self, i: int, j: int) -> bool:
        return j in self._nbrs[i]

    def check_word(self, w: Iterable[int]) -> Word:
        w = tuple(w)
        for x in w:
            if not 1 <= x <= self.m:
                raise InputError(f"generator {x} outside 1..{self.m}")
        return w


@dataclass(frozen=True, order=True)
class NormalForm:
    length: int
    word: Word

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    def __str__(self) -> str:
        return format_word(self.word)


def format_word(w: Sequence[int]) -> str:
    return ",".join(map(str, w)) if w else "e"


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"malformed word {text!r}; expected e.g. 1,2,1 or e") from None


def racg_from_complex(K: SimplicialComplex) -> RacgPresentation:
    return RacgPresentation(K.vertex_count, frozenset(frozenset(e) for e in K.edges))


def _reduce(P: RacgPresentation, w: Word) -> list[int]:
    """A reduced word for ``w``.

    Appending a letter ``s``: if an ``s`` sits at the end of the current word
    behind letters that all commute with ``s``, the two cancel; otherwise ``s``
    is appended and the word stays reduced.
    """
    out: list[int] = []
    nbrs = P._nbrs
    for s in w:
        k = len(out) - 1
        while k >= 0 and out[k] != s and out[k] in nbrs[s]:
            k -= 1
        if k >= 0 and out[k] == s:
            del out[k]
        else:
            out.append(s)
    return out


def _lex_least(P: RacgPresentation, w: list[int]) -> Word:
    """Lexicographically least rearrangement of ``w`` by commuting swaps."""
    nbrs = P._nbrs
    rest = list(w)
    out: list[int] = []
    while rest:
        best = None
        for k, s in enumerate(rest):
            # s can move to the front iff it commutes with everything before it
            if (best is None or s < rest[best]) and all(t in nbrs[s] for t in rest[:k]):
                best = k
        out.append(rest.pop(best))
    return tuple(out)


def normal_form(P: RacgPresentation, w: Iterable[int]) -> NormalForm:
    word = _lex_least(P, _reduce(P, P.check_word(w)))
    return NormalForm(len(word), word)


def as_word(x: NormalForm | Sequence[int]) -> Word:
    return x.word if isinstance(x, NormalForm) else tuple(x)


def multiply(P: RacgPresentation, a: NormalForm | Word, b: NormalForm | Word) -> NormalForm:
    return normal_form(P, as_word(a) + as_word(b))


def invert(P: RacgPresentation, a: NormalForm | Word) -> NormalForm:
    return normal_form(P, as_word(a)[::-1])


def lambda_map(w: NormalForm | Sequence[int], m: int) -> tuple[int, ...]:
    """Parity of occurrences of each generator, as a 0/1 vector of length ``m``."""
    out = [0] * m
    for s in as_word(w):
        out[s - 1] ^= 1
    return tuple(out)


def parabolic_membership(P: RacgPresentation, w: NormalForm, T: Iterable[int]) -> bool:
    """Whether ``w`` lies in the subgroup generated by ``{s_i : i in T}``."""
    if not isinstance(w, NormalForm):
        w = normal_form(P, w)
    return w.support <= frozenset(T)


def _check_radius(r: int) -> None:
    cap = limits().max_radius
    if r < 0:
        raise InputError("radius must be nonnegative")
    if r > cap:
        raise CapacityError(f"radius {r} exceeds the cap of {cap}")


def ball(P: RacgPresentation, r: int) -> list[list[NormalForm]]:
    """Elements of length ``<= r`` grouped by length, each group sorted lexicographically."""
    _check_radius(r)
    cap = limits().max_elements
    spheres = [[NormalForm(0, ())]]
    total = 1
    for length in range(1, r + 1):
        found: dict[Word, NormalForm] = {}
        for x in spheres[-1]:
            for s in range(1, P.m + 1):
                y = normal_form(P, x.word + (s,))
                if y.length == length:
                    found.setdefault(y.word, y)
        total += len(found)
        if total > cap:
            raise CapacityError(f"ball exceeds {cap} elements")
        spheres.append(sorted(found.values()))
    return spheres


def sphere_sizes(P: RacgPresentation, r: int) -> list[int]:
    return [len(s) for s in ball(P, r)]


def ball_elements(P: RacgPresentation, r: int) -> list[NormalForm]:
    return [x for sphere in ball(P, r) for x in sphere]


# -- independent oracle ----------------------------------------------------

class _Exhausted(Exception):
    pass


def _swaps(P: RacgPresentation, w: Word) -> Iterable[Word]:
    for k in range(len(w) - 1):
        if w[k] != w[k + 1] and P.commute(w[k], w[k + 1]):
            yield w[:k] + (w[k + 1], w[k]) + w[k + 2:]


def _find_cancellation(P: RacgPresentation, w: Word, budget: int) -> tuple[Word | None, int]:
    """Search the commutation class of ``w`` for a word with an adjacent ``ss``.

    Returns that word with the pair deleted (or None if the class has none)
    and the number of words visited.
    """
    seen = {w}
    todo = deque([w])
    while todo:
        u = todo.popleft()
        for k in range(len(u) - 1):
            if u[k] == u[k + 1]:
                return u[:k] + u[k + 2:], len(seen)
        for v in _swaps(P, u):
            if v not in seen:
                if len(seen) >= budget:
                    raise _Exhausted
                seen.add(v)
                todo.append(v)
    return None, len(seen)


def brute_equal(P: RacgPresentation, w1: Sequence[int], w2: Sequence[int],
                budget: int = 2_000_000) -> bool | None:
    """Decide ``w1 == w2`` by Tits moves on ``w1 w2^-1``, without normal forms.

    Any non-reduced word can be brought to one with an adjacent ``ss`` by
    commuting swaps alone, so deleting the first such pair found and
    repeating reaches a reduced word; the element is trivial iff that word is
    empty. Returns None if more than ``budget`` words would be visited.
    """
    w = P.check_word(w1) + P.check_word(w2)[::-1]
    if len(w) > 16:
        raise InputError("brute-force comparison limited to combined length 16")
    try:
        while w:
            nxt, used = _find_cancellation(P, w, budget)
            budget -= used
            if nxt is None:
                return False
            w = nxt
    except _Exhausted:
        return None
    return True


def brute_subgroup(P: RacgPresentation, T: Iterable[int], r: int) -> set[Word]:
    """Normal forms of all products of generators from ``T`` of length ``<= r``."""
    T = sorted(set(T))
    out = set()
    for n in range(r + 1):
        for w in itertools.product(T, repeat=n):
            out.add(normal_form(P, w).word)
    return out
