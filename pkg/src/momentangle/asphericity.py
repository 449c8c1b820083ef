"""Davis' asphericity criterion for polyhedral products.

The homotopical facts about each pair are stored constants; only flagness
of ``K`` is computed. Condition labels:

* ``"i"``   ``A`` and every path component of ``B`` are aspherical
* ``"ii"``  ``pi_1(B) -> pi_1(A)`` is injective
* ``"iii"`` ``K`` is flag
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InputError
from .simplicial import FlagWitness, SimplicialComplex, flag_witness, is_conelike


@dataclass(frozen=True)
class PairDescriptor:
    name: str
    a_aspherical: bool
    b_components_aspherical: bool
    pi1_injective: bool
    provenance: str = ""

    @property
    def satisfies_pair_conditions(self) -> bool:
        return self.a_aspherical and self.b_components_aspherical and self.pi1_injective


class Outcome(str, Enum):
    ASPHERICAL = "Aspherical"
    NOT_ASPHERICAL = "NotAspherical"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class AsphericityVerdict:
    outcome: Outcome
    failed_conditions: frozenset[str] = frozenset()
    witness: FlagWitness | None = None
    notes: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.outcome is Outcome.ASPHERICAL

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "failed": sorted(self.failed_conditions, key=["i", "ii", "iii"].index),
            "witness": list(self.witness.missing_face) if self.witness else None,
            "notes": list(self.notes),
        }


_BUILTIN = {
    "real": PairDescriptor(
        "real", True, True, True,
        "D^1 is contractible; S^0 is discrete, so its components are aspherical "
        "with trivial fundamental group"),
    "complex": PairDescriptor(
        "complex", True, True, False,
        "D^2 and S^1 are aspherical, but pi_1(S^1) = Z maps to pi_1(D^2) = 0"),
    "quaternionic": PairDescriptor(
        "quaternionic", True, False, True,
        "S^3 is not aspherical since pi_3(S^3) = Z; injectivity is irrelevant "
        "(pi_1(S^3) = 0)"),
}


def builtin_pair(name: str) -> PairDescriptor:
    try:
        return _BUILTIN[name]
    except KeyError:
        raise InputError(f"unknown pair {name!r}; expected real, complex or quaternionic") from None


def davis_criterion(K: SimplicialComplex, pair: PairDescriptor) -> AsphericityVerdict:
    failed = set()
    if not (pair.a_aspherical and pair.b_components_aspherical):
        failed.add("i")
    if not pair.pi1_injective:
        failed.add("ii")
    witness = flag_witness(K)
    if witness is not None:
        failed.add("iii")
    if not failed:
        return AsphericityVerdict(Outcome.ASPHERICAL)
    notes: list[str] = []
    if not pair.satisfies_pair_conditions:
        if all(is_conelike(K, v) for v in K.vertices):
            notes.append("no non-conelike vertex; the negative result for this pair "
                         "requires at least one")
            return AsphericityVerdict(Outcome.NOT_APPLICABLE, frozenset(failed), witness, tuple(notes))
        notes.append(pair.provenance)
    return AsphericityVerdict(Outcome.NOT_ASPHERICAL, frozenset(failed), witness, tuple(notes))


def rk_aspherical(K: SimplicialComplex) -> AsphericityVerdict:
    """Verdict for the real moment-angle complex: aspherical iff ``K`` is flag."""
    return davis_criterion(K, builtin_pair("real"))
