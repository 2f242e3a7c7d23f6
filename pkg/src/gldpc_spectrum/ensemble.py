"""Check-hybrid ensemble model: VN repetition degree plus a CN-type mixture.

Each check-node type carries its local weight enumerator and, optionally,
a generator matrix from which the stopping-set enumerators are derived.
The ensemble-level ``spectrum`` mode selects which local enumerator is
active for every type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Sequence

from gldpc_spectrum.enumerators import Enumerator
from gldpc_spectrum.gf2codes import GF2Matrix, bd_ssef, enumerate_wef, map_ssef, rank

SPECTRUM_KINDS = ("weight", "map-ss", "bd-ss")

FRACTION_TOL = 1e-6


def local_enumerator(wef: Enumerator, kind: str, generator: GF2Matrix | None = None) -> Enumerator:
    """The local enumerator for ``kind`` given a CN's weight enumerator."""
    if kind == "weight":
        return wef
    if kind == "bd-ss":
        return bd_ssef(wef.length, wef.min_weight)
    if kind == "map-ss":
        if generator is None:
            raise ValueError("the MAP stopping-set enumerator needs a generator matrix")
        return map_ssef(generator)
    raise ValueError(f"unknown spectrum kind {kind!r}; expected one of {SPECTRUM_KINDS}")


@dataclass(frozen=True)
class CNType:
    """One check-node class.

    ``enum`` is the active local enumerator; it defaults to ``wef``. Exactly
    one of ``gamma`` (node fraction) or ``rho`` (edge fraction) is normally
    given; :func:`normalize_fractions` fills in the other.
    """

    label: str
    wef: Enumerator
    h: int | None = None
    gamma: float | None = None
    rho: float | None = None
    generator: GF2Matrix | None = field(default=None, repr=False)
    enum: Enumerator | None = None

    def __post_init__(self):
        if self.enum is None:
            object.__setattr__(self, "enum", self.wef)
        if self.enum.length != self.wef.length:
            raise ValueError(f"type {self.label}: active enumerator length {self.enum.length} != {self.wef.length}")
        if self.wef.min_weight < 2:
            raise ValueError(f"type {self.label}: minimum distance {self.wef.min_weight} < 2")
        if self.enum.min_weight < 2:
            raise ValueError(f"type {self.label}: active enumerator has a weight-{self.enum.min_weight} term")
        if self.generator is not None and self.generator.cols != self.wef.length:
            raise ValueError(f"type {self.label}: generator has {self.generator.cols} columns, expected {self.s}")
        for name in ("gamma", "rho"):
            v = getattr(self, name)
            if v is not None and not (0 < v <= 1 + FRACTION_TOL):
                raise ValueError(f"type {self.label}: {name} = {v} outside (0, 1]")

    @classmethod
    def from_generator(cls, label: str, generator: GF2Matrix, **kwargs) -> CNType:
        if generator.has_zero_column():
            raise ValueError(f"type {label}: generator matrix has an all-zero (idle) column")
        kwargs.setdefault("h", rank(generator))
        return cls(label, enumerate_wef(generator), generator=generator, **kwargs)

    @property
    def s(self) -> int:
        return self.wef.length

    @property
    def r(self) -> int:
        return self.enum.min_weight

    @property
    def u_bar(self) -> int:
        return self.enum.max_weight

    def with_spectrum(self, kind: str) -> CNType:
        return replace(self, enum=local_enumerator(self.wef, kind, self.generator))


@dataclass(frozen=True)
class Ensemble:
    q: int
    types: tuple[CNType, ...]
    spectrum: str = "weight"

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        if self.q < 2:
            raise ValueError(f"VN repetition length q must be >= 2, got {self.q}")
        if not self.types:
            raise ValueError("ensemble needs at least one CN type")
        labels = [t.label for t in self.types]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate CN type labels in {labels}")
        if self.spectrum not in SPECTRUM_KINDS:
            raise ValueError(f"unknown spectrum kind {self.spectrum!r}; expected one of {SPECTRUM_KINDS}")

    @classmethod
    def build(cls, q: int, types: Sequence[CNType], spectrum: str = "weight") -> Ensemble:
        """Normalize fractions and activate the requested local enumerators."""
        ens = normalize_fractions(cls(q, tuple(types)))
        return ens.with_spectrum(spectrum) if spectrum != "weight" else ens

    def with_spectrum(self, kind: str) -> Ensemble:
        return replace(self, types=tuple(t.with_spectrum(kind) for t in self.types), spectrum=kind)

    @property
    def is_normalized(self) -> bool:
        return all(t.gamma is not None and t.rho is not None for t in self.types)

    @cached_property
    def normalized(self) -> Ensemble:
        return self if self.is_normalized else normalize_fractions(self)

    @cached_property
    def int_rho(self) -> float:
        """``integral_0^1 rho(x) dx``, the number of CNs per edge."""
        return 1.0 / math.fsum(t.gamma * t.s for t in self.normalized.types)

    @cached_property
    def edge_weights(self) -> tuple[tuple[float, Enumerator], ...]:
        """Pairs ``(int_rho * gamma_t, active enumerator)``."""
        return tuple((self.int_rho * t.gamma, t.enum) for t in self.normalized.types)


def normalize_fractions(e: Ensemble) -> Ensemble:
    """Populate both node fractions ``gamma`` and edge fractions ``rho``.

    From node fractions: ``int_rho = 1 / sum gamma_t s_t`` and
    ``rho_t = gamma_t s_t int_rho``. From edge fractions:
    ``int_rho = sum rho_t / s_t`` and ``gamma_t = rho_t / (s_t int_rho)``.
    The given fractions are checked to sum to 1 within 1e-6 and rescaled.
    An ensemble that already carries both is returned unchanged.
    """
    has_gamma = [t.gamma is not None for t in e.types]
    has_rho = [t.rho is not None for t in e.types]
    if all(has_gamma) and all(has_rho):
        int_rho = 1.0 / math.fsum(t.gamma * t.s for t in e.types)
        consistent = abs(math.fsum(t.gamma for t in e.types) - 1.0) <= 1e-12 and all(
            abs(t.rho - t.gamma * t.s * int_rho) <= 1e-12 for t in e.types
        )
        if not consistent:
            raise ValueError("gamma and rho both given but not consistent with each other")
        return e
    if all(has_gamma) and not any(has_rho):
        src = "gamma"
    elif all(has_rho) and not any(has_gamma):
        src = "rho"
    else:
        raise ValueError("fractions must be given uniformly: all gamma or all rho")

    given = [getattr(t, src) for t in e.types]
    total = math.fsum(given)
    if abs(total - 1.0) > FRACTION_TOL:
        raise ValueError(f"{src} fractions sum to {total:.9g}, expected 1")
    given = [v / total for v in given]
    sizes = [t.s for t in e.types]

    if src == "gamma":
        gammas = given
        int_rho = 1.0 / math.fsum(g * s for g, s in zip(gammas, sizes))
        rhos = [g * s * int_rho for g, s in zip(gammas, sizes)]
    else:
        rhos = given
        int_rho = math.fsum(r / s for r, s in zip(rhos, sizes))
        gammas = [r / (s * int_rho) for r, s in zip(rhos, sizes)]

    types = tuple(replace(t, gamma=g, rho=r) for t, g, r in zip(e.types, gammas, rhos))
    return replace(e, types=types)


def max_weight_fraction(e: Ensemble) -> float:
    """Supremum ``M = int_rho * sum gamma_t u_bar_t`` of the normalized weight.

    Returns exactly 1.0 when every active enumerator reaches full length.
    """
    norm = normalize_fractions(e)
    if all(t.u_bar == t.s for t in norm.types):
        return 1.0
    return norm.int_rho * math.fsum(t.gamma * t.u_bar for t in norm.types)


def design_rate(e: Ensemble) -> float:
    """Design rate ``1 - q int_rho sum gamma_t (s_t - h_t)``.

    Counts every local parity constraint as independent, so it is a lower
    bound on the rate of any particular code drawn from the ensemble.
    """
    missing = [t.label for t in e.types if t.h is None]
    if missing:
        raise ValueError(f"CN dimension h missing for types {missing}")
    for t in e.types:
        if not 1 <= t.h < t.s:
            raise ValueError(f"type {t.label}: need 1 <= h < s, got h={t.h}, s={t.s}")
    norm = normalize_fractions(e)
    return 1.0 - e.q * norm.int_rho * math.fsum(t.gamma * (t.s - t.h) for t in norm.types)
