"""Enumerator polynomials with exact integer coefficients.

An :class:`Enumerator` holds ``A(z) = sum_u A_u z**u`` for a local code of a
given length. It is used for weight enumerators as well as for local
stopping-set enumerators. Coefficients stay exact Python ints; floats only
appear when the polynomial is evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping


@dataclass(frozen=True)
class Enumerator:
    """Sparse polynomial ``1 + sum_{u>=1} A_u z**u`` over a length-``length`` code.

    ``coeffs`` may be given as a mapping ``{u: A_u}``; it is stored as a sorted
    tuple of ``(u, A_u)`` pairs with zero coefficients dropped.
    """

    length: int
    coeffs: tuple[tuple[int, int], ...]

    def __init__(self, length: int, coeffs: Mapping[int, int] | tuple[tuple[int, int], ...]):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for u, a in pairs:
            if isinstance(u, bool) or isinstance(a, bool) or not isinstance(u, int) or not isinstance(a, int):
                raise TypeError(f"weights and coefficients must be int, got {u!r}:{a!r}")
            if a < 0:
                raise ValueError(f"negative coefficient A_{u} = {a}")
            if a:
                clean[u] = clean.get(u, 0) + a
        if length < 1:
            raise ValueError(f"length must be >= 1, got {length}")
        bad = [u for u in clean if u < 0 or u > length]
        if bad:
            raise ValueError(f"weights {sorted(bad)} outside 0..{length}")
        if clean.get(0) != 1:
            raise ValueError(f"constant term must be 1, got {clean.get(0, 0)}")
        if len(clean) < 2:
            raise ValueError("enumerator needs at least one positive-weight term")
        object.__setattr__(self, "length", int(length))
        object.__setattr__(self, "coeffs", tuple(sorted(clean.items())))

    # -- descriptors -------------------------------------------------------

    def __getitem__(self, u: int) -> int:
        return self.as_dict().get(u, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.coeffs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.coeffs)

    @property
    def min_weight(self) -> int:
        """Smallest positive weight with a nonzero coefficient (``r``)."""
        return self.coeffs[1][0]

    @property
    def max_weight(self) -> int:
        """Largest weight with a nonzero coefficient (``u_bar``)."""
        return self.coeffs[-1][0]

    def total(self) -> int:
        """Sum of coefficients, i.e. ``A(1)`` as an exact integer."""
        return sum(a for _, a in self.coeffs)

    def is_symmetric(self) -> bool:
        """True iff ``A_{u_bar - u} == A_u`` for every ``u`` in the support."""
        d = self.as_dict()
        top = self.max_weight
        return all(d.get(top - u) == a for u, a in self.coeffs)

    # -- evaluation --------------------------------------------------------

    def _scaled_terms(self, z: float) -> tuple[list[float], float]:
        """Terms ``A_u z**(u - shift)`` with ``shift = u_bar`` when ``z > 1``."""
        if z > 1.0:
            top = self.max_weight
            return [a * z ** (u - top) for u, a in self.coeffs], float(top)
        return [a * z**u for u, a in self.coeffs], 0.0

    def evaluate(self, z: float) -> float:
        if z < 0:
            raise ValueError(f"z must be nonnegative, got {z}")
        if z <= 1.0:
            return math.fsum(a * z**u for u, a in self.coeffs)
        try:
            return math.exp(self.log_evaluate(z))
        except OverflowError:
            raise OverflowError(f"A({z:g}) exceeds float range; use log_evaluate") from None

    __call__ = evaluate

    def log_evaluate(self, z: float) -> float:
        """Natural log of ``A(z)``, factoring out ``z**u_bar`` for ``z > 1``."""
        if z < 0:
            raise ValueError(f"z must be nonnegative, got {z}")
        terms, shift = self._scaled_terms(z)
        log_sum = math.log(math.fsum(terms))
        if shift:
            return shift * math.log(z) + log_sum
        return log_sum

    def weighted_ratio(self, z: float) -> float:
        """``z A'(z) / A(z)``, the mean weight under the tilt ``A_u z**u``."""
        if z < 0:
            raise ValueError(f"z must be nonnegative, got {z}")
        if z == 0:
            return 0.0
        terms, _ = self._scaled_terms(z)
        return math.fsum(u * w for (u, _), w in zip(self.coeffs, terms)) / math.fsum(terms)

    def weighted_ratio_prime(self, z: float) -> float:
        """Derivative of :meth:`weighted_ratio` with respect to ``z``.

        Equals the tilted weight variance divided by ``z``, which is the
        quotient ``(A (A' + z A'') - z A'**2) / A**2`` rewritten without
        cancellation.
        """
        if z < 0:
            raise ValueError(f"z must be nonnegative, got {z}")
        if z == 0:
            return float(self[1])
        terms, _ = self._scaled_terms(z)
        norm = math.fsum(terms)
        mean = math.fsum(u * w for (u, _), w in zip(self.coeffs, terms)) / norm
        var = math.fsum((u - mean) ** 2 * w for (u, _), w in zip(self.coeffs, terms)) / norm
        return var / z

    # -- text form ---------------------------------------------------------

    def to_literal(self) -> str:
        return ",".join(f"{u}:{a}" for u, a in self.coeffs)

    @classmethod
    def parse(cls, text: str, length: int) -> Enumerator:
        """Parse ``"0:1,3:7,4:7,7:1"`` into an enumerator of the given length."""
        coeffs: dict[int, int] = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                u_text, a_text = item.split(":")
                u, a = int(u_text), int(a_text)
            except ValueError:
                raise ValueError(f"bad enumerator term {item!r}, expected 'u:A_u'") from None
            if u in coeffs:
                raise ValueError(f"weight {u} listed twice")
            coeffs[u] = a
        return cls(length, coeffs)

    def __str__(self) -> str:
        return f"Enumerator(length={self.length}, {self.to_literal()})"


def spc(s: int) -> Enumerator:
    """Weight enumerator of the length-``s`` single parity-check code."""
    if s < 3:
        raise ValueError(f"SPC length must be >= 3, got {s}")
    return Enumerator(s, {u: math.comb(s, u) for u in range(0, s + 1, 2)})


def hamming74() -> Enumerator:
    """Weight enumerator ``1 + 7z^3 + 7z^4 + z^7`` of the (7,4) Hamming code."""
    return Enumerator(7, {0: 1, 3: 7, 4: 7, 7: 1})
