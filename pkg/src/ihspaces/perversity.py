"""Perversities indexed by codimension, starting at codimension 2."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

CLASSICAL = "classical"
EXTENDED = "extended"


class DomainError(ValueError):
    """A perversity was asked for a value it does not define."""


class Classification(NamedTuple):
    kind: str
    reason: str | None = None

    @property
    def classical(self) -> bool:
        return self.kind == CLASSICAL


def validate(values: Sequence[int]) -> Classification:
    """Classify a sequence p(2), p(3), ... as classical or extended-only."""
    values = list(values)
    if not values:
        raise ValueError("empty perversity sequence")
    if values[0] != 0:
        return Classification(EXTENDED, "p(2) ≠ 0")
    for i in range(1, len(values)):
        step = values[i] - values[i - 1]
        if step not in (0, 1):
            return Classification(EXTENDED, f"growth step {step} at k={i + 2}")
    return Classification(CLASSICAL)


@dataclass(frozen=True)
class Perversity:
    """Perversity values ``p(2), p(3), ...``.

    Beyond the stored range a value comes from ``rule`` (the closed form of a
    named family) or, when ``extrapolate`` is set, by repeating the final
    difference.  Otherwise asking for it raises :class:`DomainError`.
    """

    values: tuple[int, ...]
    kind: str = CLASSICAL
    name: str | None = None
    rule: Callable[[int], int] | None = None
    extrapolate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.kind not in (CLASSICAL, EXTENDED):
            raise ValueError(f"unknown perversity kind {self.kind!r}")
        if not self.values and self.rule is None:
            raise ValueError("perversity needs values or a rule")
        if self.kind == CLASSICAL and self.values:
            verdict = validate(self.values)
            if not verdict.classical:
                raise ValueError(f"not a classical perversity: {verdict.reason}")

    def __call__(self, codim: int) -> int:
        if codim < 2:
            raise DomainError(f"perversities start at codimension 2, got {codim}")
        idx = codim - 2
        if idx < len(self.values):
            return self.values[idx]
        if self.rule is not None:
            return self.rule(codim)
        if self.extrapolate:
            last = self.values[-1]
            step = self.values[-1] - self.values[-2] if len(self.values) > 1 else 0
            return last + step * (idx - len(self.values) + 1)
        raise DomainError(f"perversity {self.label} has no value at codimension {codim}")

    def sequence(self, upto: int) -> tuple[int, ...]:
        return tuple(self(k) for k in range(2, upto + 1))

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        tail = ",..." if self.extrapolate else ""
        return ",".join(map(str, self.values)) + tail

    def __str__(self) -> str:
        return self.label


def _family(name: str, rule: Callable[[int], int], n: int) -> Perversity:
    if n < 2:
        raise DomainError(f"maximal codimension must be at least 2, got {n}")
    return Perversity(tuple(rule(k) for k in range(2, n + 1)), CLASSICAL, name, rule)


def _zero(k: int) -> int:
    return 0


def _lower_middle(k: int) -> int:
    return (k - 2) // 2


def _upper_middle(k: int) -> int:
    return (k - 1) // 2


def _top(k: int) -> int:
    return k - 2


def zero(n: int = 2) -> Perversity:
    return _family("zero", _zero, n)


def lower_middle(n: int = 2) -> Perversity:
    """m(k) = floor((k - 2) / 2)."""
    return _family("m", _lower_middle, n)


def upper_middle(n: int = 2) -> Perversity:
    """n(k) = ceil((k - 2) / 2)."""
    return _family("um", _upper_middle, n)


def top(n: int = 2) -> Perversity:
    return _family("top", _top, n)


NAMED = {"zero": zero, "m": lower_middle, "um": upper_middle, "top": top}


def extended(values: Sequence[int], extrapolate: bool = False) -> Perversity:
    return Perversity(tuple(values), EXTENDED, extrapolate=extrapolate)


def with_value_at(codim: int, value: int) -> Perversity:
    """Extended perversity that is zero below ``codim`` and ``value`` there."""
    if codim < 2:
        raise DomainError("codimension must be at least 2")
    return Perversity(tuple([0] * (codim - 2) + [value]), EXTENDED, name=f"p({codim})={value}")


def from_values(values: Sequence[int], allow_extended: bool = False,
                extrapolate: bool = False) -> Perversity:
    verdict = validate(values)
    if verdict.classical:
        return Perversity(tuple(values), CLASSICAL, extrapolate=extrapolate)
    if not allow_extended:
        raise DomainError(f"not a classical perversity ({verdict.reason}); pass extended to allow it")
    return extended(values, extrapolate=extrapolate)


def parse_perversity(token: str, allow_extended: bool = False) -> Perversity:
    """Parse ``zero|m|um|top`` or a comma list ``p(2),p(3),...``.

    A trailing ``...`` continues the list by its final difference.
    """
    token = token.strip()
    if token in NAMED:
        return NAMED[token]()
    parts = [t.strip() for t in token.split(",") if t.strip()]
    extrapolate = bool(parts) and parts[-1] == "..."
    if extrapolate:
        parts = parts[:-1]
    if not parts:
        raise ValueError(f"empty perversity {token!r}")
    try:
        values = [int(t) for t in parts]
    except ValueError:
        raise ValueError(f"cannot parse perversity {token!r}") from None
    return from_values(values, allow_extended=allow_extended, extrapolate=extrapolate)


def cutoff_degree(link_dim: int, p: Perversity) -> int:
    """k = l - p(l + 1)."""
    return link_dim - p(link_dim + 1)


def sweep(link_dim: int) -> list[Perversity]:
    """Standard families plus extended p(l+1) ranging over -2..l+1."""
    out = [f() for f in NAMED.values()]
    out += [with_value_at(link_dim + 1, v) for v in range(-2, link_dim + 2)]
    return out
