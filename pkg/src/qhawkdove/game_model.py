"""Classical Hawk-Dove game: payoff parameters and the mixed ESS baseline."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import DomainError, HierarchyError


@dataclass(frozen=True)
class PayoffMatrix:
    """Hawk-Dove payoffs from resource value ``v``, injury cost ``i`` and display cost ``d``.

    The symmetric bimatrix in reduced form is::

              H         D
        H  (-a, -a)   (b, 0)
        D  (0, b)     (c, c)

    with ``a = (i - v)/2``, ``b = v``, ``c = v/2 - d``.
    """

    v: float
    i: float
    d: float
    a: float = field(init=False)
    b: float = field(init=False)
    c: float = field(init=False)

    def __post_init__(self):
        v, i, d = float(self.v), float(self.i), float(self.d)
        if not 0 < d:
            raise HierarchyError(f"0 < 2d violated (d={d!r})")
        if not 2 * d < v:
            raise HierarchyError(f"2d < v violated (2d={2 * d!r}, v={v!r})")
        if not v < i:
            raise HierarchyError(f"v < i violated (v={v!r}, i={i!r})")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", (i - v) / 2)
        object.__setattr__(self, "b", v)
        object.__setattr__(self, "c", v / 2 - d)

    def as_dict(self) -> dict:
        return {"v": self.v, "i": self.i, "d": self.d, "a": self.a, "b": self.b, "c": self.c}


def make_payoff_matrix(v: float, i: float, d: float) -> PayoffMatrix:
    return PayoffMatrix(v, i, d)


FIG2_PARAMETERS = dict(v=50.0, i=100.0, d=10.0)


@dataclass(frozen=True)
class ClassicalEquilibrium:
    p_star: float
    average_payoff: float

    def as_dict(self) -> dict:
        return {"p_star": self.p_star, "average_payoff": self.average_payoff}


def _check_probability(name: str, p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"{name}={p!r} is not a probability in [0, 1]")
    return p


def classical_payoff(p: float, q: float, m: PayoffMatrix) -> tuple[float, float]:
    """Expected (row, column) payoffs when row plays hawk w.p. ``p`` and column w.p. ``q``."""
    p = _check_probability("p", p)
    q = _check_probability("q", q)

    def row(x, y):
        return -m.a * x * y + m.b * x * (1 - y) + m.c * (1 - x) * (1 - y)

    return row(p, q), row(q, p)


def classical_mixed_ess(m: PayoffMatrix) -> ClassicalEquilibrium:
    """Mixed ESS: hawk with probability (v + 2d)/(i + 2d)."""
    p_star = (m.v + 2 * m.d) / (m.i + 2 * m.d)
    average = (m.i - m.v) / (m.i + 2 * m.d) * (m.v / 2 - m.d)
    return ClassicalEquilibrium(p_star=p_star, average_payoff=average)
