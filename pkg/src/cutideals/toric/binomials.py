"""Binomials, Groebner bases of binomial ideals, and their text serialization."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..errors import BudgetExceeded
from . import kernel
from .orders import MonomialOrder

Monomial = tuple  # dense exponent vector


def degree(mono) -> int:
    return sum(mono)


def is_squarefree(mono) -> bool:
    return all(x <= 1 for x in mono)


@dataclass(frozen=True)
class Binomial:
    """The pure difference ``q^plus - q^minus``."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(self.plus))
        object.__setattr__(self, "minus", tuple(self.minus))
        if self.plus == self.minus:
            raise ValueError("binomial with equal terms is zero")
        if len(self.plus) != len(self.minus):
            raise ValueError("terms live in different rings")
        if any(x < 0 for x in self.plus + self.minus):
            raise ValueError("negative exponent")

    @classmethod
    def from_vector(cls, v) -> "Binomial":
        """``q^{v+} - q^{v-}`` for an integer vector ``v``."""
        return cls(tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v))

    @property
    def degree(self) -> int:
        return max(degree(self.plus), degree(self.minus))

    @property
    def homogeneous(self) -> bool:
        return degree(self.plus) == degree(self.minus)

    @property
    def nvars(self) -> int:
        return len(self.plus)

    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def oriented(self, order: MonomialOrder) -> "Binomial":
        """Same binomial up to sign, with the leading term in ``plus``."""
        if order.greater(self.plus, self.minus):
            return self
        return Binomial(self.minus, self.plus)

    def check_toric(self, matrix) -> bool:
        return matrix.image(self.plus) == matrix.image(self.minus)


@dataclass(frozen=True)
class Budget:
    max_degree: int = 6
    max_pairs: int = 10**6
    time_limit: float = 0.0  # seconds; 0 disables

    def deadline(self) -> float:
        return time.monotonic() + self.time_limit if self.time_limit else 0.0


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis; each element's ``plus`` is its leading term."""

    elements: tuple[Binomial, ...]
    order: MonomialOrder
    reduced: bool = True
    stats: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def nvars(self) -> int:
        return self.order.nvars

    @property
    def leads(self) -> list[Monomial]:
        return [b.plus for b in self.elements]

    @property
    def max_degree(self) -> int:
        return max((b.degree for b in self.elements), default=0)

    def __len__(self):
        return len(self.elements)

    def normal_form(self, mono) -> Monomial:
        return normal_form(mono, self)

    def reduces_to_zero(self, b: Binomial) -> bool:
        return self.normal_form(b.plus) == self.normal_form(b.minus)

    def contains(self, other: "GroebnerBasis") -> bool:
        return all(self.reduces_to_zero(b) for b in other.elements)


def _sort_key(b: Binomial):
    return (b.degree, b.plus, b.minus)


def buchberger(gens, order: MonomialOrder, budget: Budget = DEFAULT_BUDGET, backend=None,
               deadline: float | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by the binomials ``gens``.

    Pairs are processed by the normal strategy (smallest lcm degree, ties by
    creation index) with the Gebauer-Moeller criteria.  Raises
    :class:`BudgetExceeded` with the partial basis attached when a limit hits.
    ``deadline`` (a ``time.monotonic`` value) overrides the budget's own clock.
    """
    n = order.nvars
    internal = []
    for g in gens:
        if g.nvars != n:
            raise ValueError("generator and order disagree on the number of variables")
        internal.append((order.to_internal(g.plus), order.to_internal(g.minus)))
    status, basis, stats = kernel.complete(
        internal, n, order.code, order.block,
        budget.max_degree, budget.max_pairs,
        budget.deadline() if deadline is None else deadline, backend=backend,
    )
    elements = tuple(sorted(
        (Binomial(order.from_internal(lead), order.from_internal(tail)) for lead, tail in basis),
        key=_sort_key,
    ))
    stats = dict(stats, backend=backend or kernel.BACKEND)
    if status != kernel.OK:
        partial = GroebnerBasis(elements, order, reduced=False, stats=stats)
        raise BudgetExceeded(
            f"Groebner completion stopped: {kernel.STATUS_NAMES[status]} budget exhausted",
            partial=partial, reason=kernel.STATUS_NAMES[status],
        )
    return GroebnerBasis(elements, order, reduced=True, stats=stats)


def normal_form(mono, gb: GroebnerBasis) -> Monomial:
    """Standard monomial congruent to ``mono`` modulo the ideal of ``gb``."""
    order = gb.order
    leads = [order.to_internal(b.plus) for b in gb.elements]
    tails = [order.to_internal(b.minus) for b in gb.elements]
    return order.from_internal(kernel.normal_form(leads, tails, order.to_internal(tuple(mono))))


def s_pairs_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion checked over *all* pairs, without any pair criteria."""
    els = gb.elements
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            f, g = els[a], els[b]
            lcm = tuple(max(x, y) for x, y in zip(f.plus, g.plus))
            sa = tuple(m - x + t for m, x, t in zip(lcm, f.plus, f.minus))
            sb = tuple(m - x + t for m, x, t in zip(lcm, g.plus, g.minus))
            if gb.normal_form(sa) != gb.normal_form(sb):
                return False
    return True


def is_groebner_basis(binomials, order: MonomialOrder) -> bool:
    """Whether the given binomials (oriented by ``order``) form a Groebner basis."""
    els = tuple(b.oriented(order) for b in binomials)
    return s_pairs_reduce_to_zero(GroebnerBasis(els, order, reduced=False))


# -- serialization ----------------------------------------------------------------

def format_monomial(mono, names) -> str:
    factors = []
    for i, e in enumerate(mono):
        if e == 1:
            factors.append(names[i])
        elif e > 1:
            factors.append(f"{names[i]}^{e}")
    return "*".join(factors) if factors else "1"


def format_gb(gb: GroebnerBasis, names) -> str:
    """One element per line, ``lead - tail``; header records the order."""
    lines = [
        f"# order: {gb.order.describe()}",
        "# perm: " + " ".join(names[p] for p in gb.order.perm),
        f"# elements: {len(gb)}",
    ]
    for b in sorted(gb.elements, key=_sort_key):
        lines.append(f"{format_monomial(b.plus, names)} - {format_monomial(b.minus, names)}")
    return "\n".join(lines) + "\n"


def parse_monomial(text: str, names) -> Monomial:
    index = {nm: i for i, nm in enumerate(names)}
    out = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(out)
    for factor in text.split("*"):
        nm, _, e = factor.partition("^")
        out[index[nm]] += int(e) if e else 1
    return tuple(out)


def parse_gb(text: str, names) -> GroebnerBasis:
    from .orders import parse_order

    spec, perm_names, elements = "degrevlex", None, []
    index = {nm: i for i, nm in enumerate(names)}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("# order:"):
            spec = line.split(":", 1)[1].strip()
        elif line.startswith("# perm:"):
            perm_names = line.split(":", 1)[1].split()
        elif line.startswith("#"):
            continue
        else:
            lhs, rhs = line.split(" - ")
            elements.append(Binomial(parse_monomial(lhs, names), parse_monomial(rhs, names)))
    perm = None if perm_names is None else [index[nm] for nm in perm_names]
    order = parse_order(spec, len(names), perm)
    return GroebnerBasis(tuple(elements), order)
