"""Monomial orders on the ring variables."""

from __future__ import annotations

from dataclasses import dataclass

from ._pykernel import DEGREVLEX, ELIM, LEX, order_key

KINDS = {"lex": LEX, "degrevlex": DEGREVLEX, "elim": ELIM}


@dataclass(frozen=True)
class MonomialOrder:
    """A term order given by a kind and a variable ranking.

    ``perm`` lists variable indices from largest to smallest.  For ``elim``
    the first ``block`` entries of ``perm`` form the eliminated block: any
    monomial involving them beats every monomial free of them.
    """

    kind: str
    perm: tuple[int, ...]
    block: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm must be a permutation of 0..n-1")
        if self.kind == "elim" and not 0 < self.block <= len(self.perm):
            raise ValueError("elim order needs 0 < block <= number of variables")

    @classmethod
    def lex(cls, n, perm=None):
        return cls("lex", tuple(range(n)) if perm is None else tuple(perm))

    @classmethod
    def degrevlex(cls, n, perm=None):
        return cls("degrevlex", tuple(range(n)) if perm is None else tuple(perm))

    @classmethod
    def elim(cls, n, block, perm=None):
        return cls("elim", tuple(range(n)) if perm is None else tuple(perm), block)

    @property
    def nvars(self) -> int:
        return len(self.perm)

    @property
    def code(self) -> int:
        return KINDS[self.kind]

    def describe(self) -> str:
        return f"elim:{self.block}" if self.kind == "elim" else self.kind

    def to_internal(self, mono) -> tuple[int, ...]:
        return tuple(mono[p] for p in self.perm)

    def from_internal(self, mono) -> tuple[int, ...]:
        out = [0] * len(self.perm)
        for pos, p in enumerate(self.perm):
            out[p] = mono[pos]
        return tuple(out)

    def key(self, mono):
        """Sort key: ``key(a) > key(b)`` iff ``a`` is larger in this order."""
        return order_key(self.code, self.block)(self.to_internal(mono))

    def greater(self, a, b) -> bool:
        return self.key(a) > self.key(b)


def parse_order(spec: str, nvars: int, perm=None) -> MonomialOrder:
    """Parse ``lex``, ``degrevlex`` or ``elim:k``."""
    perm = tuple(range(nvars)) if perm is None else tuple(perm)
    if spec.startswith("elim:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad elimination block size in {spec!r}") from None
        return MonomialOrder("elim", perm, k)
    return MonomialOrder(spec, perm)
