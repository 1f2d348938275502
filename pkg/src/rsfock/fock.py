"""Truncated Fock modules and the generator actions on them.

A :class:`FockVector` is a finitely supported map from partitions to
:class:`~rsfock.laurent.Laurent2`.  The module carries no charge itself; the
charge (``offset``), rank and truncation bound live in :class:`FockConfig`.

Words are written left to right and applied right to left, as operator
composition: ``Word.parse("e1 f1")`` acts as ``e1 ∘ f1``.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .laurent import ONE, ZERO, Laurent2
from .partitions import (
    DEFAULT_CAP,
    EMPTY,
    Partition,
    CapExceeded,
    cell_residue_counts,
    node_sets,
    partitions_up_to,
    split_counts,
)


class TruncationOverflow(ValueError):
    """An f-step would leave the truncated module."""


class EmptyWord(ValueError):
    pass


class WordParseError(ValueError):
    pass


class DConvention(str, enum.Enum):
    CELL_COUNT = "cellcount"
    LITERAL = "literal"


class Orientation(str, enum.Enum):
    STANDARD = "standard"
    FLIP = "flip"


@dataclass(frozen=True)
class FockConfig:
    n: int
    offset: int = 0
    N: int = 8
    d_convention: DConvention = DConvention.CELL_COUNT
    orientation: Orientation = Orientation.STANDARD

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank n must be >= 2, got {self.n}")
        if not 0 <= self.offset < self.n:
            raise ValueError(f"offset must lie in 0..{self.n - 1}, got {self.offset}")
        if self.N < 0:
            raise ValueError(f"truncation bound must be >= 0, got {self.N}")
        object.__setattr__(self, "d_convention", DConvention(self.d_convention))
        object.__setattr__(self, "orientation", Orientation(self.orientation))

    def basis(self, cap: int = DEFAULT_CAP) -> List[Partition]:
        return partitions_up_to(self.N, cap)

    def describe(self) -> str:
        return f"n={self.n} offset={self.offset} N={self.N}"


class FockVector:
    """Immutable sparse vector over ``Laurent2`` in the partition basis."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Partition, Laurent2] | None = None):
        self._entries: Dict[Partition, Laurent2] = {
            Partition(k): Laurent2.coerce(c) for k, c in (entries or {}).items() if c
        }

    @classmethod
    def basis(cls, lam: Union[Partition, Sequence[int]] = EMPTY) -> "FockVector":
        return cls({Partition(lam): ONE})

    @classmethod
    def _raw(cls, entries: Dict[Partition, Laurent2]) -> "FockVector":
        v = cls.__new__(cls)
        v._entries = {k: c for k, c in entries.items() if c}
        return v

    def items(self):
        return self._entries.items()

    def support(self) -> List[Partition]:
        return sorted(self._entries, key=_basis_key)

    def __getitem__(self, lam) -> Laurent2:
        return self._entries.get(Partition(lam), ZERO)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def max_size(self) -> int:
        return max((lam.size for lam in self._entries), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self._entries)
        for k, c in other._entries.items():
            out[k] = out[k] + c if k in out else c
        return FockVector._raw(out)

    def __neg__(self) -> "FockVector":
        return FockVector._raw({k: -c for k, c in self._entries.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c: Union[Laurent2, int]) -> "FockVector":
        c = Laurent2.coerce(c)
        return FockVector._raw({k: v * c for k, v in self._entries.items()})

    def __mul__(self, c):
        if isinstance(c, (Laurent2, int)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._entries:
            return "0"
        pieces = []
        for idx, lam in enumerate(self.support()):
            c = self._entries[lam]
            ket = f"|{lam}>"
            if len(c) == 1:
                ((a, b), k), = c.items()
                mag = Laurent2.monomial(a, b, abs(k))
                body = ket if mag == ONE else f"{mag}*{ket}"
                sign = "-" if k < 0 else "+"
            else:
                body, sign = f"({c})*{ket}", "+"
            if idx == 0:
                pieces.append(("-" if sign == "-" else "") + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"FockVector({str(self)!r})"

    def to_json_obj(self) -> list:
        return [{"partition": list(lam), "coeff": str(self._entries[lam])} for lam in self.support()]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "FockVector":
        out = cls()
        for row in obj:
            out = out + cls({Partition(row["partition"]): Laurent2.parse(row["coeff"])})
        return out


def _basis_key(lam: Partition):
    # size ascending, then lexicographically descending: matches enumerate_partitions
    return (lam.size, tuple(-p for p in lam))


# ---------------------------------------------------------------------------
# generators and words

DIAGONAL_KINDS = ("w", "w'", "D", "D'", "g", "g'")
INDEXED_KINDS = ("e", "f", "w", "w'")
KINDS = ("e", "f") + DIAGONAL_KINDS


@dataclass(frozen=True)
class Generator:
    kind: str
    index: Optional[int] = None
    inverse: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if (self.kind in INDEXED_KINDS) != (self.index is not None):
            raise ValueError(f"generator {self.kind!r} index mismatch: {self.index!r}")
        if self.inverse and self.kind in ("e", "f"):
            raise ValueError("e and f have no inverses")

    @property
    def is_diagonal(self) -> bool:
        return self.kind in DIAGONAL_KINDS

    def inv(self) -> "Generator":
        if not self.is_diagonal:
            raise ValueError(f"{self} is not invertible")
        return Generator(self.kind, self.index, not self.inverse)

    def __str__(self) -> str:
        idx = "" if self.index is None else str(self.index)
        return f"{self.kind}{idx}{'^-1' if self.inverse else ''}"


_SYMBOL = re.compile(r"^(e|f|w'|w|D'|D|g'|g)(\d*)(\^-1)?$")


def parse_generator(token: str) -> Generator:
    m = _SYMBOL.match(token.strip())
    if not m:
        raise WordParseError(f"unrecognised generator symbol {token!r}")
    kind, idx, inv = m.groups()
    index = int(idx) if idx else None
    try:
        return Generator(kind, index, bool(inv))
    except ValueError as exc:
        raise WordParseError(f"{token!r}: {exc}") from None


@dataclass(frozen=True)
class Word:
    symbols: Tuple[Generator, ...] = field(default_factory=tuple)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(tuple(parse_generator(tok) for tok in text.split()))

    @classmethod
    def of(cls, *symbols: Union[str, Generator]) -> "Word":
        return cls(tuple(parse_generator(s) if isinstance(s, str) else s for s in symbols))

    @property
    def f_degree(self) -> int:
        return sum(1 for g in self.symbols if g.kind == "f")

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return " ".join(map(str, self.symbols))


# ---------------------------------------------------------------------------
# actions on basis vectors


def _check_index(i: int, cfg: FockConfig) -> int:
    if not 0 <= i < cfg.n:
        raise ValueError(f"residue index {i} out of range for n={cfg.n}")
    return i


@lru_cache(maxsize=None)
def _f_image(lam: Partition, i: int, cfg: FockConfig) -> Tuple[Tuple[Partition, Laurent2], ...]:
    indent, _ = node_sets(lam, cfg, i)
    out = []
    for gamma in indent:
        sp = split_counts(lam, gamma, cfg, i)
        out.append((lam.add(gamma), Laurent2.monomial(sp.iR, sp.rR)))
    return tuple(out)


@lru_cache(maxsize=None)
def _e_image(lam: Partition, i: int, cfg: FockConfig) -> Tuple[Tuple[Partition, Laurent2], ...]:
    _, removable = node_sets(lam, cfg, i)
    out = []
    for gamma in removable:
        mu = lam.remove(gamma)
        # counted in the boundary of the smaller diagram, where gamma is addable
        sp = split_counts(mu, gamma, cfg, i)
        out.append((mu, Laurent2.monomial(sp.rL, sp.iL)))
    return tuple(out)


def _apply_images(v: FockVector, image) -> FockVector:
    out: Dict[Partition, Laurent2] = {}
    for lam, c in v.items():
        for mu, coeff in image(lam):
            term = c * coeff
            out[mu] = out[mu] + term if mu in out else term
    return FockVector._raw(out)


def apply_f(i: int, v: FockVector, cfg: FockConfig) -> FockVector:
    _check_index(i, cfg)
    for lam, _ in v.items():
        if lam.size >= cfg.N:
            raise TruncationOverflow(f"f{i} on |{lam}> leaves the module truncated at N={cfg.N}")
    return _apply_images(v, lambda lam: _f_image(lam, i, cfg))


def apply_e(i: int, v: FockVector, cfg: FockConfig) -> FockVector:
    _check_index(i, cfg)
    return _apply_images(v, lambda lam: _e_image(lam, i, cfg))


@lru_cache(maxsize=None)
def eigen_exponents(g: Generator, lam: Partition, cfg: FockConfig) -> Tuple[int, int]:
    """``(a, b)`` such that the diagonal generator ``g`` acts on |lam> by ``r^a s^b``."""
    if not g.is_diagonal:
        raise ValueError(f"{g} is not diagonal")
    kind = g.kind
    if kind in ("w", "w'"):
        indent, removable = node_sets(lam, cfg, _check_index(g.index, cfg))
        a, b = len(indent), len(removable)
        if kind == "w'":
            a, b = b, a
    elif kind in ("g", "g'"):
        a = b = 0
        for j in range(cfg.n):
            indent, removable = node_sets(lam, cfg, j)
            a += len(indent)
            b += len(removable)
        if kind == "g'":
            a, b = b, a
    elif cfg.d_convention is DConvention.CELL_COUNT:
        m0 = cell_residue_counts(lam, cfg)[0]
        a, b = (-m0, 0) if kind == "D" else (0, -m0)
    else:
        indent, removable = node_sets(lam, cfg, 0)
        a, b = -len(indent), -len(removable)
        if kind == "D'":
            a, b = b, a
    if g.inverse:
        a, b = -a, -b
    return a, b


def eigenvalue(g: Generator, lam: Partition, cfg: FockConfig) -> Laurent2:
    return Laurent2.monomial(*eigen_exponents(g, lam, cfg))


def apply_diagonal(g: Generator, v: FockVector, cfg: FockConfig) -> FockVector:
    return FockVector._raw({lam: c * eigenvalue(g, lam, cfg) for lam, c in v.items()})


def apply_generator(g: Generator, v: FockVector, cfg: FockConfig) -> FockVector:
    if g.kind == "f":
        return apply_f(g.index, v, cfg)
    if g.kind == "e":
        return apply_e(g.index, v, cfg)
    return apply_diagonal(g, v, cfg)


def apply_word(w: Union[Word, str], v: FockVector, cfg: FockConfig) -> FockVector:
    if isinstance(w, str):
        w = Word.parse(w)
    if not w.symbols:
        raise EmptyWord("cannot apply an empty word")
    for g in reversed(w.symbols):
        v = apply_generator(g, v, cfg)
    return v


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class OperatorMatrix:
    """Sparse matrix of an operator in the partition basis of a truncated module.

    ``entries`` maps ``(row, col)`` partitions to coefficients: the image of
    ``|col>`` has coefficient ``entries[row, col]`` on ``|row>``.  Columns whose
    image would leave the module are absent; ``domain`` lists the ones present.
    """

    op: str
    cfg: FockConfig
    basis: Tuple[Partition, ...]
    domain: Tuple[Partition, ...]
    entries: Mapping[Tuple[Partition, Partition], object]

    def ordered_entries(self):
        index = {lam: k for k, lam in enumerate(self.basis)}
        return sorted(self.entries.items(), key=lambda kv: (index[kv[0][0]], index[kv[0][1]]))

    def apply(self, v: FockVector) -> FockVector:
        allowed = set(self.domain)
        out = FockVector()
        for lam, c in v.items():
            if lam not in allowed:
                raise TruncationOverflow(f"|{lam}> is outside the matrix domain")
        for (row, col), coeff in self.entries.items():
            c = v[col]
            if c:
                out = out + FockVector({row: c * coeff})
        return out

    def to_json_obj(self) -> dict:
        return {
            "op": self.op,
            "n": self.cfg.n,
            "offset": self.cfg.offset,
            "N": self.cfg.N,
            "domain_max_size": max((lam.size for lam in self.domain), default=-1),
            "entries": [
                {"row": list(row), "col": list(col), "coeff": str(c)}
                for (row, col), c in self.ordered_entries()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row", "col", "coeff"])
        for (row, col), c in self.ordered_entries():
            writer.writerow([str(row), str(col), str(c)])
        return buf.getvalue()

    @classmethod
    def from_json_obj(cls, obj: Mapping, cfg: FockConfig) -> "OperatorMatrix":
        basis = tuple(cfg.basis())
        limit = obj["domain_max_size"]
        domain = tuple(lam for lam in basis if lam.size <= limit)
        entries = {(Partition(e["row"]), Partition(e["col"])): Laurent2.parse(e["coeff"])
                   for e in obj["entries"]}
        return cls(obj["op"], cfg, basis, domain, entries)


def operator_matrix(op: Union[Generator, Word, str], cfg: FockConfig,
                    cap: int = DEFAULT_CAP) -> OperatorMatrix:
    if cfg.N > cap:
        raise CapExceeded(f"N={cfg.N} exceeds the matrix cap {cap}")
    if isinstance(op, str):
        op = Word.parse(op)
    if isinstance(op, Generator):
        op = Word((op,))
    basis = tuple(cfg.basis(cap))
    domain = tuple(lam for lam in basis if lam.size + op.f_degree <= cfg.N)
    entries = {}
    for lam in domain:
        for mu, c in apply_word(op, FockVector.basis(lam), cfg).items():
            entries[mu, lam] = c
    return OperatorMatrix(str(op), cfg, basis, domain, entries)
