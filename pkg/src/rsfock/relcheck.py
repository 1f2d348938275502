"""Mechanical verification of the algebra relations on truncated Fock modules.

Every relation is broken into *instances* (a relation tag, its indices, and
one configuration).  An instance is checked on every basis vector whose size
leaves room for the f-degree of its words, so no check ever reads truncated
mass.  Reports are produced in a fixed order independent of the worker count.

Relations with denominators are checked in cleared form: the ``[e_i, f_j]``
relation is multiplied by ``r - s`` and the f-Serre relations by ``r s``.
Conjugation relations for ``w_j`` and ``w'_j`` are checked for *constancy* of
the conjugation ratio; the constant is whatever the first transition shows.
"""
from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import identities
from .fock import (
    FockConfig,
    FockVector,
    Generator,
    apply_word,
    eigen_exponents,
    operator_matrix,
)
from .laurent import ONE, R, S, Laurent1, Laurent2
from .partitions import EMPTY, Partition, node_sets
from .qfock import LOWER_E, RAISE_F, QFockVector, q_operator_matrix

TAGS = (
    "A1-central", "A2-omega", "A2-D", "A3-omega'", "A3-D'", "A4-diag", "A4-offdiag",
    "A5", "A6", "A7", "highest-weight", "specialization", "claims",
)


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class InconsistentRatio(ArithmeticError):
    """A conjugation ratio that should be a constant monomial varies between transitions."""

    def __init__(self, message, observations=None, reports=()):
        super().__init__(message)
        self.observations = observations or {}
        self.reports = list(reports)


@dataclass(frozen=True, order=True)
class RelationID:
    tag: str
    indices: Tuple[int, ...] = ()
    form: str = ""

    def __str__(self) -> str:
        idx = "(" + ",".join(map(str, self.indices)) + ")" if self.indices else ""
        return f"{self.tag}{idx} {self.form}".rstrip()


@dataclass(frozen=True)
class Witness:
    partition: Partition
    residual: object
    detail: str = ""

    def to_json_obj(self) -> dict:
        res = self.residual
        obj = {"partition": list(self.partition),
               "residual": res.to_json_obj() if hasattr(res, "to_json_obj") else str(res)}
        if self.detail:
            obj["detail"] = self.detail
        return obj


@dataclass(frozen=True)
class CheckReport:
    relation: RelationID
    config: FockConfig
    status: Status
    witness: Optional[Witness] = None
    basis_checked: int = 0
    failures: int = 0
    max_size_checked: int = -1
    millis: float = 0.0
    note: str = ""

    def __post_init__(self):
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def to_json_obj(self, timing: bool = False) -> dict:
        obj = {
            "relation": self.relation.tag,
            "indices": list(self.relation.indices),
            "form": self.relation.form,
            "n": self.config.n,
            "offset": self.config.offset,
            "N": self.config.N,
            "d_convention": self.config.d_convention.value,
            "orientation": self.config.orientation.value,
            "status": self.status.value,
            "basis_checked": self.basis_checked,
            "failures": self.failures,
        }
        if self.note:
            obj["note"] = self.note
        if self.witness is not None:
            obj["witness"] = self.witness.to_json_obj()
        if timing:
            obj["millis"] = round(self.millis, 3)
        return obj

    def line(self) -> str:
        text = f"{self.status.value.upper():7} {self.relation}  [{self.config.describe()}]"
        text += f" checked={self.basis_checked}"
        if self.failures:
            text += f" failures={self.failures}"
        if self.witness is not None:
            text += f" witness=|{self.witness.partition}>"
        if self.note:
            text += f" ({self.note})"
        return text


# ---------------------------------------------------------------------------
# instances


@dataclass(frozen=True)
class Check:
    """One relation instance on one configuration, ready to evaluate."""

    relation: RelationID
    cfg: FockConfig
    terms: Tuple[Tuple[Laurent2, str], ...] = ()  # residual = sum c * word|lam>
    f_degree: int = 0
    skip_reason: str = ""
    note: str = ""


# marks a (mode, a, b) term of the diagonal sweep instead of a (coeff, word) term
_DIAGONAL_SWEEP = "diagonal-sweep"


def _transitions(cfg: FockConfig, i: int):
    """Every ``(lam, lam - g)`` with ``g`` a removable ``i``-node and ``|lam| <= N``."""
    for lam in cfg.basis():
        for g in node_sets(lam, cfg, i)[1]:
            yield lam, g, lam.remove(g)


def conjugation_ratios(cfg: FockConfig, g: Generator, i: int) -> Dict[Tuple[int, int], Tuple[Partition, object]]:
    """All distinct ``g(lam - node) / g(lam)`` exponent pairs over e_i transitions, first witness kept."""
    seen: Dict[Tuple[int, int], Tuple[Partition, object]] = {}
    for lam, node, small in _transitions(cfg, i):
        a0, b0 = eigen_exponents(g, lam, cfg)
        a1, b1 = eigen_exponents(g, small, cfg)
        seen.setdefault((a1 - a0, b1 - b0), (lam, node))
    return seen


def _conjugation_checks(tag: str, cfg: FockConfig, g: Generator, i: int,
                        expected: Optional[Laurent2], swap: bool = False) -> List[Check]:
    """``g e_i g^-1 = c e_i`` and ``g f_i g^-1 = c^-1 f_i``.

    With ``expected`` None the constant is read off the first transition (of
    the unswapped generator when ``swap`` is set, then r and s exchanged).
    """
    indices = (i,) if g.index is None else (i, g.index)
    if expected is None:
        probe = Generator("w", g.index) if swap else g
        seen = conjugation_ratios(cfg, probe, i)
        if not seen:
            rel = RelationID(tag, indices, f"{g} e{i} {g.inv()} = c e{i}")
            return [Check(rel, cfg, skip_reason="no e-transition within the truncation")]
        c = Laurent2.monomial(*next(iter(seen)))
        if swap:
            c = c.swap_rs()
        note = "ratio " + ", ".join(str(Laurent2.monomial(*k)) for k in seen)
    else:
        c, note = expected, ""
    word_e = f"{g} e{i} {g.inv()}"
    word_f = f"{g} f{i} {g.inv()}"
    return [
        Check(RelationID(tag, indices, f"{word_e} = ({c}) e{i}"), cfg,
              ((ONE, word_e), (-c, f"e{i}")), 0, note=note),
        Check(RelationID(tag, indices, f"{word_f} = ({c.invert_monomial()}) f{i}"), cfg,
              ((ONE, word_f), (-c.invert_monomial(), f"f{i}")), 1, note=note),
    ]


def _cyclic_distance(i: int, j: int, n: int) -> int:
    d = (i - j) % n
    return min(d, n - d)


def central_checks(cfg: FockConfig) -> List[Check]:
    n = cfg.n
    checks = []
    diagonal = [Generator(k, j) for k in ("w", "w'") for j in range(n)] + \
               [Generator(k) for k in ("D", "D'", "g", "g'")]
    terms = []
    for a in diagonal:
        terms.append(("inverse", a, a.inv()))
    for x, a in enumerate(diagonal):
        for b in diagonal[x + 1:]:
            terms.append(("commute", a, b))
    checks.append(Check(RelationID("A1-central", (), "diagonal generators commute and invert"), cfg,
                        tuple((_DIAGONAL_SWEEP, t) for t in terms)))
    for kind in ("g", "g'"):
        for i in range(n):
            checks += _conjugation_checks("A1-central", cfg, Generator(kind), i, ONE)
    return checks


def conjugation_checks(cfg: FockConfig) -> List[Check]:
    n = cfg.n
    checks: List[Check] = []
    for i in range(n):
        for j in range(n):
            checks += _conjugation_checks("A2-omega", cfg, Generator("w", j), i, None)
    for i in range(n):
        checks += _conjugation_checks("A2-D", cfg, Generator("D"), i, R if i == 0 else ONE)
    for i in range(n):
        for j in range(n):
            checks += _conjugation_checks("A3-omega'", cfg, Generator("w'", j), i, None, swap=True)
    for i in range(n):
        checks += _conjugation_checks("A3-D'", cfg, Generator("D'"), i, S if i == 0 else ONE)
    return checks


def commutator_checks(cfg: FockConfig) -> List[Check]:
    """``(r - s)(e_i f_j - f_j e_i) = delta_ij (w_i - w'_i)``."""
    checks = []
    rs = R - S
    for i in range(cfg.n):
        for j in range(cfg.n):
            terms = [(rs, f"e{i} f{j}"), (-rs, f"f{j} e{i}")]
            if i == j:
                terms += [(-ONE, f"w{i}"), (ONE, f"w'{i}")]
                rel = RelationID("A4-diag", (i, i), f"(r - s)[e{i}, f{i}] = w{i} - w'{i}")
            else:
                rel = RelationID("A4-offdiag", (i, j), f"[e{i}, f{j}] = 0")
            checks.append(Check(rel, cfg, tuple(terms), 1))
    return checks


def commuting_checks(cfg: FockConfig) -> List[Check]:
    n = cfg.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if _cyclic_distance(i, j, n) >= 2]
    if not pairs:
        return [Check(RelationID("A5", (), "no index pair at distance >= 2"), cfg,
                      skip_reason=f"n={n} has no commuting pairs")]
    checks = []
    for i, j in pairs:
        for x, deg in (("e", 0), ("f", 2)):
            checks.append(Check(RelationID("A5", (i, j), f"[{x}{i}, {x}{j}] = 0"), cfg,
                                ((ONE, f"{x}{i} {x}{j}"), (-ONE, f"{x}{j} {x}{i}")), deg))
    return checks


def serre_checks(cfg: FockConfig) -> List[Check]:
    n = cfg.n
    if n < 3:
        return [Check(RelationID(tag, (), "cubic Serre relations"), cfg,
                      skip_reason="adjacent indices coincide for n=2")
                for tag in ("A6", "A7")]
    rs = R * S
    r_plus_s = R + S
    checks = []
    for i in range(n):
        a, b = i, (i + 1) % n
        # the two printed forms per adjacent pair; the f-forms are multiplied by rs
        e_forms = [
            ((ONE, f"e{a} e{a} e{b}"), (-r_plus_s, f"e{a} e{b} e{a}"), (rs, f"e{b} e{a} e{a}")),
            ((ONE, f"e{a} e{b} e{b}"), (-r_plus_s, f"e{b} e{a} e{b}"), (rs, f"e{b} e{b} e{a}")),
        ]
        f_forms = [
            ((rs, f"f{a} f{a} f{b}"), (-r_plus_s, f"f{a} f{b} f{a}"), (ONE, f"f{b} f{a} f{a}")),
            ((rs, f"f{a} f{b} f{b}"), (-r_plus_s, f"f{b} f{a} f{b}"), (ONE, f"f{b} f{b} f{a}")),
        ]
        for terms in e_forms:
            checks.append(Check(RelationID("A6", (a, b), _render_terms(terms)), cfg, terms, 0))
        for terms in f_forms:
            checks.append(Check(RelationID("A7", (a, b), _render_terms(terms)), cfg, terms, 3))
    return checks


def _render_terms(terms) -> str:
    out = []
    for c, w in terms:
        out.append(w if c == ONE else f"({c}) {w}")
    return " + ".join(out) + " = 0"


def highest_weight_checks(cfg: FockConfig) -> List[Check]:
    return [Check(RelationID("highest-weight", (j,), f"e{j}|-> = 0"), cfg, ((ONE, f"e{j}"),), 0)
            for j in range(cfg.n)]


def relation_checks(cfg: FockConfig, relations: Optional[Iterable[str]] = None) -> List[Check]:
    """All algebra-relation checks for one configuration, filtered by tag."""
    wanted = set(TAGS if relations is None else relations)
    unknown = wanted - set(TAGS)
    if unknown:
        raise ValueError(f"unknown relation tags: {sorted(unknown)}")
    checks: List[Check] = []
    if "A1-central" in wanted:
        checks += central_checks(cfg)
    if wanted & {"A2-omega", "A2-D", "A3-omega'", "A3-D'"}:
        checks += [c for c in conjugation_checks(cfg) if c.relation.tag in wanted]
    if wanted & {"A4-diag", "A4-offdiag"}:
        checks += [c for c in commutator_checks(cfg) if c.relation.tag in wanted]
    if "A5" in wanted:
        checks += commuting_checks(cfg)
    if wanted & {"A6", "A7"}:
        checks += [c for c in serre_checks(cfg) if c.relation.tag in wanted]
    if "highest-weight" in wanted:
        checks += highest_weight_checks(cfg)
    return checks


# ---------------------------------------------------------------------------
# evaluation


def residual_at(check: Check, lam: Partition) -> FockVector:
    """The vector that must vanish for ``check`` to hold at ``|lam>``."""
    v = FockVector.basis(lam)
    out = FockVector()
    for c, word in check.terms:
        if isinstance(c, str) and c == _DIAGONAL_SWEEP:
            mode, a, b = word
            if mode == "inverse":
                out = out + apply_word(f"{a} {b}", v, check.cfg) - v
            else:
                out = out + apply_word(f"{a} {b}", v, check.cfg) - apply_word(f"{b} {a}", v, check.cfg)
            continue
        out = out + apply_word(word, v, check.cfg).scale(c)
    return out


def evaluate(check: Check) -> CheckReport:
    start = time.perf_counter()
    if check.skip_reason:
        return CheckReport(check.relation, check.cfg, Status.SKIPPED, note=check.skip_reason)
    cfg = check.cfg
    if check.relation.tag == "highest-weight":
        domain = [EMPTY]
    else:
        domain = [lam for lam in cfg.basis() if lam.size + check.f_degree <= cfg.N]
    witness = None
    failures = 0
    for lam in domain:
        res = residual_at(check, lam)
        if res:
            failures += 1
            if witness is None:
                witness = Witness(lam, res)
    millis = (time.perf_counter() - start) * 1000
    return CheckReport(
        check.relation, cfg, Status.FAIL if failures else Status.PASS, witness,
        basis_checked=len(domain), failures=failures,
        max_size_checked=max((lam.size for lam in domain), default=-1),
        millis=millis, note=check.note,
    )


def _evaluate_all(checks: Sequence[Check], jobs: int = 1) -> List[CheckReport]:
    if jobs <= 1 or len(checks) < 2:
        return [evaluate(c) for c in checks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so the report order never depends on scheduling
        return list(pool.map(evaluate, checks, chunksize=max(1, len(checks) // (4 * jobs))))


def check_A4(cfg: FockConfig, jobs: int = 1) -> List[CheckReport]:
    if cfg.N < 2:
        raise ValueError("check_A4 needs N >= 2")
    return _evaluate_all(commutator_checks(cfg), jobs)


def check_commuting(cfg: FockConfig, jobs: int = 1) -> List[CheckReport]:
    return _evaluate_all(commuting_checks(cfg), jobs)


def check_serre(cfg: FockConfig, jobs: int = 1) -> List[CheckReport]:
    return _evaluate_all(serre_checks(cfg), jobs)


def check_conjugations(cfg: FockConfig, jobs: int = 1) -> List[CheckReport]:
    return _evaluate_all(central_checks(cfg) + conjugation_checks(cfg), jobs)


# ---------------------------------------------------------------------------
# specialization against the one-parameter oracle


def check_specialization(cfg: FockConfig) -> List[CheckReport]:
    reports = []
    for direction, kind in ((RAISE_F, "f"), (LOWER_E, "e")):
        for i in range(cfg.n):
            start = time.perf_counter()
            mat = operator_matrix(Generator(kind, i), cfg)
            oracle = q_operator_matrix(direction, i, cfg)
            special = {k: c.specialize_q() for k, c in mat.entries.items()}
            bad = sorted({col for (row, col) in set(special) | set(oracle)
                          if special.get((row, col)) != oracle.get((row, col))},
                         key=_basis_index(cfg).__getitem__)
            witness = None
            if bad:
                col = bad[0]
                diff = QFockVector({row: special.get((row, c2), _q0()) - oracle.get((row, c2), _q0())
                                    for (row, c2) in set(special) | set(oracle) if c2 == col})
                witness = Witness(col, diff, "specialized entry minus oracle entry")
            reports.append(CheckReport(
                RelationID("specialization", (i,), f"{kind}{i} at r=q, s=q^-1 equals the q-Fock {kind}{i}"),
                cfg, Status.FAIL if bad else Status.PASS, witness,
                basis_checked=len(mat.domain), failures=len(bad),
                max_size_checked=max((l.size for l in mat.domain), default=-1),
                millis=(time.perf_counter() - start) * 1000))
    # level one: the product of all w_j specializes to q on every basis vector
    start = time.perf_counter()
    basis = cfg.basis()
    bad = [lam for lam in basis
           if Laurent2.monomial(*eigen_exponents(Generator("g"), lam, cfg)).specialize_q() != _q1()]
    witness = None
    if bad:
        lam = bad[0]
        val = Laurent2.monomial(*eigen_exponents(Generator("g"), lam, cfg)).specialize_q()
        witness = Witness(lam, QFockVector({lam: val - _q1()}), "g eigenvalue at r=q, s=q^-1 minus q")
    reports.append(CheckReport(RelationID("specialization", (), "g acts by q (level one)"), cfg,
                               Status.FAIL if bad else Status.PASS, witness,
                               basis_checked=len(basis), failures=len(bad),
                               max_size_checked=cfg.N, millis=(time.perf_counter() - start) * 1000))
    return reports


def _basis_index(cfg: FockConfig) -> Dict[Partition, int]:
    return {lam: k for k, lam in enumerate(cfg.basis())}


def _q0():
    return Laurent1()


def _q1():
    return Laurent1.monomial(1)


# ---------------------------------------------------------------------------
# combinatorial identities


def check_claims(max_size: int, ns: Sequence[int] = (2, 3, 4, 5), offset: int = 0,
                 extra: Sequence[Partition] = ()) -> List[CheckReport]:
    """Run the node-counting identity suite exhaustively over all partitions up to ``max_size``.

    ``extra`` adds further partitions (e.g. random large ones) to the domain.
    """
    reports = []
    for n in ns:
        cfg = FockConfig(n, offset % n, max_size)
        partitions = cfg.basis() + [lam for lam in extra if lam.size > max_size]
        for name in identities.IDENTITIES:
            start = time.perf_counter()
            insts = identities.instances(name, partitions, cfg)
            bad = [x for x in insts if not x.holds]
            witness = None
            if bad:
                x = bad[0]
                witness = Witness(x.lam, FockVector({x.lam: Laurent2.const(x.lhs - x.rhs)}), x.describe())
            reports.append(CheckReport(
                RelationID("claims", (), name), cfg, Status.FAIL if bad else Status.PASS, witness,
                basis_checked=len(insts), failures=len(bad),
                max_size_checked=max((l.size for l in partitions), default=-1),
                millis=(time.perf_counter() - start) * 1000))
        start = time.perf_counter()
        table = identities.neighbour_shifts(partitions, cfg)
        varying = {k: v for k, v in table.items() if len(v) > 1}
        witness = None
        note = "; ".join(f"({i},{j}):" + "|".join(f"{d}" for d in v) for (i, j), v in table.items())
        if varying:
            (i, j), values = next(iter(varying.items()))
            (ref, _), (other, (lam, node)) = list(values.items())[:2]
            residual = FockVector({lam: Laurent2.monomial(*other) - Laurent2.monomial(*ref)})
            witness = Witness(lam, residual,
                              f"i={i} j={j}: removing {node} shifts (|I_j|,|R_j|) by {other}, "
                              f"first transition shifted by {ref}")
        reports.append(CheckReport(
            RelationID("claims", (), "neighbour-shift-constancy"), cfg,
            Status.FAIL if varying else Status.PASS, witness,
            basis_checked=len(partitions), failures=len(varying),
            max_size_checked=max((l.size for l in partitions), default=-1),
            millis=(time.perf_counter() - start) * 1000, note=note))
    return reports


# ---------------------------------------------------------------------------
# pairing table


@dataclass(frozen=True)
class PairingTable:
    """``entries[i, j] = (a, b)`` meaning the pairing of ``i`` with ``j`` is ``r^a s^b``."""

    n: int
    entries: Dict[Tuple[int, int], Tuple[int, int]]
    provenance: str

    def monomial(self, i: int, j: int) -> Laurent2:
        return Laurent2.monomial(*self.entries[i, j])

    def specialized_exponent(self, i: int, j: int) -> int:
        a, b = self.entries[i, j]
        return a - b

    def to_json_obj(self) -> dict:
        return {"n": self.n, "provenance": self.provenance,
                "entries": [{"i": i, "j": j, "value": str(self.monomial(i, j))}
                            for (i, j) in sorted(self.entries)]}


def printed_pairing(n: int) -> PairingTable:
    """Closed-form table from the orthonormal basis ``e_1..e_n`` and simple roots of affine sl_n."""

    def root(i):
        v = [0] * (n + 1)  # 1-based; the null root pairs trivially with every e_k
        if i == 0:
            v[1] -= 1
            v[n] += 1
        else:
            v[i] += 1
            v[i + 1] -= 1
        return v

    entries = {}
    for i in range(n):
        alpha_i = root(i)
        for j in range(n):
            if j >= 1:
                entries[i, j] = (alpha_i[j], alpha_i[j + 1])
            else:
                entries[i, j] = (-root(0)[i + 1], alpha_i[1])
    return PairingTable(n, entries, "printed")


def observe_pairing(cfg: FockConfig) -> Dict[Tuple[int, int], Dict[Tuple[int, int], Tuple[Partition, object]]]:
    """Every ``w_j`` conjugation ratio seen on ``e_i`` transitions, keyed by ``(i, j)``."""
    return {(i, j): conjugation_ratios(cfg, Generator("w", j), i)
            for i in range(cfg.n) for j in range(cfg.n)}


@dataclass(frozen=True)
class PairingDiff:
    i: int
    j: int
    observed: Tuple[Tuple[int, int], ...]
    printed: Tuple[int, int]

    @property
    def agrees(self) -> bool:
        return self.observed == (self.printed,)

    @property
    def agrees_specialized(self) -> bool:
        return all(a - b == self.printed[0] - self.printed[1] for a, b in self.observed)

    def to_json_obj(self) -> dict:
        return {"i": self.i, "j": self.j,
                "observed": [str(Laurent2.monomial(*k)) for k in self.observed],
                "printed": str(Laurent2.monomial(*self.printed)),
                "agrees_at_q": self.agrees_specialized}


def pairing_diffs(cfg: FockConfig, observations=None) -> List[PairingDiff]:
    """Entries where the observed ratios differ from the closed-form table."""
    observations = observe_pairing(cfg) if observations is None else observations
    printed = printed_pairing(cfg.n)
    out = []
    for (i, j), seen in sorted(observations.items()):
        d = PairingDiff(i, j, tuple(seen), printed.entries[i, j])
        if not d.agrees:
            out.append(d)
    return out


def infer_pairing(cfg: FockConfig, jobs: int = 1) -> Tuple[PairingTable, List[CheckReport]]:
    if cfg.N < cfg.n + 2:
        raise ValueError(f"infer_pairing needs N >= n + 2 (got N={cfg.N}, n={cfg.n})")
    observations = observe_pairing(cfg)
    reports = check_conjugations(cfg, jobs)
    varying = {k: v for k, v in observations.items() if len(v) != 1}
    if varying:
        detail = ", ".join(
            f"<{i},{j}> in {{{', '.join(str(Laurent2.monomial(*m)) for m in v)}}}"
            for (i, j), v in varying.items())
        raise InconsistentRatio(f"non-constant conjugation ratios: {detail}", observations, reports)
    table = PairingTable(cfg.n, {k: next(iter(v)) for k, v in observations.items()}, "inferred")
    return table, reports


# ---------------------------------------------------------------------------
# full runs


@dataclass
class RunResult:
    reports: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status is not Status.FAIL for r in self.reports)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failing(self) -> List[CheckReport]:
        return [r for r in self.reports if r.status is Status.FAIL]

    def to_json_obj(self, timing: bool = False) -> dict:
        return {"status": "pass" if self.passed else "fail",
                "reports": [r.to_json_obj(timing) for r in self.reports]}

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_json_obj(timing), indent=2, sort_keys=False)


def run_all(cfgs: Sequence[FockConfig], jobs: int = 1,
            relations: Optional[Iterable[str]] = None) -> RunResult:
    """Every relation check, the identity suite and the oracle comparison for each config."""
    wanted = list(TAGS if relations is None else relations)
    algebraic = [t for t in wanted if t not in ("specialization", "claims")]
    per_cfg = [relation_checks(cfg, algebraic) for cfg in cfgs]
    reports = _evaluate_all([c for group in per_cfg for c in group], jobs)
    ordered: List[CheckReport] = []
    pos = 0
    for cfg, group in zip(cfgs, per_cfg):
        ordered += reports[pos:pos + len(group)]
        pos += len(group)
        if "specialization" in wanted and cfg.orientation.value == "standard":
            ordered += check_specialization(cfg)
        if "claims" in wanted:
            ordered += [_retarget(rep, cfg) for rep in check_claims(cfg.N, (cfg.n,), cfg.offset)]
    return RunResult(ordered)


def _retarget(rep: CheckReport, cfg: FockConfig) -> CheckReport:
    return replace(rep, config=cfg)
