"""The η pairing and the lattice invariants m, f₂, f₄, e₀ and e_p.

All five invariants are maxima over extremal vectors w, degrees m and
monomials a of a value computed from |w²| and m, subject to a condition on
η(L, w, a). η is Z-linear in a, so a condition of the form "nonzero in Z,
Z/2, Z/4 or Z/p" holds somewhere on Sym^m exactly when it holds on a basis
monomial; the search below only visits basis monomials.

Every class of L/2L has one minimal norm N and one set Min(c). Replacing w
by another member of Min(c) multiplies η by a global sign, so each class is
evaluated once, with its lexicographically smallest minimal vector as w.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from typing import Any, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, NonNegativeInt, computed_field, field_serializer, model_validator

from ._internal.integer_matrix import identity, vecmat
from .budget import BudgetExceeded, EnumerationBudget
from .common import LatticeVector, coerce_vector
from .enumeration import (
    DEFAULT_LEAF_CAP,
    ClassTable,
    complete_class_table,
    coset_minima,
    scan_reduced_classes,
)
from .lattice import CosetClass, Lattice, MinimaResult, PreconditionError

logger = logging.getLogger(__name__)

InvariantName = Literal["m", "f2", "f4", "e0", "ep"]
SearchMode = Literal["exhaustive", "witness", "user"]

EXHAUSTIVE_RANK_DEFAULT = 16
EXHAUSTIVE_RANK_LIMIT = 18
DEFAULT_NORM_BOUND = 7

_BLOCK = 1 << 22
_INT64_HEADROOM = 1 << 62


class SymMonomial(BaseModel):
    """A product a₁⋯a_m of lattice vectors.

    The first ``m0`` factors are constrained to 𝓛^w (they pair evenly with
    w); the remaining factors are arbitrary. Each part is stored sorted.
    """

    model_config = ConfigDict(frozen=True)

    factors: Tuple[LatticeVector, ...] = ()
    m0: NonNegativeInt = 0

    @model_validator(mode="before")
    @classmethod
    def _sort_parts(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "factors" not in data:
            return data
        factors = [coerce_vector(f) for f in data["factors"]]
        m0 = int(data.get("m0", 0))
        if m0 > len(factors):
            raise ValueError(f"m0={m0} exceeds the number of factors {len(factors)}")
        return {"factors": tuple(sorted(factors[:m0]) + sorted(factors[m0:])), "m0": m0}

    @classmethod
    def of(
        cls, lw: Sequence[Sequence[int]] = (), full: Sequence[Sequence[int]] = ()
    ) -> "SymMonomial":
        return cls(factors=tuple(lw) + tuple(full), m0=len(lw))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def m1(self) -> int:
        """Number of unconstrained factors."""
        return len(self.factors) - self.m0

    @property
    def degree(self) -> int:
        """Total degree m₀ + m₁."""
        return len(self.factors)

    @property
    def lw_factors(self) -> Tuple[Tuple[int, ...], ...]:
        return self.factors[: self.m0]

    @property
    def full_factors(self) -> Tuple[Tuple[int, ...], ...]:
        return self.factors[self.m0 :]


class Witness(BaseModel):
    model_config = ConfigDict(frozen=True)

    w: LatticeVector
    monomial: SymMonomial
    eta: int
    min_set_size: NonNegativeInt

    @field_serializer("eta")
    def _eta_as_text(self, eta: int) -> str:
        return str(eta)


class InvariantReport(BaseModel):
    """Value of one invariant, how it was obtained, and a checkable witness."""

    invariant: InvariantName
    value: NonNegativeInt
    mode: SearchMode
    exact: bool
    witness: Optional[Witness] = None
    truncated: bool = False
    norm_bound: Optional[int] = None
    modulus: Optional[int] = None
    cosets_scanned: NonNegativeInt = 0
    elapsed_ms: NonNegativeInt = 0
    label: str = ""
    sign: Literal[1, -1] = 1


class CertificateCheck(BaseModel):
    valid: bool
    problems: Tuple[str, ...] = ()
    eta: Optional[int] = None


# ----- η and its ingredients -------------------------------------------------
def l_form(lattice: Lattice, z: Sequence[int], a: SymMonomial) -> int:
    """L_z(a) = (z·a₁)⋯(z·a_m); the empty product is 1."""
    out = 1
    for factor in a.factors:
        out *= lattice.dot(z, factor)
    return out


def _lw_rows(gram: Sequence[Sequence[int]], w: Sequence[int]) -> List[List[int]]:
    n = len(gram)
    parity = [x & 1 for x in vecmat(w, gram)]
    if not any(parity):
        return identity(n)
    pivot = parity.index(1)
    rows = []
    for j in range(n):
        row = [0] * n
        if j == pivot:
            row[pivot] = 2
        else:
            row[j] = 1
            row[pivot] -= parity[j]
        rows.append(row)
    return rows


def lw_basis(lattice: Lattice, w: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Basis of 𝓛^w = {x : x·w ≡ 0 (mod 2)}, row p replaced by 2e_p for the first odd pairing p."""
    if len(w) != lattice.rank:
        raise PreconditionError(f"vector has {len(w)} coordinates for rank {lattice.rank}")
    return tuple(tuple(row) for row in _lw_rows(lattice.gram, w))


def _extremal_minima(
    lattice: Lattice, w: Sequence[int], budget: Optional[EnumerationBudget]
) -> MinimaResult:
    if len(w) != lattice.rank:
        raise PreconditionError(f"vector has {len(w)} coordinates for rank {lattice.rank}")
    if not any(w):
        raise PreconditionError("η is only defined for nonzero w")
    minima = coset_minima(lattice, CosetClass.of(w), budget)
    if lattice.norm(w) != minima.min_norm:
        raise PreconditionError(
            f"w has norm {lattice.norm(w)} but its class reaches {minima.min_norm}; w is not extremal"
        )
    return minima


def _eta_over(
    lattice: Lattice, w: Sequence[int], a: SymMonomial, minima: MinimaResult, signed: bool
) -> int:
    for factor in a.lw_factors:
        if lattice.dot(w, factor) % 2:
            raise PreconditionError(f"factor {factor} pairs oddly with w")
    norm = minima.min_norm
    total = 0
    for z in minima.vectors:
        term = l_form(lattice, z, a)
        if signed and ((norm + lattice.dot(z, w)) // 2) % 2:
            term = -term
        total += term
    return total // 2


def eta(
    lattice: Lattice,
    w: Sequence[int],
    a: Optional[SymMonomial] = None,
    *,
    signed: bool = True,
    budget: Optional[EnumerationBudget] = None,
) -> int:
    """η(L, w, a) = ½ Σ_{z ∈ Min(w+2L)} (−1)^{((z+w)/2)²} L_z(a).

    With ``signed=False`` every sign is taken as +1.
    """
    minima = _extremal_minima(lattice, w, budget)
    return _eta_over(lattice, w, a or SymMonomial(), minima, signed)


# ----- value formulas and conditions -----------------------------------------
def invariant_value(invariant: str, norm: int, degree: int) -> int:
    """Candidate value contributed by an extremal vector of the given norm at degree m."""
    if invariant in ("m", "f2"):
        return norm - degree - 1
    if invariant == "f4":
        return (norm - degree) // 2
    return -((degree - norm) // 4)


def _potential(invariant: str, norm: int) -> int:
    if invariant in ("m", "f2"):
        return norm - 1
    return invariant_value(invariant, norm, norm % 2)


def condition_holds(
    invariant: str, eta_value: int, monomial: SymMonomial, modulus: Optional[int] = None
) -> bool:
    if invariant in ("m", "f2"):
        scale = 1 << monomial.degree
        return eta_value % scale == 0 and (eta_value // scale) % 2 == 1
    if invariant == "f4":
        scale = 1 << monomial.m0
        return eta_value % scale == 0 and (eta_value // scale) % 4 != 0
    if invariant == "e0":
        return eta_value != 0
    if modulus is None:
        raise ValueError("e_p needs a modulus")
    return eta_value % modulus != 0


def _uses_signs(invariant: str) -> bool:
    return invariant not in ("m", "f2")


def check_modulus(p: int) -> int:
    """Validate the modulus of e_p."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"e_p needs an odd modulus p >= 3, got {p}")
    return p


# ----- per-class evaluation (numpy) ------------------------------------------
# (value, w, (m1, lw indices, full indices), eta, |Min|)
Candidate = Tuple[int, Tuple[int, ...], Tuple[int, Tuple[int, ...], Tuple[int, ...]], int, int]
ClassEntry = Tuple[int, np.ndarray]


def _better(a: Candidate, b: Optional[Candidate]) -> bool:
    if b is None:
        return True
    return (-a[0], a[1], a[2]) < (-b[0], b[1], b[2])


def _smallest_row(vectors: np.ndarray) -> Tuple[int, ...]:
    order = np.lexsort(vectors.T[::-1])
    return tuple(int(x) for x in vectors[order[0]])


def _half(vectors: np.ndarray) -> np.ndarray:
    """One vector from each ±pair: rows whose first nonzero entry is positive."""
    first = (vectors != 0).argmax(axis=1)
    keep = vectors[np.arange(len(vectors)), first] > 0
    return vectors[keep]


def _column_mask(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def _first_odd_subset(masks: List[int], start_mask: int, size: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically first index set whose masks AND to an odd popcount."""
    n = len(masks)

    def walk(start: int, acc: int, chosen: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        if len(chosen) == size:
            return chosen if bin(acc).count("1") % 2 else None
        for j in range(start, n - (size - len(chosen)) + 1):
            nxt = acc & masks[j]
            if nxt:
                found = walk(j + 1, nxt, chosen + (j,))
                if found is not None:
                    return found
        return None

    return walk(0, start_mask, ())


def _combos(n: int, k: int) -> np.ndarray:
    rows = list(combinations_with_replacement(range(n), k))
    return np.array(rows, dtype=np.intp).reshape(len(rows), k)


def _products(table: np.ndarray, combos: np.ndarray, modulus: Optional[int]) -> np.ndarray:
    out = np.ones((table.shape[0], combos.shape[0]), dtype=table.dtype)
    for k in range(combos.shape[1]):
        out = out * table[:, combos[:, k]]
        if modulus is not None:
            out %= modulus
    return out


def _pick_dtype(
    left: np.ndarray, right: np.ndarray, m0: int, m1: int, modulus: Optional[int]
) -> Any:
    rows = max(left.shape[0], 1)
    if modulus is not None:
        return np.int64 if modulus < (1 << 20) else object
    top_left = int(np.abs(left).max()) if left.size else 0
    top_right = int(np.abs(right).max()) if right.size else 0
    bound = max(top_left, 1) ** m0 * max(top_right, 1) ** m1 * rows
    return np.int64 if bound < _INT64_HEADROOM else object


def _first_nonvanishing(
    left: np.ndarray,
    right: np.ndarray,
    signs: np.ndarray,
    m0: int,
    m1: int,
    modulus: Optional[int],
) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """First (left multiset, right multiset) with Σ s·Πleft·Πright ≠ 0 (mod modulus)."""
    dtype = _pick_dtype(left, right, m0, m1, modulus)
    lt, rt, sg = left.astype(dtype), right.astype(dtype), signs.astype(dtype)
    if modulus is not None:
        lt, rt = lt % modulus, rt % modulus
    combos0, combos1 = _combos(left.shape[1], m0), _combos(right.shape[1], m1)
    step = max(1, _BLOCK // max(left.shape[0], 1))
    for i0 in range(0, len(combos0), step):
        p0 = _products(lt, combos0[i0 : i0 + step], modulus) * sg[:, None]
        best: Optional[Tuple[int, int]] = None
        for j0 in range(0, len(combos1), step):
            p1 = _products(rt, combos1[j0 : j0 + step], modulus)
            values = p0.T @ p1
            if modulus is not None:
                values = values % modulus
            hits = np.argwhere(values != 0)
            if len(hits):
                cand = (int(hits[0][0]) + i0, int(hits[0][1]) + j0)
                if best is None or cand < best:
                    best = cand
        if best is not None:
            return (
                tuple(int(x) for x in combos0[best[0]]),
                tuple(int(x) for x in combos1[best[1]]),
            )
    return None


def _exact_sum(signs: np.ndarray, left: np.ndarray, right: np.ndarray, idx0: Sequence[int], idx1: Sequence[int]) -> int:
    total = 0
    for r in range(left.shape[0]):
        term = int(signs[r])
        for i in idx0:
            term *= int(left[r, i])
        for j in idx1:
            term *= int(right[r, j])
        total += term
    return total


def evaluate_class(
    gram: np.ndarray,
    norm: int,
    vectors: np.ndarray,
    invariant: str,
    modulus: Optional[int] = None,
    incumbent: Optional[Candidate] = None,
) -> Optional[Candidate]:
    """Best candidate of one class that beats ``incumbent``, or None."""
    floor = 1 if incumbent is None else incumbent[0]
    potential = _potential(invariant, norm)
    if potential < floor:
        return None
    w = _smallest_row(vectors)
    if incumbent is not None and potential == floor and w > incumbent[1]:
        return None
    half = _half(vectors)
    size = int(half.shape[0])
    if invariant == "m":
        if size % 2 == 0:
            return None
        return (norm - 1, w, (0, (), ()), size, len(vectors))

    paired = half @ gram
    lw = np.array(_lw_rows(gram.tolist(), w), dtype=np.int64)
    lw_pairs = paired @ lw.T
    if (lw_pairs % 2).any():
        raise AssertionError("minimal vector pairs oddly with 𝓛^w")
    halved = lw_pairs // 2

    if invariant == "f2":
        return _evaluate_f2(norm, w, halved, len(vectors), floor)

    signs = np.where(((norm + paired @ np.array(w, dtype=np.int64)) // 2) % 2 == 1, -1, 1)
    test_modulus = 4 if invariant == "f4" else modulus
    for degree in range(norm % 2, norm - 1, 2):
        value = invariant_value(invariant, norm, degree)
        if value < floor:
            return None
        for m1 in range(degree + 1):
            m0 = degree - m1
            if m0 and invariant != "f4":
                continue
            hit = _first_nonvanishing(halved, paired, signs, m0, m1, test_modulus)
            if hit is None:
                continue
            idx0, idx1 = hit
            eta_value = _exact_sum(signs, halved, paired, idx0, idx1) << m0
            return (value, w, (m1, idx0, idx1), eta_value, len(vectors))
    return None


def _evaluate_f2(
    norm: int, w: Tuple[int, ...], halved: np.ndarray, min_size: int, floor: int
) -> Optional[Candidate]:
    odd = (halved % 2).astype(bool)
    size = halved.shape[0]
    everything = (1 << size) - 1
    masks = [_column_mask(odd[:, j]) for j in range(halved.shape[1])]
    degree = 0
    while norm - degree - 1 >= floor:
        hits = []
        for support in ((degree - 1, degree) if degree else (0,)):
            subset = _first_odd_subset(masks, everything, support)
            if subset is not None:
                hits.append(subset if support == degree else (subset[0],) + subset)
        if hits:
            idx = min(hits)
            total = 0
            for r in range(size):
                total += math.prod(int(halved[r, i]) for i in idx)
            return (norm - degree - 1, w, (0, idx, ()), total << degree, min_size)
        degree += 2
    return None


def best_in_chunk(
    gram: List[List[int]],
    entries: List[ClassEntry],
    invariant: str,
    modulus: Optional[int],
) -> Optional[Candidate]:
    g = np.array(gram, dtype=np.int64)
    best: Optional[Candidate] = None
    for norm, vectors in entries:
        cand = evaluate_class(g, norm, vectors, invariant, modulus, best)
        if cand is not None and _better(cand, best):
            best = cand
    return best


# ----- the search service ----------------------------------------------------
def default_mode(rank: int) -> SearchMode:
    """Exhaustive up to rank 16, witness above."""
    return "exhaustive" if rank <= EXHAUSTIVE_RANK_DEFAULT else "witness"


class InvariantSearch:
    """Coset scan of one lattice shared by all five invariants.

    The class table is built on first use and reused, so computing several
    invariants of the same lattice enumerates it once.
    """

    def __init__(
        self,
        lattice: Lattice,
        *,
        mode: Optional[SearchMode] = None,
        norm_bound: int = DEFAULT_NORM_BOUND,
        threads: int = 1,
        budget: Optional[EnumerationBudget] = None,
        witnesses: Sequence[Sequence[int]] = (),
        leaf_cap: int = DEFAULT_LEAF_CAP,
        force: bool = False,
    ) -> None:
        if mode is None:
            mode = "user" if witnesses else default_mode(lattice.rank)
        if mode == "user" and not witnesses:
            raise PreconditionError("user mode needs at least one witness vector")
        if mode == "witness" and norm_bound < 2:
            raise ValueError("witness mode needs a norm bound of at least 2")
        if mode == "exhaustive" and lattice.rank > EXHAUSTIVE_RANK_LIMIT and not force:
            raise PreconditionError(
                f"exhaustive scan of rank {lattice.rank} needs force; 2^{lattice.rank} classes"
            )
        if threads < 1:
            raise ValueError("threads must be at least 1")
        self.lattice = lattice
        self.mode: SearchMode = mode
        self.norm_bound = norm_bound
        self.threads = threads
        self.budget = budget
        self.witnesses = [tuple(w) for w in witnesses]
        self.leaf_cap = leaf_cap
        self.truncated = False
        self._entries: Optional[List[ClassEntry]] = None
        self._scan_ms = 0

    # ------------------------------------------------------------------
    def _from_table(self, table: ClassTable) -> List[ClassEntry]:
        transform = np.array(self.lattice.frame.transform, dtype=np.int64)
        return [
            (norm, np.array(vectors, dtype=np.int64) @ transform)
            for mask, (norm, vectors) in sorted(table.items())
            if mask
        ]

    def entries(self) -> List[ClassEntry]:
        """Nonzero classes with their minimal norm and Min set (original coordinates)."""
        if self._entries is not None:
            return self._entries
        started = time.perf_counter()
        frame = self.lattice.frame
        if self.mode == "user":
            entries = []
            for w in self.witnesses:
                minima = _extremal_minima(self.lattice, w, self.budget)
                entries.append((minima.min_norm, np.array(minima.vectors, dtype=np.int64)))
        elif self.mode == "exhaustive":
            try:
                entries = self._from_table(complete_class_table(frame, self.budget, self.leaf_cap))
            except BudgetExceeded as exc:
                logger.warning(
                    "exhaustive scan of %s ran out of budget (%s); falling back to norm <= %d",
                    self.lattice.label or "lattice",
                    exc,
                    self.norm_bound,
                )
                self.mode = "witness"
                self.truncated = True
                entries = self._from_table(scan_reduced_classes(frame, self.norm_bound))
        else:
            try:
                entries = self._from_table(scan_reduced_classes(frame, self.norm_bound, self.budget))
            except BudgetExceeded as exc:
                logger.warning("witness scan ran out of budget: %s", exc)
                self.truncated = True
                entries = []
        entries.sort(key=lambda e: -e[0])
        self._entries = entries
        self._scan_ms = int((time.perf_counter() - started) * 1000)
        logger.info(
            "%s: %d classes in %s mode (%d ms)",
            self.lattice.label or "lattice",
            len(entries),
            self.mode,
            self._scan_ms,
        )
        return entries

    def _best(self, invariant: str, modulus: Optional[int]) -> Optional[Candidate]:
        entries = self.entries()
        gram = [list(row) for row in self.lattice.gram]
        if self.threads == 1 or len(entries) < 2 * self.threads:
            return best_in_chunk(gram, entries, invariant, modulus)
        chunks = [entries[i :: self.threads] for i in range(self.threads)]
        best: Optional[Candidate] = None
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            futures = [pool.submit(best_in_chunk, gram, chunk, invariant, modulus) for chunk in chunks]
            for future in futures:
                cand = future.result()
                if cand is not None and _better(cand, best):
                    best = cand
        return best

    def _witness(self, cand: Candidate) -> Witness:
        value, w, (_, idx0, idx1), eta_value, min_size = cand
        basis = lw_basis(self.lattice, w)
        unit = identity(self.lattice.rank)
        monomial = SymMonomial.of(lw=[basis[i] for i in idx0], full=[unit[j] for j in idx1])
        return Witness(w=w, monomial=monomial, eta=eta_value, min_set_size=min_size)

    def compute(self, invariant: InvariantName, modulus: Optional[int] = None) -> InvariantReport:
        """Evaluate one invariant over the (cached) class scan."""
        if invariant == "ep":
            modulus = check_modulus(modulus or 0)
        started = time.perf_counter()
        entries = self.entries()
        cand = self._best(invariant, modulus)
        elapsed = int((time.perf_counter() - started) * 1000) + self._scan_ms
        report = InvariantReport(
            invariant=invariant,
            value=0 if cand is None else cand[0],
            mode=self.mode,
            exact=self.mode == "exhaustive" and not self.truncated,
            witness=None if cand is None else self._witness(cand),
            truncated=self.truncated,
            norm_bound=self.norm_bound if self.mode == "witness" else None,
            modulus=modulus if invariant == "ep" else None,
            cosets_scanned=len(entries),
            elapsed_ms=elapsed,
            label=self.lattice.label,
            sign=self.lattice.sign,
        )
        logger.info("%s(%s) = %d (%s)", invariant, self.lattice.label or "lattice", report.value, self.mode)
        return report


def _run(lattice: Lattice, invariant: InvariantName, mode: Optional[SearchMode], modulus: Optional[int] = None, **options: Any) -> InvariantReport:
    return InvariantSearch(lattice, mode=mode, **options).compute(invariant, modulus)


def m_invariant(lattice: Lattice, mode: Optional[SearchMode] = None, **options: Any) -> InvariantReport:
    """max |w²|−1 over extremal w with ½#Min(w+2L) odd."""
    return _run(lattice, "m", mode, **options)


def f2(lattice: Lattice, mode: Optional[SearchMode] = None, **options: Any) -> InvariantReport:
    """max |w²|−m−1 with 2^{−m}η odd, a ∈ Sym^m(𝓛^w).

    On an exact result, m is computed from the same scan and any difference
    between the two is logged.
    """
    search = InvariantSearch(lattice, mode=mode, **options)
    report = search.compute("f2")
    if report.exact:
        m_report = search.compute("m")
        if m_report.value != report.value:
            logger.warning(
                "f2(%s) = %d differs from m = %d", lattice.label or "lattice", report.value, m_report.value
            )
    return report


def f4(lattice: Lattice, mode: Optional[SearchMode] = None, **options: Any) -> InvariantReport:
    """max (|w²|−m)/2 with 2^{−m₀}η ≢ 0 (mod 4)."""
    return _run(lattice, "f4", mode, **options)


def e0(lattice: Lattice, mode: Optional[SearchMode] = None, **options: Any) -> InvariantReport:
    """max ⌈(|w²|−m)/4⌉ with η ≠ 0, a ∈ Sym^m(L)."""
    return _run(lattice, "e0", mode, **options)


def ep(lattice: Lattice, p: int, mode: Optional[SearchMode] = None, **options: Any) -> InvariantReport:
    """e₀ with the condition η ≢ 0 (mod p) for an odd prime-like modulus p."""
    return _run(lattice, "ep", mode, check_modulus(p), **options)


# ----- certificates ----------------------------------------------------------
def verify_certificate(
    lattice: Lattice, report: InvariantReport, budget: Optional[EnumerationBudget] = None
) -> CertificateCheck:
    """Re-derive the reported value from its witness without searching again."""
    witness = report.witness
    if witness is None:
        if report.value:
            return CertificateCheck(valid=False, problems=("nonzero value without a witness",))
        return CertificateCheck(valid=True)
    problems: List[str] = []
    monomial = witness.monomial
    try:
        minima = _extremal_minima(lattice, witness.w, budget)
        eta_value = _eta_over(lattice, witness.w, monomial, minima, _uses_signs(report.invariant))
    except PreconditionError as exc:
        return CertificateCheck(valid=False, problems=(str(exc),))
    norm = minima.min_norm
    if len(minima.vectors) != witness.min_set_size:
        problems.append(f"|Min| is {len(minima.vectors)}, certificate says {witness.min_set_size}")
    if eta_value != witness.eta:
        problems.append(f"η is {eta_value}, certificate says {witness.eta}")
    invariant = report.invariant
    if invariant == "m" and monomial.degree:
        problems.append("m takes no monomial")
    if invariant == "f2" and monomial.m1:
        problems.append("f2 monomials lie in Sym(𝓛^w)")
    if invariant in ("e0", "ep") and monomial.m0:
        problems.append(f"{invariant} monomials lie in Sym(L)")
    if invariant in ("f4", "e0", "ep") and (norm - monomial.degree) % 2:
        problems.append("w² and m have different parity")
    if not condition_holds(invariant, eta_value, monomial, report.modulus):
        problems.append(f"η = {eta_value} fails the {invariant} condition")
    expected = invariant_value(invariant, norm, monomial.degree)
    if expected != report.value:
        problems.append(f"witness gives {expected}, report claims {report.value}")
    return CertificateCheck(valid=not problems, problems=tuple(problems), eta=eta_value)
