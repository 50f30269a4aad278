"""Sparse big-integer polynomials in α, β (or ε) and γ, and the ζ_r relations.

ζ₀ = 1 and ζ_{r+1} = αζ_r + r²(β + (−1)^r·8)ζ_{r−1} + 4r(r−1)γζ_{r−2}. Writing
β = α² + 8ε, the conjecture under test says (2g−3)!!·ζ_g/g! has integer
coefficients and reduces modulo 4 to ±α^g.
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from math import comb, factorial, gcd
from pathlib import Path
from typing import Any, Dict, Iterator, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, field_serializer, model_validator

from .common import coerce_integer

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int, int]
Terms = Dict[Exponent, int]

BETA_VARS = ("alpha", "beta", "gamma")
EPS_VARS = ("alpha", "eps", "gamma")

CHECKPOINT_EVERY = 16

_SYMBOLS = {"alpha": "α", "beta": "β", "eps": "ε", "gamma": "γ"}
_ALIASES = {
    "α": "alpha",
    "alpha": "alpha",
    "a": "alpha",
    "β": "beta",
    "beta": "beta",
    "b": "beta",
    "ε": "eps",
    "eps": "eps",
    "epsilon": "eps",
    "e": "eps",
    "γ": "gamma",
    "gamma": "gamma",
    "g": "gamma",
}
_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_FACTOR = re.compile(r"(alpha|beta|gamma|epsilon|eps|[αβγεabeg])(?:\^(\d+)|([⁰¹²³⁴⁵⁶⁷⁸⁹]+))?")


def _canonical_key(exp: Exponent) -> Tuple[int, int, int, int]:
    # graded: total degree, then α, then γ, then β/ε, all descending
    i, j, k = exp
    return (-(i + j + k), -i, -k, -j)


class ZetaPolynomial(BaseModel):
    """Σ c·α^i·β^j·γ^k (or with ε in place of β) over one positive denominator.

    Zero coefficients are never stored and the denominator is always reduced
    against the coefficients.
    """

    model_config = ConfigDict(frozen=True)

    vars: Tuple[str, str, str] = BETA_VARS
    terms: Dict[Exponent, int] = {}
    denominator: PositiveInt = 1

    @model_validator(mode="before")
    @classmethod
    def _normalise(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        variables = tuple(data.get("vars", BETA_VARS))
        if variables not in (BETA_VARS, EPS_VARS):
            raise ValueError(f"variables must be {BETA_VARS} or {EPS_VARS}, got {variables}")
        raw = data.get("terms", {})
        items = raw.items() if isinstance(raw, dict) else ((t["exp"], t["coef"]) for t in raw)
        terms: Terms = {}
        for exp, coef in items:
            key = tuple(coerce_integer(e) for e in exp)
            if len(key) != 3 or min(key) < 0:
                raise ValueError(f"bad exponent {exp!r}")
            value = coerce_integer(coef)
            if value:
                terms[key] = terms.get(key, 0) + value  # type: ignore[index]
        terms = {k: v for k, v in terms.items() if v}
        den = coerce_integer(data.get("denominator", 1))
        if den <= 0:
            raise ValueError("denominator must be positive")
        common = gcd(den, *terms.values())
        return {
            "vars": variables,
            "terms": {k: v // common for k, v in terms.items()},
            "denominator": den // common,
        }

    @field_serializer("terms")
    def _terms_as_list(self, terms: Terms) -> List[Dict[str, Any]]:
        return [{"exp": list(exp), "coef": str(terms[exp])} for exp in self.ordered()]

    @classmethod
    def of(cls, terms: Terms, variables: Tuple[str, str, str] = BETA_VARS, denominator: int = 1) -> "ZetaPolynomial":
        return cls(vars=variables, terms=terms, denominator=denominator)

    # ------------------------------------------------------------------
    def ordered(self) -> List[Exponent]:
        return sorted(self.terms, key=_canonical_key)

    def coefficient(self, exp: Exponent) -> Fraction:
        return Fraction(self.terms.get(exp, 0), self.denominator)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def restrict_gamma_zero(self) -> "ZetaPolynomial":
        return ZetaPolynomial.of(
            {e: c for e, c in self.terms.items() if e[2] == 0}, self.vars, self.denominator
        )

    def reduce_mod(self, modulus: int) -> "ZetaPolynomial":
        """Coefficients reduced into (−modulus/2, modulus/2]; needs an integral polynomial."""
        if not self.is_integral:
            raise ValueError("only integral polynomials reduce modulo an integer")
        out: Terms = {}
        for exp, coef in self.terms.items():
            r = coef % modulus
            if r > modulus // 2:
                r -= modulus
            if r:
                out[exp] = r
        return ZetaPolynomial.of(out, self.vars)

    # ----- text ---------------------------------------------------------
    def render(self, style: Literal["unicode", "ascii"] = "unicode") -> str:
        minus = "−" if style == "unicode" else "-"
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for exp in self.ordered():
            coef = self.terms[exp]
            factors = _render_factors(exp, self.vars, style)
            magnitude = abs(coef)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude}{factors}" if style == "unicode" else f"{magnitude}*{factors}"
            if not pieces:
                pieces.append(f"{minus}{body}" if coef < 0 else body)
            else:
                pieces.append(f" {minus} {body}" if coef < 0 else f" + {body}")
        text = "".join(pieces)
        if self.denominator != 1:
            text = f"({text})/{self.denominator}"
        return text

    @classmethod
    def parse(cls, text: str, variables: Optional[Tuple[str, str, str]] = None) -> "ZetaPolynomial":
        """Read either rendering back; ε/eps in the text selects the ε variables."""
        body = text.strip().replace("−", "-").replace("·", "*")
        denominator = 1
        match = re.fullmatch(r"\((.*)\)\s*/\s*(\d+)", body)
        if match:
            body, denominator = match.group(1), int(match.group(2))
        terms: Terms = {}
        uses_eps = False
        for sign, chunk in re.findall(r"([+-]?)\s*([^+-]+)", body):
            chunk = chunk.replace("*", "").replace(" ", "")
            if not chunk:
                continue
            digits = re.match(r"\d+", chunk)
            coef = int(digits.group(0)) if digits else 1
            rest = chunk[digits.end() :] if digits else chunk
            exp = [0, 0, 0]
            pos = 0
            while pos < len(rest):
                factor = _FACTOR.match(rest, pos)
                if factor is None:
                    raise ValueError(f"cannot read {rest[pos:]!r} in {text!r}")
                name = _ALIASES[factor.group(1)]
                power = factor.group(2) or (factor.group(3) or "1").translate(_FROM_SUPERSCRIPT)
                slot = {"alpha": 0, "beta": 1, "eps": 1, "gamma": 2}[name]
                uses_eps = uses_eps or name == "eps"
                exp[slot] += int(power)
                pos = factor.end()
            key = (exp[0], exp[1], exp[2])
            terms[key] = terms.get(key, 0) + (-coef if sign == "-" else coef)
        chosen = variables or (EPS_VARS if uses_eps else BETA_VARS)
        return cls.of(terms, chosen, denominator)

    def __str__(self) -> str:
        return self.render()


def _render_factors(exp: Exponent, variables: Tuple[str, str, str], style: str) -> str:
    parts = []
    for slot in (0, 2, 1):
        power = exp[slot]
        if not power:
            continue
        name = variables[slot]
        if style == "unicode":
            symbol = _SYMBOLS[name]
            parts.append(symbol if power == 1 else symbol + str(power).translate(_SUPERSCRIPT))
        else:
            parts.append(name if power == 1 else f"{name}^{power}")
    return "".join(parts) if style == "unicode" else "*".join(parts)


# ----- recursion -------------------------------------------------------------
def _accumulate(target: Terms, source: Terms, factor: int, shift: Exponent) -> None:
    if not factor:
        return
    di, dj, dk = shift
    for (i, j, k), coef in source.items():
        key = (i + di, j + dj, k + dk)
        value = target.get(key, 0) + factor * coef
        if value:
            target[key] = value
        else:
            target.pop(key, None)


class _RecursionTable:
    """ζ₀, ζ₁, … for one choice of coordinates and variant, extended on demand."""

    def __init__(self, eps: bool, with_gamma: bool, classical: bool) -> None:
        self.eps = eps
        self.with_gamma = with_gamma
        self.classical = classical
        self.rows: List[Terms] = [{(0, 0, 0): 1}]

    def upto(self, r: int) -> Terms:
        while len(self.rows) <= r:
            self._extend()
        return self.rows[r]

    def _extend(self) -> None:
        r = len(self.rows) - 1  # computing ζ_{r+1}
        rows = self.rows
        nxt: Terms = {}
        _accumulate(nxt, rows[r], 1, (1, 0, 0))
        if r >= 1:
            constant = 0 if self.classical else (8 if r % 2 == 0 else -8)
            scale = r * r
            if self.eps:
                _accumulate(nxt, rows[r - 1], scale, (2, 0, 0))
                _accumulate(nxt, rows[r - 1], 8 * scale, (0, 1, 0))
            else:
                _accumulate(nxt, rows[r - 1], scale, (0, 1, 0))
            _accumulate(nxt, rows[r - 1], constant * scale, (0, 0, 0))
        if r >= 2 and self.with_gamma:
            _accumulate(nxt, rows[r - 2], 4 * r * (r - 1), (0, 0, 1))
        rows.append(nxt)
        if (r + 1) % 32 == 0:
            logger.debug("ζ_%d has %d terms", r + 1, len(nxt))


_TABLES: Dict[Tuple[bool, bool, bool], _RecursionTable] = {}


def _table(eps: bool, with_gamma: bool, classical: bool) -> _RecursionTable:
    key = (eps, with_gamma, classical)
    if key not in _TABLES:
        _TABLES[key] = _RecursionTable(eps, with_gamma, classical)
    return _TABLES[key]


def _check_index(r: int) -> None:
    if r < 0:
        raise ValueError(f"index must be non-negative, got {r}")


def zeta(r: int, *, classical: bool = False) -> ZetaPolynomial:
    """ζ_r in α, β, γ. ``classical`` drops the (−1)^r·8 term."""
    _check_index(r)
    return ZetaPolynomial.of(dict(_table(False, True, classical).upto(r)))


def zeta_prime(r: int, *, classical: bool = False) -> ZetaPolynomial:
    """ζ′_r: the same recursion with γ = 0."""
    _check_index(r)
    return ZetaPolynomial.of(dict(_table(False, False, classical).upto(r)))


def substitute_epsilon(poly: ZetaPolynomial) -> ZetaPolynomial:
    """Expand β = α² + 8ε."""
    if poly.vars != BETA_VARS:
        raise ValueError("polynomial is already written in ε")
    out: Terms = {}
    for (i, j, k), coef in poly.terms.items():
        for t in range(j + 1):
            key = (i + 2 * (j - t), t, k)
            out[key] = out.get(key, 0) + coef * comb(j, t) * 8**t
    return ZetaPolynomial.of(out, EPS_VARS, poly.denominator)


def double_factorial(n: int) -> int:
    """n!! for odd n >= -1, with (−1)!! = 1."""
    if n < -1 or n % 2 == 0:
        raise ValueError(f"double factorial needs odd n >= -1, got {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def conjecture_poly(g: int, *, classical: bool = False) -> ZetaPolynomial:
    """(2g−3)!!·ζ_g(α, α²+8ε, γ)/g!, reduced."""
    if g < 1:
        raise ValueError(f"genus must be at least 1, got {g}")
    terms = _table(True, True, classical).upto(g)
    scale = double_factorial(2 * g - 3)
    return ZetaPolynomial.of({e: scale * c for e, c in terms.items()}, EPS_VARS, factorial(g))


# ----- certification ---------------------------------------------------------
class CertifiedRelation(BaseModel):
    """Outcome of testing the conjecture at one genus."""

    g: int
    integral: bool
    sign: Optional[Literal[1, -1]] = None
    mod4_poly: Optional[ZetaPolynomial] = None
    n_alpha2_upper: Optional[int] = None
    n_beta4_upper: Optional[int] = None
    offending: Optional[str] = None
    classical: bool = False

    @property
    def passed(self) -> bool:
        return self.integral and self.sign is not None


def _describe(exp: Exponent, coef: Fraction, variables: Tuple[str, str, str]) -> str:
    factors = _render_factors(exp, variables, "unicode") or "1"
    return f"coefficient {coef} of {factors}"


def conjecture_check(g: int, *, classical: bool = False) -> CertifiedRelation:
    poly = conjecture_poly(g, classical=classical)
    if not poly.is_integral:
        for exp in poly.ordered():
            coef = poly.coefficient(exp)
            if coef.denominator != 1:
                offending = _describe(exp, coef, poly.vars)
                break
        logger.warning("g=%d: polynomial is not integral (%s)", g, offending)
        return CertifiedRelation(g=g, integral=False, offending=offending, classical=classical)
    reduced = poly.reduce_mod(4)
    leading = (g, 0, 0)
    sign = reduced.terms.get(leading)
    offending = None
    if sign not in (1, -1):
        offending = _describe(leading, Fraction(poly.terms.get(leading, 0)), poly.vars)
    else:
        for exp in reduced.ordered():
            if exp != leading:
                offending = _describe(exp, Fraction(poly.terms[exp]), poly.vars)
                break
    if offending is not None:
        logger.warning("g=%d: reduction modulo 4 is not ±α^g (%s)", g, offending)
        return CertifiedRelation(
            g=g, integral=True, mod4_poly=reduced, offending=offending, classical=classical
        )
    return CertifiedRelation(
        g=g,
        integral=True,
        sign=sign,  # type: ignore[arg-type]
        mod4_poly=reduced,
        n_alpha2_upper=g,
        n_beta4_upper=(g + 1) // 2,
        classical=classical,
    )


def xi_offence(g: int, *, classical: bool = False) -> Optional[str]:
    """First coefficient of ξ_g/g! breaking the odd-denominator / mod-4 rule, if any."""
    if g < 1:
        raise ValueError(f"genus must be at least 1, got {g}")
    terms = _table(True, False, classical).upto(g)
    scale = factorial(g)
    leading = (g, 0, 0)
    if leading not in terms:
        return "no α^g term"
    for exp in sorted(terms, key=_canonical_key):
        value = Fraction(terms[exp], scale)
        if value.denominator % 2 == 0:
            return _describe(exp, value, EPS_VARS) + " has an even denominator"
        if exp == leading:
            if value.numerator % 2 == 0:
                return _describe(exp, value, EPS_VARS) + " has an even numerator"
        elif value.numerator % 4:
            return _describe(exp, value, EPS_VARS) + " has a numerator not divisible by 4"
    return None


def xi_check(g: int, *, classical: bool = False) -> bool:
    """ξ_g/g! has odd denominators, numerators divisible by 4, and an odd α^g numerator."""
    offence = xi_offence(g, classical=classical)
    if offence is not None:
        logger.warning("ξ check failed at g=%d: %s", g, offence)
    return offence is None


def scaled_zeta_table(g_max: int, *, style: Literal["unicode", "ascii"] = "unicode") -> str:
    """One line per genus: "g  (2g−3)!!ζ_g/g!"."""
    if g_max < 1:
        raise ValueError("g_max must be at least 1")
    return "\n".join(
        f"{g}  {conjecture_poly(g).render(style)}" for g in range(1, g_max + 1)
    )


# ----- long sweeps with checkpoints ------------------------------------------
class SweepEntry(BaseModel):
    g: int
    passed: bool
    sign: Optional[Literal[1, -1]] = None
    offending: Optional[str] = None


class SweepProgress(BaseModel):
    """Results of ``verify_range`` so far; written to disk as JSON."""

    up_to: int
    classical: bool = False
    entries: List[SweepEntry] = []

    @property
    def completed(self) -> int:
        return max((e.g for e in self.entries), default=0)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def iter_checks(start: int, stop: int, *, classical: bool = False) -> Iterator[CertifiedRelation]:
    for g in range(start, stop + 1):
        yield conjecture_check(g, classical=classical)


def verify_range(
    up_to: int, *, classical: bool = False, checkpoint: Optional[Path] = None
) -> SweepProgress:
    """conjecture_check for g = 1..up_to, resuming from and saving to ``checkpoint``."""
    if up_to < 1:
        raise ValueError("up_to must be at least 1")
    progress = SweepProgress(up_to=up_to, classical=classical)
    if checkpoint is not None and checkpoint.exists():
        saved = SweepProgress.model_validate_json(checkpoint.read_text())
        if saved.classical == classical:
            progress = SweepProgress(up_to=up_to, classical=classical, entries=saved.entries)
            logger.info("resuming from g=%d", progress.completed + 1)
    for relation in iter_checks(progress.completed + 1, up_to, classical=classical):
        progress.entries.append(
            SweepEntry(g=relation.g, passed=relation.passed, sign=relation.sign, offending=relation.offending)
        )
        if checkpoint is not None and relation.g % CHECKPOINT_EVERY == 0:
            checkpoint.write_text(progress.model_dump_json(indent=2))
    if checkpoint is not None:
        checkpoint.write_text(progress.model_dump_json(indent=2))
    return progress
