"""Exact arithmetic for values of the colored skein invariant.

Values live in Q(x, w, t) but the skein recursion only ever produces
elements of the form ``P / (1 - t)^k`` with ``P`` an integer Laurent
polynomial.  Keeping that shape avoids multivariate gcds altogether and
gives a canonical form: ``k`` is minimal, i.e. ``P`` is not divisible by
``(1 - t)`` whenever ``k > 0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "SkeinValue",
    "PoleError",
    "SpecializationError",
    "X",
    "W",
    "T",
    "ONE",
    "lp_add",
    "lp_mul",
    "sv_normalize",
    "sv_add",
    "sv_mul",
    "sv_eval",
    "sv_invert_wt",
    "sv_substitute_half",
    "make_y",
    "render",
]

XWT = ("x", "w", "t")


class PoleError(ZeroDivisionError):
    """Evaluation point hits the pole at ``t = 1``."""


class SpecializationError(ArithmeticError):
    """``(1 - s^2)^k`` did not divide the specialized numerator."""


class LaurentPoly:
    """Integer Laurent polynomial with sparse term storage.

    ``terms`` maps exponent tuples (one entry per name in ``names``) to
    nonzero integer coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("terms", "names", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 names: tuple[str, ...] = XWT):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    if len(mono) != len(names):
                        raise ValueError(f"monomial {mono} does not match variables {names}")
                    clean[tuple(mono)] = int(c)
        self.terms: dict[tuple[int, ...], int] = clean
        self.names = tuple(names)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, names: tuple[str, ...] = XWT) -> "LaurentPoly":
        # trusted constructor: terms already free of zero coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.names = names
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, *exps: int, coeff: int = 1, names: tuple[str, ...] = XWT) -> "LaurentPoly":
        if not exps:
            exps = (0,) * len(names)
        return cls({tuple(exps): coeff}, names)

    @classmethod
    def constant(cls, c: int, names: tuple[str, ...] = XWT) -> "LaurentPoly":
        return cls({(0,) * len(names): c}, names)

    # -- basic protocol -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.names)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.names == other.names:
            return self.terms == other.terms
        return self._named_terms() == other._named_terms()

    def _named_terms(self) -> dict:
        # variable-name aware form so polys over different variable lists compare
        out = {}
        for mono, c in self.terms.items():
            key = tuple(sorted((n, e) for n, e in zip(self.names, mono) if e))
            out[key] = c
        return out

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._named_terms().items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.names != other.names:
            raise ValueError(f"variable mismatch: {self.names} vs {other.names}")

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()}, self.names)

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.names)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out, self.names)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.names)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other, self.names) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({}, self.names)
            return LaurentPoly._raw({m: c * other for m, c in self.terms.items()}, self.names)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(i + j for i, j in zip(ma, mb))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly._raw(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (m, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("coefficient is not a unit")
            return LaurentPoly._raw({tuple(-e * -n for e in m): c ** -n}, self.names)
        result = LaurentPoly.constant(1, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, delta: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``delta``."""
        d = tuple(delta)
        return LaurentPoly._raw(
            {tuple(i + j for i, j in zip(m, d)): c for m, c in self.terms.items()},
            self.names)

    def min_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * len(self.names)
        return tuple(min(col) for col in zip(*self.terms))

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        vals = [Fraction(point[n]) for n in self.names]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(vals, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def as_univariate(self, name: str) -> dict[int, int]:
        """Exponent-of-``name`` -> coefficient, requiring every other exponent to vanish."""
        i = self.names.index(name)
        out = {}
        for m, c in self.terms.items():
            if any(e for j, e in enumerate(m) if j != i):
                raise ValueError(f"{self} depends on variables other than {name}")
            out[m[i]] = c
        return out


X = LaurentPoly.monomial(1, 0, 0)
W = LaurentPoly.monomial(0, 1, 0)
T = LaurentPoly.monomial(0, 0, 1)
ONE = LaurentPoly.constant(1)
ONE_MINUS_T = ONE - T


def _group_by_others(terms: dict, axis: int) -> dict:
    groups: dict = {}
    for m, c in terms.items():
        key = m[:axis] + m[axis + 1:]
        groups.setdefault(key, {})[m[axis]] = c
    return groups


def _divide_one_minus(terms: dict, axis: int, step: int = 1) -> dict | None:
    """Exact quotient of ``terms`` by ``(1 - v^step)`` along ``axis``, or None."""
    out = {}
    for key, col in _group_by_others(terms, axis).items():
        lo, hi = min(col), max(col)
        # q_j = p_j + q_{j-step}; remainder-free iff the running sums close out
        q: dict[int, int] = {}
        for j in range(lo, hi + 1):
            v = col.get(j, 0) + q.get(j - step, 0)
            if v:
                q[j] = v
        if any(j > hi - step for j in q):
            return None
        for j, c in q.items():
            out[key[:axis] + (j,) + key[axis:]] = c
    return out


def _divisible_one_minus_t(terms: dict) -> bool:
    sums: dict = {}
    for (ex, ew, _et), c in terms.items():
        sums[ex, ew] = sums.get((ex, ew), 0) + c
    return not any(sums.values())


class SkeinValue:
    """``num / (1 - t)^denom_pow`` in canonical (maximally reduced) form.

    The constructor does not reduce; use :func:`sv_normalize` or the
    arithmetic operators, which always return reduced values.  Equality
    compares reduced forms, so it is equality in Q(x, w, t).
    """

    __slots__ = ("num", "denom_pow")

    def __init__(self, num: LaurentPoly | int, denom_pow: int = 0):
        if isinstance(num, int):
            num = LaurentPoly.constant(num)
        if denom_pow < 0:
            raise ValueError("denominator power must be nonnegative")
        self.num = num
        self.denom_pow = denom_pow

    def is_normalized(self) -> bool:
        if not self.num:
            return self.denom_pow == 0
        return self.denom_pow == 0 or not _divisible_one_minus_t(self.num.terms)

    def normalized(self) -> "SkeinValue":
        return sv_normalize(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = SkeinValue(other)
        if not isinstance(other, SkeinValue):
            return NotImplemented
        a, b = sv_normalize(self), sv_normalize(other)
        return a.denom_pow == b.denom_pow and a.num == b.num

    def __hash__(self) -> int:
        v = sv_normalize(self)
        return hash((v.num, v.denom_pow))

    def __add__(self, other):
        return sv_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "SkeinValue":
        return SkeinValue(-self.num, self.denom_pow)

    def __sub__(self, other):
        return sv_add(self, -_coerce(other))

    def __rsub__(self, other):
        return sv_add(_coerce(other), -self)

    def __mul__(self, other):
        return sv_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SkeinValue({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _coerce(v) -> SkeinValue:
    if isinstance(v, SkeinValue):
        return v
    if isinstance(v, (int, LaurentPoly)):
        return SkeinValue(v)
    raise TypeError(f"cannot use {type(v).__name__} as a skein value")


# -- named operations ---------------------------------------------------

def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def sv_normalize(v: SkeinValue) -> SkeinValue:
    """Cancel common factors of ``(1 - t)`` between numerator and denominator."""
    num, k = v.num, v.denom_pow
    if not num.terms:
        return SkeinValue(num, 0)
    terms = num.terms
    while k and _divisible_one_minus_t(terms):
        terms = _divide_one_minus(terms, 2)
        k -= 1
    if k == v.denom_pow:
        return v
    return SkeinValue(LaurentPoly._raw(terms), k)


def _one_minus_t_pow(k: int) -> LaurentPoly:
    return ONE_MINUS_T ** k


def sv_add(a: SkeinValue, b: SkeinValue) -> SkeinValue:
    if not a.num:
        return sv_normalize(b)
    if not b.num:
        return sv_normalize(a)
    k = max(a.denom_pow, b.denom_pow)
    na = a.num if a.denom_pow == k else a.num * _one_minus_t_pow(k - a.denom_pow)
    nb = b.num if b.denom_pow == k else b.num * _one_minus_t_pow(k - b.denom_pow)
    return sv_normalize(SkeinValue(na + nb, k))


def sv_mul(a: SkeinValue, b: SkeinValue) -> SkeinValue:
    return sv_normalize(SkeinValue(a.num * b.num, a.denom_pow + b.denom_pow))


def make_y() -> SkeinValue:
    """``x (t w^2 - 1) / (1 - t)``: the factor picked up per extra same-colored unlinked circle."""
    return SkeinValue(X * (T * W * W - 1), 1)


def sv_eval(v: SkeinValue, x0, w0, t0) -> Fraction:
    """Exact rational value at ``(x0, w0, t0)``."""
    t0 = Fraction(t0)
    if v.denom_pow and t0 == 1:
        raise PoleError("value has a pole at t = 1")
    num = v.num.evaluate({"x": x0, "w": w0, "t": t0})
    return num / (1 - t0) ** v.denom_pow


def sv_invert_wt(v: SkeinValue) -> SkeinValue:
    """Substitute ``w -> 1/w`` and ``t -> 1/t``.

    ``(1 - 1/t)^k = (-1)^k t^-k (1 - t)^k`` so the denominator shape is kept.
    """
    k = v.denom_pow
    sign = -1 if k % 2 else 1
    terms = {(ex, -ew, -et + k): sign * c for (ex, ew, et), c in v.num.terms.items()}
    return sv_normalize(SkeinValue(LaurentPoly._raw(terms), k))


def sv_substitute_half(v: SkeinValue) -> LaurentPoly:
    """Specialize ``w = s``, ``t = s^2`` and clear the ``(1 - s^2)^k`` denominator exactly.

    Returns a Laurent polynomial in ``(x, s)``.
    """
    terms: dict = {}
    for (ex, ew, et), c in v.num.terms.items():
        m = (ex, ew + 2 * et)
        s = terms.get(m, 0) + c
        if s:
            terms[m] = s
        else:
            terms.pop(m, None)
    for _ in range(v.denom_pow):
        if not terms:
            break
        q = _divide_one_minus(terms, 1, step=2)
        if q is None:
            raise SpecializationError(
                f"(1 - s^2) does not divide the specialization of {render(v)}")
        terms = q
    return LaurentPoly._raw(terms, ("x", "s"))


# -- rendering ------------------------------------------------------------

# print order of variables inside a monomial, and the term-sorting priority
_PRINT_ORDER = {"x": 1, "w": 0, "t": 2, "s": 3}
_SORT_PRIORITY = ("w", "t", "x", "s")


def _mono_str(names: tuple[str, ...], mono: tuple[int, ...]) -> str:
    parts = []
    for i in sorted(range(len(names)), key=lambda i: _PRINT_ORDER.get(names[i], 9)):
        e = mono[i]
        if e == 1:
            parts.append(names[i])
        elif e:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts)


def _term_str(c: int, mono_s: str) -> str:
    if not mono_s:
        return str(c)
    if c == 1:
        return mono_s
    if c == -1:
        return "-" + mono_s
    return f"{c}*{mono_s}"


def _sort_key(names: tuple[str, ...]):
    order = [names.index(n) for n in _SORT_PRIORITY if n in names]
    return lambda item: tuple(item[0][i] for i in order)


def format_poly(p: LaurentPoly) -> str:
    """Plain sum-of-terms rendering, highest terms first."""
    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=_sort_key(p.names), reverse=True)
    out = []
    for i, (mono, c) in enumerate(items):
        s = _term_str(abs(c), _mono_str(p.names, mono))
        if i == 0:
            out.append(s if c > 0 else "-" + s)
        else:
            out.append((" + " if c > 0 else " - ") + s)
    return "".join(out)


def render(v: SkeinValue | LaurentPoly) -> str:
    """Canonical text form ``N / ((1-t)^k*w^b*x^a*t^c)``.

    The monomial part of the denominator is pulled out so that ``N`` has
    nonnegative exponents and no common monomial factor.  A common
    monomial factor with positive exponents stays in front of ``N``.
    """
    if isinstance(v, LaurentPoly):
        if v.names != XWT:
            return format_poly(v)
        v = SkeinValue(v)
    v = sv_normalize(v)
    num = v.num
    if not num.terms:
        return "0"
    names = num.names
    mins = num.min_exponents()
    core = num.shift(tuple(-m for m in mins))
    up = tuple(max(m, 0) for m in mins)
    down = tuple(max(-m, 0) for m in mins)
    up_s = _mono_str(names, up)

    if len(core.terms) == 1:
        (_, c), = core.terms.items()
        numer = _term_str(c, up_s)
        multi = False
    else:
        numer = format_poly(core)
        multi = True
        if up_s:
            numer = f"{up_s}*({numer})"
            multi = False

    den = []
    if v.denom_pow == 1:
        den.append("(1-t)")
    elif v.denom_pow > 1:
        den.append(f"(1-t)^{v.denom_pow}")
    down_s = _mono_str(names, down)
    if down_s:
        den.append(down_s)
    if not den:
        return numer
    den_s = "*".join(den)
    if len(den) > 1 or "*" in den_s:
        den_s = f"({den_s})"
    if multi:
        numer = f"({numer})"
    return f"{numer} / {den_s}"
