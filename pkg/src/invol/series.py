"""Exact truncated power series and the named counting series.

All arithmetic is over ``fractions.Fraction``; nothing here is floating
point.  Univariate series track a truncation order N (coefficients c0..cN);
bivariate series truncate independently in x and y.  Ratios with an x^2
denominator are computed by expanding the numerator, checking that the two
lowest coefficients vanish exactly, and shifting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

DEFAULT_ORDER = 24

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DivisionByNonUnit(ArithmeticError):
    pass


class BadConstantTerm(ArithmeticError):
    pass


class NonzeroInnerConstant(ArithmeticError):
    pass


class InternalMismatch(ArithmeticError):
    """Two independent derivations of the same series disagree."""


class UnknownSeries(KeyError):
    pass


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact arithmetic only; got {type(value).__name__}")


class Series:
    """Truncated univariate power series with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        self.coeffs = tuple(_frac(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls([_frac(c)] + [_ZERO] * order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.monomial(1, 1, order)

    @classmethod
    def monomial(cls, degree: int, c, order: int) -> "Series":
        coeffs = [_ZERO] * (order + 1)
        if degree <= order:
            coeffs[degree] = _frac(c)
        return cls(coeffs)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence, order: int) -> "Series":
        vals = [_frac(c) for c in coeffs[: order + 1]]
        vals += [_ZERO] * (order + 1 - len(vals))
        return cls(vals)

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({self.pretty()})"

    def _coerce(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return Series([a + b for a, b in zip(self.coeffs[: n + 1], rhs.coeffs[: n + 1])])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return Series([a * c for a in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n - i + 1):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Series.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if c == 0:
                raise DivisionByNonUnit("division by zero")
            return Series([a / c for a in self.coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        if other.coeffs[0] == 0:
            raise DivisionByNonUnit("divisor has zero constant term")
        n = min(self.order, other.order)
        b0 = other.coeffs[0]
        out = [_ZERO] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(k):
                bj = other.coeffs[k - i]
                if bj:
                    acc -= out[i] * bj
            out[k] = acc / b0
        return Series(out)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order) / self
        return NotImplemented

    def sqrt(self) -> "Series":
        """Square root with constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm(f"sqrt needs constant term 1, got {self.coeffs[0]}")
        n = self.order
        out = [_ZERO] * (n + 1)
        out[0] = _ONE
        for k in range(1, n + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc -= out[i] * out[k - i]
            out[k] = acc / 2
        return Series(out)

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` (zero constant term) for the variable."""
        if inner.coeffs[0] != 0:
            raise NonzeroInnerConstant("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = Series.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner.truncate(n) + self.coeffs[k]
        return result

    def shift_down(self, k: int) -> "Series":
        """Exact division by x^k; nonzero low-order coefficients are a hard error."""
        for i in range(k):
            if self.coeffs[i] != 0:
                raise InternalMismatch(
                    f"x^{k} division leaves residue {self.coeffs[i]} at degree {i}"
                )
        return Series(self.coeffs[k:])

    def shift_up(self, k: int) -> "Series":
        """Multiply by x^k, extending the truncation order accordingly."""
        return Series((_ZERO,) * k + self.coeffs)

    def pretty(self, var: str = "x") -> str:
        parts = [str(self.coeffs[0])]
        for i, c in enumerate(self.coeffs[1:], start=1):
            mono = var if i == 1 else f"{var}^{i}"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def coefficient_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


class BivarSeries:
    """Series in x and y, truncated at x-degree <= x_order, y-degree <= y_order."""

    __slots__ = ("grid",)

    def __init__(self, grid: Sequence[Sequence[Fraction | int]]):
        self.grid = tuple(tuple(_frac(c) for c in row) for row in grid)
        if not self.grid or any(len(r) != len(self.grid[0]) for r in self.grid):
            raise ValueError("grid must be rectangular and nonempty")

    @property
    def x_order(self) -> int:
        return len(self.grid) - 1

    @property
    def y_order(self) -> int:
        return len(self.grid[0]) - 1

    @classmethod
    def zero(cls, x_order: int, y_order: int) -> "BivarSeries":
        return cls([[_ZERO] * (y_order + 1) for _ in range(x_order + 1)])

    @classmethod
    def one(cls, x_order: int, y_order: int) -> "BivarSeries":
        return cls.monomial(0, 0, 1, x_order, y_order)

    @classmethod
    def monomial(cls, i: int, j: int, c, x_order: int, y_order: int) -> "BivarSeries":
        grid = [[_ZERO] * (y_order + 1) for _ in range(x_order + 1)]
        if i <= x_order and j <= y_order:
            grid[i][j] = _frac(c)
        return cls(grid)

    def coefficient(self, n: int, k: int) -> Fraction:
        if not (0 <= n <= self.x_order and 0 <= k <= self.y_order):
            raise IndexError(f"coefficient ({n},{k}) beyond truncation")
        return self.grid[n][k]

    def y_polynomial(self, n: int) -> tuple[Fraction, ...]:
        """Coefficients in y of the x^n term, trailing zeros trimmed."""
        row = list(self.grid[n])
        while len(row) > 1 and row[-1] == 0:
            row.pop()
        return tuple(row)

    def truncate(self, x_order: int, y_order: int) -> "BivarSeries":
        if x_order > self.x_order or y_order > self.y_order:
            raise ValueError("cannot extend a truncated series")
        return BivarSeries([row[: y_order + 1] for row in self.grid[: x_order + 1]])

    def at_y(self, value) -> Series:
        """Univariate slice in x at an exact y value."""
        v = _frac(value)
        out = []
        for row in self.grid:
            acc = _ZERO
            power = _ONE
            for c in row:
                acc += c * power
                power *= v
            out.append(acc)
        return Series(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarSeries) and self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def _coerce(self, other) -> "BivarSeries | None":
        if isinstance(other, BivarSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return BivarSeries.monomial(0, 0, other, self.x_order, self.y_order)
        return None

    def _aligned(self, other: "BivarSeries") -> tuple[int, int]:
        return min(self.x_order, other.x_order), min(self.y_order, other.y_order)

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        nx, ny = self._aligned(rhs)
        return BivarSeries(
            [
                [self.grid[i][j] + rhs.grid[i][j] for j in range(ny + 1)]
                for i in range(nx + 1)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return BivarSeries([[-c for c in row] for row in self.grid])

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return BivarSeries([[a * c for a in row] for row in self.grid])
        if not isinstance(other, BivarSeries):
            return NotImplemented
        nx, ny = self._aligned(other)
        out = [[_ZERO] * (ny + 1) for _ in range(nx + 1)]
        for i in range(nx + 1):
            for j in range(ny + 1):
                a = self.grid[i][j]
                if not a:
                    continue
                for ii in range(nx - i + 1):
                    row_b = other.grid[ii]
                    for jj in range(ny - j + 1):
                        b = row_b[jj]
                        if b:
                            out[i + ii][j + jj] += a * b
        return BivarSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if c == 0:
                raise DivisionByNonUnit("division by zero")
            return BivarSeries([[a / c for a in row] for row in self.grid])
        if not isinstance(other, BivarSeries):
            return NotImplemented
        if other.grid[0][0] == 0:
            raise DivisionByNonUnit("divisor has zero constant term")
        nx, ny = self._aligned(other)
        b00 = other.grid[0][0]
        out = [[_ZERO] * (ny + 1) for _ in range(nx + 1)]
        for n in range(nx + 1):
            for k in range(ny + 1):
                acc = self.grid[n][k]
                for i in range(n + 1):
                    row_b = other.grid[i]
                    for j in range(k + 1):
                        if i == 0 and j == 0:
                            continue
                        b = row_b[j]
                        if b:
                            acc -= b * out[n - i][k - j]
                out[n][k] = acc / b00
        return BivarSeries(out)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivarSeries.monomial(0, 0, other, self.x_order, self.y_order) / self
        return NotImplemented

    def sqrt(self) -> "BivarSeries":
        if self.grid[0][0] != 1:
            raise BadConstantTerm(f"sqrt needs constant term 1, got {self.grid[0][0]}")
        nx, ny = self.x_order, self.y_order
        out = [[_ZERO] * (ny + 1) for _ in range(nx + 1)]
        out[0][0] = _ONE
        for n in range(nx + 1):
            for k in range(ny + 1):
                if n == 0 and k == 0:
                    continue
                acc = self.grid[n][k]
                for i in range(n + 1):
                    row_s = out[i]
                    for j in range(k + 1):
                        if (i, j) == (0, 0) or (i, j) == (n, k):
                            continue
                        s = row_s[j]
                        if s:
                            acc -= s * out[n - i][k - j]
                out[n][k] = acc / 2
        return BivarSeries(out)

    def shift_x_down(self, k: int) -> "BivarSeries":
        for i in range(k):
            if any(c != 0 for c in self.grid[i]):
                raise InternalMismatch(f"x^{k} division leaves residue at x-degree {i}")
        return BivarSeries(self.grid[k:])

    def pretty(self) -> list[str]:
        lines = []
        for n in range(self.x_order + 1):
            poly = Series(self.y_polynomial(n)).pretty("y")
            lines.append(f"x^{n}: {poly}")
        return lines

    def coefficient_string_rows(self) -> list[list[str]]:
        return [[str(c) for c in self.y_polynomial(n)] for n in range(self.x_order + 1)]


def _assert_counting(series: Series, name: str) -> Series:
    for n, c in enumerate(series.coeffs):
        if c.denominator != 1 or c < 0:
            raise InternalMismatch(f"{name}: coefficient {c} at degree {n} is not a count")
    return series


def _assert_counting_bivar(series: BivarSeries, name: str) -> BivarSeries:
    for n, row in enumerate(series.grid):
        for k, c in enumerate(row):
            if c.denominator != 1 or c < 0:
                raise InternalMismatch(f"{name}: coefficient at x^{n}y^{k} is {c}")
    return series


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InternalMismatch(message)


# ----------------------------------------------------------------------------
# Involutions avoiding 4321 (equivalently 3412): the Motzkin series and its
# fine partition f = x + alpha + beta + gamma + delta.
# ----------------------------------------------------------------------------


def gf_I4321(order: int = DEFAULT_ORDER) -> Series:
    """Counting series of I(4321): -1 + (1 - x - sqrt(1-2x-3x^2)) / (2x^2)."""
    x = Series.x(order + 2)
    radical = (1 - 2 * x - 3 * x**2).sqrt()
    f = (1 - x - radical).shift_down(2) / 2 - 1
    return _assert_counting(f, "I4321")


def gf_beta_I4321(order: int = DEFAULT_ORDER) -> Series:
    """Inflations of 21 inside I(4321): x^2 / ((1-x^2)(1-x))."""
    x = Series.x(order)
    beta = x**2 / ((1 - x**2) * (1 - x))
    return _assert_counting(beta, "beta_I4321")


def gf_gamma_plus_delta(order: int = DEFAULT_ORDER) -> Series:
    """Simple involutions of I(4321) together with their inflations.

    Computed both as (f+1)*x^2 - beta and from the closed radical form; the
    two derivations must agree exactly.
    """
    x = Series.x(order)
    f = gf_I4321(order)
    via_identity = ((f + 1).shift_up(2) - gf_beta_I4321(order + 2)).truncate(order)
    closed = (
        2
        - 2 * x
        + 3 / (1 - x)
        - 2 / (1 - x) ** 2
        - 1 / (1 + x)
        - 2 * (1 - 2 * x - 3 * x**2).sqrt()
    ) / 4
    _require(via_identity == closed, "gamma+delta: identity and radical form disagree")
    return _assert_counting(closed, "gamma_plus_delta")


def gf_gamma_x(order: int = DEFAULT_ORDER) -> Series:
    """Simple involutions of I(4321) of length > 2, counted by length."""
    x = Series.x(order)
    radical_arg = -4 + 4 / (1 + x**2) + 1 / (1 + x) ** 2
    gamma = (1 / (1 + x) - 2 * x**2 * (1 + x) - radical_arg.sqrt()) / 2
    return _assert_counting(gamma, "gamma_x")


def gf_delta_I4321(order: int = DEFAULT_ORDER) -> Series:
    delta = gf_gamma_plus_delta(order) - gf_gamma_x(order)
    return _assert_counting(delta, "delta_I4321")


def gf_system_I4321(order: int = DEFAULT_ORDER) -> dict[str, Series]:
    """The fine partition of I(4321), with alpha recovered from the quadratic
    relation alpha = (f - alpha) * f and everything back-substituted.
    """
    x = Series.x(order)
    f = gf_I4321(order)
    beta = gf_beta_I4321(order)
    gamma_delta = gf_gamma_plus_delta(order)
    alpha = f * f / (1 + f)
    _require(f == x + alpha + beta + gamma_delta, "I4321 partition does not sum to f")
    _require(
        alpha == (x + beta + gamma_delta) * (x + alpha + beta + gamma_delta),
        "I4321 alpha fails its quadratic relation",
    )
    return {
        "f": f,
        "alpha": _assert_counting(alpha, "alpha_I4321"),
        "beta": beta,
        "gamma_plus_delta": gamma_delta,
    }


# ----------------------------------------------------------------------------
# Fixed-point refinements (bivariate; y marks fixed points).
# ----------------------------------------------------------------------------


def gf_f_xy(order: int = DEFAULT_ORDER) -> BivarSeries:
    """Involutions of I(4321) by length (x) and fixed points (y); the y=1
    slice is 1 + gf_I4321 (this series includes the empty-involution 1).
    """
    nx = order + 2
    one = BivarSeries.one(nx, nx)
    xy = BivarSeries.monomial(1, 1, 1, nx, nx)
    x2 = BivarSeries.monomial(2, 0, 1, nx, nx)
    x2y2 = BivarSeries.monomial(2, 2, 1, nx, nx)
    radical = (one - 2 * xy + x2y2 - 4 * x2).sqrt()
    f = (one - xy - radical).shift_x_down(2) / 2
    return _assert_counting_bivar(f.truncate(order, order), "f_xy")


def gf_gamma_plus_delta_xy(order: int = DEFAULT_ORDER) -> BivarSeries:
    """Simple involutions and their inflations, by length and fixed points."""
    one = BivarSeries.one(order, order)
    xy = BivarSeries.monomial(1, 1, 1, order, order)
    x2 = BivarSeries.monomial(2, 0, 1, order, order)
    x2y2 = BivarSeries.monomial(2, 2, 1, order, order)
    radical = (one - 2 * xy + x2y2 - 4 * x2).sqrt()
    gd = (one - xy - radical) / 2 - x2 / ((one - x2) * (one - xy))
    return _assert_counting_bivar(gd, "gamma_plus_delta_xy")


def gf_gamma_xy(order: int = DEFAULT_ORDER) -> BivarSeries:
    """Simple involutions of I(4321), x^2 marking a transposition and y a
    fixed point (so a term x^n y^k counts simples of length n + k).
    """
    one = BivarSeries.one(order, order)
    y1 = one + BivarSeries.monomial(0, 1, 1, order, order)
    x2 = BivarSeries.monomial(2, 0, 1, order, order)
    radical_arg = -4 * one + 4 * (one / (one + x2)) + one / (y1 * y1)
    gamma = (one / y1 - 2 * x2 * y1 - radical_arg.sqrt()) / 2
    return _assert_counting_bivar(gamma, "gamma_xy")


def gf_gamma_plus_delta_transposition_marked(order: int = DEFAULT_ORDER) -> BivarSeries:
    """gamma+delta in the same variables as gf_gamma_xy (x^2 per transposition,
    y per fixed point): 1/2 (1 - y - sqrt((1-y)^2 - 4x^2)) - x^2/((1-x^2)(1-y)).
    """
    one = BivarSeries.one(order, order)
    y = BivarSeries.monomial(0, 1, 1, order, order)
    x2 = BivarSeries.monomial(2, 0, 1, order, order)
    radical = ((one - y) * (one - y) - 4 * x2).sqrt()
    gd = (one - y - radical) / 2 - x2 / ((one - x2) * (one - y))
    return _assert_counting_bivar(gd, "gamma_plus_delta_transposition_marked")


def verify_inflation_identity(order: int = 14) -> None:
    """Substituting x^2 -> x^2/(1-x^2) and y -> y/(1-y) into gf_gamma_xy must
    reproduce the transposition-marked gamma+delta series exactly.
    """
    gamma = gf_gamma_xy(order)
    for n in range(1, order + 1, 2):
        _require(
            all(c == 0 for c in gamma.grid[n]),
            "gamma_xy has an odd-degree x term",
        )
    t_max = order // 2
    u = BivarSeries.monomial(1, 0, 1, t_max, order)
    u = u / (BivarSeries.one(t_max, order) - u)  # X/(1-X) with X standing for x^2
    v = BivarSeries.monomial(0, 1, 1, t_max, order)
    v = v / (BivarSeries.one(t_max, order) - v)
    u_pows = [BivarSeries.one(t_max, order)]
    for _ in range(t_max):
        u_pows.append(u_pows[-1] * u)
    v_pows = [BivarSeries.one(t_max, order)]
    for _ in range(order):
        v_pows.append(v_pows[-1] * v)
    result = BivarSeries.zero(t_max, order)
    for t in range(t_max + 1):
        row = BivarSeries.zero(t_max, order)
        for k in range(order + 1):
            c = gamma.grid[2 * t][k]
            if c:
                row = row + v_pows[k] * c
        result = result + row * u_pows[t]
    expanded = [[_ZERO] * (order + 1) for _ in range(order + 1)]
    for t in range(t_max + 1):
        expanded[2 * t] = list(result.grid[t])
    substituted = BivarSeries(expanded)
    target = gf_gamma_plus_delta_transposition_marked(order)
    _require(
        substituted.truncate(2 * t_max, order) == target.truncate(2 * t_max, order),
        "inflation identity fails",
    )


# ----------------------------------------------------------------------------
# Double avoidance classes.
# ----------------------------------------------------------------------------


def system_I4321_132(order: int = DEFAULT_ORDER) -> dict[str, Series]:
    x = Series.x(order)
    beta = x**2 / ((1 - x**2) * (1 - x))
    alpha = (x + beta) * (x / (1 - x))
    f = x + alpha + beta
    closed = (x - x**3 + x**4) / ((1 - x) ** 3 * (1 + x))
    _require(f == closed, "I(4321,132): system and closed form disagree")
    return {"f": _assert_counting(f, "I4321_132"), "alpha": alpha, "beta": beta}


def system_I4321_312(order: int = DEFAULT_ORDER) -> dict[str, Series]:
    x = Series.x(order)
    beta = x**2 + x**3
    f = (x + beta) / (1 - x - beta)
    alpha = (x + beta) * f
    _require(f == x + alpha + beta, "I(4321,312): partition does not sum to f")
    closed = (x + x**2 + x**3) / (1 - x - x**2 - x**3)
    _require(f == closed, "I(4321,312): system and closed form disagree")
    return {"f": _assert_counting(f, "I4321_312"), "alpha": alpha, "beta": beta}


def system_I3412_123(order: int = DEFAULT_ORDER) -> dict[str, Series]:
    x = Series.x(order)
    alpha = (x + x**2 / (1 - x)) * (x / (1 - x))
    f = (x + x**2 + alpha) / (1 - x**2)
    beta = x**2 * f + x**2
    _require(f == x + alpha + beta, "I(3412,123): partition does not sum to f")
    closed = (x - x**3 + x**4) / ((1 - x) ** 3 * (1 + x))
    _require(f == closed, "I(3412,123): system and closed form disagree")
    return {"f": _assert_counting(f, "I3412_123"), "alpha": alpha, "beta": beta}


def system_I3412_1234(order: int = DEFAULT_ORDER) -> dict[str, Series]:
    x = Series.x(order)
    g = system_I3412_123(order)["f"]
    xr = x / (1 - x)
    alpha = (g * x**2 + x**2 - x**2 / (1 - x)) * xr + xr * g
    f = (x + x**2 + alpha) / (1 - x**2)
    beta = x**2 * f + x**2
    _require(f == x + alpha + beta, "I(3412,1234): partition does not sum to f")
    numerator = x * (1 - x - x**2 + 3 * x**3 + x**4 - 2 * x**5 + x**6)
    closed = numerator / ((1 - x) ** 5 * (1 + x) ** 2)
    _require(f == closed, "I(3412,1234): system and closed form disagree")
    return {"f": _assert_counting(f, "I3412_1234"), "alpha": alpha, "beta": beta}


def system_I3412_132(order: int = DEFAULT_ORDER) -> dict[str, Series]:
    x = Series.x(order)
    lhs = 1 - x**2 - x**3 / (1 - x)
    rhs = x + x**2 + (x + x**2) * (x / (1 - x))
    f = rhs / lhs
    beta = x**2 * f + x**2
    alpha = (x + beta) * (x / (1 - x))
    _require(f == x + alpha + beta, "I(3412,132): partition does not sum to f")
    closed = x * (1 + x) / (1 - x - x**2)
    _require(f == closed, "I(3412,132): system and closed form disagree")
    return {"f": _assert_counting(f, "I3412_132"), "alpha": alpha, "beta": beta}


def gf_I4321_132(order: int = DEFAULT_ORDER) -> Series:
    return system_I4321_132(order)["f"]


def gf_I4321_312(order: int = DEFAULT_ORDER) -> Series:
    return system_I4321_312(order)["f"]


def gf_I3412_123(order: int = DEFAULT_ORDER) -> Series:
    return system_I3412_123(order)["f"]


def gf_I3412_1234(order: int = DEFAULT_ORDER) -> Series:
    return system_I3412_1234(order)["f"]


def gf_I3412_132(order: int = DEFAULT_ORDER) -> Series:
    return system_I3412_132(order)["f"]


UNIVARIATE_SERIES: dict[str, Callable[[int], Series]] = {
    "I4321": gf_I4321,
    "I3412": gf_I4321,  # same counting series for both classes
    "alpha_I4321": lambda order: gf_system_I4321(order)["alpha"],
    "beta_I4321": gf_beta_I4321,
    "gamma_x": gf_gamma_x,
    "delta_I4321": gf_delta_I4321,
    "gamma_plus_delta": gf_gamma_plus_delta,
    "I4321_132": gf_I4321_132,
    "I4321_312": gf_I4321_312,
    "I3412_123": gf_I3412_123,
    "I3412_1234": gf_I3412_1234,
    "I3412_132": gf_I3412_132,
    "I3412_213": gf_I3412_132,  # mirror class, same equations
}

BIVARIATE_SERIES: dict[str, Callable[[int], BivarSeries]] = {
    "f_xy": gf_f_xy,
    "gamma_plus_delta_xy": gf_gamma_plus_delta_xy,
    "gamma_xy": gf_gamma_xy,
}


def series_by_name(name: str, order: int = DEFAULT_ORDER) -> Series:
    try:
        builder = UNIVARIATE_SERIES[name]
    except KeyError:
        raise UnknownSeries(name) from None
    return builder(order)


def bivariate_by_name(name: str, order: int = DEFAULT_ORDER) -> BivarSeries:
    try:
        builder = BIVARIATE_SERIES[name]
    except KeyError:
        raise UnknownSeries(name) from None
    return builder(order)
