"""Real critical points of cubic polynomials in three variables.

Polynomials carry exact rational coefficients.  All eight complex critical
points are found by total-degree homotopy continuation on the gradient
system, the real ones are polished by Newton's method, and degenerate
points are refined in extended precision.  A deflated multistart Newton
search over the reals is kept as an independent second route.
"""

from __future__ import annotations

import ast
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from fractions import Fraction
from importlib import resources
from typing import Mapping, Sequence

import mpmath
import numpy as np

from .invariants import Passport

Exponent = tuple[int, int, int]

MONOMIALS: tuple[Exponent, ...] = tuple(
    (i, j, d - i - j) for d in range(4) for i in range(d, -1, -1) for j in range(d - i, -1, -1))
_POS = {m: n for n, m in enumerate(MONOMIALS)}
_EXP = np.array(MONOMIALS)
VARS = ("x", "y", "z")


def _derivative_matrix(k: int) -> np.ndarray:
    """Linear map on coefficient vectors taking f to df/d(var k)."""
    D = np.zeros((len(MONOMIALS), len(MONOMIALS)))
    for n, m in enumerate(MONOMIALS):
        if m[k]:
            lower = list(m)
            lower[k] -= 1
            D[_POS[tuple(lower)], n] = m[k]
    return D


_D = [_derivative_matrix(k) for k in range(3)]


def _monomial_values(x) -> np.ndarray:
    x = np.asarray(x)
    return np.prod(x[..., None, :] ** _EXP, axis=-1)


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class CubicPolynomial:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(MONOMIALS):
            raise PolynomialError(f"expected {len(MONOMIALS)} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_terms(cls, terms: Mapping[Exponent, Fraction | int]) -> "CubicPolynomial":
        c = [Fraction(0)] * len(MONOMIALS)
        for m, v in terms.items():
            if m not in _POS:
                raise PolynomialError(f"monomial {m} has degree above 3")
            c[_POS[m]] += Fraction(v)
        return cls(tuple(c))

    @classmethod
    def parse(cls, text: str, **params) -> "CubicPolynomial":
        return cls.from_terms(_evaluate(text, {k: Fraction(v) for k, v in params.items()}))

    def terms(self) -> dict[Exponent, Fraction]:
        return {m: c for m, c in zip(MONOMIALS, self.coeffs) if c}

    @cached_property
    def vector(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    @cached_property
    def _grad_coeffs(self) -> np.ndarray:
        return np.stack([D @ self.vector for D in _D], axis=1)

    @cached_property
    def _hess_coeffs(self) -> np.ndarray:
        return np.stack([Di @ Dj @ self.vector for Di in _D for Dj in _D], axis=1)

    def __call__(self, x) -> complex | float:
        return _monomial_values(x) @ self.vector

    def gradient(self, x) -> np.ndarray:
        return _monomial_values(x) @ self._grad_coeffs

    def hessian(self, x) -> np.ndarray:
        h = _monomial_values(x) @ self._hess_coeffs
        return h.reshape(h.shape[:-1] + (3, 3))

    def principal_part(self) -> "CubicPolynomial":
        return CubicPolynomial(tuple(c if sum(m) == 3 else Fraction(0)
                                     for m, c in zip(MONOMIALS, self.coeffs)))

    def scaled(self, t) -> "CubicPolynomial":
        """The polynomial t^3 f(x/t), which has the same topological type for t > 0."""
        t = Fraction(t)
        return CubicPolynomial(tuple(c * t ** (3 - sum(m)) for m, c in zip(MONOMIALS, self.coeffs)))

    def __neg__(self) -> "CubicPolynomial":
        return CubicPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "CubicPolynomial") -> "CubicPolynomial":
        return CubicPolynomial(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def exact_gradient(self, point: Sequence[Fraction]) -> tuple[Fraction, ...]:
        p = [Fraction(v) for v in point]
        out = []
        for k in range(3):
            s = Fraction(0)
            for m, c in self.terms().items():
                if m[k]:
                    e = list(m)
                    e[k] -= 1
                    s += c * m[k] * p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2]
            out.append(s)
        return tuple(out)

    def __str__(self) -> str:
        parts = []
        for m, c in sorted(self.terms().items(), key=lambda mc: (-sum(mc[0]), [-e for e in mc[0]])):
            mono = "*".join(v if e == 1 else f"{v}**{e}" for v, e in zip(VARS, m) if e)
            coef = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            body = "*".join(s for s in (coef, mono) if s)
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# Expression parsing: polynomials are dicts {exponent: Fraction}.

Poly = dict[Exponent, Fraction]


def _padd(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, Fraction(0)) + sign * c
    return {m: c for m, c in out.items() if c}


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
            if sum(m) > 3:
                raise PolynomialError("expression has degree above 3")
            out[m] = out.get(m, Fraction(0)) + ca * cb
    return {m: c for m, c in out.items() if c}


def _const(a: Poly) -> Fraction | None:
    if not a:
        return Fraction(0)
    if set(a) == {(0, 0, 0)}:
        return a[(0, 0, 0)]
    return None


def _evaluate(text: str, params: Mapping[str, Fraction]) -> Poly:
    def ev(node: ast.AST) -> Poly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            v = Fraction(str(node.value)) if isinstance(node.value, float) else Fraction(node.value)
            return {(0, 0, 0): v} if v else {}
        if isinstance(node, ast.Name):
            if node.id in VARS:
                e = [0, 0, 0]
                e[VARS.index(node.id)] = 1
                return {tuple(e): Fraction(1)}
            if node.id in params:
                v = params[node.id]
                return {(0, 0, 0): v} if v else {}
            raise PolynomialError(f"unbound name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return {m: -c for m, c in v.items()} if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return _padd(a, b)
            if isinstance(node.op, ast.Sub):
                return _padd(a, b, -1)
            if isinstance(node.op, ast.Mult):
                return _pmul(a, b)
            if isinstance(node.op, ast.Div):
                d = _const(b)
                if d is None or d == 0:
                    raise PolynomialError("division only by nonzero constants")
                return {m: c / d for m, c in a.items()}
            if isinstance(node.op, ast.Pow):
                n = _const(b)
                if n is None or n.denominator != 1 or n < 0:
                    raise PolynomialError("exponents must be nonnegative integers")
                base = _const(a)
                if base is not None:
                    return {(0, 0, 0): base ** int(n)} if base or not n else {}
                out: Poly = {(0, 0, 0): Fraction(1)}
                for _ in range(int(n)):
                    out = _pmul(out, a)
                return out
        raise PolynomialError(f"unsupported syntax: {ast.dump(node)[:60]}")

    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise PolynomialError(f"cannot parse {text!r}: {exc.msg}") from None
    return ev(tree)


# Critical points.

@dataclass(frozen=True)
class Tolerances:
    residual: float = 1e-10
    degenerate: float = 1e-8
    imaginary: float = 1e-7
    merge: float = 1e-6


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class CriticalPoint:
    location: tuple[float, float, float]
    value: float
    signature: tuple[int, int] | None
    residual: float
    multiplicity: int = 1

    @property
    def degenerate(self) -> bool:
        return self.signature is None

    @property
    def morse_index(self) -> int:
        if self.signature is None:
            raise PolynomialError(f"degenerate critical point at {self.location}")
        return self.signature[1]


@dataclass
class SolveReport:
    points: list[CriticalPoint]
    complex_count: int
    warnings: list[str] = field(default_factory=list)


def _scale(p: CubicPolynomial) -> float:
    c = np.abs(p.vector)
    top = max(c[[_POS[m] for m in MONOMIALS if sum(m) == 3]].max(), 1e-300)
    low = [c[[_POS[m] for m in MONOMIALS if sum(m) == d]].max() for d in (2, 1)]
    # Cauchy-type bound on the size of the roots of the gradient system.
    return 1.0 + max(low[0] / top, math.sqrt(low[1] / top))


def _track(p: CubicPolynomial, start: np.ndarray, gamma: complex, scale: float) -> np.ndarray:
    """Follow one path of (1-t) gamma (x_i^2 - s^2) + t grad f(x) from t=0 to t=1."""
    x = start.astype(complex)
    t, dt = 0.0, 0.02
    s2 = scale * scale

    def H(x, t):
        return (1 - t) * gamma * (x * x - s2) + t * p.gradient(x)

    def Hx(x, t):
        return (1 - t) * gamma * np.diag(2 * x) + t * p.hessian(x)

    while t < 1.0:
        h = min(dt, 1.0 - t)
        try:
            v = -np.linalg.solve(Hx(x, t), p.gradient(x) - gamma * (x * x - s2))
        except np.linalg.LinAlgError:
            v = np.zeros(3, complex)
        y, tn = x + h * v, t + h
        ok = False
        for _ in range(4):
            try:
                step = np.linalg.solve(Hx(y, tn), H(y, tn))
            except np.linalg.LinAlgError:
                break
            y = y - step
            if np.linalg.norm(step) < 1e-9 * (1 + np.linalg.norm(y)):
                ok = True
                break
        if ok or h < 1e-10:
            x, t = y, tn
            dt = min(2 * h, 0.1)
        else:
            dt = h / 2
    return x


def _newton(p: CubicPolynomial, x: np.ndarray, steps: int = 60) -> np.ndarray:
    for _ in range(steps):
        try:
            d = np.linalg.solve(p.hessian(x), p.gradient(x))
        except np.linalg.LinAlgError:
            break
        x = x - d
        if np.linalg.norm(d) < 1e-15 * (1 + np.linalg.norm(x)):
            break
    return x


def _mp_polish(p: CubicPolynomial, x: np.ndarray, digits: int = 60, steps: int = 400) -> np.ndarray:
    """Newton's method in extended precision; converges (linearly) even at degenerate roots."""
    with mpmath.workdps(digits):
        terms = [(m, mpmath.mpf(c.numerator) / c.denominator) for m, c in p.terms().items()]
        X = [mpmath.mpc(complex(v)) for v in x]

        def grad_hess(X):
            g = [mpmath.mpc(0)] * 3
            h = [[mpmath.mpc(0)] * 3 for _ in range(3)]
            for m, c in terms:
                for k in range(3):
                    if not m[k]:
                        continue
                    e = list(m)
                    e[k] -= 1
                    g[k] += c * m[k] * X[0] ** e[0] * X[1] ** e[1] * X[2] ** e[2]
                    for l in range(3):
                        if not e[l]:
                            continue
                        f = list(e)
                        f[l] -= 1
                        h[k][l] += c * m[k] * e[l] * X[0] ** f[0] * X[1] ** f[1] * X[2] ** f[2]
            return mpmath.matrix(g), mpmath.matrix(h)

        tiny = mpmath.mpf(10) ** (-(digits - 10))
        for _ in range(steps):
            g, h = grad_hess(X)
            if mpmath.norm(g) < tiny:
                break
            try:
                d = mpmath.lu_solve(h, g)
            except ZeroDivisionError:
                break
            X = [X[k] - d[k] for k in range(3)]
            if mpmath.norm(d) < tiny:
                break
        return np.array([complex(v) for v in X])


def _signature(H: np.ndarray, tol: float) -> tuple[int, int] | None:
    norms = np.linalg.norm(H, axis=1)
    if abs(np.linalg.det(H)) < tol * max(np.prod(norms), 1e-300):
        return None
    ev = np.linalg.eigvalsh(H)
    return int((ev > 0).sum()), int((ev < 0).sum())


def _complex_roots(p: CubicPolynomial, seed: int, tol: Tolerances) -> tuple[list[np.ndarray], list[str]]:
    rng = np.random.default_rng(seed)
    scale = _scale(p)
    starts = [np.array(s) * scale for s in np.array(np.meshgrid(*[[1, -1]] * 3)).T.reshape(-1, 3)]
    warnings: list[str] = []
    for attempt in range(3):
        gamma = complex(np.exp(2j * np.pi * rng.random()))
        ends = [_newton(p, _track(p, s, gamma, scale)) for s in starts]
        bad = [e for e in ends if not np.all(np.isfinite(e))]
        if not bad:
            return ends, warnings
        warnings.append(f"path tracking attempt {attempt + 1} lost {len(bad)} paths")
    return [e for e in ends if np.all(np.isfinite(e))], warnings


def solve(p: CubicPolynomial, tol: Tolerances = DEFAULT_TOL, seed: int = 0) -> SolveReport:
    if classify_type(p) is CubicType.DISCRIMINANT:
        raise PolynomialError("principal homogeneous part is singular")
    ends, warnings = _complex_roots(p, seed, tol)
    polished = []
    for e in ends:
        res = np.linalg.norm(p.gradient(e))
        H = p.hessian(e)
        if (res > tol.residual * (1 + np.linalg.norm(e)) ** 2
                or abs(np.linalg.det(H)) < tol.degenerate * max(np.prod(np.linalg.norm(H, axis=1)), 1e-300)):
            e = _mp_polish(p, e)
        polished.append(e)
    # Merge coincident endpoints into one point with multiplicity.
    groups: list[list[np.ndarray]] = []
    for e in polished:
        for grp in groups:
            if np.linalg.norm(grp[0] - e) < tol.merge * (1 + np.linalg.norm(e)):
                grp.append(e)
                break
        else:
            groups.append([e])
    points = []
    for grp in groups:
        e = grp[0]
        if np.abs(e.imag).max() > tol.imaginary * (1 + np.linalg.norm(e)):
            continue
        x = e.real
        if len(grp) == 1:
            x = _newton(p, x)
        res = float(np.linalg.norm(p.gradient(x)))
        sig = _signature(p.hessian(x), tol.degenerate) if len(grp) == 1 else None
        points.append(CriticalPoint(tuple(float(v) for v in x), float(p(x)), sig, res, len(grp)))
        if res > tol.residual * (1 + np.linalg.norm(x)) ** 2 and len(grp) == 1:
            warnings.append(f"residual {res:.2e} at {x}")
    points.sort(key=lambda c: (c.value, c.location))
    if len(points) > 8:
        raise PolynomialError(f"found {len(points)} real critical points, more than eight")
    return SolveReport(points, sum(len(g) for g in groups), warnings)


def critical_points(p: CubicPolynomial, tol: Tolerances = DEFAULT_TOL, seed: int = 0) -> list[CriticalPoint]:
    return solve(p, tol, seed).points


def passport_of(p: CubicPolynomial, tol: Tolerances = DEFAULT_TOL, seed: int = 0) -> Passport:
    counts = [0, 0, 0, 0]
    for c in critical_points(p, tol, seed):
        if c.degenerate:
            raise PolynomialError(f"degenerate critical point at {c.location}")
        counts[c.morse_index] += 1
    return Passport(*counts)


def newton_multistart(p: CubicPolynomial, starts: int = 600, seed: int = 1,
                      box: float | None = None, stable: int = 150) -> list[np.ndarray]:
    """Real critical points by damped Newton with deflation from random starts.

    Each found root r multiplies the gradient by (1/|x - r|^2 + 1), which
    repels later iterations from r.  Half of the starts are drawn near the
    roots already found, at log-uniform distances, so that tight clusters
    are resolved.  Stops after ``stable`` consecutive fruitless starts.
    """
    rng = np.random.default_rng(seed)
    box = box or 2 * _scale(p)
    roots: list[np.ndarray] = []
    idle = 0
    for n in range(starts):
        if roots and n % 2:
            direction = rng.normal(size=3)
            x = roots[rng.integers(len(roots))] + 10 ** rng.uniform(-4, 0) * box * direction / np.linalg.norm(direction)
        else:
            x = rng.uniform(-box, box, 3)
        for _ in range(100):
            try:
                d = -np.linalg.solve(p.hessian(x), p.gradient(x))
            except np.linalg.LinAlgError:
                break
            u = np.zeros(3)
            for r in roots:
                diff = x - r
                n2 = diff @ diff
                u -= 2 * diff / (n2 * (1 + n2))
            denom = 1 - u @ d
            step = d / denom if abs(denom) > 1e-14 else d
            if np.linalg.norm(step) > box:
                step *= box / np.linalg.norm(step)
            x = x + step
            if np.linalg.norm(step) < 1e-13 * (1 + np.linalg.norm(x)):
                break
        x = _newton(p, x)
        fresh = (np.all(np.isfinite(x))
                 and np.linalg.norm(p.gradient(x)) < 1e-12 * (1 + np.linalg.norm(x)) ** 2
                 and all(np.linalg.norm(x - r) > 1e-9 * (1 + np.linalg.norm(x)) for r in roots))
        if fresh:
            roots.append(x)
            idle = 0
        else:
            idle += 1
        if idle >= stable or len(roots) == 8:
            break
    return sorted(roots, key=lambda r: float(p(r)))


# Type of the principal part.

class CubicType(str, Enum):
    XI_1 = "XI1"
    XI_2 = "XI2"
    DISCRIMINANT = "DISCRIMINANT"


@dataclass(frozen=True)
class TypeReport:
    kind: CubicType
    method: str
    margin: float


def _hessian_form_parameter(f: CubicPolynomial) -> Fraction | None:
    t = f.principal_part().terms()
    c = t.get((3, 0, 0))
    if c is None or not set(t) <= {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}:
        return None
    if t.get((0, 3, 0)) != c or t.get((0, 0, 3)) != c:
        return None
    # c (x^3+y^3+z^3) + k xyz = 3c ((x^3+y^3+z^3)/3 - A xyz) with A = -k/(3c).
    return -t.get((1, 1, 1), Fraction(0)) / (3 * c)


def _weierstrass_form(f: CubicPolynomial) -> tuple[Fraction, Fraction, Fraction] | None:
    """Coefficients (c, a, b) when f = c x^3 + a x z^2 + b z^3 + q y^2 z with c, q nonzero.

    On the chart z = 1 the curve is q y^2 = -(c x^3 + a x + b), so it has two
    real components iff c t^3 + a t + b has three real roots.
    """
    t = f.principal_part().terms()
    if not set(t) <= {(3, 0, 0), (1, 0, 2), (0, 0, 3), (0, 2, 1)}:
        return None
    c, q = t.get((3, 0, 0)), t.get((0, 2, 1))
    if not c or not q:
        return None
    return c, t.get((1, 0, 2), Fraction(0)), t.get((0, 0, 3), Fraction(0))


def _cubic_root_count(a: float, b: float, c: float, d: float) -> tuple[int, float]:
    """Real root count of a t^3 + b t^2 + c t + d and a scale-free discriminant margin."""
    disc = 18 * a * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2 - 4 * a * c ** 3 - 27 * a ** 2 * d ** 2
    norm = max(abs(a), abs(b), abs(c), abs(d)) ** 4
    return (3 if disc > 0 else 1), disc / norm


def _flex(f: CubicPolynomial, rng: np.random.Generator) -> np.ndarray | None:
    """A real inflection point of the projective curve f = 0, as a unit vector."""
    def system(p):
        H = f.hessian(p)
        return np.array([f(p), np.linalg.det(H), p @ p - 1])

    def jac(p, h=1e-7):
        J = np.empty((3, 3))
        for k in range(3):
            e = np.zeros(3)
            e[k] = h
            J[:, k] = (system(p + e) - system(p - e)) / (2 * h)
        return J

    for _ in range(400):
        p = rng.normal(size=3)
        p /= np.linalg.norm(p)
        for _ in range(50):
            try:
                d = np.linalg.solve(jac(p), system(p))
            except np.linalg.LinAlgError:
                break
            p = p - d
            if np.linalg.norm(d) < 1e-14:
                break
        if (np.all(np.isfinite(p)) and np.abs(system(p)).max() < 1e-10
                and np.linalg.norm(f.gradient(p)) > 1e-6):
            return p / np.linalg.norm(p)
    return None


def classify_type(p: CubicPolynomial, margin: float = 1e-9, seed: int = 0) -> CubicType:
    return classify_report(p, margin, seed).kind


def classify_report(p: CubicPolynomial, margin: float = 1e-9, seed: int = 0) -> TypeReport:
    f = p.principal_part()
    A = _hessian_form_parameter(f)
    if A is not None:
        # The Hessian form is singular for A = 1 and, over C, for the other cube roots of unity.
        if A == 1:
            return TypeReport(CubicType.DISCRIMINANT, "hessian form", 0.0)
        return TypeReport(CubicType.XI_1 if A < 1 else CubicType.XI_2, "hessian form", float(A - 1))
    w = _weierstrass_form(f)
    if w is not None:
        c, a, b = w
        disc = -4 * c * a ** 3 - 27 * c * c * b * b
        if disc == 0:
            return TypeReport(CubicType.DISCRIMINANT, "weierstrass form", 0.0)
        return TypeReport(CubicType.XI_2 if disc > 0 else CubicType.XI_1, "weierstrass form", float(disc))
    rng = np.random.default_rng(seed)
    flex = _flex(f, rng)
    if flex is None:
        return TypeReport(CubicType.DISCRIMINANT, "no real flex found", 0.0)
    # Coordinates X q + Y flex + w where q spans the tangent line with the flex
    # and w is off it.  Along each line X = const the cubic is quadratic in Y,
    # and the real curve has two components iff the Y-discriminant, a cubic in
    # X, has three real roots.
    g = f.gradient(flex)
    q = np.cross(g, flex)
    q /= np.linalg.norm(q)
    w = g / np.linalg.norm(g)
    xs = np.array([-2.0, -1.0, 0.0, 1.0, 2.0, 3.0])
    ys = np.array([-1.0, 0.0, 1.0])
    # Fit alpha Y^2 + beta(X) Y + gamma(X) by exact sampling (degrees are at most 3).
    A2, B1, C0 = [], [], []
    for X in xs:
        vals = [f(X * q + Y * flex + w) for Y in ys]
        A2.append((vals[0] + vals[2]) / 2 - vals[1])
        B1.append((vals[2] - vals[0]) / 2)
        C0.append(vals[1])
    disc = np.array(B1) ** 2 - 4 * np.array(A2) * np.array(C0)
    coeffs = np.polyfit(xs, disc, 3)
    roots, m = _cubic_root_count(*coeffs)
    if abs(m) < margin:
        return TypeReport(CubicType.DISCRIMINANT, "flex transform", m)
    return TypeReport(CubicType.XI_2 if roots == 3 else CubicType.XI_1, "flex transform", m)


# Catalog of realization polynomials.

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expression: str
    params: dict[str, str]
    passport: tuple[int, int, int, int] | None
    kind: CubicType
    real_count: int | None = None
    points: tuple[tuple[str, str, str], ...] = ()
    note: str = ""

    def polynomial(self, **override) -> CubicPolynomial:
        params = {k: Fraction(v) for k, v in self.params.items()}
        params.update({k: Fraction(v) for k, v in override.items()})
        return CubicPolynomial.parse(self.expression, **params)


def load_catalog() -> list[CatalogEntry]:
    raw = json.loads(resources.files("virtmorse").joinpath("data/catalog.json").read_text())
    out = []
    for e in raw["polynomials"]:
        out.append(CatalogEntry(
            e["name"], e["expression"], dict(e.get("params", {})),
            tuple(e["passport"]) if e.get("passport") is not None else None,
            CubicType(e["type"]), e.get("real_count"),
            tuple(tuple(p) for p in e.get("points", ())), e.get("note", "")))
    return out


@dataclass
class CatalogResult:
    entry: CatalogEntry
    passport: tuple[int, int, int, int] | None
    kind: CubicType
    real_count: int
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


def check_entry(entry: CatalogEntry, tol: Tolerances = DEFAULT_TOL, halve: bool = True) -> CatalogResult:
    p = entry.polynomial()
    problems: list[str] = []
    kind = classify_type(p)
    if kind is not entry.kind:
        problems.append(f"type {kind.value}, expected {entry.kind.value}")
    report = solve(p, tol)
    pts = report.points
    problems += report.warnings
    got = None
    if all(not c.degenerate for c in pts):
        counts = [0, 0, 0, 0]
        for c in pts:
            counts[c.morse_index] += 1
        got = tuple(counts)
    if entry.passport is not None and got != entry.passport:
        problems.append(f"passport {got}, expected {entry.passport}")
    if entry.real_count is not None and len(pts) != entry.real_count:
        problems.append(f"{len(pts)} real critical points, expected {entry.real_count}")
    for target in entry.points:
        t = np.array([float(Fraction(v)) for v in target])
        exact = p.exact_gradient([Fraction(v) for v in target])
        if any(exact):
            problems.append(f"gradient does not vanish exactly at {target}")
        d = min((np.linalg.norm(np.array(c.location) - t) for c in pts), default=math.inf)
        if d > 1e-8:
            problems.append(f"no critical point within 1e-8 of {target} (nearest {d:.2e})")
    if halve and entry.passport is not None and "eps" in entry.params:
        # The perturbation parameter should sit inside the stable range.
        half = Fraction(entry.params["eps"]) / 2
        again = passport_of(entry.polynomial(eps=half), tol)
        if again.as_tuple() != entry.passport:
            problems.append(f"passport changes to {again} when eps is halved")
    return CatalogResult(entry, got, kind, len(pts), problems)


def verify_catalog(tol: Tolerances = DEFAULT_TOL, names: Sequence[str] | None = None) -> list[CatalogResult]:
    return [check_entry(e, tol) for e in load_catalog() if names is None or e.name in names]
