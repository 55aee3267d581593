"""Composable linear operators on spinor polynomials, and an exact identity
checker.

Every operator here is linear over the Gaussian rationals, so an identity
verified on all monomial-spinor basis elements of degrees 0..d is an identity
on the whole space of spinor polynomials of degree at most d.  The checker
exploits this: it applies both sides to each basis element and demands exact
equality, reporting the first counterexample on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import HALF, MINUS_I, Params, as_grational
from .poly import (
    ScalarPoly,
    SpinorPoly,
    coordinate_multiply,
    diff,
    dunkl,
    euler,
    pauli,
    reflect,
    spinor_basis_labels,
)


class LinOp:
    """Linear map on spinor polynomials, closed under +, -, scaling,
    composition (via *) and integer powers."""

    __slots__ = ("_fn",)

    def __init__(self, fn):
        self._fn = fn

    def __call__(self, f: SpinorPoly) -> SpinorPoly:
        return self._fn(f)

    def __add__(self, other: "LinOp") -> "LinOp":
        return LinOp(lambda f: self(f) + other(f))

    def __sub__(self, other: "LinOp") -> "LinOp":
        return LinOp(lambda f: self(f) - other(f))

    def __neg__(self) -> "LinOp":
        return LinOp(lambda f: -self(f))

    def __mul__(self, other):
        if isinstance(other, LinOp):
            return LinOp(lambda f: self(other(f)))
        value = as_grational(other)
        return LinOp(lambda f: self(f).scale(value))

    def __rmul__(self, other):
        value = as_grational(other)
        return LinOp(lambda f: self(f).scale(value))

    def __pow__(self, n: int) -> "LinOp":
        if n < 0:
            raise ValueError("negative operator power")
        out = identity()
        for _ in range(n):
            out = out * self
        return out


def identity() -> LinOp:
    return LinOp(lambda f: f)


def zero_op() -> LinOp:
    return LinOp(lambda f: SpinorPoly.zero())


def scalar_op(value) -> LinOp:
    value = as_grational(value)
    return LinOp(lambda f: f.scale(value))


def reflect_op(axis: int) -> LinOp:
    return LinOp(lambda f: reflect(f, axis))


def pauli_op(index: int) -> LinOp:
    return LinOp(lambda f: pauli(f, index))


def dunkl_op(axis: int, params: Params) -> LinOp:
    return LinOp(lambda f: dunkl(f, axis, params))


def partial_op(axis: int) -> LinOp:
    return LinOp(lambda f: diff(f, axis))


def coordinate_op(axis: int) -> LinOp:
    return LinOp(lambda f: coordinate_multiply(f, axis))


def multiply_op(scalar: ScalarPoly) -> LinOp:
    return LinOp(lambda f: f.mul_scalar_poly(scalar))


def euler_op(axes: tuple[int, ...] = (1, 2, 3)) -> LinOp:
    return LinOp(lambda f: euler(f, axes))


def commutator(a: LinOp, b: LinOp) -> LinOp:
    return a * b - b * a


def anticommutator(a: LinOp, b: LinOp) -> LinOp:
    return a * b + b * a


def cyclic(i: int) -> tuple[int, int]:
    """The pair completing (i, j, k) to a cyclic permutation of (1, 2, 3)."""
    return (i % 3 + 1, (i + 1) % 3 + 1)


# ---------------------------------------------------------------------------
# Named operators.

def dirac(params: Params, axes: tuple[int, ...] = (1, 2, 3)) -> LinOp:
    """Dirac-Dunkl operator: sum of Pauli-weighted Dunkl derivatives."""
    def apply(f: SpinorPoly) -> SpinorPoly:
        out = SpinorPoly.zero()
        for a in axes:
            out = out + pauli(dunkl(f, a, params), a)
        return out

    return LinOp(apply)


def x_underline(axes: tuple[int, ...] = (1, 2, 3)) -> LinOp:
    """Clifford coordinate multiplication: sum of sigma_a x_a."""
    def apply(f: SpinorPoly) -> SpinorPoly:
        out = SpinorPoly.zero()
        for a in axes:
            out = out + pauli(coordinate_multiply(f, a), a)
        return out

    return LinOp(apply)


def norm_sq(axes: tuple[int, ...] = (1, 2, 3)) -> LinOp:
    """Multiplication by the squared radius over the given axes."""
    total = ScalarPoly.zero()
    for a in axes:
        total = total + ScalarPoly.variable(a) * ScalarPoly.variable(a)
    return multiply_op(total)


def laplace(params: Params, axes: tuple[int, ...] = (1, 2, 3)) -> LinOp:
    """Laplace-Dunkl operator as composed squares of Dunkl derivatives."""
    def apply(f: SpinorPoly) -> SpinorPoly:
        out = SpinorPoly.zero()
        for a in axes:
            out = out + dunkl(dunkl(f, a, params), a, params)
        return out

    return LinOp(apply)


def laplace_explicit(params: Params) -> LinOp:
    """Laplace-Dunkl operator in explicit second-order form.

    Per coordinate the action on x^a is
    [a (a-1) + 2 mu a - mu (1 - (-1)^a)] x^(a-2), which vanishes for a <= 1,
    so the combined second-order/difference expression never leaves the
    polynomial ring even though its summands individually would.
    """
    mus = (params.mu1, params.mu2, params.mu3)

    def component(p: ScalarPoly) -> ScalarPoly:
        out: dict = {}
        for e, c in p.terms.items():
            for i in range(3):
                a = e[i]
                if a < 2:
                    continue
                mu = mus[i]
                factor = Fraction(a * (a - 1)) + 2 * mu * a - mu * (1 - (-1) ** a)
                if not factor:
                    continue
                low = list(e)
                low[i] = a - 2
                key = tuple(low)
                add = c * factor
                s = out.get(key)
                out[key] = add if s is None else s + add
        return ScalarPoly._raw(out)

    return LinOp(lambda f: SpinorPoly(component(f.up), component(f.down)))


def laplace_s2(params: Params) -> LinOp:
    """Spherical Laplace-Dunkl operator; preserves homogeneous degree."""
    shift = 2 * params.mu_sum + 1
    ee = euler_op()
    return norm_sq() * laplace(params) - ee * (ee + scalar_op(shift))


def angular(params: Params, i: int) -> LinOp:
    """Dunkl angular momentum along axis i (degree preserving)."""
    j, k = cyclic(i)
    return MINUS_I * (
        coordinate_op(j) * dunkl_op(k, params) - coordinate_op(k) * dunkl_op(j, params)
    )


def spherical_dirac(params: Params) -> LinOp:
    """Spherical Dirac-Dunkl operator: sigma . L + mu . R."""
    def apply(f: SpinorPoly) -> SpinorPoly:
        out = SpinorPoly.zero()
        for i in (1, 2, 3):
            out = out + pauli(angular(params, i)(f), i)
            out = out + reflect(f, i).scale(params.mu(i))
        return out

    return LinOp(apply)


def spherical_dirac_commutator(params: Params) -> LinOp:
    """The same operator built from the commutator of the Dirac and
    coordinate operators: (1/2)([D, x] - 1) - 1."""
    half_comm = HALF * commutator(dirac(params), x_underline())
    return half_comm - scalar_op(Fraction(3, 2))


def symmetry(params: Params, i: int) -> LinOp:
    """Degree-preserving symmetry of the spherical Dirac-Dunkl operator."""
    j, k = cyclic(i)
    wrapped = (
        scalar_op(params.mu(j)) * reflect_op(j)
        + scalar_op(params.mu(k)) * reflect_op(k)
        + scalar_op(HALF)
    )
    return angular(params, i) + pauli_op(i) * wrapped


def involution(i: int) -> LinOp:
    """Self-inverse symmetry sigma_i R_i."""
    return pauli_op(i) * reflect_op(i)


def bi_generator(params: Params, i: int) -> LinOp:
    """Bannai-Ito generator: -i J_i Z_j Z_k for the cyclic pair (j, k)."""
    j, k = cyclic(i)
    return MINUS_I * (symmetry(params, i) * involution(j) * involution(k))


def casimir(params: Params) -> LinOp:
    """Casimir element: sum of squared Bannai-Ito generators."""
    k1 = bi_generator(params, 1)
    k2 = bi_generator(params, 2)
    k3 = bi_generator(params, 3)
    return k1 * k1 + k2 * k2 + k3 * k3


def central_element(params: Params) -> LinOp:
    """The central element (Gamma + 1) R1 R2 R3 of the extended algebra."""
    return (
        (spherical_dirac(params) + scalar_op(1))
        * reflect_op(1)
        * reflect_op(2)
        * reflect_op(3)
    )


# ---------------------------------------------------------------------------
# Identity verification.

@dataclass
class IdentityReport:
    """Outcome of checking lhs = rhs on the monomial-spinor basis."""

    name: str
    degree_lo: int
    degree_hi: int
    basis_size: int
    status: str  # "pass" | "fail"
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "degrees": [self.degree_lo, self.degree_hi],
            "basis_size": self.basis_size,
            "status": self.status,
            "counterexample": self.counterexample,
        }


def verify_identity(
    lhs: LinOp,
    rhs: LinOp,
    max_degree: int,
    *,
    name: str = "",
    axes: tuple[int, ...] = (1, 2, 3),
) -> IdentityReport:
    """Check lhs = rhs on every monomial-spinor of degree 0..max_degree.

    Passing certifies the identity on the full space of those degrees, by
    linearity.  On failure the first counterexample is recorded.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    basis_size = 0
    for degree in range(max_degree + 1):
        for exps, sign in spinor_basis_labels(degree, axes):
            basis_size += 1
            f = SpinorPoly.monomial(exps, sign)
            left = lhs(f)
            right = rhs(f)
            if left != right:
                return IdentityReport(
                    name=name,
                    degree_lo=0,
                    degree_hi=max_degree,
                    basis_size=basis_size,
                    status="fail",
                    counterexample={
                        "degree": degree,
                        "exponents": list(exps),
                        "spinor": "+" if sign == 1 else "-",
                        "lhs": left.to_json_dict(),
                        "rhs": right.to_json_dict(),
                    },
                )
    return IdentityReport(
        name=name,
        degree_lo=0,
        degree_hi=max_degree,
        basis_size=basis_size,
        status="pass",
        counterexample=None,
    )
