import random
from fractions import Fraction

from diracdunkl.exact import GRational, Params
from diracdunkl.poly import SpinorPoly, spinor_basis_labels


def mu_triples(count: int, seed: int) -> list[Params]:
    """Deterministic non-negative rational parameter triples for sweeps."""
    rng = random.Random(seed)
    return [
        Params(*[Fraction(rng.randint(0, 12), rng.randint(1, 12)) for _ in range(3)])
        for _ in range(count)
    ]


def random_spinor(rng: random.Random, max_degree: int, axes=(1, 2, 3)) -> SpinorPoly:
    """Random spinor polynomial with small Gaussian-rational coefficients."""
    out = SpinorPoly.zero()
    for degree in range(max_degree + 1):
        for exps, sign in spinor_basis_labels(degree, axes):
            if rng.random() < 0.5:
                coef = GRational(
                    Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                    Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                )
                if coef:
                    out = out + SpinorPoly.monomial(exps, sign, coef)
    return out
