"""
Helpers shared by the tests
"""

from hypothesis import assume
from hypothesis import strategies as st

from ideal_divisors.cyclotomic import CyclotomicInteger


def random_cyclotomic(rng, lam, bound=9, nonzero=True):
    """
    CyclotomicInteger with coefficients drawn from [-bound, bound]

    :param rng: numpy random Generator
    :param lam: odd prime
    :param bound: largest |coefficient|
    :param nonzero: redraw until the value is not zero
    """
    while True:
        g = CyclotomicInteger(lam, rng.integers(-bound, bound + 1, size=lam))
        if not (nonzero and g.is_zero):
            return g


@st.composite
def cyclotomic_integers(draw, lam, bound=9, nonzero=False):
    """Hypothesis strategy for CyclotomicInteger values"""
    coeffs = draw(
        st.lists(st.integers(-bound, bound), min_size=lam, max_size=lam)
    )
    g = CyclotomicInteger(lam, coeffs)
    if nonzero:
        assume(not g.is_zero)
    return g
