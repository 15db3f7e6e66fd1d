"""Shared sample builders and hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

import qgl21.scalars as sc
from qgl21.walgebra import WElement, WMonomial

SCALAR_POOL = (
    sc.ONE, -sc.ONE, sc.Q, sc.QINV, sc.Q + sc.ONE, sc.EPS, sc.EPS_INV,
    sc.P1, sc.P2, sc.P2.invert(), sc.P3,
    sc.QScalar.from_rational(Fraction(3, 2)), sc.q_integer(2),
)


def random_monomial(rng, mode2=True, gl11=True):
    """A canonical W monomial with small exponents (m*l = 0 as required)."""
    if rng.random() < 0.5:
        m, l = rng.randrange(0, 3), 0
    else:
        m, l = 0, rng.randrange(0, 3)
    k = rng.randrange(-2, 3)
    i1, j1 = rng.randrange(2), rng.randrange(2)
    i2 = j2 = 0
    if mode2:
        i2, j2 = rng.randrange(2), rng.randrange(2)
    eps = al = be = de = 0
    if gl11:
        eps, de = rng.randrange(2), rng.randrange(2)
        al, be = rng.randrange(-2, 3), rng.randrange(-2, 3)
    return WMonomial(m, k, l, i1, j1, i2, j2, eps, al, be, de)


def random_element(rng, nterms=2, **kw):
    el = WElement.zero()
    for _ in range(nterms):
        el = el + WElement.from_monomial(random_monomial(rng, **kw),
                                         rng.choice(SCALAR_POOL))
    return el


small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)
small_exponents = st.tuples(*(st.integers(min_value=-2, max_value=2),) * 4)
laurent_dicts = st.dictionaries(small_exponents, small_fractions, max_size=3)
qscalars = st.builds(sc.QScalar.from_laurent, laurent_dicts)
nonzero_qscalars = qscalars.filter(bool)


def _build_monomial(raising, lowering, pick_raise, k, i1, j1, i2, j2,
                    eps, al, be, de):
    m, l = (raising, 0) if pick_raise else (0, lowering)
    return WMonomial(m, k, l, i1, j1, i2, j2, eps, al, be, de)


bit = st.integers(min_value=0, max_value=1)
wmonomials = st.builds(
    _build_monomial,
    st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2),
    st.booleans(), st.integers(min_value=-2, max_value=2),
    bit, bit, bit, bit, bit,
    st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2),
    bit)
