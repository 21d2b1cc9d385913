from fractions import Fraction

from hypothesis import settings, strategies as st

from g2abv.exactnum import Cyclo, QValue, RootOfUnity

settings.register_profile("fast", max_examples=60, deadline=None)
settings.load_profile("fast")

small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=6)
cyclos = st.lists(small_fracs, min_size=4, max_size=4).map(lambda c: Cyclo(c))


@st.composite
def roots_of_unity(draw, max_order=12):
    n = draw(st.integers(1, max_order))
    k = draw(st.integers(0, n - 1))
    return RootOfUnity(Fraction(k, n))


@st.composite
def qvalues(draw):
    d = draw(st.integers(1, 6))
    a = Fraction(draw(st.integers(-3 * d, 3 * d)), d)
    return QValue(draw(roots_of_unity()), a)
