"""
Hypothesis strategies for scalars and enveloping-algebra elements
"""
from hypothesis import strategies as st

from src.algebra.liealg import generators_in_window
from src.algebra.scalars import LaurentQ
from src.algebra.uea import UElt, straighten

WINDOW = generators_in_window(1)

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)

laurent = st.dictionaries(st.integers(-3, 3), small_fractions, max_size=3).map(LaurentQ)

generators = st.sampled_from(WINDOW)

words = st.lists(generators, min_size=0, max_size=2)


@st.composite
def u_elements(draw, max_terms: int = 2) -> UElt:
    """Sums of short generator words with Laurent coefficients"""
    total = UElt.zero()
    for word in draw(st.lists(words, min_size=1, max_size=max_terms)):
        total = total + straighten(word, draw(laurent))
    return total
