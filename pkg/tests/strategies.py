"""Hypothesis strategies shared by the algebra tests."""
from hypothesis import strategies as st

from curalg import ellip, trigcur


@st.composite
def trig_points(draw, branch, eta=1.0, re=1.5):
    y = draw(st.floats(0.1, 0.9)) / eta
    x = draw(st.floats(-re, re))
    return complex(x, -y if branch == "plus" else y)


@st.composite
def trig_elements(draw, eta=1.0, max_terms=2):
    terms = []
    for _ in range(draw(st.integers(1, max_terms))):
        b = draw(st.sampled_from(trigcur.BRANCHES))
        coeff = complex(draw(st.floats(-2, 2)), draw(st.floats(-2, 2)))
        terms.append(trigcur.GeneratorTerm(draw(st.sampled_from(trigcur.GTYPES)), b,
                                           draw(trig_points(b, eta)), coeff))
    return trigcur.CurrentElement(terms)


@st.composite
def ell_elements(draw, m, max_terms=2):
    terms = []
    for _ in range(draw(st.integers(1, max_terms))):
        b = draw(st.sampled_from(["plus", "minus"]))
        y = draw(st.floats(0.1, 0.9)) * m.K_prime
        u = complex(draw(st.floats(-0.9, 0.9)) * m.K, -y if b == "plus" else y)
        coeff = complex(draw(st.floats(-2, 2)), draw(st.floats(-2, 2)))
        terms.append(ellip.SigmaTerm(draw(st.integers(1, 3)), b, u, coeff))
    return ellip.EllipticElement(terms)
