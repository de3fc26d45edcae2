import math
from unittest import TestCase

import numpy as np
import pytest

from zerocount.constants import backlund
from zerocount.types import DomainError

T0 = 30610046000.0


class EOfTest(TestCase):
    def test_below_bound(self):
        assert backlund.E_of(T0, 0.25) / math.pi <= backlund.E_bound(T0, 0.25)

        for T in np.exp(np.linspace(math.log(5 / 7), math.log(1e8), 30)):
            for d in np.linspace(0.25, 0.625, 7):
                assert backlund.E_of(T, d) / math.pi <= backlund.E_bound(T, d)

    def test_monotone_in_d(self):
        assert 0 < backlund.E_of(1000.0, 0.1) <= backlund.E_of(1000.0, 0.3)

        values = [backlund.E_of(50.0, d) for d in np.linspace(0.0, 4.4, 23)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_known_values(self):
        assert backlund.E_of(1000.0, 0.1) == pytest.approx(5.000299e-06, rel=1e-6)
        assert backlund.E_of(1000.0, 0.3) == pytest.approx(4.500030e-05, rel=1e-6)

    def test_tiny_at_T0(self):
        value = backlund.E_of(T0, 0.25)

        assert 0 < value < 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            backlund.E_of(0.5, 0.25)

        with pytest.raises(DomainError):
            backlund.E_of(10.0, 4.5)

        with pytest.raises(DomainError):
            backlund.E_of(10.0, -0.1)


class EBoundTest(TestCase):
    def test_substitution(self):
        assert backlund.E_bound(T0, 0.25) == pytest.approx(
            48 / (1536 * (3 * T0 - 1)) + 2 ** -10
        )
        assert backlund.E_bound(5 / 7, 5 / 8) == pytest.approx(
            (400 - 112) / (1536 * (15 / 7 - 1)) + 2 ** -10
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            backlund.E_bound(T0, 0.2)

        with pytest.raises(DomainError):
            backlund.E_bound(T0, 0.7)
