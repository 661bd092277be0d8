import numpy as np
from numpy.polynomial import polynomial as P
from rmtlab.functions.structure import TestFunction


class Polynomial(TestFunction):
    """Class for polynomials c0 + c1 x + c2 x^2 + ...

    Input examples:
        poly:[0,1]      -- x
        poly:[-3,2]     -- 2x - 3

    Extends:
        TestFunction
    """

    def __init__(self, coefficients):
        super().__init__()
        coefficients = P.polytrim(np.asarray(coefficients, dtype=float))
        self.coefficients = coefficients
        self.value = 'poly:[' + ','.join('%g' % c for c in coefficients) + ']'

    def calculate(self, x):
        return P.polyval(x, self.coefficients)

    def differentiate(self):
        return Polynomial(P.polyder(self.coefficients))

    def isConstant(self):
        return len(self.coefficients) == 1
