import numpy as np
from rmtlab.functions.structure import TestFunction


class ExpAffine(TestFunction):
    """Class for k exp(a x) + c

    Input example:
        expaff:1,0      -- exp(x)

    Extends:
        TestFunction
    """

    def __init__(self, a, c, coefficient=1.0):
        super().__init__()
        self.a = float(a)
        self.c = float(c)
        self.coefficient = float(coefficient)
        if self.coefficient == 1:
            self.value = 'expaff:%g,%g' % (self.a, self.c)
        else:
            self.value = '%g*exp(%g*x)+%g' % (self.coefficient, self.a, self.c)

    def calculate(self, x):
        return self.coefficient * np.exp(self.a * np.asarray(x)) + self.c

    def differentiate(self):
        return ExpAffine(self.a, 0.0, self.coefficient * self.a)

    def isConstant(self):
        return self.a == 0 or self.coefficient == 0
