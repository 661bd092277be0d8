from rmtlab.exceptions import InvalidHypothesis


class TestFunction(object):
    """Basis class for the test functions f and g

    Test functions are entire, so they can be evaluated at complex contour nodes as
    well as on real spectra and matrix eigenvalues.
    """

    # keeps pytest from collecting the class
    __test__ = False

    def __init__(self):
        self.value = None

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__, self)

    def __call__(self, x):
        return self.calculate(x)

    def calculate(self, x):
        """Evaluates the function, vectorized over real or complex arrays"""
        raise NotImplementedError

    def differentiate(self):
        """Returns the derivative as a new TestFunction"""
        raise NotImplementedError

    def isConstant(self):
        raise NotImplementedError

    @property
    def atOne(self):
        return float(complex(self.calculate(1.0)).real)

    @property
    def derivativeAtZero(self):
        return float(complex(self.differentiate().calculate(0.0)).real)


class TestFunctionPair(object):
    """The pair (f, g) entering the statistics X_n and Y_n

    Requires f(1) != 0 and g'(0) != 0.
    """

    __test__ = False

    def __init__(self, f, g):
        self.f = f
        self.g = g
        self.fAt1 = f.atOne
        self.gPrimeAt0 = g.derivativeAtZero
        if self.fAt1 == 0:
            raise InvalidHypothesis('f(1) must be nonzero for %s' % f)
        if self.gPrimeAt0 == 0:
            raise InvalidHypothesis("g'(0) must be nonzero for %s" % g)

    def __str__(self):
        return 'f=%s, g=%s' % (self.f, self.g)
