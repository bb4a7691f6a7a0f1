"""Exception hierarchy.

Every error raised by the library derives from :class:`RootedMapsError`.
Errors that signal an internal consistency failure (an exact computation
produced something the mathematics forbids) derive from
:class:`ConsistencyError`; the CLI maps those to exit status 3.
"""


class RootedMapsError(Exception):
    pass


class ConsistencyError(RootedMapsError):
    pass


class VerificationFailure(RootedMapsError):
    pass


class UnsupportedRoot(RootedMapsError, ValueError):
    """A denominator factor ``T - a`` with ``a`` outside the fixed root set."""


class NonIntegerResult(ConsistencyError):
    def __init__(self, what, value):
        self.what = what
        self.value = value
        super().__init__(f"{what}: expected an integer, got {value}")


class LogTermPresent(ConsistencyError):
    def __init__(self, root, residue):
        self.root = root
        self.residue = residue
        super().__init__(
            f"integrand has a simple pole at T={root} with residue {residue}; "
            "its antiderivative is not rational")


class PoleAtOne(ConsistencyError):
    def __init__(self):
        super().__init__("form has a pole at T=1 and cannot be expanded in t")


class AnsatzViolation(ConsistencyError):
    def __init__(self, genus, root, order):
        self.genus = genus
        self.root = root
        self.order = order
        super().__init__(
            f"R_{genus} has a pole of order {order} at T={root}, "
            "outside the allowed partial-fraction shape")


class MissingLeadingPole(ConsistencyError):
    def __init__(self, genus):
        self.genus = genus
        super().__init__(f"leading pole coefficient of R_{genus} at T=2 vanishes")


class InconsistentSystem(ConsistencyError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"linear system has no solution (equation {row!r} reduces to 0 = c != 0)")


class UnderdeterminedSystem(ConsistencyError):
    def __init__(self, rank, unknowns):
        self.rank = rank
        self.unknowns = unknowns
        super().__init__(f"linear system has rank {rank} < {unknowns} unknowns")


class NonIntegerClassCount(ConsistencyError):
    def __init__(self, key, count, normalization):
        self.key = key
        self.count = count
        self.normalization = normalization
        super().__init__(
            f"class {key!r}: {count} labelled objects is not a multiple of {normalization}")


class ValidationMismatch(VerificationFailure):
    def __init__(self, genus, i, j, expected, got):
        self.genus = genus
        self.i = i
        self.j = j
        self.expected = expected
        self.got = got
        super().__init__(
            f"M_{genus}^({i},{j}): closed form gives {got}, recurrence gives {expected}")


class IdentityViolation(VerificationFailure):
    def __init__(self, genus, n, difference):
        self.genus = genus
        self.n = n
        self.difference = difference
        super().__init__(f"hexagon identity fails at g={genus}, n={n}: difference {difference}")
