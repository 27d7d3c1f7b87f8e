"""Exception hierarchy shared by every fpmine module."""


class FPMError(Exception):
    """Base class for all fpmine errors."""


class DataError(FPMError):
    """Raised for invalid input data (maps to CLI exit code 2)."""


class EmptyUniverse(DataError):
    pass


class InvalidItem(DataError):
    pass


class InvalidItemset(DataError):
    pass


class InvalidArity(DataError):
    pass


class InvalidThreshold(DataError):
    pass


class InvalidHashConfig(DataError):
    pass


class OracleScaleExceeded(DataError):
    pass


class ParseError(DataError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EncodingError(DataError):
    pass


class SpecError(DataError):
    """Invalid synthetic-generator parameters."""


class MinerDisagreement(FPMError):
    """Apriori and DHP produced different frequent sets.

    This never describes a legitimate outcome; it means one of the miners
    is broken.
    """

    def __init__(self, level, only_apriori, only_dhp):
        self.level = level
        self.only_apriori = tuple(only_apriori)
        self.only_dhp = tuple(only_dhp)
        super().__init__(
            f"frequent sets differ at k={level}: "
            f"apriori-only={list(self.only_apriori)} dhp-only={list(self.only_dhp)}"
        )

    @property
    def symmetric_difference(self):
        return self.only_apriori + self.only_dhp
