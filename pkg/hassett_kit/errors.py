"""
Error types
Every refusal carries a machine-readable code; the command layer turns
rejections into exit status 2 and everything else into exit status 1.
"""


class HassettKitError(ValueError):
    """Base class for all library errors"""
    code = 'error'
    rejection = True

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        data = {'code': self.code, 'message': self.message}
        data.update(self.details)
        return data


class InvalidInput(HassettKitError):
    code = 'invalid_input'


class WeightOutOfRange(HassettKitError):
    code = 'weight_out_of_range'


class NotAdmissible(HassettKitError):
    code = 'not_admissible'


class IndexOutOfRange(HassettKitError):
    code = 'index_out_of_range'


class ShapeMismatch(HassettKitError):
    code = 'shape_mismatch'


class NotAReduction(HassettKitError):
    code = 'not_a_reduction'


class ResourceLimit(HassettKitError):
    code = 'resource_limit'


class PolynomialSyntaxError(HassettKitError):
    code = 'syntax_error'

    def __init__(self, message, position):
        super().__init__(f'{message} at position {position}', position=position)
        self.position = position


class UnknownVariable(HassettKitError):
    code = 'unknown_variable'


class NotHomogeneous(HassettKitError):
    code = 'not_homogeneous'


class CoefficientOverflow(HassettKitError):
    code = 'coefficient_overflow'


class NotIsolated(HassettKitError):
    code = 'not_isolated'


class NotIsolatedSingularities(HassettKitError):
    code = 'not_isolated_singularities'


class ConsistencyError(HassettKitError):
    """An internal cross-check failed; never a user error"""
    code = 'consistency_error'
    rejection = False
