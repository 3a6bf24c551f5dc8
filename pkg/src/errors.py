"""Domain errors. All derive from ValueError so the API layer can map them to 400s."""


class ComplexError(ValueError):
    """Structural problem in a cell complex; the message names the offending cell."""


class NotClosedError(ComplexError):
    """An operation that needs a closed manifold complex got one with boundary."""


class NonRegularComplexError(ComplexError):
    """A flag system whose cells are not regular cannot leave the flag view."""


class GlueError(ValueError):
    pass


class PairingError(ValueError):
    pass


class InvolutionError(ValueError):
    pass


class PolyhexError(ValueError):
    pass


class SerializationError(ValueError):
    pass


class PipelineError(ValueError):
    pass
