"""Exception types shared across the package."""


class VndimError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(VndimError, ValueError):
    """An element does not have the normal-form shape of its group."""


class ParseError(VndimError, ValueError):
    """A textual group spec, element literal or ring element is malformed."""


class ZeroElementError(VndimError, ValueError):
    """An operation that needs a nonzero ring element received zero."""


class ResourceCapExceeded(VndimError, RuntimeError):
    """An enumeration grew past the configured element-count cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what}: more than {cap} elements (raise --cap to continue)")
        self.cap = cap


class RadiusExceeded(VndimError, RuntimeError):
    """A word length was needed beyond the allowed search radius."""
