"""Exception hierarchy shared by all homlts modules."""


class HomltsError(Exception):
    """Base class for every error raised by this package."""


class ContractViolationError(HomltsError):
    """An operation was called with arguments violating its precondition."""


class SizeCapError(HomltsError):
    """A requested tensor exceeds the configured entry cap."""

    def __init__(self, what: str, entries: int, cap: int):
        self.what = what
        self.entries = entries
        self.cap = cap
        super().__init__(
            f"{what} needs {entries} tensor entries, exceeding the cap of {cap}"
        )


class InternalConsistencyError(HomltsError):
    """A mathematically guaranteed identity failed; indicates a bug."""


class NotACocycleError(HomltsError):
    """A map supplied where a cocycle is required has a nonzero coboundary."""

    def __init__(self, index: tuple, component: int, value):
        self.index = index
        self.component = component
        self.value = value
        super().__init__(
            "coboundary is nonzero at argument tuple "
            f"{tuple(i + 1 for i in index)}, output coordinate {component + 1}: {value}"
        )


class ExactnessError(HomltsError):
    """A bracket defect fell outside the image of the inclusion map."""


class ExampleParameterError(HomltsError):
    """Parameters passed to make_example violate the construction's hypotheses."""


class TrivialDeformationError(HomltsError):
    """All deformation terms vanish, so no infinitesimal exists."""


class InstanceSyntaxError(HomltsError):
    """Instance text that does not match the file grammar."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InstanceSemanticError(HomltsError):
    """Well-formed instance text with inconsistent content."""

    def __init__(self, section: str, message: str):
        self.section = section
        super().__init__(f"section [{section}]: {message}")
