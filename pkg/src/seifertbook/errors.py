"""Exception hierarchy shared by the library and the command line."""


class TopologyError(ValueError):
    """A well-formed input that the requested operation cannot accept."""


class IneligibleError(TopologyError):
    pass


class MoveError(TopologyError):
    """An illegal blow-up or blow-down."""


class DegenerateChainError(TopologyError):
    pass


class RewriteError(TopologyError):
    """A word rewrite whose pattern is not present."""


class SchemaError(ValueError):
    """A document that does not match its JSON schema.

    ``field`` names the offending key so the CLI can report it.
    """

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
