"""Exception hierarchy for the engine.

Input problems (bad parameters, malformed files, unsupported sizes) raise
subclasses of :class:`EngineError`.  :class:`FormulaMismatchError` is
different in kind: it signals that two supposedly-equivalent computation
routes disagreed, which means a bug in the engine itself, never bad input.
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(EngineError):
    """A parameter is outside its documented range or combination."""


class SizeLimitError(EngineError):
    """Input exceeds the size cap the engine supports exactly."""


class IsolatedVertexError(EngineError):
    """An index was requested for a (di)graph with an isolated vertex."""


class NotATreeError(EngineError):
    """A tree-only operation was applied to a non-tree."""


class NotBipartiteError(EngineError):
    """A bipartite-only operation was applied to a non-bipartite graph."""


class NotConnectedError(EngineError):
    """A connected-only operation was applied to a disconnected graph."""


class FormulaMismatchError(EngineError):
    """Two equivalent computation routes disagreed (internal bug)."""


class ParseError(EngineError):
    """A graph or digraph text file could not be parsed."""
