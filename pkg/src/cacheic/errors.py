"""Exception hierarchy shared by all cacheic modules."""


class CacheicError(Exception):
    """Base class for every error raised by this package."""


class OutOfRange(CacheicError):
    """A parameter lies outside its admissible range."""


class NonIntegerT(CacheicError):
    """Normalized cache size K*M/N is not an integer."""


class TransmitCacheTooSmall(CacheicError):
    """Aggregate transmitter storage below one library copy (t_t < 1)."""


class DomainError(CacheicError):
    """Arguments outside the domain of a closed-form expression."""


class IndexOutOfRange(CacheicError):
    """Bijection index outside [1, K - |U|]."""


class SingularMatrix(CacheicError):
    """Square system has no unique solution."""


class FullRowRankExhausted(CacheicError):
    """Requested a null-space vector of a full-row-rank matrix."""


class GenericityFailure(CacheicError):
    """Random draws kept violating a genericity condition past the retry cap."""


class DecodingFailure(CacheicError):
    """A receiver could not recover all of its demanded units."""

    def __init__(self, receiver, missing):
        self.receiver = receiver
        self.missing = list(missing)
        super().__init__(
            f"receiver {receiver} failed to decode {len(self.missing)} unit(s): "
            f"{self.missing[:4]}{'...' if len(self.missing) > 4 else ''}"
        )


class DivisibilityError(CacheicError):
    """Batch size does not clear a scheduler's integrality constraints."""

    def __init__(self, message, required_batch):
        self.required_batch = required_batch
        super().__init__(f"{message} (required batch: {required_batch})")


class EmptyGrid(CacheicError):
    """Sweep requested over an empty grid."""
