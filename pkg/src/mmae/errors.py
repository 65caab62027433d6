"""Exception types shared across the toolkit."""


class ShapeError(ValueError):
    """Operands have incompatible shapes for the requested operation."""


class DataError(ValueError):
    """A dataset file or manifest is missing, malformed, or misaligned."""


class ArtifactError(ValueError):
    """A model artifact file is unreadable, corrupted, or version-incompatible."""


class DivergenceError(RuntimeError):
    """Training produced a non-finite loss."""

    def __init__(self, epoch: int, batch: int, loss: float):
        self.epoch = epoch
        self.batch = batch
        self.loss = loss
        super().__init__(
            f"non-finite loss {loss!r} at epoch {epoch}, batch {batch}"
        )


class NotFittedError(RuntimeError):
    """A detector, classifier, or ensemble was used before fitting."""
