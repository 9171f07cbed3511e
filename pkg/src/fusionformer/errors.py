"""Exception hierarchy shared across the package."""


class FusionformerError(Exception):
    """Base class for all domain errors (CLI maps these to exit code 1)."""


class ConfigError(FusionformerError):
    """Invalid model configuration."""


class ShapeError(FusionformerError):
    """Tensor dimension mismatch; messages name both offending shapes."""


class VocabError(FusionformerError):
    """Token id outside the configured vocabulary."""


class NumericDivergenceError(FusionformerError):
    """Non-finite values appeared during a forward pass."""

    def __init__(self, layer_path: str):
        self.layer_path = layer_path
        super().__init__(f"non-finite output first observed at layer '{layer_path}'")


class FusionError(FusionformerError):
    """Graph cannot be fused (wrong flavor, already fused, ...)."""


class QuantizationError(FusionformerError):
    """Int8 conversion preconditions violated."""


class DecodingNameError(FusionformerError):
    """Malformed decoding-configuration name."""

    def __init__(self, name: str, position: int, reason: str):
        self.name = name
        self.position = position
        super().__init__(f"bad decoding name {name!r} at position {position}: {reason}")


class ContainerError(FusionformerError):
    """Weight-container format violation."""


class BadMagicError(ContainerError):
    pass


class VersionMismatchError(ContainerError):
    pass


class TruncatedPayloadError(ContainerError):
    pass


class OffsetOverlapError(ContainerError):
    pass
