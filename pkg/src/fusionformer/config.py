"""Model configuration."""

from dataclasses import dataclass, asdict

from .errors import ConfigError

FLAVORS = ("conformer_ln", "conformer_bn", "conformer_nonorm", "fusionformer")

# Residual-branch normalization per flavor; fusionformer instead appends a
# BN after every linear/conv layer.
BRANCH_NORM = {
    "conformer_ln": "ln",
    "conformer_bn": "bn",
    "conformer_nonorm": None,
    "fusionformer": None,
}


@dataclass(frozen=True)
class ModelConfig:
    flavor: str
    num_encoder_blocks: int = 12
    num_decoder_blocks: int = 6
    hidden: int = 256
    heads: int = 4
    ffn_dim: int = 2048
    conv_kernel: int = 15
    vocab_size: int = 4233
    input_feat_dim: int = 80
    eps: float = 1e-5
    fused: bool = False
    quantized: bool = False

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ConfigError(f"flavor must be one of {FLAVORS}, got {self.flavor!r}")
        if self.hidden % self.heads != 0:
            raise ConfigError(
                f"hidden ({self.hidden}) must be divisible by heads ({self.heads})"
            )
        if self.conv_kernel % 2 == 0:
            raise ConfigError(f"conv_kernel must be odd, got {self.conv_kernel}")
        if self.vocab_size < 1:
            raise ConfigError(f"vocab_size must be >= 1, got {self.vocab_size}")
        for name in ("num_encoder_blocks", "num_decoder_blocks", "hidden", "heads",
                     "ffn_dim", "input_feat_dim"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.fused and self.flavor != "fusionformer":
            raise ConfigError(f"only fusionformer models can be fused, not {self.flavor}")

    @property
    def head_dim(self) -> int:
        return self.hidden // self.heads

    @property
    def conv_channels(self) -> int:
        """Channel width inside the convolution module.

        The first pointwise conv expands to 2x hidden; the conformer flavors
        halve back via GLU while fusionformer keeps the expansion through
        the depthwise stage (ReLU does not gate channels away).
        """
        return 2 * self.hidden if self.flavor == "fusionformer" else self.hidden

    @property
    def branch_norm(self):
        return BRANCH_NORM[self.flavor]

    def replace(self, **kw) -> "ModelConfig":
        d = asdict(self)
        d.update(kw)
        return ModelConfig(**d)

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(d: dict) -> "ModelConfig":
        known = {f for f in ModelConfig.__dataclass_fields__}
        return ModelConfig(**{k: v for k, v in d.items() if k in known})
