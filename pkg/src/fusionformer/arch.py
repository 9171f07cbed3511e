"""Architecture manifest: canonical layer paths, shapes and categories.

Everything that needs to agree on the structure of a model (the weight
initializer, store validation, the fusion pass, the profiler, quantization)
derives it from :func:`manifest`, which enumerates every parameter record of
a flavor in execution order.

Canonical paths look like ``encoder.block3.ffn1.linear1``; the tensors of a
record append ``.weight``/``.bias`` (linear, depthwise conv),
``.gamma``/``.beta`` (LN), ``.gamma``/``.beta``/``.running_mean``/
``.running_var`` (BN) or ``.table`` (embedding). A BN appended by the
fusionformer flavor lives at ``<layer>.bn``.

The subsampling front-end is two stride-2 3x3 convs realized as im2col +
linear (patch layout documented in model.py), followed by a projection;
both convs are causal along time so that chunk boundaries are exact.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .config import ModelConfig

CATEGORIES = (
    "feed_forward",
    "self_attention",
    "convolution",
    "normalization",
    "activation",
    "other",
)

_NORM_SEGMENTS = {"norm", "bn", "final_norm", "after_norm"}
_FFN_SEGMENTS = {"ffn", "ffn1", "ffn2"}
_ATTN_SEGMENTS = {"attn", "self_attn", "cross_attn"}


def categorize(path: str) -> str:
    """Profiling category owning a canonical layer path."""
    segs = set(path.split("."))
    if segs & _NORM_SEGMENTS:
        return "normalization"
    if "sub" in segs or "embed" in segs:
        return "other"
    if segs & _FFN_SEGMENTS:
        return "feed_forward"
    if segs & _ATTN_SEGMENTS:
        return "self_attention"
    if "conv" in segs:
        return "convolution"
    return "other"


def sub_len(n: int) -> int:
    """Output length of one stride-2 k=3 conv with causal/same padding."""
    return (n - 1) // 2 + 1


def sub_time_len(T: int) -> int:
    return sub_len(sub_len(T))


def sub_freq_len(F: int) -> int:
    return sub_len(sub_len(F))


@dataclass(frozen=True)
class ParamSpec:
    path: str
    kind: str  # linear | dwconv | ln | bn | embed
    shape: Tuple[int, ...]
    category: str
    fan_in: int = 0  # init bound 1/sqrt(fan_in); 0 for norms
    act: Optional[str] = None  # activation following this layer, if any


def tensor_names(kind: str) -> Tuple[str, ...]:
    if kind in ("linear", "dwconv"):
        return ("weight", "bias")
    if kind == "ln":
        return ("gamma", "beta")
    if kind == "bn":
        return ("gamma", "beta", "running_mean", "running_var")
    if kind == "embed":
        return ("table",)
    raise ValueError(f"unknown param kind {kind!r}")


def _linear(path, out_dim, in_dim, act=None) -> ParamSpec:
    return ParamSpec(path, "linear", (out_dim, in_dim), categorize(path), in_dim, act)


def _norm(path, kind, dim) -> ParamSpec:
    return ParamSpec(path, kind, (dim,), "normalization")


def manifest(cfg: ModelConfig) -> List[ParamSpec]:
    """Every parameter record of the flavor, in execution order."""
    d = cfg.hidden
    specs: List[ParamSpec] = []
    fusion = cfg.flavor == "fusionformer"
    bnorm = cfg.branch_norm  # "ln" | "bn" | None
    ffn_act = "relu" if fusion else "swish"

    def add_layer(spec: ParamSpec, bn_dim: int):
        specs.append(spec)
        if fusion and not cfg.fused:
            specs.append(_norm(spec.path + ".bn", "bn", bn_dim))

    # Subsampling front-end: conv1 over [3x3x1] patches, conv2 over [3x3xd].
    add_layer(_linear("encoder.sub.conv1", d, 9, act="relu"), d)
    add_layer(_linear("encoder.sub.conv2", d, 9 * d, act="relu"), d)
    fsub = sub_freq_len(cfg.input_feat_dim)
    add_layer(_linear("encoder.sub.proj", d, d * fsub), d)

    for i in range(cfg.num_encoder_blocks):
        base = f"encoder.block{i}"
        # -- macaron FFN
        if bnorm:
            specs.append(_norm(f"{base}.ffn1.norm", bnorm, d))
        add_layer(_linear(f"{base}.ffn1.linear1", cfg.ffn_dim, d, act=ffn_act), cfg.ffn_dim)
        add_layer(_linear(f"{base}.ffn1.linear2", d, cfg.ffn_dim), d)
        # -- self attention
        if bnorm:
            specs.append(_norm(f"{base}.attn.norm", bnorm, d))
        for proj in ("q", "k", "v", "out"):
            add_layer(_linear(f"{base}.attn.{proj}", d, d), d)
        # -- convolution module
        if bnorm:
            specs.append(_norm(f"{base}.conv.norm", bnorm, d))
        cc = cfg.conv_channels
        add_layer(_linear(f"{base}.conv.pw1", 2 * d, d,
                          act="relu" if fusion else "glu"), 2 * d)
        dw = ParamSpec(f"{base}.conv.dw", "dwconv", (cc, cfg.conv_kernel),
                       "convolution", cfg.conv_kernel,
                       act="relu" if fusion else "swish")
        add_layer(dw, cc)
        if not fusion and cfg.flavor != "conformer_nonorm":
            specs.append(_norm(f"{base}.conv.bn", "bn", cc))
        add_layer(_linear(f"{base}.conv.pw2", d, cc), d)
        # -- trailing FFN
        if bnorm:
            specs.append(_norm(f"{base}.ffn2.norm", bnorm, d))
        add_layer(_linear(f"{base}.ffn2.linear1", cfg.ffn_dim, d, act=ffn_act), cfg.ffn_dim)
        add_layer(_linear(f"{base}.ffn2.linear2", d, cfg.ffn_dim), d)
        if bnorm:
            specs.append(_norm(f"{base}.final_norm", bnorm, d))
    if bnorm:
        specs.append(_norm("encoder.after_norm", bnorm, d))

    specs.append(ParamSpec("decoder.embed", "embed", (cfg.vocab_size, d), "other", d))
    for i in range(cfg.num_decoder_blocks):
        base = f"decoder.block{i}"
        for attn in ("self_attn", "cross_attn"):
            if bnorm:
                specs.append(_norm(f"{base}.{attn}.norm", bnorm, d))
            for proj in ("q", "k", "v", "out"):
                add_layer(_linear(f"{base}.{attn}.{proj}", d, d), d)
        if bnorm:
            specs.append(_norm(f"{base}.ffn.norm", bnorm, d))
        add_layer(_linear(f"{base}.ffn.linear1", cfg.ffn_dim, d, act="relu"), cfg.ffn_dim)
        add_layer(_linear(f"{base}.ffn.linear2", d, cfg.ffn_dim), d)
    if bnorm:
        specs.append(_norm("decoder.after_norm", bnorm, d))
    add_layer(_linear("decoder.out", cfg.vocab_size, d), cfg.vocab_size)

    return specs


def expected_keys(cfg: ModelConfig) -> set:
    keys = set()
    for spec in manifest(cfg):
        for t in tensor_names(spec.kind):
            keys.add(f"{spec.path}.{t}")
    return keys


def appended_bns(cfg: ModelConfig) -> List[Tuple[str, str]]:
    """(bn path, producing layer path) pairs the fusion pass folds away."""
    pairs = []
    for spec in manifest(cfg):
        if spec.kind == "bn" and spec.path.endswith(".bn"):
            target = spec.path[: -len(".bn")]
            if cfg.flavor == "fusionformer":
                pairs.append((spec.path, target))
    return pairs


def relu_sites(cfg: ModelConfig) -> List[Tuple[str, str]]:
    """(activation path, producing layer path) pairs fusable as epilogues."""
    sites = []
    for spec in manifest(cfg):
        if spec.act != "relu":
            continue
        parent, leaf = spec.path.rsplit(".", 1)
        if leaf in ("conv1", "conv2"):
            name = f"{parent}.act{leaf[-1]}"
        elif leaf == "pw1":
            name = f"{parent}.act1"
        elif leaf == "dw":
            name = f"{parent}.act2"
        else:
            name = f"{parent}.act"
        sites.append((name, spec.path))
    return sites


def linear_like(cfg: ModelConfig) -> List[ParamSpec]:
    """The linear/depthwise-conv layers, in execution order."""
    return [s for s in manifest(cfg) if s.kind in ("linear", "dwconv")]


def block_layer_count(cfg: ModelConfig) -> int:
    """Linear/conv layers per encoder block (11 for every flavor here)."""
    block0 = [s for s in linear_like(cfg) if s.path.startswith("encoder.block0.")]
    return len(block0)
