"""Policy/value network: numpy forward and hand-written backward pass.

Architecture: convolutional trunk over the board channels, flattened and
concatenated with the scalar features and the coefficient slot, two dense
stages (the slot is re-injected before the second one so conditioning
information cannot wash out), then two linear heads: policy logits and
per-action values.  tanh activations keep every loss surface smooth, which
the finite-difference gradient audit relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

import numpy as np

MASK_NEG = -1e30


@dataclass(frozen=True)
class NetConfig:
    n_actions: int = 61
    board_shape: tuple[int, int, int] | None = (9, 20, 20)  # (C, H, W); None = dense only
    general_size: int = 97
    slot_size: int = 7
    conv: tuple[tuple[int, int, int], ...] = ((12, 4, 2), (16, 3, 2))  # (out_ch, k, stride)
    hidden: tuple[int, ...] = (128, 96)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["board_shape"] = list(self.board_shape) if self.board_shape else None
        d["conv"] = [list(c) for c in self.conv]
        d["hidden"] = list(self.hidden)
        return d

    @staticmethod
    def from_dict(raw: dict) -> "NetConfig":
        return NetConfig(
            n_actions=int(raw["n_actions"]),
            board_shape=tuple(raw["board_shape"]) if raw["board_shape"] else None,
            general_size=int(raw["general_size"]),
            slot_size=int(raw["slot_size"]),
            conv=tuple(tuple(c) for c in raw["conv"]),
            hidden=tuple(raw["hidden"]),
        )


def _conv_out(h: int, k: int, s: int) -> int:
    return (h - k) // s + 1


def _im2col(x: np.ndarray, k: int, stride: int) -> np.ndarray:
    """(B, C, H, W) -> (B, OH*OW, C*k*k) patch matrix."""
    windows = np.lib.stride_tricks.sliding_window_view(x, (k, k), axis=(2, 3))
    windows = windows[:, :, ::stride, ::stride]  # (B, C, OH, OW, k, k)
    b, c, oh, ow, _, _ = windows.shape
    return (
        windows.transpose(0, 2, 3, 1, 4, 5).reshape(b, oh * ow, c * k * k),
        (oh, ow),
    )


def _col2im(dcols: np.ndarray, x_shape, k: int, stride: int, oh: int, ow: int) -> np.ndarray:
    """Scatter-add the patch-matrix gradient back to the input layout."""
    b, c, h, w = x_shape
    dx = np.zeros((b, c, h, w), dtype=dcols.dtype)
    d6 = dcols.reshape(b, oh, ow, c, k, k).transpose(0, 3, 1, 2, 4, 5)
    for i in range(k):
        for j in range(k):
            dx[:, :, i : i + stride * oh : stride, j : j + stride * ow : stride] += d6[
                :, :, :, :, i, j
            ]
    return dx


class PolicyValueNet:
    """Parameter container plus forward/backward passes."""

    def __init__(self, config: NetConfig, seed: int = 0):
        self.config = config
        rng = np.random.default_rng(seed)
        self.params: dict[str, np.ndarray] = {}
        flat_in = 0
        if config.board_shape is not None:
            c, h, w = config.board_shape
            for li, (oc, k, s) in enumerate(config.conv):
                fan_in = c * k * k
                self.params[f"conv{li}_w"] = rng.normal(
                    0.0, np.sqrt(1.0 / fan_in), size=(fan_in, oc)
                )
                self.params[f"conv{li}_b"] = np.zeros(oc)
                h, w, c = _conv_out(h, k, s), _conv_out(w, k, s), oc
            flat_in = c * h * w
        d_in = flat_in + config.general_size + config.slot_size
        for li, width in enumerate(config.hidden):
            if li > 0:
                d_in += config.slot_size  # slot re-injection
            self.params[f"fc{li}_w"] = rng.normal(
                0.0, np.sqrt(1.0 / d_in), size=(d_in, width)
            )
            self.params[f"fc{li}_b"] = np.zeros(width)
            d_in = width
        self.params["pi_w"] = rng.normal(0.0, 0.01, size=(d_in, config.n_actions))
        self.params["pi_b"] = np.zeros(config.n_actions)
        self.params["q_w"] = rng.normal(0.0, 0.01, size=(d_in, config.n_actions))
        self.params["q_b"] = np.zeros(config.n_actions)

    # -- parameter plumbing -------------------------------------------------
    def param_names(self) -> list[str]:
        return sorted(self.params)

    def get_flat(self) -> np.ndarray:
        return np.concatenate([self.params[k].ravel() for k in self.param_names()])

    def set_flat(self, flat: np.ndarray):
        i = 0
        for k in self.param_names():
            n = self.params[k].size
            self.params[k] = flat[i : i + n].reshape(self.params[k].shape).copy()
            i += n

    def snapshot(self) -> dict[str, np.ndarray]:
        return {k: v.copy() for k, v in self.params.items()}

    def load_params(self, params: dict[str, np.ndarray]):
        for k in self.params:
            self.params[k] = params[k].copy()

    def all_finite(self) -> bool:
        return all(np.isfinite(v).all() for v in self.params.values())

    # -- forward --------------------------------------------------------------
    def forward(
        self,
        board: np.ndarray | None,
        general: np.ndarray,
        slot: np.ndarray,
        mask: np.ndarray,
        want_cache: bool = False,
    ):
        """Batched forward pass.

        board (B, C, H, W) or None, general (B, G), slot (B, slot_size),
        mask (B, A) with at least one legal entry per row.  Returns
        (probs, logp, q[, cache]); probs is the masked softmax.
        """
        cfg = self.config
        cache: dict = {"mask": mask}
        parts = []
        if cfg.board_shape is not None:
            x = board
            cache["conv"] = []
            for li, (oc, k, s) in enumerate(cfg.conv):
                cols, (oh, ow) = _im2col(x, k, s)
                z = cols @ self.params[f"conv{li}_w"] + self.params[f"conv{li}_b"]
                a = np.tanh(z)
                cache["conv"].append((x.shape, cols, a, oh, ow, k, s))
                x = a.reshape(x.shape[0], oh, ow, oc).transpose(0, 3, 1, 2)
            flat = x.reshape(x.shape[0], -1)
            # the flattened activation's layout matches the last transpose
            cache["flat_shape"] = x.shape
            parts.append(flat)
        parts.extend([general, slot])
        h = np.concatenate(parts, axis=1)
        cache["dense"] = []
        for li in range(len(cfg.hidden)):
            if li > 0:
                h = np.concatenate([h, slot], axis=1)
            z = h @ self.params[f"fc{li}_w"] + self.params[f"fc{li}_b"]
            a = np.tanh(z)
            cache["dense"].append((h, a))
            h = a
        logits = h @ self.params["pi_w"] + self.params["pi_b"]
        q = h @ self.params["q_w"] + self.params["q_b"]
        masked = np.where(mask > 0, logits, MASK_NEG)
        shifted = masked - masked.max(axis=1, keepdims=True)
        expv = np.exp(shifted)
        denom = expv.sum(axis=1, keepdims=True)
        probs = expv / denom
        logp = shifted - np.log(denom)
        cache["head_in"] = h
        cache["probs"] = probs
        if want_cache:
            return probs, logp, q, cache
        return probs, logp, q

    # -- backward -------------------------------------------------------------
    def backward(self, cache: dict, dlogits: np.ndarray, dq: np.ndarray) -> dict:
        """Gradients of a scalar loss given d(loss)/d(logits) and /d(q).

        ``dlogits`` must already be expressed w.r.t. the raw (pre-mask)
        logits; masked-out entries receive no gradient because the mask is
        constant and the -1e30 fill saturates the softmax.
        """
        cfg = self.config
        grads = {k: np.zeros_like(v) for k, v in self.params.items()}
        mask = cache["mask"]
        dlogits = np.where(mask > 0, dlogits, 0.0)
        h = cache["head_in"]
        grads["pi_w"] = h.T @ dlogits
        grads["pi_b"] = dlogits.sum(axis=0)
        grads["q_w"] = h.T @ dq
        grads["q_b"] = dq.sum(axis=0)
        dh = dlogits @ self.params["pi_w"].T + dq @ self.params["q_w"].T

        for li in reversed(range(len(cfg.hidden))):
            h_in, a = cache["dense"][li]
            dz = dh * (1.0 - a * a)
            grads[f"fc{li}_w"] = h_in.T @ dz
            grads[f"fc{li}_b"] = dz.sum(axis=0)
            dh = dz @ self.params[f"fc{li}_w"].T
            if li > 0:
                dh = dh[:, : dh.shape[1] - cfg.slot_size]  # drop re-injected slot

        if cfg.board_shape is None:
            return grads
        flat_len = cache["flat_shape"][1] * cache["flat_shape"][2] * cache["flat_shape"][3]
        dflat = dh[:, :flat_len]
        dx = dflat.reshape(cache["flat_shape"])
        for li in reversed(range(len(cfg.conv))):
            x_shape, cols, a, oh, ow, k, s = cache["conv"][li]
            oc = a.shape[-1]
            da = dx.transpose(0, 2, 3, 1).reshape(a.shape)
            dz = da * (1.0 - a * a)
            grads[f"conv{li}_w"] = np.tensordot(cols, dz, axes=([0, 1], [0, 1]))
            grads[f"conv{li}_b"] = dz.sum(axis=(0, 1))
            dcols = dz @ self.params[f"conv{li}_w"].T
            dx = _col2im(dcols, x_shape, k, s, oh, ow)
        return grads


class Adam:
    """Plain Adam with optional global-norm gradient clipping."""

    def __init__(self, net: PolicyValueNet, lr: float = 1e-3, beta1: float = 0.9,
                 beta2: float = 0.999, eps: float = 1e-8, grad_clip: float = 0.0):
        self.net = net
        self.lr = lr
        self.beta1, self.beta2, self.eps = beta1, beta2, eps
        self.grad_clip = grad_clip
        self.t = 0
        self.m = {k: np.zeros_like(v) for k, v in net.params.items()}
        self.v = {k: np.zeros_like(v) for k, v in net.params.items()}

    def step(self, grads: dict[str, np.ndarray]) -> float:
        norm = float(np.sqrt(sum(float((g * g).sum()) for g in grads.values())))
        scale = 1.0
        if self.grad_clip > 0 and norm > self.grad_clip:
            scale = self.grad_clip / (norm + 1e-12)
        self.t += 1
        b1c = 1.0 - self.beta1 ** self.t
        b2c = 1.0 - self.beta2 ** self.t
        for k, g in grads.items():
            g = g * scale
            self.m[k] = self.beta1 * self.m[k] + (1 - self.beta1) * g
            self.v[k] = self.beta2 * self.v[k] + (1 - self.beta2) * (g * g)
            mhat = self.m[k] / b1c
            vhat = self.v[k] / b2c
            self.net.params[k] -= self.lr * mhat / (np.sqrt(vhat) + self.eps)
        return norm
