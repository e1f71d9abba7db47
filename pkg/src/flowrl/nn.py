"""Tiny fully-connected networks with explicit reverse-mode gradients.

Everything here is float64 numpy. The point of hand-written backprop at
this scale is that every gradient in the package can be checked against
central finite differences, which the test suite does.
"""

from __future__ import annotations

import numpy as np


class Linear:
    def __init__(self, n_in: int, n_out: int, rng: np.random.Generator,
                 init_scale: float = 0.1, zero: bool = False):
        if zero:
            self.w = np.zeros((n_in, n_out))
        else:
            self.w = rng.uniform(-init_scale, init_scale, size=(n_in, n_out))
        self.b = np.zeros(n_out)
        self.gw = np.zeros_like(self.w)
        self.gb = np.zeros_like(self.b)
        self._x: np.ndarray | None = None

    def forward(self, x: np.ndarray) -> np.ndarray:
        self._x = x
        return x @ self.w + self.b

    def backward(self, gy: np.ndarray) -> np.ndarray:
        # Gradients accumulate until zero_grads(); callers batch rows.
        self.gw += self._x.T @ gy
        self.gb += gy.sum(axis=0)
        return gy @ self.w.T


class Tanh:
    def __init__(self):
        self._y: np.ndarray | None = None

    def forward(self, x: np.ndarray) -> np.ndarray:
        self._y = np.tanh(x)
        return self._y

    def backward(self, gy: np.ndarray) -> np.ndarray:
        return gy * (1.0 - self._y * self._y)


class MLP:
    """Two-layer perceptron (Linear -> tanh -> Linear) by default.

    ``widths`` lists [n_in, hidden..., n_out]; a tanh sits between every
    pair of linear layers and the output is affine.
    """

    def __init__(self, widths: list[int], rng: np.random.Generator,
                 init_scale: float = 0.1, zero: bool = False):
        self.widths = list(widths)
        self.layers: list = []
        for i in range(len(widths) - 1):
            self.layers.append(Linear(widths[i], widths[i + 1], rng,
                                      init_scale=init_scale, zero=zero))
            if i < len(widths) - 2:
                self.layers.append(Tanh())

    def forward(self, x: np.ndarray) -> np.ndarray:
        for layer in self.layers:
            x = layer.forward(x)
        return x

    def backward(self, gy: np.ndarray) -> np.ndarray:
        for layer in reversed(self.layers):
            gy = layer.backward(gy)
        return gy

    # -- parameter plumbing ------------------------------------------------

    def linears(self) -> list[Linear]:
        return [l for l in self.layers if isinstance(l, Linear)]

    def params(self) -> list[np.ndarray]:
        out = []
        for l in self.linears():
            out.extend([l.w, l.b])
        return out

    def grads(self) -> list[np.ndarray]:
        out = []
        for l in self.linears():
            out.extend([l.gw, l.gb])
        return out

    def zero_grads(self) -> None:
        for g in self.grads():
            g[...] = 0.0

    def get_flat(self) -> np.ndarray:
        return np.concatenate([p.ravel() for p in self.params()])

    def set_flat(self, flat: np.ndarray) -> None:
        i = 0
        for p in self.params():
            n = p.size
            p[...] = flat[i:i + n].reshape(p.shape)
            i += n
        if i != flat.size:
            raise ValueError(f"flat vector has {flat.size} entries, expected {i}")

    def copy(self) -> "MLP":
        clone = MLP(self.widths, np.random.default_rng(0))
        clone.set_flat(self.get_flat())
        return clone


def flatten_grads(net: MLP) -> np.ndarray:
    return np.concatenate([g.ravel() for g in net.grads()])


class SGD:
    """Plain stochastic gradient descent with optional momentum."""

    def __init__(self, nets: list[MLP], lr: float = 1e-3, momentum: float = 0.0):
        self.nets = nets
        self.lr = lr
        self.momentum = momentum
        self._vel = [[np.zeros_like(p) for p in net.params()] for net in nets]

    def step(self) -> None:
        for net, vels in zip(self.nets, self._vel):
            for p, g, v in zip(net.params(), net.grads(), vels):
                if self.momentum > 0.0:
                    v *= self.momentum
                    v += g
                    p -= self.lr * v
                else:
                    p -= self.lr * g

    def zero_grads(self) -> None:
        for net in self.nets:
            net.zero_grads()


def grad_norm(nets: list[MLP]) -> float:
    total = 0.0
    for net in nets:
        for g in net.grads():
            total += float(np.sum(g * g))
    return float(np.sqrt(total))
