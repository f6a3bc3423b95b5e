"""Shared fixtures and independent dense-matrix oracles.

The oracle helpers below rebuild operators and states from first principles
(explicit shift/clock matrices, Kronecker products, basis-by-basis quadratic
forms) so the symbolic package code is always checked against an
implementation that shares none of its arithmetic.
"""

import itertools

import numpy as np

from ghzgraphs.graphs import WeightedGraph


def shift_matrix(d):
    m = np.zeros((d, d), dtype=complex)
    for s in range(d):
        m[(s + 1) % d, s] = 1.0
    return m


def clock_matrix(d):
    omega = np.exp(2j * np.pi / d)
    return np.diag(omega ** np.arange(d))


def kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def dense_word(d, n, x_exp, z_exp, phase_exp=0):
    """Reference matrix omega^p prod_v X^{x_v} Z^{z_v}, qudit by qudit."""
    x_mat, z_mat = shift_matrix(d), clock_matrix(d)
    mats = []
    for v in range(n):
        m = np.linalg.matrix_power(x_mat, int(x_exp[v])) @ np.linalg.matrix_power(z_mat, int(z_exp[v]))
        mats.append(m)
    return np.exp(2j * np.pi * phase_exp / d) * kron_all(mats)


def dense_graph_state(g: WeightedGraph):
    """Reference state vector from the quadratic form, basis tuple by tuple."""
    d, n = g.d, g.n
    amps = np.zeros(d**n, dtype=complex)
    for i, s in enumerate(itertools.product(range(d), repeat=n)):
        e = 0
        for u in range(n):
            for v in range(u + 1, n):
                e += int(g.adj[u, v]) * s[u] * s[v]
        amps[i] = np.exp(2j * np.pi * e / d)
    return amps / d ** (n / 2)
