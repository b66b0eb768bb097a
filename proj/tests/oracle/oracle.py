#!/usr/bin/env python3
"""Independent reference values for the frozen-value unit tests.

Uses only numpy/scipy and routes that differ from the library: concurrence
from the non-Hermitian rho * rho_tilde spectrum, REE by SLSQP over a Cholesky
parametrization with explicit PPT constraints, Haar-free fixed inputs.

    python3 tests/oracle/oracle.py
"""
from math import log2, sqrt

import numpy as np
from scipy.optimize import minimize

SY = np.array([[0, -1j], [1j, 0]])
YY = np.kron(SY, SY)
PAULI = [np.array([[0, 1], [1, 0]]), SY, np.array([[1, 0], [0, -1]])]


def fixed_state():
    # Full-rank, entangled, complex off-diagonals; nothing family-shaped.
    a = np.array([[1.0, 0.2j, 0.0, 0.9],
                  [0.1, 0.3, -0.2, 0.0],
                  [0.0, 0.4j, 0.2, 0.1],
                  [0.7, 0.0, 0.1j, 0.8]])
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def pt(m):
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def concurrence(rho):
    ev = np.linalg.eigvals(rho @ YY @ rho.conj() @ YY)
    lam = np.sort(np.sqrt(np.clip(ev.real, 0, None)))[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def negativity(rho):
    return 2 * sum(max(0.0, -x) for x in np.linalg.eigvalsh(pt(rho)))


def chsh_m(rho):
    t = np.array([[np.trace(rho @ np.kron(a, b)).real for b in PAULI] for a in PAULI])
    ev = np.sort(np.linalg.eigvalsh(t @ t.T))[::-1]
    return ev[0] + ev[1]


def ent(v):
    return -sum(x * log2(x) for x in v if x > 1e-300)


def ree(sigma):
    s_evals = np.linalg.eigvalsh(sigma)

    def unpack(x):
        l = np.zeros((4, 4), complex)
        idx = 0
        for i in range(4):
            for j in range(i + 1):
                if i == j:
                    l[i, j] = x[idx]
                    idx += 1
                else:
                    l[i, j] = x[idx] + 1j * x[idx + 1]
                    idx += 2
        r = l @ l.conj().T
        return r / np.trace(r).real

    def obj(x):
        w, v = np.linalg.eigh(unpack(x))
        lg = v @ np.diag(np.log2(np.clip(w, 1e-300, None))) @ v.conj().T
        return -np.trace(sigma @ lg).real - ent(s_evals)

    cons = [{"type": "ineq", "fun": lambda x: np.linalg.eigvalsh(pt(unpack(x)))[0]}]
    best = None
    for seed in range(8):
        x0 = np.random.default_rng(seed).normal(size=16) * 0.3
        x0[[0, 3, 8, 15]] = 1.0
        res = minimize(obj, x0, constraints=cons, method="SLSQP",
                       options={"ftol": 1e-14, "maxiter": 2000})
        if res.success and (best is None or res.fun < best.fun):
            best = res
    return best.fun


def main():
    rho = fixed_state()
    for name, value in [("C", concurrence(rho)), ("N", negativity(rho)), ("M", chsh_m(rho)),
                        ("S", ent(np.linalg.eigvalsh(rho))), ("E", ree(rho))]:
        print(f"{name} = {float(value)!r}")


if __name__ == "__main__":
    main()
