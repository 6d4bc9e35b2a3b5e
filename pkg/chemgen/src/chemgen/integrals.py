"""Molecular integrals over contracted Cartesian Gaussians (McMurchie-Davidson).

Hermite expansion coefficients E, Hermite Coulomb tensors R, and the Boys
function carry all angular-momentum handling; only s and p shells are needed
for STO-3G H and O but the recursions are general.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import hyp1f1

from .basis import ATOMIC_NUMBER, BasisFunction


def boys(n: int, t: float) -> float:
    return float(hyp1f1(n + 0.5, n + 1.5, -t) / (2.0 * n + 1.0))


def _hermite_e(i: int, j: int, t: int, qx: float, a: float, b: float) -> float:
    """Hermite expansion coefficient E_t^{ij} for a 1D Gaussian product."""
    p = a + b
    mu = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-mu * qx * qx)
    if j == 0:
        # decrement i
        return (
            _hermite_e(i - 1, j, t - 1, qx, a, b) / (2.0 * p)
            - (mu * qx / a) * _hermite_e(i - 1, j, t, qx, a, b)
            + (t + 1) * _hermite_e(i - 1, j, t + 1, qx, a, b)
        )
    return (
        _hermite_e(i, j - 1, t - 1, qx, a, b) / (2.0 * p)
        + (mu * qx / b) * _hermite_e(i, j - 1, t, qx, a, b)
        + (t + 1) * _hermite_e(i, j - 1, t + 1, qx, a, b)
    )


def _primitive_overlap(a, lmn1, pa, b, lmn2, pb) -> float:
    s = 1.0
    for axis in range(3):
        s *= _hermite_e(lmn1[axis], lmn2[axis], 0, pa[axis] - pb[axis], a, b)
    return s * (math.pi / (a + b)) ** 1.5


def overlap(f1: BasisFunction, f2: BasisFunction) -> float:
    total = 0.0
    for a, ca in zip(f1.exponents, f1.coefficients):
        for b, cb in zip(f2.exponents, f2.coefficients):
            total += ca * cb * _primitive_overlap(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
    return total


def _primitive_kinetic(a, lmn1, pa, b, lmn2, pb) -> float:
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * _primitive_overlap(a, lmn1, pa, b, lmn2, pb)
    term1 = -2.0 * b * b * (
        _primitive_overlap(a, lmn1, pa, b, (l2 + 2, m2, n2), pb)
        + _primitive_overlap(a, lmn1, pa, b, (l2, m2 + 2, n2), pb)
        + _primitive_overlap(a, lmn1, pa, b, (l2, m2, n2 + 2), pb)
    )
    term2 = -0.5 * (
        l2 * (l2 - 1) * _primitive_overlap(a, lmn1, pa, b, (l2 - 2, m2, n2), pb)
        + m2 * (m2 - 1) * _primitive_overlap(a, lmn1, pa, b, (l2, m2 - 2, n2), pb)
        + n2 * (n2 - 1) * _primitive_overlap(a, lmn1, pa, b, (l2, m2, n2 - 2), pb)
    )
    return term0 + term1 + term2


def kinetic(f1: BasisFunction, f2: BasisFunction) -> float:
    total = 0.0
    for a, ca in zip(f1.exponents, f1.coefficients):
        for b, cb in zip(f2.exponents, f2.coefficients):
            total += ca * cb * _primitive_kinetic(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
    return total


def _hermite_coulomb(t: int, u: int, v: int, n: int, p: float, pc, cache) -> float:
    key = (t, u, v, n)
    if key in cache:
        return cache[key]
    if t == u == v == 0:
        value = (-2.0 * p) ** n * boys(n, p * (pc[0] ** 2 + pc[1] ** 2 + pc[2] ** 2))
    elif t > 0:
        value = (t - 1) * _hermite_coulomb(t - 2, u, v, n + 1, p, pc, cache) if t > 1 else 0.0
        value += pc[0] * _hermite_coulomb(t - 1, u, v, n + 1, p, pc, cache)
    elif u > 0:
        value = (u - 1) * _hermite_coulomb(t, u - 2, v, n + 1, p, pc, cache) if u > 1 else 0.0
        value += pc[1] * _hermite_coulomb(t, u - 1, v, n + 1, p, pc, cache)
    else:
        value = (v - 1) * _hermite_coulomb(t, u, v - 2, n + 1, p, pc, cache) if v > 1 else 0.0
        value += pc[2] * _hermite_coulomb(t, u, v - 1, n + 1, p, pc, cache)
    cache[key] = value
    return value


def _primitive_nuclear(a, lmn1, pa, b, lmn2, pb, nucleus) -> float:
    p = a + b
    center = tuple((a * pa[k] + b * pb[k]) / p for k in range(3))
    pc = tuple(center[k] - nucleus[k] for k in range(3))
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    cache: dict = {}
    total = 0.0
    for t in range(l1 + l2 + 1):
        et = _hermite_e(l1, l2, t, pa[0] - pb[0], a, b)
        for u in range(m1 + m2 + 1):
            eu = _hermite_e(m1, m2, u, pa[1] - pb[1], a, b)
            for v in range(n1 + n2 + 1):
                ev = _hermite_e(n1, n2, v, pa[2] - pb[2], a, b)
                total += et * eu * ev * _hermite_coulomb(t, u, v, 0, p, pc, cache)
    return 2.0 * math.pi / p * total


def nuclear_attraction(f1: BasisFunction, f2: BasisFunction, atoms) -> float:
    """Sum of -Z / |r - R| attraction integrals over all nuclei."""
    total = 0.0
    for element, position in atoms:
        charge = ATOMIC_NUMBER[element]
        for a, ca in zip(f1.exponents, f1.coefficients):
            for b, cb in zip(f2.exponents, f2.coefficients):
                total -= charge * ca * cb * _primitive_nuclear(
                    a, f1.lmn, f1.center, b, f2.lmn, f2.center, position
                )
    return total


def _primitive_eri(a, lmn1, pa, b, lmn2, pb, c, lmn3, pc_, d, lmn4, pd) -> float:
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    p_center = tuple((a * pa[k] + b * pb[k]) / p for k in range(3))
    q_center = tuple((c * pc_[k] + d * pd[k]) / q for k in range(3))
    pq = tuple(p_center[k] - q_center[k] for k in range(3))

    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    l3, m3, n3 = lmn3
    l4, m4, n4 = lmn4

    e_bra_x = [_hermite_e(l1, l2, t, pa[0] - pb[0], a, b) for t in range(l1 + l2 + 1)]
    e_bra_y = [_hermite_e(m1, m2, u, pa[1] - pb[1], a, b) for u in range(m1 + m2 + 1)]
    e_bra_z = [_hermite_e(n1, n2, v, pa[2] - pb[2], a, b) for v in range(n1 + n2 + 1)]
    e_ket_x = [_hermite_e(l3, l4, t, pc_[0] - pd[0], c, d) for t in range(l3 + l4 + 1)]
    e_ket_y = [_hermite_e(m3, m4, u, pc_[1] - pd[1], c, d) for u in range(m3 + m4 + 1)]
    e_ket_z = [_hermite_e(n3, n4, v, pc_[2] - pd[2], c, d) for v in range(n3 + n4 + 1)]

    cache: dict = {}
    total = 0.0
    for t, et in enumerate(e_bra_x):
        for u, eu in enumerate(e_bra_y):
            for v, ev in enumerate(e_bra_z):
                bra = et * eu * ev
                if bra == 0.0:
                    continue
                for tau, etau in enumerate(e_ket_x):
                    for nu, enu in enumerate(e_ket_y):
                        for phi, ephi in enumerate(e_ket_z):
                            ket = etau * enu * ephi
                            if ket == 0.0:
                                continue
                            sign = -1.0 if (tau + nu + phi) % 2 else 1.0
                            total += bra * ket * sign * _hermite_coulomb(
                                t + tau, u + nu, v + phi, 0, alpha, pq, cache
                            )
    return total * 2.0 * math.pi**2.5 / (p * q * math.sqrt(p + q))


def electron_repulsion(f1, f2, f3, f4) -> float:
    """Chemists' notation two-electron integral (f1 f2 | f3 f4)."""
    total = 0.0
    for a, ca in zip(f1.exponents, f1.coefficients):
        for b, cb in zip(f2.exponents, f2.coefficients):
            for c, cc in zip(f3.exponents, f3.coefficients):
                for d, cd in zip(f4.exponents, f4.coefficients):
                    total += ca * cb * cc * cd * _primitive_eri(
                        a, f1.lmn, f1.center, b, f2.lmn, f2.center,
                        c, f3.lmn, f3.center, d, f4.lmn, f4.center,
                    )
    return total


def integral_tables(basis: list[BasisFunction], atoms):
    """(S, T, V, ERI) matrices/tensor over the whole basis.

    The ERI tensor is filled through its 8-fold permutational symmetry.
    """
    n = len(basis)
    s_matrix = np.zeros((n, n))
    t_matrix = np.zeros((n, n))
    v_matrix = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            s_matrix[i, j] = s_matrix[j, i] = overlap(basis[i], basis[j])
            t_matrix[i, j] = t_matrix[j, i] = kinetic(basis[i], basis[j])
            v_matrix[i, j] = v_matrix[j, i] = nuclear_attraction(basis[i], basis[j], atoms)

    eri = np.zeros((n, n, n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for index_ij, (i, j) in enumerate(pairs):
        for k, l in pairs[: index_ij + 1]:
            value = electron_repulsion(basis[i], basis[j], basis[k], basis[l])
            for a, b in ((i, j), (j, i)):
                for c, d in ((k, l), (l, k)):
                    eri[a, b, c, d] = value
                    eri[c, d, a, b] = value
    return s_matrix, t_matrix, v_matrix, eri
