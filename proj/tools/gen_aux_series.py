#!/usr/bin/env python3
"""Generate include/chaoskernel/aux_series.hpp.

Small-xi Taylor data for the six auxiliary functions.  Each function is even
with nonzero coefficients only at powers of xi^4, so the tables are stored as
polynomials in t = xi^4.  Coefficients are exact rationals computed
symbolically from the closed forms; ten terms give ~1e-26 truncation error at
the xi = 1/2 crossover (the nearest complex poles put the t-radius of
convergence at ~389 for V/F and ~1630 for U).

Usage: python3 tools/gen_aux_series.py > include/chaoskernel/aux_series.hpp
"""
import sys
from fractions import Fraction

import sympy as sp

NTERMS = 10
ORDER = 4 * NTERMS + 4  # xi-order incl. guard term

xi = sp.symbols('xi')
ch, co = sp.cosh(xi), sp.cos(xi)
sh, si = sp.sinh(xi), sp.sin(xi)
dplus, dminus = ch + co, ch - co
Splus, Sminus = sh + si, sh - si
a = xi - Splus / dplus
b = Sminus / dplus
r2 = a * a + b * b

exprs = {
    # U(y) = U_r/(2 xi^4) + i U_i/(2 xi^2) decomposition at y = 2 xi^2
    'u_r': 2 * xi**3 * b / r2,
    'u_i': xi * a / r2,
    # V(y) decomposition
    'v_r': xi * Splus / (2 * dminus),
    'v_i': Sminus / (4 * xi * dminus),
}

A = 1 - ch * co - (xi / 2) * (ch * si - sh * co)
B = sh * si - (xi / 2) * (ch * si + sh * co)
den = A * A + B * B
exprs['f_r_reg'] = -A / den * xi**4   # F_r * xi^4
exprs['f_i_reg'] = B / den * xi**2    # F_i * xi^2


def t_coefficients(expr, name):
    ser = sp.expand(sp.series(expr, xi, 0, ORDER).removeO())
    coeffs = []
    for k in range(ORDER):
        ck = ser.coeff(xi, k)
        if k % 4 == 0:
            if k // 4 < NTERMS:
                coeffs.append(sp.nsimplify(ck))
        elif ck != 0:
            raise SystemExit(f'{name}: unexpected xi^{k} coefficient {ck}')
    return coeffs


def main():
    out = sys.stdout
    out.write('#pragma once\n')
    out.write('// Generated by tools/gen_aux_series.py -- do not edit by hand.\n')
    out.write('// Polynomials in t = xi^4; Horner-ready, highest degree last.\n\n')
    out.write('namespace chaoskernel::aux_series {\n\n')
    out.write(f'inline constexpr int kTerms = {NTERMS};\n\n')
    for name, expr in exprs.items():
        cs = t_coefficients(expr, name)
        out.write(f'inline constexpr double k_{name}[kTerms] = {{\n')
        for c in cs:
            frac = Fraction(int(sp.numer(c)), int(sp.denom(c)))
            out.write(f'    {float(frac):.17e},  // {frac}\n')
        out.write('};\n\n')
    out.write('}  // namespace chaoskernel::aux_series\n')


if __name__ == '__main__':
    main()
