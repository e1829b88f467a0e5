"""Refinement matrices, wavelet completion, and the coefficient transform.

Given a certified scaling vector Phi = (phi_0..phi_n), this module computes
the four exact matrices C_i with Phi(t) = sum_i C_i Phi(2t-i), completes the
basis with n+1 wavelets (two straddling the origin, n-1 supported on [0,1]
with 1/2 as symmetry axis), extracts the wavelet matrices D_i, and applies
the resulting filter bank to coefficient streams in floats.

All matrix entries and wavelet coefficients are exact; the only floating
point lives in :func:`transform`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConstructionError
from .exactnum import ExactScalar, scalar_str
from .mrabuild import ScalingVector, assemble_phi
from .polykit import PiecewisePoly, SymmetryType

Matrix = tuple[tuple[ExactScalar, ...], ...]

SHIFTS = (-2, -1, 0, 1)


def _require(cond: bool, identity: str, detail: str = ""):
    if not cond:
        raise ConstructionError(identity, detail)


def _mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def matrix_float(m: Matrix) -> list[list[float]]:
    return [[float(x) for x in row] for row in m]


def matrix_json(m: Matrix) -> dict:
    return {
        "exact": [[scalar_str(x) for x in row] for row in m],
        "float": [[float(f"{float(x):.17g}") for x in row] for row in m],
    }


# ---------------------------------------------------------------------------
# Symmetry templates for interior wavelets

@dataclass(frozen=True)
class SymPattern:
    """Coefficient template in R^(2n+2) for a wavelet on [0,1].

    The first n+1 slots multiply phi_j(2t), the last n+1 multiply
    phi_j(2t-1).  Reflection about 1/2 sends phi_j(2t) to +/- phi_j(2t-1),
    which forces the paired-slot sign laws encoded here; the leading zero
    keeps the wavelet orthogonal to phi_0(2t), whose support sticks out of
    [0, 1].
    """

    kind: str  # 'symmetric' | 'antisymmetric'
    n: int

    @property
    def width(self) -> int:
        """Number of free symbols: b_0..b_n (symmetric) or b_1..b_n."""
        return self.n + 1 if self.kind == "symmetric" else self.n

    def columns(self) -> list[list[Fraction]]:
        """Template matrix columns: coefficient vector per free symbol."""
        n = self.n
        cols = []
        if self.kind == "symmetric":
            col0 = [Fraction(0)] * (2 * n + 2)
            col0[n + 1] = Fraction(1)  # b_0 rides on phi_0(2t-1)
            cols.append(col0)
            for k in range(1, n + 1):
                col = [Fraction(0)] * (2 * n + 2)
                col[k] = Fraction(1)
                sign = (-1) ** (n + 1) if k == 1 else (-1) ** k
                col[n + 1 + k] = Fraction(sign)
                cols.append(col)
        elif self.kind == "antisymmetric":
            for k in range(1, n + 1):
                col = [Fraction(0)] * (2 * n + 2)
                col[k] = Fraction(1)
                sign = (-1) ** n if k == 1 else (-1) ** (k + 1)
                col[n + 1 + k] = Fraction(sign)
                cols.append(col)
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        return cols

    def expand(self, b) -> tuple[ExactScalar, ...]:
        cols = self.columns()
        out = [Fraction(0)] * (2 * self.n + 2)
        for coeff, col in zip(b, cols):
            for t, c in enumerate(col):
                if c:
                    out[t] = out[t] + coeff * c
        return tuple(out)


def nullspace_exact(rows: list[list[ExactScalar]]) -> list[list[ExactScalar]]:
    """Basis of the nullspace by exact Gauss-Jordan elimination.

    Free variables are enumerated in ascending column order, each basis
    vector setting one free variable to 1 and the rest to 0, so the output
    is deterministic.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[tuple[int, int]] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        pivots.append((rank, col))
        rank += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v: list[ExactScalar] = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in pivots:
            v[c] = -m[r][free]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Refinement set

@dataclass
class RefinementSet:
    """Exact refinement data for one scaling vector.

    ``gram`` is the diagonal of the half-scale Gram matrix (norms/2);
    ``c_tilde``/``c`` and ``d_tilde``/``d`` map shift i in {-2,-1,0,1} to the
    (n+1)x(n+1) matrices before/after column scaling by 1/gram.  ``psi``
    holds the n+1 wavelets (boundary pair first), with exact squared norms,
    symmetry kinds, and, for interior wavelets, the template nullspace
    vectors p satisfying (C_0, C_1) p = 0.
    """

    n: int
    family: str
    phi: ScalingVector
    gram: tuple[ExactScalar, ...]
    c_tilde: dict[int, Matrix]
    c: dict[int, Matrix]
    d_tilde: dict[int, Matrix] | None = None
    d: dict[int, Matrix] | None = None
    psi: tuple[PiecewisePoly, ...] | None = None
    psi_norms_sq: tuple[ExactScalar, ...] | None = None
    psi_kinds: tuple[str, ...] | None = None
    psi_vectors: dict[int, tuple[ExactScalar, ...]] | None = None


def _cross_matrix(left: tuple[PiecewisePoly, ...], right: tuple[PiecewisePoly, ...],
                  shift: int) -> Matrix:
    return _mat(
        [[f.inner(g.dilate_translate(1, shift)) for g in right] for f in left]
    )


def refinement_matrices(phi: ScalingVector) -> RefinementSet:
    """Compute C_i = C~_i * gram^-1 and certify the dilation identity plus
    the entry sign laws and structural zeros."""
    n = phi.n
    gram = tuple(ns / 2 for ns in phi.norms_sq)
    c_tilde = {i: _cross_matrix(phi.entries, phi.entries, i) for i in SHIFTS}
    c = {
        i: _mat(
            [[c_tilde[i][j][k] / gram[k] for k in range(n + 1)] for j in range(n + 1)]
        )
        for i in SHIFTS
    }
    rs = RefinementSet(n=n, family=phi.family, phi=phi, gram=gram,
                       c_tilde=c_tilde, c=c)
    _verify_dilation(rs)
    _verify_matrix_symmetries(rs)
    _verify_structural_zeros(rs)
    return rs


def _verify_dilation(rs: RefinementSet):
    phi = rs.phi
    for j in range(rs.n + 1):
        acc = PiecewisePoly.zero()
        for i in SHIFTS:
            for k in range(rs.n + 1):
                coef = rs.c[i][j][k]
                if coef != 0:
                    acc = acc + phi.entries[k].dilate_translate(1, i).scale(coef)
        _require(acc == phi.entries[j], "refl", f"entry {j}")


def _verify_matrix_symmetries(rs: RefinementSet):
    n, c = rs.n, rs.c
    sgn1 = (-1) ** (n + 1)
    for i in range(n + 1):
        _require(c[-2][i][0] == 0, "crefine", f"C_-2[{i},0]")
        for k in range(n + 1):
            if i >= 1:
                _require(c[-1][i][k] == 0, "crefine", f"C_-1[{i},{k}]")
                if k >= 1:
                    _require(c[-2][i][k] == 0, "crefine", f"C_-2[{i},{k}]")
    _require(c[-2][0][1] == sgn1 * c[1][0][1], "crefine", "C_-2[0,1]")
    _require(c[-1][0][0] == c[1][0][0], "crefine", "C_-1[0,0]")
    _require(c[-1][0][1] == sgn1 * c[0][0][1], "crefine", "C_-1[0,1]")
    for k in range(2, n + 1):
        _require(c[-2][0][k] == (-1) ** k * c[1][0][k], "crefine", f"C_-2[0,{k}]")
        _require(c[-1][0][k] == (-1) ** k * c[0][0][k], "crefine", f"C_-1[0,{k}]")
    for i in range(1, n + 1):
        _require(c[0][i][0] == 0, "crefine", f"C_0[{i},0]")
    _require(c[1][1][1] == c[0][1][1], "crefine", "C_1[1,1]")
    for k in range(2, n + 1):
        _require(c[1][1][k] == (-1) ** (k + n + 1) * c[0][1][k], "crefine", f"C_1[1,{k}]")
    for i in range(2, n + 1):
        _require(c[1][i][1] == (-1) ** (i + n + 1) * c[0][i][1], "crefine", f"C_1[{i},1]")
        for k in range(2, n + 1):
            _require(c[1][i][k] == (-1) ** (i + k) * c[0][i][k], "crefine", f"C_1[{i},{k}]")


def _verify_structural_zeros(rs: RefinementSet):
    n, c0 = rs.n, rs.c[0]
    for i in range(3, n + 1, 2):
        for j in range(i + 1, n + 1):
            _require(c0[i][j] == 0, "zeroco", f"C_0[{i},{j}]")
        _require(c0[i][1] == 0, "zeroco", f"C_0[{i},1]")
    if n % 2 == 0:
        _require(c0[1][1] == 0, "zeroco", "C_0[1,1]")


# ---------------------------------------------------------------------------
# Wavelet completion

def boundary_wavelets(phi: ScalingVector, rs: RefinementSet
                      ) -> tuple[PiecewisePoly, PiecewisePoly]:
    """The two wavelets straddling the origin.

    psi_0 = phi_0(2t) minus its phi_0 component (even about 0);
    psi_1 flips the sign of (phi_0 minus its phi_0(2t) component) on t < 0
    (odd about 0).  Orthogonality to every scaling-function shift is
    verified, not assumed.
    """
    phi0 = phi.entries[0]
    half = phi0.dilate_translate(1, 0)
    psi0 = half - phi0.scale(half.inner(phi0) / phi.norms_sq[0])
    g = phi0 - half.scale(phi0.inner(half) / half.norm_sq())
    psi1 = g.restrict(0, 1) - g.restrict(-1, 0)
    for name, psi in (("psi0", psi0), ("psi1", psi1)):
        for k in (-1, 0, 1):
            for j in range(phi.n + 1):
                _require(
                    psi.inner(phi.entries[j].shift(k)) == 0,
                    "boundary-wavelet-orthogonality",
                    f"{name} vs phi_{j} shift {k}",
                )
    _require(psi0.inner(psi1) == 0, "boundary-wavelet-orthogonality", "psi0 vs psi1")
    _require(psi0.check_symmetry(SymmetryType(Fraction(0), "even")),
             "wavelet-symmetry", "psi0")
    _require(psi1.check_symmetry(SymmetryType(Fraction(0), "odd")),
             "wavelet-symmetry", "psi1")
    return psi0, psi1


def _expected_interior_counts(n: int) -> tuple[int, int]:
    if n % 2 == 0:
        return n // 2, n // 2 - 1
    return (n - 1) // 2, (n - 1) // 2


def interior_wavelets(phi: ScalingVector, rs: RefinementSet
                      ) -> list[tuple[PiecewisePoly, str, tuple[ExactScalar, ...]]]:
    """The n-1 wavelets supported on [0,1], symmetric class first.

    For each symmetry template, solve (C_0, C_1) p = 0 over the template's
    free symbols exactly, orthogonalize the solution set by Gram-Schmidt in
    the function inner product (without normalizing, to stay in the exact
    field), and map each template vector p to function coefficients
    q_t = p_t / gram_t, which makes the wavelet exactly orthogonal to every
    scaling-function shift.
    """
    n = phi.n
    e_cols = [rs.c[0], rs.c[1]]
    results = []
    counts = []
    for kind in ("symmetric", "antisymmetric"):
        pattern = SymPattern(kind, n)
        cols = pattern.columns()
        system = []
        for r in range(n + 1):
            row = []
            for col in cols:
                acc: ExactScalar = Fraction(0)
                for t, cval in enumerate(col):
                    if cval:
                        block, k = divmod(t, n + 1)
                        acc = acc + e_cols[block][r][k] * cval
                row.append(acc)
            system.append(row)
        basis_b = nullspace_exact(system)
        counts.append(len(basis_b))
        pvecs = [pattern.expand(b) for b in basis_b]

        def star(p, q):  # function inner product via template vectors
            return sum(
                (pi * qi) / rs.gram[t % (n + 1)]
                for t, (pi, qi) in enumerate(zip(p, q))
                if pi != 0 and qi != 0
            )

        ortho: list[tuple[ExactScalar, ...]] = []
        for p in pvecs:
            v = list(p)
            for u in ortho:
                c = star(p, u) / star(u, u)
                if c != 0:
                    v = [vi - c * ui for vi, ui in zip(v, u)]
            ortho.append(tuple(v))
        for p in ortho:
            psi = PiecewisePoly.zero()
            for t, pt in enumerate(p):
                if pt == 0:
                    continue
                block, k = divmod(t, n + 1)
                q = pt / rs.gram[k]
                psi = psi + phi.entries[k].dilate_translate(1, block).scale(q)
            results.append((psi, kind, p))
    sym_expected, anti_expected = _expected_interior_counts(n)
    if counts != [sym_expected, anti_expected]:
        raise ConstructionError(
            "wavelet-count",
            f"n={n}: got {counts}, expected {[sym_expected, anti_expected]}",
        )
    for psi, kind, p in results:
        _require(p[0] == 0, "wavelet-template", "leading template entry")
        s0, s1 = psi.support
        _require(s0 >= 0 and s1 <= 1, "wavelet-support", f"{kind}")
        parity = "even" if kind == "symmetric" else "odd"
        _require(psi.check_symmetry(SymmetryType(Fraction(1, 2), parity)),
                 "wavelet-symmetry", kind)
        for k in (-1, 0, 1):
            for j in range(n + 1):
                _require(
                    psi.inner(phi.entries[j].shift(k)) == 0,
                    "wavelet-orthogonality",
                    f"{kind} vs phi_{j} shift {k}",
                )
    return results


def d_matrices(rs: RefinementSet):
    """Fill in D~_i and D_i = D~_i gram^-1 and certify the wavelet dilation
    identity Psi(t) = sum_i D_i Phi(2t - i)."""
    phi, n = rs.phi, rs.n
    rs.d_tilde = {i: _cross_matrix(rs.psi, phi.entries, i) for i in SHIFTS}
    rs.d = {
        i: _mat(
            [[rs.d_tilde[i][j][k] / rs.gram[k] for k in range(n + 1)]
             for j in range(n + 1)]
        )
        for i in SHIFTS
    }
    for j in range(n + 1):
        acc = PiecewisePoly.zero()
        for i in SHIFTS:
            for k in range(n + 1):
                coef = rs.d[i][j][k]
                if coef != 0:
                    acc = acc + phi.entries[k].dilate_translate(1, i).scale(coef)
        _require(acc == rs.psi[j], "psi1", f"wavelet {j}")
    for j in range(2, n + 1):  # interior wavelets live on [0,1]
        for i in (-2, -1):
            _require(
                all(x == 0 for x in rs.d[i][j]),
                "d-zero-rows",
                f"wavelet {j}, shift {i}",
            )


def _verify_window_gram(rs: RefinementSet):
    """All cross inner products of the full system (scaling functions and
    wavelets, shifts 0 and 1) vanish exactly off the diagonal."""
    funcs = list(rs.phi.entries) + list(rs.psi)
    norms = list(rs.phi.norms_sq) + list(rs.psi_norms_sq)
    for a in range(len(funcs)):
        for b in range(a, len(funcs)):
            ip = funcs[a].inner(funcs[b])
            expect = norms[a] if a == b else 0
            _require(ip == expect, "window-gram", f"({a},{b}) shift 0")
    for a in range(len(funcs)):
        for b in range(len(funcs)):
            _require(
                funcs[a].inner(funcs[b].shift(1)) == 0,
                "window-gram",
                f"({a},{b}) shift 1",
            )


@lru_cache(maxsize=None)
def build_refinement(n: int, family: str = "generic") -> RefinementSet:
    """Full pipeline: matrices, wavelets, D matrices, window Gram check."""
    phi = assemble_phi(n, family)
    rs = refinement_matrices(phi)
    psi0, psi1 = boundary_wavelets(phi, rs)
    interior = interior_wavelets(phi, rs)
    psi = [psi0, psi1] + [w for w, _, _ in interior]
    rs.psi = tuple(psi)
    rs.psi_norms_sq = tuple(p.norm_sq() for p in psi)
    rs.psi_kinds = ("boundary-symmetric", "boundary-antisymmetric") + tuple(
        f"interior-{kind}" for _, kind, _ in interior
    )
    rs.psi_vectors = {j + 2: p for j, (_, _, p) in enumerate(interior)}
    d_matrices(rs)
    _verify_window_gram(rs)
    return rs


# ---------------------------------------------------------------------------
# Coefficient-stream transform (floats)

class ShapeError(ValueError):
    """Coefficient array shape incompatible with the filter bank."""


def filter_bank(rs: RefinementSet) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Orthonormalized analysis filters H_i, G_i (i = -2..1 in order).

    Rows/columns are scaled by the exact norms so that the orthonormalized
    system makes analysis and synthesis transposes of each other.
    """
    n = rs.n
    phinorm = np.array([float(x) for x in rs.phi.norms_sq])
    psinorm = np.array([float(x) for x in rs.psi_norms_sq])
    h, g = [], []
    for i in SHIFTS:
        c = np.array(matrix_float(rs.c[i]))
        d = np.array(matrix_float(rs.d[i]))
        scale_c = np.sqrt(phinorm[None, :] / (2.0 * phinorm[:, None]))
        scale_d = np.sqrt(phinorm[None, :] / 2.0) / np.sqrt(psinorm[:, None])
        h.append(c * scale_c)
        g.append(d * scale_d)
    return h, g


def _analyze_step(h, g, data: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    nblocks = data.shape[0]
    half = nblocks // 2
    approx = np.zeros((half, data.shape[1]))
    detail = np.zeros((half, data.shape[1]))
    for s in range(half):
        for li, l in enumerate(SHIFTS):
            block = data[(2 * s + l) % nblocks]
            approx[s] += h[li] @ block
            detail[s] += g[li] @ block
    return approx, detail


def _synthesize_step(h, g, approx: np.ndarray, detail: np.ndarray) -> np.ndarray:
    half = approx.shape[0]
    nblocks = 2 * half
    out = np.zeros((nblocks, approx.shape[1]))
    for s in range(half):
        for li, l in enumerate(SHIFTS):
            t = (2 * s + l) % nblocks
            out[t] += h[li].T @ approx[s]
            out[t] += g[li].T @ detail[s]
    return out


def transform(rs: RefinementSet, coeffs, direction: str = "analyze",
              levels: int = 1):
    """Periodic multi-level analysis/synthesis of vector coefficient streams.

    analyze: coeffs is an (N, n+1) array with N divisible by 2**levels;
    returns {'approx': array, 'details': [coarsest..finest]}.
    synthesize: takes that mapping and returns the (N, n+1) array.
    """
    n = rs.n
    h, g = filter_bank(rs)
    if direction == "analyze":
        data = np.asarray(coeffs, dtype=float)
        if data.size == 0:
            return {"approx": np.zeros((0, n + 1)), "details": []}
        if data.ndim != 2 or data.shape[1] != n + 1:
            raise ShapeError(f"expected (N, {n + 1}) coefficient array")
        if data.shape[0] % (1 << levels):
            raise ShapeError(f"N must be divisible by 2**levels = {1 << levels}")
        details = []
        for _ in range(levels):
            data, det = _analyze_step(h, g, data)
            details.append(det)
        details.reverse()  # coarsest first
        return {"approx": data, "details": details}
    if direction == "synthesize":
        approx = np.asarray(coeffs["approx"], dtype=float)
        details = [np.asarray(d, dtype=float) for d in coeffs["details"]]
        if approx.size == 0 and not details:
            return np.zeros((0, n + 1))
        data = approx
        for det in details:
            if det.shape != data.shape or det.shape[1] != n + 1:
                raise ShapeError("detail blocks do not match approximation shape")
            data = _synthesize_step(h, g, data, det)
        return data
    raise ValueError(f"unknown direction {direction!r}")
