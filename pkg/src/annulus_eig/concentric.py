"""Semi-analytic eigenvalue of the concentric annulus b <= |x| <= 1.

The first Dirichlet eigenvalue is the smallest positive root mu(b) of the
Bessel cross product

    J0(sqrt(mu) b) Y0(sqrt(mu)) - J0(sqrt(mu)) Y0(sqrt(mu) b) = 0,

and the corresponding eigenfunction is radial,
phi(r) = c1 J0(sqrt(mu) r) + c2 Y0(sqrt(mu) r).  Roots are bracketed by an
upward scan in sqrt(mu) and pinned by bisection, which cannot escape the
bracket.  The same machinery yields two-sided bounds for the eccentric
annulus by comparison with the concentric domains it nests between.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bessel import j0, j1, y0, y1
from .errors import GeometryError

# First Dirichlet eigenvalue of the unit disc: square of the first zero of
# J0 (2.404825557695773).  Lower bound for any domain inside the disc.
UNIT_DISC_EIGENVALUE = 5.783185962946785

DEFAULT_TOL = 1e-10


def cross_product(mu, b):
    """Left side of the radial eigenvalue equation at trial value mu.

    Vanishes exactly when a combination of J0 and Y0 satisfies both
    Dirichlet conditions phi(b) = phi(1) = 0.
    """
    if not (mu > 0.0) or not math.isfinite(mu):
        raise ValueError(f"mu must be positive and finite, got {mu!r}")
    if not 0.0 < b < 1.0:
        raise ValueError(f"b must lie in (0,1), got {b!r}")
    s = math.sqrt(mu)
    return j0(s * b) * y0(s) - j0(s) * y0(s * b)


def first_eigenvalue(b, tol=DEFAULT_TOL):
    """Smallest positive root mu(b) of the cross product.

    The scan in sqrt(mu) uses steps of min(0.1, (1-b)/10); the first sign
    change brackets the first root since the cross product is positive at
    0+ and has no earlier zero.  Bisection then runs to the tighter of
    ``tol`` (relative) and the floating-point limit of the bracket, so the
    returned root is in practice machine-accurate.
    """
    if not 0.0 < b < 1.0:
        raise ValueError(f"b must lie in (0,1), got {b!r}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")

    step = min(0.1, (1.0 - b) / 10.0)
    s_max = 10.0 * math.pi / (1.0 - b)
    s_lo = step
    f_lo = cross_product(s_lo * s_lo, b)
    while True:
        s_hi = s_lo + step
        if s_hi > s_max:
            raise RuntimeError(
                f"no sign change of the cross product up to sqrt(mu)={s_max:.3f} "
                f"for b={b!r}; this should be unreachable for valid b")
        f_hi = cross_product(s_hi * s_hi, b)
        if f_lo == 0.0:
            return s_lo * s_lo
        if f_lo * f_hi <= 0.0:
            break
        s_lo, f_lo = s_hi, f_hi

    lo, hi = s_lo * s_lo, s_hi * s_hi
    for _ in range(80):  # 2^-80 << any admissible tol; exits at float limit
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket at floating-point resolution
            break
        f_mid = cross_product(mid, b)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo = mid
            f_lo = f_mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class EigenvalueBounds:
    """Two-sided concentric-comparison bounds for the eccentric eigenvalue.

    ``disc_lower`` marks the degenerate regime h >= a, where the annular
    lower bound is unavailable and the unit-disc eigenvalue is substituted
    (still valid: the eccentric annulus sits inside the unit disc).
    """

    lower: float
    upper: float
    disc_lower: bool


def eigenvalue_bounds(a, h, tol=DEFAULT_TOL):
    """Bounds mu(a-h) < lambda(h) < mu(a+h) for hole radius a at offset h.

    For h >= a the inner comparison annulus collapses, so the lower bound
    falls back to the unit-disc value (flagged via ``disc_lower``).
    """
    if not 0.0 < a < 1.0:
        raise GeometryError(f"a must lie in (0,1), got {a!r}")
    if h < 0.0:
        raise GeometryError(f"h must be nonnegative, got {h!r}")
    if a + h >= 1.0:
        raise GeometryError(
            f"inner disc must lie strictly inside the unit disc: a+h={a + h!r} >= 1")
    upper = first_eigenvalue(a + h, tol)
    if h < a:
        return EigenvalueBounds(first_eigenvalue(a - h, tol), upper, False)
    return EigenvalueBounds(UNIT_DISC_EIGENVALUE, upper, True)


@dataclass(frozen=True)
class RadialMode:
    """Radial eigenfunction of the concentric annulus b <= r <= 1.

    Coefficients are fixed (up to scale) by the inner boundary condition:
    c1 = Y0(sqrt(mu) b), c2 = -J0(sqrt(mu) b).  ``scale`` carries the
    L2(annulus) normalization once computed.
    """

    mu: float
    b: float
    c1: float
    c2: float
    scale: float = 1.0

    @classmethod
    def solve(cls, b, tol=DEFAULT_TOL):
        """Solve for mu(b) and return the L2-normalized radial mode."""
        mu = first_eigenvalue(b, tol)
        s = math.sqrt(mu)
        c1 = y0(s * b)
        c2 = -j0(s * b)
        mode = cls(mu=mu, b=b, c1=c1, c2=c2)
        # L2 norm over the annulus: integral of phi^2 2 pi r dr on [b, 1].
        nodes, weights = np.polynomial.legendre.leggauss(128)
        r = 0.5 * (1.0 - b) * nodes + 0.5 * (1.0 + b)
        w = 0.5 * (1.0 - b) * weights
        vals = np.array([mode.profile(ri) for ri in r])
        norm_sq = float(np.sum(w * vals * vals * 2.0 * math.pi * r))
        return cls(mu=mu, b=b, c1=c1, c2=c2, scale=1.0 / math.sqrt(norm_sq))

    def profile(self, r):
        """Radial profile phi(r), including the normalization scale."""
        s = math.sqrt(self.mu)
        return self.scale * (self.c1 * j0(s * r) + self.c2 * y0(s * r))

    def profile_derivative(self, r):
        """d phi / d r, using J0' = -J1 and Y0' = -Y1."""
        s = math.sqrt(self.mu)
        return -self.scale * s * (self.c1 * j1(s * r) + self.c2 * y1(s * r))

    def rellich_integral(self):
        """Boundary integral (x . N) u_N^2 over both circles, outward normal.

        For the concentric annulus this reduces to
        2 pi phi'(1)^2 - 2 pi b^2 phi'(b)^2 and equals 2 mu for the
        normalized mode; used as a semi-analytic cross-check of the FEM
        boundary flux.
        """
        dp1 = self.profile_derivative(1.0)
        dpb = self.profile_derivative(self.b)
        return 2.0 * math.pi * (dp1 * dp1 - self.b * self.b * dpb * dpb)
