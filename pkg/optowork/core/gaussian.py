import math
import typing

import numpy as np
import scipy.linalg

from optowork.core import define
from optowork.core.config import config
from optowork.core.errors import DomainError
from optowork.core.errors import IndexOutOfRange
from optowork.core.errors import NotPositiveDefinite
from optowork.core.errors import PatternMismatch
from optowork.core.errors import SingularSystem


CovarianceMatrix = np.ndarray
r"""Quadrature covariance matrix.

A real symmetric :math:`2n \times 2n` array
with rows and columns ordered as
:math:`(X_1, Y_1, \ldots, X_n, Y_n)`.
The vacuum has variance 1/2.

"""


class TwoModeStandardForm(typing.NamedTuple):
    r"""Two-mode covariance matrix in standard form.

    Represents the sparse pattern

    .. math::

        \begin{pmatrix}
            x & 0 & z & 0 \\
            0 & x & 0 & -z \\
            z & 0 & y & 0 \\
            0 & -z & 0 & y
        \end{pmatrix}

    Examples:
        >>> f = TwoModeStandardForm(1.0, 2.0, 0.5)
        >>> f.matrix()[1].tolist()
        [0.0, 1.0, 0.0, -0.5]

    """

    x: float
    r"""Quadrature variance of mode A"""
    y: float
    r"""Quadrature variance of mode B"""
    z: float
    r"""Correlation of the position quadratures"""

    def matrix(self) -> CovarianceMatrix:
        r"""Expand to a 4x4 covariance matrix.

        Returns:
            covariance matrix

        """
        x, y, z = self
        return np.array(
            [
                [x, 0.0, z, 0.0],
                [0.0, x, 0.0, -z],
                [z, 0.0, y, 0.0],
                [0.0, -z, 0.0, y],
            ]
        )


def check_standard_form(f: TwoModeStandardForm):
    r"""Raise if standard form does not describe a physical state.

    Args:
        f: standard form

    Raises:
        DomainError: if a variance is below the vacuum
            or :math:`xy - z^2 \le 0`

    """
    x, y, z = f
    if not all(math.isfinite(v) for v in f):
        raise DomainError(f"Standard form {tuple(f)} has non-finite entries.")
    lower = define.VACUUM_VARIANCE - config.PHYSICALITY_TOLERANCE
    if x < lower or y < lower:
        raise DomainError(
            f"Variances x={x} and y={y} must not be smaller "
            f"than the vacuum variance {define.VACUUM_VARIANCE}."
        )
    if x * y - z**2 <= 0:
        raise DomainError(f"Standard form {tuple(f)} violates x*y - z**2 > 0.")


def check_covariance(
    V: CovarianceMatrix,
) -> CovarianceMatrix:
    r"""Ensure matrix is a symmetric positive definite covariance matrix.

    Args:
        V: matrix of shape :math:`2n \times 2n`

    Returns:
        matrix as float array

    Raises:
        NotPositiveDefinite: if matrix is not square with even size,
            not symmetric,
            or not positive definite

    """
    V = np.asarray(V, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1] or V.shape[0] % 2:
        raise NotPositiveDefinite(
            f"Expected a square matrix of even size, got shape {V.shape}."
        )
    asymmetry = np.max(np.abs(V - V.T)) if V.size else 0.0
    if asymmetry > config.SYMMETRY_TOLERANCE:
        raise NotPositiveDefinite(f"Matrix is not symmetric, deviation {asymmetry}.")
    if V.size and np.linalg.eigvalsh(V).min() <= 0:
        raise NotPositiveDefinite("Matrix is not positive definite.")
    return V


def direct_sum(*blocks: CovarianceMatrix) -> CovarianceMatrix:
    r"""Compose covariance matrices of independent subsystems.

    Args:
        *blocks: covariance matrices

    Returns:
        block diagonal covariance matrix

    Examples:
        >>> direct_sum(vacuum(1), thermal_state(1, 1.0)).diagonal().tolist()
        [0.5, 0.5, 1.5, 1.5]

    """
    return scipy.linalg.block_diag(*blocks)


def is_physical(V: CovarianceMatrix) -> bool:
    r"""Check if covariance matrix describes a physical state.

    Args:
        V: covariance matrix

    Returns:
        ``True`` if every symplectic eigenvalue
        is at least 1/2 within :attr:`optowork.config.PHYSICALITY_TOLERANCE`

    Examples:
        >>> is_physical(vacuum(2))
        True
        >>> is_physical(vacuum(2) / 2)
        False

    """
    try:
        nu = symplectic_eigenvalues(V)
    except NotPositiveDefinite:
        return False
    return bool(nu[0] >= define.VACUUM_VARIANCE - config.PHYSICALITY_TOLERANCE)


def logarithmic_negativity(f: TwoModeStandardForm) -> float:
    r"""Logarithmic negativity of a two-mode state.

    .. math::

        L_N = \max[0, -\ln(2\vartheta^-)]

    Args:
        f: standard form

    Returns:
        logarithmic negativity,
        positive if and only if the state is entangled

    Raises:
        DomainError: if state is not physical

    Examples:
        >>> logarithmic_negativity(TwoModeStandardForm(0.5, 0.5, 0.0))
        0.0
        >>> f = standard_form(two_mode_squeezed_vacuum(1.0))
        >>> round(logarithmic_negativity(f), 10)
        2.0

    """
    nu = min_pt_symplectic_eigenvalue(f)
    return max(0.0, -math.log(2 * nu))


def lyapunov_residual(
    A: np.ndarray,
    V: np.ndarray,
    D: np.ndarray,
) -> float:
    r"""Maximum absolute entry of :math:`AV + VA^T + D`."""
    residual = A @ V + V @ A.T + D
    return float(np.max(np.abs(residual)))


def min_pt_symplectic_eigenvalue(f: TwoModeStandardForm) -> float:
    r"""Smallest symplectic eigenvalue of the partially transposed state.

    .. math::

        \vartheta^- = \frac{1}{\sqrt{2}}
        \sqrt{\Lambda - \sqrt{\Lambda^2 - 4\det V}}

    with :math:`\Lambda = x^2 + y^2 + 2z^2`
    and :math:`\det V = (xy - z^2)^2`.
    The difference under the outer root
    is evaluated as :math:`4\det V / (\Lambda + \sqrt{\ldots})`
    to avoid cancellation for strongly correlated states.

    Args:
        f: standard form

    Returns:
        minimum symplectic eigenvalue

    Raises:
        DomainError: if state is not physical
            or discriminant is negative beyond tolerance

    Examples:
        >>> min_pt_symplectic_eigenvalue(TwoModeStandardForm(0.5, 0.5, 0.0))
        0.5
        >>> round(min_pt_symplectic_eigenvalue(TwoModeStandardForm(2.0, 2.0, 1.7)), 12)
        0.3

    """  # noqa: E501
    check_standard_form(f)
    x, y, z = f
    lam = x**2 + y**2 + 2 * z**2
    det = (x * y - z**2) ** 2
    discriminant = lam**2 - 4 * det
    if discriminant < 0:
        if discriminant < -config.DISCRIMINANT_TOLERANCE:
            raise DomainError(
                f"Negative discriminant {discriminant} for standard form {tuple(f)}."
            )
        discriminant = 0.0
    return math.sqrt(2 * det / (lam + math.sqrt(discriminant)))


def partial_transpose(
    V: CovarianceMatrix,
    mode: int,
) -> CovarianceMatrix:
    r"""Flip sign of the momentum quadrature of a mode.

    Args:
        V: covariance matrix
        mode: index of transposed mode

    Returns:
        partially transposed covariance matrix

    Raises:
        IndexOutOfRange: if mode does not exist

    """
    V = np.asarray(V, dtype=float)
    n_modes = V.shape[0] // 2
    if not 0 <= mode < n_modes:
        raise IndexOutOfRange(f"Mode {mode} not in range [0, {n_modes}).")
    flip = np.ones(V.shape[0])
    flip[2 * mode + 1] = -1.0
    return V * np.outer(flip, flip)


def reduce(
    V: CovarianceMatrix,
    modes: typing.Sequence[int],
) -> CovarianceMatrix:
    r"""Covariance matrix of a subset of modes.

    Args:
        V: covariance matrix
        modes: mode indices in the order of the result

    Returns:
        principal submatrix on the quadratures of the selected modes

    Raises:
        IndexOutOfRange: if indices repeat or are out of range

    Examples:
        >>> reduce(direct_sum(vacuum(1), thermal_state(1, 2.0)), [1]).tolist()
        [[2.5, 0.0], [0.0, 2.5]]

    """
    V = np.asarray(V, dtype=float)
    n_modes = V.shape[0] // 2
    modes = list(modes)
    if len(set(modes)) != len(modes):
        raise IndexOutOfRange(f"Mode indices {modes} are not distinct.")
    for mode in modes:
        if isinstance(mode, bool) or not isinstance(mode, (int, np.integer)):
            raise IndexOutOfRange(f"Mode index {mode!r} is not an integer.")
        if not 0 <= mode < n_modes:
            raise IndexOutOfRange(f"Mode {mode} not in range [0, {n_modes}).")
    idx = [2 * mode + q for mode in modes for q in (0, 1)]
    return V[np.ix_(idx, idx)]


def renyi2_entropy(V: CovarianceMatrix) -> float:
    r"""Second-order Rényi entropy :math:`\frac{1}{2}\ln\det V`.

    With vacuum variance 1/2
    the value is shifted by :math:`-n\ln 2`
    with respect to the textbook convention,
    hence only differences are meaningful.

    Args:
        V: covariance matrix

    Returns:
        entropy

    Raises:
        NotPositiveDefinite: if matrix is not positive definite

    Examples:
        >>> round(renyi2_entropy(2 * vacuum(2)), 12)
        0.0

    """
    V = check_covariance(V)
    _, logdet = np.linalg.slogdet(V)
    return 0.5 * float(logdet)


def solve_lyapunov(
    A: np.ndarray,
    D: np.ndarray,
) -> CovarianceMatrix:
    r"""Solve :math:`AV + VA^T = -D` for :math:`V`.

    The equation is vectorized
    to :math:`(I \otimes A + A \otimes I)\,\mathrm{vec}(V) = -\mathrm{vec}(D)`
    and solved densely,
    which is exact up to rounding
    for the small systems at hand.

    Args:
        A: drift matrix with eigenvalues in the open left half-plane
        D: symmetric diffusion matrix

    Returns:
        symmetric steady-state covariance matrix

    Raises:
        ValueError: if shapes do not match
            or diffusion matrix is not symmetric
        SingularSystem: if the vectorized system is rank deficient

    Examples:
        >>> solve_lyapunov(np.array([[-1.0]]), np.array([[2.0]])).tolist()
        [[1.0]]

    """
    A = np.asarray(A, dtype=float)
    D = np.asarray(D, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"Drift matrix must be square, got shape {A.shape}.")
    if D.shape != A.shape:
        raise ValueError(
            f"Diffusion matrix shape {D.shape} does not match drift shape {A.shape}."
        )
    if np.max(np.abs(D - D.T)) > config.SYMMETRY_TOLERANCE * max(
        1.0, np.max(np.abs(D))
    ):
        raise ValueError("Diffusion matrix is not symmetric.")

    n = A.shape[0]
    identity = np.eye(n)
    system = np.kron(identity, A) + np.kron(A, identity)
    if np.linalg.matrix_rank(system) < n * n:
        raise SingularSystem(
            "Lyapunov system is rank deficient, "
            "the drift matrix is unstable or degenerate."
        )
    vec = np.linalg.solve(system, -D.flatten(order="F"))
    V = vec.reshape((n, n), order="F")
    V = 0.5 * (V + V.T)

    scale = max(float(np.max(np.abs(D))), np.finfo(float).tiny)
    residual = lyapunov_residual(A, V, D)
    if residual > 1e-10 * scale:
        raise SingularSystem(
            f"Lyapunov residual {residual} exceeds tolerance, "
            "the drift matrix is close to singular."
        )
    return V


def standard_form(V4: CovarianceMatrix) -> TwoModeStandardForm:
    r"""Read standard form from a two-mode covariance matrix.

    Args:
        V4: covariance matrix of two modes

    Returns:
        standard form

    Raises:
        PatternMismatch: if the matrix does not follow the
            :class:`optowork.TwoModeStandardForm` pattern
            within :attr:`optowork.config.PATTERN_TOLERANCE`

    Examples:
        >>> standard_form(vacuum(2))
        TwoModeStandardForm(x=0.5, y=0.5, z=0.0)

    """
    V4 = np.asarray(V4, dtype=float)
    if V4.shape != (4, 4):
        raise PatternMismatch(f"Expected a 4x4 matrix, got shape {V4.shape}.")
    f = TwoModeStandardForm(float(V4[0, 0]), float(V4[2, 2]), float(V4[0, 2]))
    deviation = np.max(np.abs(V4 - f.matrix()))
    if deviation > config.PATTERN_TOLERANCE:
        raise PatternMismatch(
            f"Matrix deviates by {deviation} from the standard form pattern."
        )
    return f


def symplectic_eigenvalues(V: CovarianceMatrix) -> np.ndarray:
    r"""Symplectic spectrum of a covariance matrix.

    Moduli of the eigenvalues of :math:`i\Omega V`,
    each listed once.

    Args:
        V: covariance matrix

    Returns:
        ascending symplectic eigenvalues

    Raises:
        NotPositiveDefinite: if matrix is not symmetric positive definite

    Examples:
        >>> symplectic_eigenvalues(thermal_state(1, 2.0)).round(12).tolist()
        [2.5]

    """
    V = check_covariance(V)
    omega = symplectic_form(V.shape[0] // 2)
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * omega @ V)))
    # eigenvalues come in pairs +nu, -nu
    return moduli[::2]


def symplectic_form(n_modes: int) -> np.ndarray:
    r"""Direct sum of :math:`n` blocks :math:`((0, 1), (-1, 0))`."""
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def thermal_state(
    n_modes: int,
    n_th: float,
) -> CovarianceMatrix:
    r"""Covariance matrix of independent thermal modes.

    Args:
        n_modes: number of modes
        n_th: mean occupation of each mode

    Returns:
        covariance matrix :math:`(n_{th} + 1/2) I`

    """
    return (n_th + define.VACUUM_VARIANCE) * np.eye(2 * n_modes)


def two_mode_squeezed_vacuum(r: float) -> CovarianceMatrix:
    r"""Covariance matrix of the two-mode squeezed vacuum.

    Args:
        r: squeezing parameter

    Returns:
        standard form matrix with
        :math:`x = y = \cosh(2r)/2` and :math:`z = \sinh(2r)/2`

    Raises:
        DomainError: if ``cosh(2r)`` overflows

    """
    try:
        c = math.cosh(2 * r) / 2
        s = math.sinh(2 * r) / 2
    except OverflowError as ex:
        raise DomainError(f"Squeezing parameter r={r} is too large.") from ex
    return TwoModeStandardForm(c, c, s).matrix()


def vacuum(n_modes: int) -> CovarianceMatrix:
    r"""Covariance matrix of the vacuum.

    Args:
        n_modes: number of modes

    Returns:
        :math:`I / 2`

    """
    return define.VACUUM_VARIANCE * np.eye(2 * n_modes)
