class config:
    r"""Get/set configuration values for the :mod:`optowork` module.

    Examples:
        >>> config.DEFAULT_POINTS
        201
        >>> config.NUM_WORKERS = 2
        >>> config.NUM_WORKERS
        2
        >>> config.NUM_WORKERS = 1

    """

    SYMMETRY_TOLERANCE = 1e-12
    """Maximum asymmetry of a covariance matrix."""

    PHYSICALITY_TOLERANCE = 1e-9
    """Symplectic eigenvalues may fall below 1/2 by this amount."""

    PATTERN_TOLERANCE = 1e-9
    """Maximum off-pattern entry when reading a standard form."""

    DISCRIMINANT_TOLERANCE = 1e-12
    """Negative discriminants above this value are clamped to zero."""

    STABILITY_TOLERANCE = 1e-12
    """Drift eigenvalues must have real part below minus this value."""

    WITNESS_TOLERANCE = 1e-10
    """Band around the separable bound that renders the witness inconclusive."""

    DEFAULT_POINTS = 201
    """Number of grid points of a figure preset."""

    NUM_WORKERS = 1
    """Number of workers used to evaluate sweep points."""
