"""Exception types shared across the package."""


class DomainError(ValueError):
    """A price or time argument left the valid domain (price <= 0, t <= 0)."""


class PathCrossedZeroError(DomainError):
    """A generated price path hit zero or below.

    Carries the step index where the crossing happened and, when raised
    from an ensemble, the index of the offending run.
    """

    def __init__(self, step, run_index=None):
        self.step = step
        self.run_index = run_index
        where = f"step {step}"
        if run_index is not None:
            where = f"run {run_index}, {where}"
        super().__init__(f"price path crossed zero at {where}")


class RegimeError(RuntimeError):
    """The requested horizon is outside the short-time Brownian regime.

    The analytic integrals average over a Gaussian density whose support
    must stay well inside the positive price axis.  When the zero-price
    cutoff falls inside the integration window the density no longer
    describes the walk and the result would be meaningless.
    """
