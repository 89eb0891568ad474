"""Exception types shared across the toolkit."""


class CamDesignError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateEta(CamDesignError, ValueError):
    """The offset-to-pitch ratio sits on the degenerate value n/(2*pi).

    There the profile coefficient denominator vanishes and no cam profile
    exists.
    """


class NoRoot(CamDesignError):
    """No extended angle exists: the profile cannot be closed."""


class CurvatureSingularity(CamDesignError):
    """The cam profile has a cusp (pitch radius equals the roller radius)."""


class NoDrivingCam(CamDesignError):
    """No conjugate cam is in a pushing configuration at the given angle."""


class ForceSingular(CamDesignError):
    """The pressure angle is at 90 degrees; no force can be transmitted."""


class NoFeasibleDesign(CamDesignError):
    """The swept design space contains no feasible candidate."""
