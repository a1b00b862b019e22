"""Exception hierarchy. Every domain error carries a stable snake_case ``code``."""


class SL2Error(ValueError):
    code = "domain_error"


class NotTraceless(SL2Error):
    code = "not_traceless"


class NotInSL2(SL2Error):
    code = "not_in_sl2"


class Indeterminate(SL2Error):
    code = "indeterminate"


class ZeroInput(SL2Error):
    code = "zero_input"


class ZeroClassNotSampleable(SL2Error):
    code = "zero_class_not_sampleable"


class NonPositiveLambda(SL2Error):
    code = "non_positive_lambda"


class NotOnSurface(SL2Error):
    code = "not_on_surface"


class NotARuling(SL2Error):
    code = "not_a_ruling"


class NotCritical(SL2Error):
    code = "not_critical"


class StepTooLarge(SL2Error):
    code = "step_too_large"


class NotTangent(SL2Error):
    code = "not_tangent"


class DegeneratePoint(SL2Error):
    code = "degenerate_point"
