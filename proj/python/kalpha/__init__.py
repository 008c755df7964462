"""Exact K_alpha continued fractions.

Numbers cross the boundary as strings ("3/8", "(-1+1*sqrt(3))/2") so nothing
is rounded on the way in; entropy values come back as floats alongside a
30-digit string.
"""

from ._kalpha import (  # noqa: F401
    DomainError,
    InvalidArgument,
    bin_interval,
    cardioid_angles,
    eb_member,
    entropy,
    entropy_curve,
    farey_list,
    locate,
    lyapunov,
    matching_identity,
    minkowski,
    orbit,
    phi,
    qumterval,
    runlength,
    verify_matching,
    word_from_rational,
    zeta_partial,
)
