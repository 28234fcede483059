"""Exact polyhedral engine for the partial-separability lattice of
three-qubit GHZ-diagonal states.

All rationals cross the boundary as strings ("p" or "p/q") or Python ints, so
results stay exact end to end.
"""

from ._core import (  # noqa: F401
    Cone,
    __version__,
    chain_constant,
    dd_ray_cap,
    eval_expr,
    member,
    normalize_ray,
    pairing,
    paper_verify,
    parse_expr,
    ps_profile,
    replay_state_induction,
    replay_witness_induction,
    rho,
    rho_increments,
    set_dd_ray_cap,
    spectrum_from_xstate,
    verify_chain,
    witness,
    xstate_from_spectrum,
)

__all__ = [
    "Cone",
    "__version__",
    "chain_constant",
    "dd_ray_cap",
    "eval_expr",
    "member",
    "normalize_ray",
    "pairing",
    "paper_verify",
    "parse_expr",
    "ps_profile",
    "replay_state_induction",
    "replay_witness_induction",
    "rho",
    "rho_increments",
    "set_dd_ray_cap",
    "spectrum_from_xstate",
    "verify_chain",
    "witness",
    "xstate_from_spectrum",
]
