"""DL-PA model checking and satisfiability."""

from ._dlpa import (
    Error,
    Formula,
    InfeasibleSizeError,
    ParseError,
    PreconditionError,
    Stats,
    Verdict,
    eval,
    mc_to_sat,
    model_check,
    oracle_sat,
    oracle_valid,
    parse,
    random_formulas,
    replay,
    sat,
    sat_to_mc,
    translate_pdl,
    valid,
)

__all__ = [
    "Error",
    "Formula",
    "InfeasibleSizeError",
    "ParseError",
    "PreconditionError",
    "Stats",
    "Verdict",
    "eval",
    "mc_to_sat",
    "model_check",
    "oracle_sat",
    "oracle_valid",
    "parse",
    "random_formulas",
    "replay",
    "sat",
    "sat_to_mc",
    "translate_pdl",
    "valid",
]
