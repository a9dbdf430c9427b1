"""Affine Weyl group cells: elements, cell criteria and Kazhdan-Lusztig polynomials."""

from ._core import (
    BallCapExceeded,
    Element,
    KLTable,
    LiteralError,
    RootSystem,
    UnknownSuite,
    a_value_second_lowest,
    affine_ball,
    bruhat_leq,
    classify,
    dominant,
    fundamental,
    g2_normal_form,
    in_lowest_cell,
    is_admissible,
    mu_partition,
    run_cli,
    run_suite,
    sign_type,
    suites,
    translation_second_lowest,
    window,
)

__all__ = [
    "BallCapExceeded",
    "Element",
    "KLTable",
    "LiteralError",
    "RootSystem",
    "UnknownSuite",
    "a_value_second_lowest",
    "affine_ball",
    "bruhat_leq",
    "classify",
    "dominant",
    "fundamental",
    "g2_normal_form",
    "in_lowest_cell",
    "is_admissible",
    "mu_partition",
    "run_cli",
    "run_suite",
    "sign_type",
    "suites",
    "translation_second_lowest",
    "window",
]
