"""Finite fields, projective spaces, quadratic forms, and caps."""

from asrg_geometry.caps import (
    Cap,
    CapProfile,
    cap_construct,
    cap_secant_profile,
    cap_verify,
    uniform_secant_mu,
)
from asrg_geometry.field import Field, SquareClass, field_make, square_classify
from asrg_geometry.io import format_cap, parse_cap, read_cap, write_cap
from asrg_geometry.projective import Point, ProjectiveSpace, line_points, pg_points
from asrg_geometry.quadratic import (
    FormKind,
    QuadraticForm,
    bilinear,
    form_eval,
    quadratic_form_standard,
    singular_count_formula,
)

__all__ = [
    "Cap",
    "CapProfile",
    "Field",
    "FormKind",
    "Point",
    "ProjectiveSpace",
    "QuadraticForm",
    "SquareClass",
    "bilinear",
    "cap_construct",
    "cap_secant_profile",
    "cap_verify",
    "field_make",
    "form_eval",
    "format_cap",
    "line_points",
    "parse_cap",
    "pg_points",
    "quadratic_form_standard",
    "read_cap",
    "singular_count_formula",
    "square_classify",
    "uniform_secant_mu",
    "write_cap",
]
