"""Exact computations on Boroczky line configurations and their triple points."""

from .exactfield import FieldSpec, FieldElement, make_cyclotomic, make_fermat_field
from .projplane import ProjLine, ProjPoint
from .configuration import Configuration, build_config, incidence_report, triple_count_formula

__version__ = "0.1.0"
